#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace fgt {

using PrimePower = std::pair<unsigned, unsigned>;  // (p, multiplicity)

inline std::vector<PrimePower> factorize(std::size_t n) {
  std::vector<PrimePower> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(static_cast<unsigned>(p), k);
  }
  if (n > 1) out.emplace_back(static_cast<unsigned>(n), 1u);
  return out;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (auto [p, k] : factorize(n)) out.push_back(p);
  return out;
}

inline bool is_power_of(std::size_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Largest divisor of n whose prime factors all lie in primes.
inline std::size_t pi_part(std::size_t n, const std::vector<unsigned>& primes) {
  std::size_t part = 1;
  for (unsigned p : primes)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

inline std::size_t p_part(std::size_t n, unsigned p) { return pi_part(n, {p}); }

/// True when every prime factor of n lies in primes (n = 1 qualifies).
inline bool is_pi_number(std::size_t n, const std::vector<unsigned>& primes) {
  return pi_part(n, primes) == n;
}

}  // namespace fgt
