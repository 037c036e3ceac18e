#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fgt {

enum class ErrorKind {
  NotClosed,
  NoIdentity,
  NotAssociative,
  NoInverse,
  OrderCapExceeded,
  InvalidPermutation,
  ParseError,
  LatticeCapExceeded,
  SubgroupCountCapExceeded,
  NotNormal,
  NotSubgroup,
  ResidualNotWitnessed,
  UnknownTag,
  ConfigError,
  CacheError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::SubgroupCountCapExceeded: return "SubgroupCountCapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::ResidualNotWitnessed: return "ResidualNotWitnessed";
    case ErrorKind::UnknownTag: return "UnknownTag";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Cap errors mark verification instances as skipped rather than failed.
  bool is_cap_error() const noexcept {
    return kind_ == ErrorKind::OrderCapExceeded || kind_ == ErrorKind::LatticeCapExceeded ||
           kind_ == ErrorKind::SubgroupCountCapExceeded;
  }

 private:
  ErrorKind kind_;
};

/// Size limits shared by every construction and enumeration routine.
struct Limits {
  std::size_t table_cap = 2048;
  std::size_t lattice_cap = 256;
  std::size_t subgroup_count_cap = 100000;
  // Semidirect products (L/K) x| G/C_G(L/K) may exceed the order of G itself;
  // for A5 the product has order 3600.
  std::size_t semidirect_cap = 4096;
};

}  // namespace fgt
