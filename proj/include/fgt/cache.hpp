#pragma once

#include <openssl/evp.h>

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgt/error.hpp"
#include "fgt/expr.hpp"
#include "fgt/group.hpp"
#include "fgt/lattice.hpp"

namespace fgt {

inline constexpr int kCacheFormatVersion = 1;

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::CacheError, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

/// Content address of a group: SHA-256 over the order and the table, each
/// entry as two little-endian bytes.
inline std::string table_hash(const Group& g) {
  std::string buf;
  buf.reserve(8 + 2 * g.flat_table().size());
  std::uint64_t n = g.order();
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((n >> (8 * i)) & 0xff));
  for (Elem e : g.flat_table()) {
    buf.push_back(static_cast<char>(e & 0xff));
    buf.push_back(static_cast<char>(e >> 8));
  }
  return sha256_hex(buf);
}

/// On-disk lattice record; `digest` covers every other field.
inline nlohmann::json lattice_record(const Group& g, const SubgroupLattice& lattice) {
  nlohmann::json subs = nlohmann::json::array();
  std::string normal;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    subs.push_back(lattice[i].members().to_hex());
    normal.push_back(lattice.is_normal_at(i) ? '1' : '0');
  }
  nlohmann::json j{{"version", kCacheFormatVersion}, {"hash", table_hash(g)}, {"order", g.order()},
                   {"group", group_to_json(g)}, {"subgroups", std::move(subs)}, {"normal", normal}};
  j["digest"] = sha256_hex(j.dump());
  return j;
}

struct CacheValidation {
  std::size_t entries = 0;
  std::size_t rederived = 0;
  std::vector<std::string> purged;  // file names, sorted
};

/// Content-addressed store of subgroup lattices, one JSON file per group.
/// Single writer per process; writes land atomically through a rename.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path dir, std::uint64_t seed = 0x5eed) : dir_(std::move(dir)), seed_(seed) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(ErrorKind::CacheError, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& hash) const { return dir_ / (hash + ".json"); }

  /// A validated hit, or nullopt. Corrupt entries are deleted and logged.
  std::optional<SubgroupLattice> load(const Group& g) {
    const std::string hash = table_hash(g);
    auto path = path_for(hash);
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::string why;
    auto lattice = parse(path, &g, hash, &why);
    if (!lattice) {
      purge_entry(path, why);
      return std::nullopt;
    }
    ++hits_;
    return lattice;
  }

  void store(const Group& g, const SubgroupLattice& lattice) {
    const std::string hash = table_hash(g);
    write_atomic(path_for(hash), lattice_record(g, lattice).dump());
  }

  SubgroupLattice get_or_compute(const Group& g, const Limits& limits = {}) {
    if (auto hit = load(g)) return std::move(*hit);
    ++misses_;
    auto lattice = all_subgroups(g, limits);
    store(g, lattice);
    return lattice;
  }

  /// Checks every entry's digest and structure, and fully re-derives up to
  /// three entries chosen by the seed, comparing the serialized records.
  CacheValidation validate(const Limits& limits = {}) {
    CacheValidation out;
    auto files = entries();
    out.entries = files.size();
    std::vector<std::filesystem::path> good;
    for (const auto& f : files) {
      std::string why;
      if (parse(f, nullptr, f.stem().string(), &why)) {
        good.push_back(f);
      } else {
        purge_entry(f, why);
        out.purged.push_back(f.filename().string());
      }
    }
    std::mt19937_64 rng(seed_);
    std::shuffle(good.begin(), good.end(), rng);
    if (good.size() > 3) good.resize(3);
    std::sort(good.begin(), good.end());
    for (const auto& f : good) {
      ++out.rederived;
      std::string text = read_file(f);
      auto j = nlohmann::json::parse(text);
      Group g = group_from_json(j.at("group"), limits);
      std::string fresh = lattice_record(g, all_subgroups(g, limits)).dump();
      if (fresh != text) {
        purge_entry(f, "re-derived record differs");
        out.purged.push_back(f.filename().string());
      }
    }
    std::sort(out.purged.begin(), out.purged.end());
    return out;
  }

  /// Deletes every entry; returns how many were removed.
  std::size_t purge() {
    std::size_t n = 0;
    for (const auto& f : entries()) n += std::filesystem::remove(f);
    return n;
  }

  std::vector<std::filesystem::path> entries() const {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(dir_))
      if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  const std::vector<std::string>& log() const noexcept { return log_; }

 private:
  static std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_atomic(const std::filesystem::path& target, const std::string& data) {
    static std::atomic<unsigned> counter{0};
    auto tmp = target;
    tmp += ".tmp" + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << data;
      if (!out) throw Error(ErrorKind::CacheError, "cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp);
      throw Error(ErrorKind::CacheError, "cannot rename into " + target.string() + ": " + ec.message());
    }
  }

  void purge_entry(const std::filesystem::path& p, const std::string& why) {
    log_.push_back("purged " + p.filename().string() + ": " + why);
    std::error_code ec;
    std::filesystem::remove(p, ec);
  }

  /// Parses and checks a record: digest, address, table (against `expected`
  /// when given) and closure of three random members.
  std::optional<SubgroupLattice> parse(const std::filesystem::path& p, const Group* expected, const std::string& hash,
                                       std::string* why) const {
    try {
      auto j = nlohmann::json::parse(read_file(p));
      if (j.at("version").get<int>() != kCacheFormatVersion) {
        *why = "version mismatch";
        return std::nullopt;
      }
      auto digest = j.at("digest").get<std::string>();
      j.erase("digest");
      if (sha256_hex(j.dump()) != digest) {
        *why = "digest mismatch";
        return std::nullopt;
      }
      if (j.at("hash").get<std::string>() != hash) {
        *why = "hash mismatch";
        return std::nullopt;
      }
      Group g = expected ? *expected : group_from_json(j.at("group"));
      if (table_hash(g) != hash || !(group_from_json(j.at("group")) == g)) {
        *why = "table mismatch";
        return std::nullopt;
      }
      std::vector<Subgroup> subs;
      for (const auto& h : j.at("subgroups")) {
        ElementSet set;
        if (!ElementSet::from_hex(h.get<std::string>(), g.order(), set)) {
          *why = "bad subgroup encoding";
          return std::nullopt;
        }
        subs.emplace_back(std::move(set));
      }
      const auto normal = j.at("normal").get<std::string>();
      if (normal.size() != subs.size() || subs.empty()) {
        *why = "flag count mismatch";
        return std::nullopt;
      }
      std::mt19937_64 rng(seed_ ^ std::stoull(hash.substr(0, 15), nullptr, 16));
      for (int k = 0; k < 3; ++k) {
        const auto& s = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
        if (!is_subgroup(g, s.members())) {
          *why = "stored member is not closed";
          return std::nullopt;
        }
      }
      SubgroupLattice lattice(g, std::move(subs));
      for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice.is_normal_at(i) != (normal[i] == '1')) {
          *why = "normal flags disagree";
          return std::nullopt;
        }
      return lattice;
    } catch (const std::exception& e) {
      *why = std::string("unreadable: ") + e.what();
      return std::nullopt;
    }
  }

  std::filesystem::path dir_;
  std::uint64_t seed_;
  std::size_t hits_ = 0, misses_ = 0;
  std::vector<std::string> log_;
};

}  // namespace fgt
