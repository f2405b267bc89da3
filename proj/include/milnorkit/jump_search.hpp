#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "milnorkit/deform.hpp"

namespace milnorkit {

/// Grid of curve-shaped specialisations u_m = c * s^w of the versal unfolding.
struct SearchGrid {
  std::vector<ExpVec> directions;
  std::vector<Rational> coefficients;  // 0 marks an inactive direction
  std::vector<unsigned> weights;
  std::size_t max_active = 1;
};

/// Reads `[grid] directions, coeffs, weights, max_active` from TOML text.
SearchGrid parse_grid_toml(std::string_view text, const RingPtr& ring);

/// Number of assignments the search enumerates.
std::size_t grid_size(const SearchGrid& grid);

struct Assignment {
  ExpVec direction;
  Rational coefficient;
  unsigned weight = 1;
};

enum class RecordStatus { ok, generic_non_isolated, error };

struct SearchRecord {
  std::string hash;       // SHA-256 of the canonical family text
  std::string base_hash;  // SHA-256 of the canonical base text
  std::string family;     // total polynomial, canonical text
  std::vector<std::string> vars;
  std::vector<std::string> params;
  std::string symbol = "s";
  std::vector<Assignment> assignment;
  std::size_t mu_base = 0;
  std::optional<std::size_t> mu_generic;
  std::optional<std::size_t> jump;  // present iff status == ok
  RecordStatus status = RecordStatus::ok;
  std::string error;  // error kind and message when status == error

  nlohmann::json to_json() const;
  /// Throws CorruptRecord on missing or ill-typed fields.
  static SearchRecord from_json(const nlohmann::json& j);
};

std::string_view status_name(RecordStatus s);

std::string sha256_hex(std::string_view data);
std::string canonical_family_text(const Poly& total, const std::string& symbol);
std::string canonical_base_text(const Poly& base);

/// Append-only JSON-lines store keyed by family hash. Duplicate stores are
/// no-ops; unreadable lines are skipped and counted.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  const std::string& path() const { return path_; }
  std::size_t corrupt_lines() const { return corrupt_; }
  std::size_t size() const;

  std::optional<SearchRecord> find(const std::string& hash) const;
  std::vector<SearchRecord> query_base(const std::string& base_hash) const;
  std::vector<SearchRecord> records() const;
  /// Returns false when a record with the same hash is already present.
  bool store(const SearchRecord& record);

 private:
  std::string path_;
  std::vector<SearchRecord> records_;
  std::unordered_map<std::string, std::size_t> by_hash_;
  std::size_t corrupt_ = 0;
  mutable std::mutex mu_;
};

/// Histogram jump -> count over ok records.
std::map<std::size_t, std::size_t> jump_histogram(const std::vector<SearchRecord>& records);

struct SearchOptions {
  std::string symbol = "s";
  std::size_t budget = 10000;
  unsigned workers = 1;
  LocalOptions local;
  ResultCache* cache = nullptr;
};

struct SearchResult {
  std::size_t mu_base = 0;
  std::size_t enumeration_size = 0;
  std::optional<std::size_t> min_nonzero_jump;
  std::optional<SearchRecord> witness;
  std::map<std::size_t, std::size_t> histogram;
  std::vector<SearchRecord> records;  // enumeration order
  std::size_t cache_hits = 0;
  std::size_t errors = 0;
};

/// Enumerates every assignment of the grid, evaluates the jump of
/// f0 + sum c_m s^w_m x^m, and reports the smallest nonzero jump found.
/// Throws EmptyGrid, InvalidGrid, GridTooLarge, NonIsolated.
SearchResult search_min_jump(const Poly& f0, const SearchGrid& grid, const SearchOptions& options = {});

}  // namespace milnorkit
