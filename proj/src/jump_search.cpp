#include "milnorkit/jump_search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <set>
#include <thread>

#include <openssl/evp.h>

#define TOML_EXCEPTIONS 1
#include <tomlplusplus/toml.hpp>

#include "milnorkit/errors.hpp"

namespace milnorkit {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k];
  return out;
}

ExpVec parse_monomial(std::string_view text, const RingPtr& ring) {
  Poly p = parse_poly(text, ring);
  if (p.size() != 1 || !p.terms().begin()->second.is_one())
    throw Error(ErrorKind::InvalidGrid, "direction '" + std::string(text) + "' is not a monomial");
  return p.terms().begin()->first;
}

}  // namespace

// ---------------------------------------------------------------------------
// Grids

SearchGrid parse_grid_toml(std::string_view text, const RingPtr& ring) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw Error(ErrorKind::InvalidGrid, std::string("grid file: ") + std::string(e.description()));
  }
  const toml::table* grid = doc["grid"].as_table();
  if (!grid) throw Error(ErrorKind::InvalidGrid, "grid file has no [grid] table");

  auto array_of = [&](const char* key) -> const toml::array& {
    const toml::array* a = (*grid)[key].as_array();
    if (!a) throw Error(ErrorKind::InvalidGrid, std::string("[grid] needs an array '") + key + "'");
    return *a;
  };
  SearchGrid out;
  for (const auto& node : array_of("directions")) {
    auto s = node.value<std::string>();
    if (!s) throw Error(ErrorKind::InvalidGrid, "directions must be strings such as \"x^2\"");
    out.directions.push_back(parse_monomial(*s, ring));
  }
  for (const auto& node : array_of("coeffs")) {
    if (auto s = node.value<std::string>()) {
      ParamRatio c = parse_scalar(*s, {});
      out.coefficients.push_back(c.rational());
    } else if (auto i = node.value<std::int64_t>()) {
      out.coefficients.emplace_back(static_cast<long>(*i));
    } else {
      throw Error(ErrorKind::InvalidGrid, "coeffs must be integers or rational strings such as \"1/2\"");
    }
  }
  for (const auto& node : array_of("weights")) {
    auto w = node.value<std::int64_t>();
    if (!w || *w <= 0) throw Error(ErrorKind::InvalidGrid, "weights must be positive integers");
    out.weights.push_back(static_cast<unsigned>(*w));
  }
  auto max_active = (*grid)["max_active"].value<std::int64_t>();
  if (!max_active || *max_active < 0) throw Error(ErrorKind::InvalidGrid, "[grid] needs max_active >= 0");
  out.max_active = static_cast<std::size_t>(*max_active);
  return out;
}

namespace {

struct Choices {
  std::vector<Rational> coefficients;  // nonzero, first occurrence order
  std::vector<unsigned> weights;
  std::size_t per_direction() const { return coefficients.size() * weights.size(); }
};

Choices choices_of(const SearchGrid& grid) {
  Choices c;
  for (const auto& q : grid.coefficients)
    if (q != 0 && std::find(c.coefficients.begin(), c.coefficients.end(), q) == c.coefficients.end())
      c.coefficients.push_back(q);
  for (unsigned w : grid.weights)
    if (std::find(c.weights.begin(), c.weights.end(), w) == c.weights.end()) c.weights.push_back(w);
  return c;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max() : a + b;
}

}  // namespace

std::size_t grid_size(const SearchGrid& grid) {
  const std::size_t d = grid.directions.size();
  const std::size_t per = choices_of(grid).per_direction();
  std::size_t total = 0, binom = 1, power = 1;
  for (std::size_t k = 0; k <= std::min(grid.max_active, d); ++k) {
    if (k > 0) {
      binom = saturating_mul(binom, d - k + 1) / k;
      power = saturating_mul(power, per);
    }
    total = saturating_add(total, saturating_mul(binom, power));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Records and hashing

std::string_view status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::generic_non_isolated: return "generic_non_isolated";
    case RecordStatus::error: return "error";
  }
  return "?";
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::IoError, "SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string canonical_family_text(const Poly& total, const std::string& symbol) {
  return "vars=" + join(total.ring().vars) + ";params=" + join(total.ring().params) + ";symbol=" + symbol +
         ";total=" + total.to_string();
}

std::string canonical_base_text(const Poly& base) {
  return "vars=" + join(base.ring().vars) + ";params=" + join(base.ring().params) + ";base=" + base.to_string();
}

nlohmann::json SearchRecord::to_json() const {
  using nlohmann::json;
  auto ring = make_ring(vars, params);
  json assign = json::array();
  for (const auto& a : assignment) {
    json exps = json::array();
    for (std::size_t i = 0; i < vars.size(); ++i) exps.push_back(a.direction[i]);
    assign.push_back({{"direction", monomial_to_string(a.direction, *ring)},
                      {"exps", exps},
                      {"coeff", milnorkit::to_string(a.coefficient)},
                      {"weight", a.weight}});
  }
  json j{{"hash", hash},
         {"base_hash", base_hash},
         {"family", family},
         {"vars", vars},
         {"params", params},
         {"symbol", symbol},
         {"assignment", assign},
         {"mu_base", mu_base},
         {"mu_generic", mu_generic ? json(*mu_generic) : json(nullptr)},
         {"jump", jump ? json(*jump) : json(nullptr)},
         {"status", status_name(status)}};
  if (!error.empty()) j["error"] = error;
  return j;
}

SearchRecord SearchRecord::from_json(const nlohmann::json& j) {
  try {
    SearchRecord r;
    r.hash = j.at("hash").get<std::string>();
    r.base_hash = j.at("base_hash").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.vars = j.at("vars").get<std::vector<std::string>>();
    r.params = j.at("params").get<std::vector<std::string>>();
    r.symbol = j.at("symbol").get<std::string>();
    if (r.vars.empty() || r.vars.size() > kMaxArity) throw Error(ErrorKind::CorruptRecord, "bad variable list");
    for (const auto& a : j.at("assignment")) {
      Assignment x;
      auto exps = a.at("exps").get<std::vector<unsigned>>();
      if (exps.size() != r.vars.size()) throw Error(ErrorKind::CorruptRecord, "exponent arity mismatch");
      for (std::size_t i = 0; i < exps.size(); ++i) x.direction[i] = static_cast<std::uint16_t>(exps[i]);
      x.coefficient = parse_rational(a.at("coeff").get<std::string>());
      x.weight = a.at("weight").get<unsigned>();
      r.assignment.push_back(x);
    }
    r.mu_base = j.at("mu_base").get<std::size_t>();
    if (!j.at("mu_generic").is_null()) r.mu_generic = j.at("mu_generic").get<std::size_t>();
    if (!j.at("jump").is_null()) r.jump = j.at("jump").get<std::size_t>();
    const auto status = j.at("status").get<std::string>();
    if (status == "ok")
      r.status = RecordStatus::ok;
    else if (status == "generic_non_isolated")
      r.status = RecordStatus::generic_non_isolated;
    else if (status == "error")
      r.status = RecordStatus::error;
    else
      throw Error(ErrorKind::CorruptRecord, "unknown status '" + status + "'");
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    if (r.jump.has_value() != (r.status == RecordStatus::ok))
      throw Error(ErrorKind::CorruptRecord, "jump must be present exactly for ok records");
    if (r.jump && (!r.mu_generic || *r.mu_generic + *r.jump != r.mu_base))
      throw Error(ErrorKind::CorruptRecord, "jump does not equal mu_base - mu_generic");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CorruptRecord, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CorruptRecord) throw;
    throw Error(ErrorKind::CorruptRecord, e.what());
  }
}

std::map<std::size_t, std::size_t> jump_histogram(const std::vector<SearchRecord>& records) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& r : records)
    if (r.status == RecordStatus::ok) ++h[*r.jump];
  return h;
}

// ---------------------------------------------------------------------------
// Cache

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      SearchRecord r = SearchRecord::from_json(nlohmann::json::parse(line));
      if (by_hash_.emplace(r.hash, records_.size()).second) records_.push_back(std::move(r));
    } catch (const nlohmann::json::exception&) {
      ++corrupt_;
    } catch (const Error&) {
      ++corrupt_;
    }
  }
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

std::optional<SearchRecord> ResultCache::find(const std::string& hash) const {
  std::lock_guard lock(mu_);
  auto it = by_hash_.find(hash);
  if (it == by_hash_.end()) return std::nullopt;
  return records_[it->second];
}

std::vector<SearchRecord> ResultCache::query_base(const std::string& base_hash) const {
  std::lock_guard lock(mu_);
  std::vector<SearchRecord> out;
  for (const auto& r : records_)
    if (r.base_hash == base_hash) out.push_back(r);
  return out;
}

std::vector<SearchRecord> ResultCache::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

bool ResultCache::store(const SearchRecord& record) {
  std::lock_guard lock(mu_);
  if (by_hash_.count(record.hash)) return false;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error(ErrorKind::IoError, "cannot append to cache file '" + path_ + "'");
    out << record.to_json().dump() << '\n';
    if (!out) throw Error(ErrorKind::IoError, "write to cache file '" + path_ + "' failed");
  }
  by_hash_.emplace(record.hash, records_.size());
  records_.push_back(record);
  return true;
}

// ---------------------------------------------------------------------------
// Search

namespace {

std::vector<std::vector<Assignment>> enumerate(const SearchGrid& grid, const Choices& choices) {
  std::vector<std::vector<Assignment>> out;
  const std::size_t d = grid.directions.size();
  const std::size_t per = choices.per_direction();
  for (std::size_t k = 0; k <= std::min(grid.max_active, d); ++k) {
    if (k > 0 && per == 0) break;
    // Subsets of size k in lexicographic order.
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      std::vector<std::size_t> digit(k, 0);
      while (true) {
        std::vector<Assignment> a;
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t c = digit[i] / choices.weights.size(), w = digit[i] % choices.weights.size();
          a.push_back({grid.directions[subset[i]], choices.coefficients[c], choices.weights[w]});
        }
        out.push_back(std::move(a));
        std::size_t i = k;
        while (i > 0 && ++digit[i - 1] == per) digit[--i] = 0;
        if (i == 0) break;
      }
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == d - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t m = i; m < k; ++m) subset[m] = subset[m - 1] + 1;
    }
  }
  return out;
}

}  // namespace

SearchResult search_min_jump(const Poly& f0, const SearchGrid& grid, const SearchOptions& options) {
  if (grid.directions.empty() || grid.coefficients.empty() || grid.weights.empty())
    throw Error(ErrorKind::EmptyGrid, "the grid needs directions, coefficients and weights");
  std::set<ExpVec> seen;
  for (const auto& d : grid.directions)
    if (!seen.insert(d).second)
      throw Error(ErrorKind::InvalidGrid, "direction " + monomial_to_string(d, f0.ring()) + " listed twice");
  for (unsigned w : grid.weights)
    if (w == 0) throw Error(ErrorKind::InvalidGrid, "weights must be positive");

  SearchResult result;
  result.enumeration_size = grid_size(grid);
  if (result.enumeration_size > options.budget)
    throw Error(ErrorKind::GridTooLarge, "grid has " + std::to_string(result.enumeration_size) +
                                             " families, above the budget of " + std::to_string(options.budget));

  Multiplicity mu0 = milnor(f0, MilnorMethod::standard_basis, options.local);
  if (!mu0.is_finite()) throw Error(ErrorKind::NonIsolated, "the base germ has a non-isolated critical point");
  result.mu_base = mu0.value();
  const auto versal = versal_basis(f0, options.local);
  for (const auto& d : grid.directions)
    if (std::find(versal.begin(), versal.end(), d) == versal.end())
      throw Error(ErrorKind::InvalidGrid, "direction " + monomial_to_string(d, f0.ring()) +
                                              " is not in the versal basis of the base germ");

  if (f0.ring().param_index(options.symbol) >= 0 || f0.ring().var_index(options.symbol) >= 0)
    throw Error(ErrorKind::SyntaxError, "deformation symbol '" + options.symbol + "' already names a symbol");
  auto params = f0.ring().params;
  params.push_back(options.symbol);
  const RingPtr ring = make_ring(f0.ring().vars, params);
  const Poly base = change_ring(f0, ring);
  const std::size_t s_index = params.size() - 1;
  const std::string base_hash = sha256_hex(canonical_base_text(f0));

  const auto assignments = enumerate(grid, choices_of(grid));
  std::vector<SearchRecord> records(assignments.size());
  std::vector<char> from_cache(assignments.size(), 0);

  auto evaluate = [&](std::size_t idx) {
    const auto& assign = assignments[idx];
    Poly total = base;
    for (const auto& a : assign) {
      MPoly coeff = MPoly::monomial(ExpVec::unit(s_index, static_cast<std::uint16_t>(a.weight)), a.coefficient);
      total.add_term(a.direction, ParamRatio::polynomial(coeff));
    }
    SearchRecord r;
    r.family = total.to_string();
    r.hash = sha256_hex(canonical_family_text(total, options.symbol));
    if (options.cache) {
      if (auto hit = options.cache->find(r.hash)) {
        records[idx] = std::move(*hit);
        from_cache[idx] = 1;
        return;
      }
    }
    r.base_hash = base_hash;
    r.vars = ring->vars;
    r.params = ring->params;
    r.symbol = options.symbol;
    r.assignment = assign;
    r.mu_base = result.mu_base;
    try {
      Multiplicity m = milnor(total, MilnorMethod::standard_basis, options.local);
      if (m.is_finite()) {
        r.mu_generic = m.value();
        r.jump = result.mu_base - m.value();
        r.status = RecordStatus::ok;
      } else {
        r.status = RecordStatus::generic_non_isolated;
      }
    } catch (const Error& e) {
      r.status = RecordStatus::error;
      r.error = std::string(e.kind_name()) + ": " + e.what();
    } catch (const std::exception& e) {
      r.status = RecordStatus::error;
      r.error = std::string("InternalError: ") + e.what();
    }
    records[idx] = std::move(r);
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < assignments.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < assignments.size(); i = next++) evaluate(i);
      });
    for (auto& t : pool) t.join();
  }

  // Merge in enumeration order so results and cache contents do not depend
  // on scheduling.
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (from_cache[i]) ++result.cache_hits;
    if (r.status == RecordStatus::error) ++result.errors;
    if (options.cache && !from_cache[i] && r.status != RecordStatus::error) options.cache->store(r);
    if (r.status == RecordStatus::ok && *r.jump > 0 && (!result.min_nonzero_jump || *r.jump < *result.min_nonzero_jump)) {
      result.min_nonzero_jump = *r.jump;
      result.witness = r;
    }
  }
  result.histogram = jump_histogram(records);
  result.records = std::move(records);
  return result;
}

}  // namespace milnorkit
