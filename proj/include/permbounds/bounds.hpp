#pragma once

// Upper bounds on P(n,d) (largest (n,d) permutation array), P(n,d,w)
// (constant-weight arrays) and A(n,d,w) (constant-weight binary codes).
//
// All arithmetic is done in ExactRatio and floored exactly once, when the
// BoundResult is built. Each result carries the unfloored value and a
// derivation trace of rule tags:
//
//   DV            n!/(d-1)!
//   SP            n!/V(n, floor((d-1)/2))
//   ME            n!/(V(n,k-1) + C(n,k)D_k/floor(n/k))            on P(n,2k)
//   MO-corollary  n!/(V(n,k) + T), T from pair-packing ceilings on A   on P(n,2k+1)
//   MO-exact-A    same, with both A values exact from a CwTable
//   subset        n!·P_Omega/|Omega| (averaging over translates of Omega)
//   recursive     n!·P(m,d)/m!
//   cwpa-I..VI    constant-weight array rules (labels skip V)
//   cw-identity, cw-ceiling, cw-table   binary constant-weight code rules

#include <cstddef>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "permbounds/error.hpp"
#include "permbounds/exactmath.hpp"

namespace permbounds {

enum class BoundKind { exact, upper, lower };

inline const char *to_string(BoundKind kind) {
  switch (kind) {
  case BoundKind::exact: return "exact";
  case BoundKind::upper: return "upper";
  case BoundKind::lower: return "lower";
  }
  return "unknown";
}

inline std::optional<BoundKind> parse_bound_kind(const std::string &s) {
  if (s == "exact") return BoundKind::exact;
  if (s == "upper") return BoundKind::upper;
  if (s == "lower") return BoundKind::lower;
  return std::nullopt;
}

struct BoundResult {
  ExactInt value = 0;
  BoundKind kind = BoundKind::upper;
  std::vector<std::string> derivation;
  bool applicable = true;
  /// Value before the final floor, when the rule produces one.
  std::optional<ExactRatio> real_value;

  const std::string &rule() const { return derivation.front(); }

  std::string trace() const {
    std::string out;
    for (const auto &tag : derivation) {
      if (!out.empty()) {
        out += " <- ";
      }
      out += tag;
    }
    return out;
  }
};

namespace detail {

inline BoundResult floored(const ExactRatio &real, BoundKind kind, std::vector<std::string> trace) {
  BoundResult r;
  r.value = floor_of(real);
  r.kind = kind;
  r.derivation = std::move(trace);
  r.real_value = real;
  return r;
}

inline BoundResult integral(ExactInt value, BoundKind kind, std::vector<std::string> trace) {
  BoundResult r;
  r.real_value = ExactRatio(value);
  r.value = std::move(value);
  r.kind = kind;
  r.derivation = std::move(trace);
  return r;
}

inline BoundResult not_applicable(std::string rule, std::string reason) {
  BoundResult r;
  r.applicable = false;
  r.derivation = {std::move(rule), "not-applicable: " + std::move(reason)};
  return r;
}

inline void require_distance_range(std::size_t n, std::size_t d) {
  if (n < 1 || d < 1 || d > n) {
    throw Error(Errc::out_of_range, "need 1 <= d <= n, got n=" + std::to_string(n) +
                                        " d=" + std::to_string(d));
  }
}

} // namespace detail

/// floor(m/(k+1) * floor((m-1)/k)), the classical upper bound on A(m,2k,k+1).
inline ExactInt cw_pair_packing_ceiling(std::size_t m, std::size_t k) {
  if (k == 0 || m == 0) {
    throw Error(Errc::out_of_range, "ceiling needs m >= 1 and k >= 1");
  }
  return ExactInt(m) * ((m - 1) / k) / (k + 1);
}

// ---------------------------------------------------------------------------
// CwTable

/// Known values or bounds for A(n,d,w), even d only. Entries are checked
/// against the elementary identities on insert. Reads may run concurrently;
/// inserts take an exclusive lock.
class CwTable {
public:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

  CwTable() = default;
  CwTable(const CwTable &other) {
    std::shared_lock lock(other.mutex_);
    entries_ = other.entries_;
  }
  CwTable &operator=(const CwTable &other) {
    if (this != &other) {
      auto copy = other.snapshot();
      std::unique_lock lock(mutex_);
      entries_ = std::move(copy);
    }
    return *this;
  }

  void insert(std::size_t n, std::size_t d, std::size_t w, BoundResult entry) {
    validate(n, d, w, entry);
    std::unique_lock lock(mutex_);
    entries_[Key{n, d, w}] = std::move(entry);
  }

  void insert(std::size_t n, std::size_t d, std::size_t w, const ExactInt &value, BoundKind kind) {
    insert(n, d, w, detail::integral(value, kind, {"cw-table"}));
  }

  std::optional<BoundResult> lookup(std::size_t n, std::size_t d, std::size_t w) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(Key{n, d, w});
    if (it == entries_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  std::map<Key, BoundResult> snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

  /// Lines "n d w value kind"; blank lines and '#' comments are skipped.
  static CwTable load(std::istream &in) {
    CwTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream fields(line);
      std::vector<std::string> tokens;
      for (std::string tok; fields >> tok;) {
        tokens.push_back(tok);
      }
      if (tokens.empty()) {
        continue;
      }
      auto where = [&] { return "cw table line " + std::to_string(lineno); };
      auto is_count = [](const std::string &t) {
        return !t.empty() && t.size() <= 18 && t.find_first_not_of("0123456789") == std::string::npos;
      };
      if (tokens.size() != 5 || !is_count(tokens[0]) || !is_count(tokens[1]) ||
          !is_count(tokens[2])) {
        throw Error(Errc::parse_error, where() + ": expected \"n d w value kind\"");
      }
      const std::size_t n = std::stoull(tokens[0]);
      const std::size_t d = std::stoull(tokens[1]);
      const std::size_t w = std::stoull(tokens[2]);
      const std::string &value_text = tokens[3];
      auto kind = parse_bound_kind(tokens[4]);
      if (!kind) {
        throw Error(Errc::parse_error, where() + ": unknown kind '" + tokens[4] + "'");
      }
      if (value_text.empty() ||
          value_text.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(Errc::parse_error, where() + ": value must be a nonnegative integer");
      }
      try {
        table.insert(n, d, w, ExactInt(value_text), *kind);
      } catch (const Error &e) {
        throw Error(e.code(), where() + ": " + e.what());
      }
    }
    return table;
  }

private:
  static void validate(std::size_t n, std::size_t d, std::size_t w, const BoundResult &entry) {
    if (d % 2 != 0) {
      throw Error(Errc::unsupported, "odd distance " + std::to_string(d) + " in A(n,d,w) table");
    }
    if (d == 0 || w > n) {
      throw Error(Errc::out_of_range, "A(n,d,w) needs d >= 2 and w <= n");
    }
    if (!entry.applicable) {
      throw Error(Errc::precondition, "cannot store a not-applicable bound");
    }
    auto fail = [&](const std::string &why) {
      throw Error(Errc::precondition, "A(" + std::to_string(n) + "," + std::to_string(d) + "," +
                                          std::to_string(w) + ") " + to_string(entry.kind) + " " +
                                          entry.value.str() + " contradicts " + why);
    };
    if (entry.kind != BoundKind::upper && entry.value < 1) {
      fail("A >= 1");
    }
    std::optional<ExactInt> determined;
    if (d > 2 * w) {
      determined = 1;
    } else if (d == 2 * w) {
      determined = ExactInt(n / w);
    }
    if (determined) {
      const bool bad = (entry.kind == BoundKind::exact && entry.value != *determined) ||
                       (entry.kind == BoundKind::upper && entry.value < *determined) ||
                       (entry.kind == BoundKind::lower && entry.value > *determined);
      if (bad) {
        fail("the determined value " + determined->str());
      }
    }
    if (d >= 2 && w == d / 2 + 1 && n >= 1) {
      const auto ceiling = cw_pair_packing_ceiling(n, d / 2);
      if (entry.kind != BoundKind::upper && entry.value > ceiling) {
        fail("the pair-packing ceiling " + ceiling.str());
      }
    }
  }

  mutable std::shared_mutex mutex_;
  std::map<Key, BoundResult> entries_;
};

// ---------------------------------------------------------------------------
// Bounds on P(n,d)

inline BoundResult dv_bound(std::size_t n, std::size_t d) {
  detail::require_distance_range(n, d);
  return detail::integral(factorial(n) / factorial(d - 1), BoundKind::upper, {"DV"});
}

inline ExactRatio sp_ratio(std::size_t n, std::size_t d) {
  detail::require_distance_range(n, d);
  return make_ratio(factorial(n), ball_volume(n, (d - 1) / 2));
}

inline BoundResult sp_bound(std::size_t n, std::size_t d) {
  return detail::floored(sp_ratio(n, d), BoundKind::upper, {"SP"});
}

inline bool me_applicable(std::size_t n, std::size_t k) { return k >= 2 && k <= n / 2; }

/// Bound on P(n,2k) for 2 <= k <= floor(n/2).
inline BoundResult me_bound(std::size_t n, std::size_t k) {
  if (!me_applicable(n, k)) {
    return detail::not_applicable("ME", "need 2 <= k <= floor(n/2), got n=" + std::to_string(n) +
                                            " k=" + std::to_string(k));
  }
  // Each length-k sphere around a codeword holds C(n,k)D_k points, and a
  // point lies on at most floor(n/k) such spheres.
  const ExactRatio denom = ExactRatio(ball_volume(n, k - 1)) +
                           make_ratio(sphere_size(n, k), ExactInt(n / k));
  return detail::floored(ExactRatio(factorial(n)) / denom, BoundKind::upper, {"ME"});
}

/// Range 2 <= k <= floor((n-k-1)/2), read literally as 2k <= n-k-1.
inline bool mo_applicable(std::size_t n, std::size_t k) { return k >= 2 && 3 * k + 1 <= n; }

/// Bound on P(n,2k+1). The A(m,2k,k+1) terms use exact table values when the
/// table has them, otherwise the pair-packing ceiling. A negative correction
/// term is clamped to zero, which leaves the sphere-packing bound.
inline BoundResult mo_bound(std::size_t n, std::size_t k, const CwTable *table = nullptr) {
  if (!mo_applicable(n, k)) {
    return detail::not_applicable("MO", "need 2 <= k and 3k+1 <= n, got n=" + std::to_string(n) +
                                            " k=" + std::to_string(k));
  }
  std::size_t exact_hits = 0;
  auto a_estimate = [&](std::size_t m) {
    if (table) {
      if (auto hit = table->lookup(m, 2 * k, k + 1); hit && hit->kind == BoundKind::exact) {
        ++exact_hits;
        return hit->value;
      }
    }
    return cw_pair_packing_ceiling(m, k);
  };
  const ExactInt a_rest = a_estimate(n - k);
  const ExactInt a_full = a_estimate(n);

  std::vector<std::string> trace{exact_hits == 2 ? "MO-exact-A" : "MO-corollary"};
  ExactRatio correction =
      make_ratio(sphere_size(n, k + 1) - a_rest * sphere_size(n, k), a_full);
  if (correction < 0) {
    correction = 0;
    trace.push_back("correction-clamped-to-0");
  }
  const ExactRatio denom = ExactRatio(ball_volume(n, k)) + correction;
  return detail::floored(ExactRatio(factorial(n)) / denom, BoundKind::upper, std::move(trace));
}

/// P(n,d) <= n!·P_Omega(n,d)/|Omega| for any Omega in S_n.
inline BoundResult subset_bound(std::size_t n, std::size_t d, const ExactInt &omega_size,
                                const ExactInt &p_omega) {
  detail::require_distance_range(n, d);
  if (omega_size <= 0) {
    throw Error(Errc::precondition, "empty subset");
  }
  if (omega_size > factorial(n)) {
    throw Error(Errc::out_of_range, "subset larger than n!");
  }
  if (p_omega < 0) {
    throw Error(Errc::precondition, "negative subset array size");
  }
  return detail::floored(make_ratio(factorial(n) * p_omega, omega_size), BoundKind::upper,
                         {"subset"});
}

/// Lifts a bound on P(m,d) to P(n,d) <= n!·P(m,d)/m!.
inline BoundResult recursive_bound(std::size_t n, std::size_t d, std::size_t m,
                                   const BoundResult &bound_at_m) {
  detail::require_distance_range(n, d);
  if (m < d || m > n) {
    throw Error(Errc::out_of_range, "need d <= m <= n, got m=" + std::to_string(m));
  }
  if (!bound_at_m.applicable || bound_at_m.kind == BoundKind::lower) {
    throw Error(Errc::precondition, "recursive lifting needs an upper or exact bound at m");
  }
  std::vector<std::string> trace{"recursive"};
  trace.insert(trace.end(), bound_at_m.derivation.begin(), bound_at_m.derivation.end());
  // m! divides n!, so this is an integer
  return detail::integral(factorial(n) / factorial(m) * bound_at_m.value, BoundKind::upper,
                          std::move(trace));
}

// ---------------------------------------------------------------------------
// Constant-weight codes and arrays

/// A(n,d,w) for even d.
inline BoundResult cw_binary_bound(std::size_t n, std::size_t d, std::size_t w,
                                   const CwTable *table = nullptr) {
  if (d % 2 != 0) {
    throw Error(Errc::unsupported, "A(n,d,w) is only provided for even d");
  }
  if (w > n || d == 0) {
    throw Error(Errc::out_of_range, "A(n,d,w) needs d >= 2 and w <= n");
  }
  if (d > 2 * w) {
    return detail::integral(1, BoundKind::exact, {"cw-identity"});
  }
  if (d == 2 * w) {
    return detail::integral(ExactInt(n / w), BoundKind::exact, {"cw-identity"});
  }
  std::optional<BoundResult> stored;
  if (table) {
    stored = table->lookup(n, d, w);
  }
  if (stored && stored->kind == BoundKind::exact) {
    return *stored;
  }
  if (w == d / 2 + 1) {
    auto ceiling = detail::integral(cw_pair_packing_ceiling(n, d / 2), BoundKind::upper,
                                    {"cw-ceiling"});
    if (stored && stored->kind == BoundKind::upper && stored->value < ceiling.value) {
      return *stored;
    }
    return ceiling;
  }
  if (stored) {
    return *stored;
  }
  return detail::not_applicable("cw", "no identity, ceiling, or table entry for A(" +
                                          std::to_string(n) + "," + std::to_string(d) + "," +
                                          std::to_string(w) + ")");
}

/// P(n,d,w), dispatching over the constant-weight array rules.
inline BoundResult cw_pa_bound(std::size_t n, std::size_t d, std::size_t w,
                               const CwTable *table = nullptr) {
  if (w == 1) {
    throw Error(Errc::impossible_weight, "no permutation moves exactly one point");
  }
  if (w > n) {
    throw Error(Errc::out_of_range, "weight exceeds length");
  }
  if (d >= 1 && d > 2 * w) {
    return detail::integral(1, BoundKind::exact, {"cwpa-II"});
  }
  if (d % 2 == 0 && w == d / 2 && me_applicable(n, w)) {
    return detail::integral(ExactInt(n / w), BoundKind::exact, {"cwpa-III"});
  }
  if (d % 2 == 1 && w == (d + 1) / 2) {
    const std::size_t k = (d - 1) / 2;
    if (k >= 1 && 2 * k + 1 <= n) {
      auto a = cw_binary_bound(n, 2 * k, k + 1, table);
      if (a.applicable) {
        a.derivation.insert(a.derivation.begin(), "cwpa-IV");
        return a;
      }
    }
  }
  if (d == 4 && w == 3 && n >= 4) {
    return detail::floored(make_ratio(2 * binomial(n, 2), 3), BoundKind::upper, {"cwpa-VI"});
  }
  if (d > w) {
    auto a = cw_binary_bound(n, 2 * d - 2 * w, w, table);
    if (a.applicable) {
      a.kind = BoundKind::upper;
      a.derivation.insert(a.derivation.begin(), "cwpa-I");
      return a;
    }
  }
  return detail::not_applicable("cwpa", "no rule covers (n,d,w)=(" + std::to_string(n) + "," +
                                            std::to_string(d) + "," + std::to_string(w) + ")");
}

// ---------------------------------------------------------------------------
// Aggregation

/// DV, SP and whichever of ME/MO matches the parity of d, in that order.
/// Entries that do not apply are kept with applicable=false.
inline std::vector<BoundResult> all_upper_bounds(std::size_t n, std::size_t d,
                                                 const CwTable *table = nullptr) {
  detail::require_distance_range(n, d);
  std::vector<BoundResult> out{dv_bound(n, d), sp_bound(n, d)};
  if (d % 2 == 0) {
    out.push_back(me_bound(n, d / 2));
  } else {
    out.push_back(mo_bound(n, (d - 1) / 2, table));
  }
  return out;
}

/// Smallest applicable bound on P(n,d); ties go to the shorter derivation,
/// then to the earlier rule in DV, SP, ME/MO order.
inline BoundResult best_upper_bound(std::size_t n, std::size_t d,
                                    const CwTable *table = nullptr) {
  detail::require_distance_range(n, d);
  const bool promoted = d == 1 && n >= 2;
  const std::size_t dd = promoted ? 2 : d;
  std::optional<BoundResult> best;
  for (auto &candidate : all_upper_bounds(n, dd, table)) {
    if (!candidate.applicable) {
      continue;
    }
    if (!best || candidate.value < best->value ||
        (candidate.value == best->value &&
         candidate.derivation.size() < best->derivation.size())) {
      best = std::move(candidate);
    }
  }
  if (promoted) {
    best->derivation.push_back("d=1-treated-as-d=2");
  }
  return *best;
}

} // namespace permbounds
