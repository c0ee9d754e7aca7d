#pragma once

// Brute-force oracles: exact P(n,d), P(n,d,w) and A(n,d,w) as maximum
// cliques in compatibility graphs, plus array verification.
//
// exact_p fixes the identity as a codeword (distance is left-invariant, so
// any array can be translated to contain it) and searches the permutations
// of weight >= d.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permbounds/clique.hpp"
#include "permbounds/codes.hpp"
#include "permbounds/error.hpp"
#include "permbounds/exactmath.hpp"
#include "permbounds/perm.hpp"

namespace permbounds {

struct SearchLimits {
  std::optional<std::uint64_t> max_nodes = 100'000'000;
  std::optional<std::chrono::duration<double>> max_seconds = std::chrono::seconds(300);

  static SearchLimits unlimited() { return {std::nullopt, std::nullopt}; }
  /// No branching at all: only the greedy seed clique is reported.
  static SearchLimits greedy_only() { return {0, std::nullopt}; }
};

enum class SearchStatus { exact, lower_bound_only, incomplete };

inline const char *to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::exact: return "exact";
  case SearchStatus::lower_bound_only: return "lower-bound-only";
  case SearchStatus::incomplete: return "incomplete";
  }
  return "unknown";
}

template <class Witness> struct SearchOutcome {
  SearchStatus status = SearchStatus::incomplete;
  ExactInt value = 0;
  Witness witness;
  std::uint64_t nodes = 0;

  bool is_exact() const { return status == SearchStatus::exact; }
};

using PaSearchOutcome = SearchOutcome<PermutationArray>;
using CwSearchOutcome = SearchOutcome<BinaryCwCode>;

/// Largest compatibility graph the oracles will build (adjacency is order^2 bits).
inline constexpr std::size_t max_search_vertices = 20000;

// ---------------------------------------------------------------------------
// Verification

struct Violation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t distance = 0;
};

struct VerifyReport {
  std::size_t target = 0;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

inline std::size_t min_distance(const PermutationArray &array) { return array.min_distance(); }

/// Every pair of members closer than d (empty means the array is an (n,d) PA).
inline VerifyReport verify_pa(const PermutationArray &array, std::size_t d) {
  VerifyReport report;
  report.target = d;
  for (std::size_t i = 0; i < array.size(); ++i) {
    for (std::size_t j = i + 1; j < array.size(); ++j) {
      const auto dist = hamming_distance(array[i], array[j]);
      if (dist < d) {
        report.violations.push_back({i, j, dist});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Oracles

namespace detail {

inline CliqueLimits to_clique_limits(const SearchLimits &limits) {
  return {limits.max_nodes, limits.max_seconds};
}

inline SearchStatus status_of(const CliqueResult &r, const SearchLimits &limits) {
  if (r.complete) {
    return SearchStatus::exact;
  }
  return limits.max_nodes && *limits.max_nodes == 0 ? SearchStatus::lower_bound_only
                                                    : SearchStatus::incomplete;
}

template <class T, class Compatible>
BitGraph compatibility_graph(const std::vector<T> &vertices, Compatible &&compatible) {
  BitGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (compatible(vertices[i], vertices[j])) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

} // namespace detail

/// One permutation per conjugacy class of weight `moved` in S_n: cycles of
/// nonincreasing length laid out on consecutive points from 0.
inline std::vector<Permutation> cycle_type_representatives(std::size_t n, std::size_t moved) {
  std::vector<Permutation> reps;
  if (moved > n || moved == 1) {
    return reps;
  }
  std::vector<std::size_t> parts;
  auto emit = [&] {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    std::size_t at = 0;
    for (std::size_t len : parts) {
      for (std::size_t i = 0; i + 1 < len; ++i) {
        images[at + i] = static_cast<Point>(at + i + 1);
      }
      images[at + len - 1] = static_cast<Point>(at);
      at += len;
    }
    reps.emplace_back(std::move(images));
  };
  // partitions of `left` into parts in [2, cap], largest first
  auto recurse = [&](auto &self, std::size_t left, std::size_t cap) -> void {
    if (left == 0) {
      emit();
      return;
    }
    for (std::size_t len = std::min(cap, left); len >= 2; --len) {
      parts.push_back(len);
      self(self, left - len, len);
      parts.pop_back();
    }
  };
  recurse(recurse, moved, moved);
  return reps;
}

/// P(n,d). Any array with two or more members can be moved by a translation
/// and a conjugation (both isometries) so that it contains the identity and
/// a closest pair {identity, x} with x a cycle-type representative; the
/// search runs one clique problem per (minimum distance, cycle type) and
/// shares the incumbent between them. The witness is sorted lexicographically.
inline PaSearchOutcome exact_p(std::size_t n, std::size_t d, const SearchLimits &limits = {}) {
  if (n < 1 || d < 1 || d > n) {
    throw Error(Errc::out_of_range, "exact_p needs 1 <= d <= n");
  }
  if (factorial(n) > max_search_vertices) {
    throw Error(Errc::out_of_range, "S_" + std::to_string(n) + " is too large to search");
  }
  const std::size_t dd = std::max<std::size_t>(d, 2);
  const auto everything = all_permutations(n);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Permutation> best{Permutation::identity(n)};
  std::uint64_t nodes = 0;
  bool complete = true;
  for (std::size_t delta = dd; delta <= n; ++delta) {
    for (const auto &x : cycle_type_representatives(n, delta)) {
      std::vector<Permutation> candidates;
      for (const auto &y : everything) {
        if (y != x && weight(y) >= delta && hamming_distance(x, y) >= delta) {
          candidates.push_back(y);
        }
      }
      const auto graph = detail::compatibility_graph(
          candidates, [delta](const Permutation &a, const Permutation &b) {
            return hamming_distance(a, b) >= delta;
          });
      CliqueLimits sub;
      if (limits.max_nodes) {
        sub.max_nodes = *limits.max_nodes > nodes ? *limits.max_nodes - nodes : 0;
      }
      if (limits.max_seconds) {
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        sub.max_seconds = std::max(std::chrono::duration<double>(0), *limits.max_seconds - used);
      }
      sub.floor = best.size() >= 2 ? best.size() - 2 : 0;
      const auto result = max_clique(graph, sub);
      nodes += result.nodes;
      complete = complete && result.complete;
      if (result.clique.size() + 2 > best.size()) {
        best = {Permutation::identity(n), x};
        for (std::size_t v : result.clique) {
          best.push_back(candidates[v]);
        }
      }
    }
  }
  std::sort(best.begin(), best.end());
  PaSearchOutcome out;
  if (complete) {
    out.status = SearchStatus::exact;
  } else {
    out.status = limits.max_nodes && *limits.max_nodes == 0 ? SearchStatus::lower_bound_only
                                                            : SearchStatus::incomplete;
  }
  out.value = best.size();
  out.witness = PermutationArray(n, std::move(best));
  out.nodes = nodes;
  return out;
}

/// P(n,d,w): the largest (n,d) PA whose members all have weight w.
inline PaSearchOutcome exact_p_cw(std::size_t n, std::size_t d, std::size_t w,
                                  const SearchLimits &limits = {}) {
  if (d < 1) {
    throw Error(Errc::out_of_range, "distance must be positive");
  }
  const auto count = sphere_size(n, w);
  if (w != 1 && w <= n && count > max_search_vertices) {
    throw Error(Errc::out_of_range, "weight class too large to search");
  }
  const auto candidates = permutations_of_weight(n, w);
  const auto graph = detail::compatibility_graph(
      candidates, [d](const Permutation &a, const Permutation &b) {
        return hamming_distance(a, b) >= d;
      });
  const auto result = max_clique(graph, detail::to_clique_limits(limits));

  std::vector<Permutation> members;
  for (std::size_t v : result.clique) {
    members.push_back(candidates[v]);
  }
  PaSearchOutcome out;
  out.status = detail::status_of(result, limits);
  out.value = members.size();
  out.witness = PermutationArray(n, std::move(members));
  out.nodes = result.nodes;
  return out;
}

/// A(n,d,w) for even d, over supports of size w.
inline CwSearchOutcome exact_a_cw(std::size_t n, std::size_t d, std::size_t w,
                                  const SearchLimits &limits = {}) {
  if (d % 2 != 0) {
    throw Error(Errc::unsupported, "A(n,d,w) search is only provided for even d");
  }
  if (d == 0 || w > n) {
    throw Error(Errc::out_of_range, "A(n,d,w) needs d >= 2 and w <= n");
  }
  if (binomial(n, w) > max_search_vertices) {
    throw Error(Errc::out_of_range, "too many weight-" + std::to_string(w) + " words to search");
  }
  std::vector<SupportSet> candidates;
  iterate_subsets(n, w, [&](const SupportSet &s) { candidates.push_back(s); });
  const auto graph = detail::compatibility_graph(
      candidates, [d](const SupportSet &a, const SupportSet &b) {
        return indicator_distance(a, b) >= d;
      });
  const auto result = max_clique(graph, detail::to_clique_limits(limits));

  std::vector<SupportSet> words;
  for (std::size_t v : result.clique) {
    words.push_back(candidates[v]);
  }
  CwSearchOutcome out;
  out.status = detail::status_of(result, limits);
  out.value = words.size();
  out.witness = BinaryCwCode(n, w, d, std::move(words));
  out.nodes = result.nodes;
  return out;
}

} // namespace permbounds
