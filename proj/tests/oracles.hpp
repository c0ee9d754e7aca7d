#pragma once

// Brute-force reference computations for the tests. These deliberately avoid
// the library's own enumerators and formulas.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

/// Counts fixed-point-free arrangements of k points by std::next_permutation.
inline std::uint64_t derangements_by_enumeration(std::size_t k) {
  std::vector<std::size_t> a(k);
  std::iota(a.begin(), a.end(), std::size_t{0});
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (std::size_t i = 0; i < k; ++i) {
      fixed = fixed || a[i] == i;
    }
    count += !fixed;
  } while (std::next_permutation(a.begin(), a.end()));
  return count;
}

/// Permutations of n points that differ from the identity in at most r places.
inline std::uint64_t ball_by_enumeration(std::size_t n, std::size_t r) {
  std::vector<std::size_t> a(n);
  std::iota(a.begin(), a.end(), std::size_t{0});
  std::uint64_t count = 0;
  do {
    std::size_t moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      moved += a[i] != i;
    }
    count += moved <= r;
  } while (std::next_permutation(a.begin(), a.end()));
  return count;
}

/// Pascal's triangle row n.
inline std::vector<std::uint64_t> pascal_row(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) {
      next[j] = row[j - 1] + row[j];
    }
    row = std::move(next);
  }
  return row;
}

inline std::size_t distance(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i];
  }
  return d;
}

/// Maximum code size by plain exhaustive backtracking (no bounds, no symmetry).
/// Only for tiny vertex sets.
template <class T, class Compatible>
std::size_t max_code_plain(const std::vector<T> &words, Compatible &&ok) {
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto &self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    if (chosen.size() + (words.size() - from) <= best) {
      return;
    }
    for (std::size_t i = from; i < words.size(); ++i) {
      bool fits = true;
      for (std::size_t c : chosen) {
        if (!ok(words[c], words[i])) {
          fits = false;
          break;
        }
      }
      if (fits) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best;
}

} // namespace oracle
