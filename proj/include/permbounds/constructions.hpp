#pragma once

// Explicit permutation arrays: the block-cycle constant-weight arrays, lifts
// of binary constant-weight codes, and the prime-field perfect families.

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permbounds/codes.hpp"
#include "permbounds/error.hpp"
#include "permbounds/exactmath.hpp"
#include "permbounds/perm.hpp"

namespace permbounds {

/// floor(n/k) disjoint k-cycles: member i sends j -> j+1 on the block
/// [ik, ik+k-2] and ik+k-1 -> ik, fixing all other points.
inline PermutationArray block_cycle_cwpa(std::size_t n, std::size_t k) {
  if (k < 2 || k > n / 2) {
    throw Error(Errc::out_of_range, "block cycles need 2 <= k <= floor(n/2)");
  }
  std::vector<Permutation> members;
  for (std::size_t i = 0; i < n / k; ++i) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    const std::size_t lo = i * k;
    for (std::size_t j = lo; j + 1 < lo + k; ++j) {
      images[j] = static_cast<Point>(j + 1);
    }
    images[lo + k - 1] = static_cast<Point>(lo);
    members.emplace_back(std::move(images));
  }
  return PermutationArray(n, std::move(members));
}

/// The derangement of `supp` sending each point to the next one in sorted
/// order and the largest back to the smallest.
inline Permutation sorted_cycle(const SupportSet &supp, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < supp.size(); ++i) {
    images[supp[i]] = supp[(i + 1) % supp.size()];
  }
  return Permutation(std::move(images));
}

/// One permutation per codeword of a weight-(k+1) code with pairwise support
/// intersections <= 1. The result has minimum distance >= 2k+1.
inline PermutationArray lift_binary_cw_code(const BinaryCwCode &code, std::size_t k) {
  if (k < 1 || code.weight() != k + 1) {
    throw Error(Errc::precondition, "lifting needs a code of weight k+1 with k >= 1");
  }
  const auto &words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i].intersection_size(words[j]) > 1) {
        throw Error(Errc::precondition, "codewords " + std::to_string(i) + " and " +
                                            std::to_string(j) + " share more than one point");
      }
    }
  }
  std::vector<Permutation> members;
  members.reserve(words.size());
  for (const auto &w : words) {
    members.push_back(sorted_cycle(w, code.n()));
  }
  return PermutationArray(code.n(), std::move(members));
}

/// Lexicographic greedy packing of blocksize-subsets meeting pairwise in at most one point.
inline BinaryCwCode greedy_partial_steiner(std::size_t n, std::size_t blocksize) {
  if (blocksize < 2) {
    throw Error(Errc::out_of_range, "block size must be at least 2");
  }
  std::vector<SupportSet> blocks;
  iterate_subsets(n, blocksize, [&](const SupportSet &candidate) {
    for (const auto &b : blocks) {
      if (b.intersection_size(candidate) > 1) {
        return;
      }
    }
    blocks.push_back(candidate);
  });
  return BinaryCwCode(n, blocksize, 2 * (blocksize - 1), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Perfect families

enum class PerfectFamily { cyclic, symmetric, alternating, agl, pgl2 };

inline const char *to_string(PerfectFamily f) {
  switch (f) {
  case PerfectFamily::cyclic: return "cyclic";
  case PerfectFamily::symmetric: return "symmetric";
  case PerfectFamily::alternating: return "alternating";
  case PerfectFamily::agl: return "agl";
  case PerfectFamily::pgl2: return "pgl2";
  }
  return "unknown";
}

inline std::optional<PerfectFamily> parse_perfect_family(const std::string &s) {
  for (auto f : {PerfectFamily::cyclic, PerfectFamily::symmetric, PerfectFamily::alternating,
                 PerfectFamily::agl, PerfectFamily::pgl2}) {
    if (s == to_string(f)) {
      return f;
    }
  }
  return std::nullopt;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) {
    return false;
  }
  for (std::size_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline std::size_t inverse_mod(std::size_t a, std::size_t p) {
  // p is prime, so a^(p-2) is the inverse
  std::size_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) {
      result = result * base % p;
    }
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

inline void require_prime(std::size_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime (only prime fields are built)");
  }
}

} // namespace detail

/// Length of the permutations a family member acts on.
inline std::size_t perfect_pa_length(PerfectFamily family, std::size_t param) {
  return family == PerfectFamily::pgl2 ? param + 1 : param;
}

/// The distance each family is perfect for.
inline std::size_t perfect_pa_distance(PerfectFamily family, std::size_t param) {
  switch (family) {
  case PerfectFamily::cyclic: return param;
  case PerfectFamily::symmetric: return 2;
  case PerfectFamily::alternating: return 3;
  case PerfectFamily::agl:
  case PerfectFamily::pgl2: return param - 1;
  }
  return 0;
}

inline PermutationArray perfect_pa(PerfectFamily family, std::size_t param) {
  if (param < 1) {
    throw Error(Errc::out_of_range, "family parameter must be positive");
  }
  std::vector<Permutation> members;
  switch (family) {
  case PerfectFamily::cyclic: {
    const std::size_t n = param;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Point> images(n);
      for (std::size_t x = 0; x < n; ++x) {
        images[x] = static_cast<Point>((x + c) % n);
      }
      members.emplace_back(std::move(images));
    }
    break;
  }
  case PerfectFamily::symmetric:
    members = all_permutations(param);
    break;
  case PerfectFamily::alternating:
    iterate_all(param, [&](const Permutation &p) {
      if (p.is_even()) {
        members.push_back(p);
      }
    });
    break;
  case PerfectFamily::agl: {
    const std::size_t p = param;
    detail::require_prime(p);
    for (std::size_t a = 1; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        std::vector<Point> images(p);
        for (std::size_t x = 0; x < p; ++x) {
          images[x] = static_cast<Point>((a * x + b) % p);
        }
        members.emplace_back(std::move(images));
      }
    }
    break;
  }
  case PerfectFamily::pgl2: {
    // x -> (ax+b)/(cx+d) on {0..p-1} plus infinity (index p), one matrix per
    // scalar class: c = 0 with d = 1, or c = 1.
    const std::size_t p = param;
    detail::require_prime(p);
    const std::size_t inf = p;
    auto apply = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t x) {
      if (x == inf) {
        return c == 0 ? inf : a * detail::inverse_mod(c, p) % p;
      }
      const std::size_t den = (c * x + d) % p;
      if (den == 0) {
        return inf;
      }
      return (a * x + b) % p * detail::inverse_mod(den, p) % p;
    };
    auto push = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
      std::vector<Point> images(p + 1);
      for (std::size_t x = 0; x <= p; ++x) {
        images[x] = static_cast<Point>(apply(a, b, c, d, x));
      }
      members.emplace_back(std::move(images));
    };
    for (std::size_t a = 1; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        push(a, b, 0, 1);
      }
    }
    for (std::size_t d = 0; d < p; ++d) {
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
          if ((a * d) % p != b) {
            push(a, b, 1, d);
          }
        }
      }
    }
    break;
  }
  }
  return PermutationArray(perfect_pa_length(family, param), std::move(members));
}

/// A perfect family attaining n!/(d-1)! at (n,d), if one is constructible here.
inline std::optional<std::pair<PerfectFamily, std::size_t>> perfect_family_for(std::size_t n,
                                                                                std::size_t d) {
  if (n >= 1 && d == n) {
    return std::pair{PerfectFamily::cyclic, n};
  }
  if (n >= 2 && d == 2) {
    return std::pair{PerfectFamily::symmetric, n};
  }
  if (n >= 3 && d == 3) {
    return std::pair{PerfectFamily::alternating, n};
  }
  if (d + 1 == n && is_prime(n)) {
    return std::pair{PerfectFamily::agl, n};
  }
  if (n >= 3 && d + 2 == n && is_prime(n - 1)) {
    return std::pair{PerfectFamily::pgl2, n - 1};
  }
  return std::nullopt;
}

} // namespace permbounds
