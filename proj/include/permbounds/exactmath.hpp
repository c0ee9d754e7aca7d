#pragma once

// Exact combinatorial quantities over arbitrary-precision integers.
//
// Every count in the library (factorials, binomials, derangement numbers,
// Hamming-ball volumes in S_n) is an ExactInt; fractional intermediates are
// ExactRatio. Nothing here touches floating point.

#include <array>
#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "permbounds/error.hpp"

#ifndef PERMBOUNDS_MEMO_CAP
#define PERMBOUNDS_MEMO_CAP 64
#endif

namespace permbounds {

/// Arbitrary-precision integer. Library quantities are nonnegative; the type
/// itself is signed so that differences can be formed before clamping.
using ExactInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always normalized (lowest terms, denominator > 0).
using ExactRatio = boost::multiprecision::cpp_rational;

inline constexpr std::size_t memo_cap = PERMBOUNDS_MEMO_CAP;
static_assert(memo_cap >= 2, "memo tables need at least D_0 and D_1");

inline ExactInt floor_of(const ExactRatio &r) {
  ExactInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  // cpp_int division truncates toward zero
  if (r < 0 && q * boost::multiprecision::denominator(r) != boost::multiprecision::numerator(r)) {
    q -= 1;
  }
  return q;
}

inline ExactRatio make_ratio(const ExactInt &num, const ExactInt &den) {
  if (den == 0) {
    throw Error(Errc::precondition, "zero denominator");
  }
  return ExactRatio(num, den);
}

inline std::string to_decimal(const ExactInt &v) { return v.str(); }

namespace detail {

inline const auto &factorial_table() {
  static const auto table = [] {
    std::array<ExactInt, memo_cap + 1> v;
    v[0] = 1;
    for (std::size_t i = 1; i <= memo_cap; ++i) {
      v[i] = v[i - 1] * i;
    }
    return v;
  }();
  return table;
}

inline const auto &derangement_table() {
  static const auto table = [] {
    std::array<ExactInt, memo_cap + 1> v;
    v[0] = 1;
    if (memo_cap >= 1) {
      v[1] = 0;
    }
    for (std::size_t k = 2; k <= memo_cap; ++k) {
      v[k] = (k - 1) * (v[k - 1] + v[k - 2]);
    }
    return v;
  }();
  return table;
}

} // namespace detail

inline ExactInt factorial(std::size_t n) {
  const auto &table = detail::factorial_table();
  if (n <= memo_cap) {
    return table[n];
  }
  ExactInt acc = table[memo_cap];
  for (std::size_t i = memo_cap + 1; i <= n; ++i) {
    acc *= i;
  }
  return acc;
}

/// C(n,k); zero when k > n.
inline ExactInt binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  ExactInt acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // acc * (n-k+i) is divisible by i after the previous step
    acc = acc * (n - k + i) / i;
  }
  return acc;
}

/// D_k via D_k = (k-1)(D_{k-1} + D_{k-2}), D_0 = 1, D_1 = 0.
inline ExactInt derangement_count(std::size_t k) {
  const auto &table = detail::derangement_table();
  if (k <= memo_cap) {
    return table[k];
  }
  ExactInt prev2 = table[memo_cap - 1];
  ExactInt prev1 = table[memo_cap];
  for (std::size_t i = memo_cap + 1; i <= k; ++i) {
    ExactInt next = (i - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

/// Number of permutations of S_n at distance exactly i from a fixed one.
inline ExactInt sphere_size(std::size_t n, std::size_t i) {
  return binomial(n, i) * derangement_count(i);
}

/// V(n,r) = sum_{i<=r} C(n,i) D_i, the Hamming ball volume in S_n.
inline ExactInt ball_volume(std::size_t n, std::size_t r) {
  if (r > n) {
    throw Error(Errc::invalid_radius,
                "radius " + std::to_string(r) + " exceeds length " + std::to_string(n));
  }
  ExactInt acc = 0;
  for (std::size_t i = 0; i <= r; ++i) {
    acc += sphere_size(n, i);
  }
  return acc;
}

} // namespace permbounds
