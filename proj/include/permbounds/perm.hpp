#pragma once

// Permutations of {0..n-1} as image tuples, the Hamming metric on them, and
// the enumerators used by the searches and constructions.
//
// Enumeration order is fixed: iterate_all is lexicographic on image tuples;
// iterate_weight walks supports in lexicographic order and, within a
// support, its derangements in lexicographic image order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "permbounds/error.hpp"

namespace permbounds {

using Point = std::uint32_t;

class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) { validate(); }
  Permutation(std::initializer_list<Point> images) : images_(images) { validate(); }

  static Permutation identity(std::size_t n) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), Point{0});
    return Permutation(std::move(v), trusted{});
  }

  std::size_t size() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  /// Even iff n minus the number of cycles is even.
  bool is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
      }
    }
    return (images_.size() - cycles) % 2 == 0;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += std::to_string(images_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }

private:
  struct trusted {};
  Permutation(std::vector<Point> images, trusted) : images_(std::move(images)) {}

  void validate() const {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw Error(Errc::not_a_bijection, "image tuple (" + str() + ") is not a permutation");
      }
      seen[p] = true;
    }
  }

  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);

  std::vector<Point> images_;
};

/// Sorted set of positions, e.g. the points a permutation moves.
class SupportSet {
public:
  SupportSet() = default;

  explicit SupportSet(std::vector<Point> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 1; i < indices_.size(); ++i) {
      if (indices_[i - 1] >= indices_[i]) {
        throw Error(Errc::precondition, "support indices must be strictly increasing");
      }
    }
  }
  SupportSet(std::initializer_list<Point> indices) : SupportSet(std::vector<Point>(indices)) {}

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::span<const Point> indices() const noexcept { return indices_; }
  Point operator[](std::size_t i) const { return indices_[i]; }
  Point back() const { return indices_.back(); }

  bool contains(Point p) const { return std::binary_search(indices_.begin(), indices_.end(), p); }

  std::size_t intersection_size(const SupportSet &other) const {
    std::size_t count = 0;
    auto a = indices_.begin();
    auto b = other.indices_.begin();
    while (a != indices_.end() && b != other.indices_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }

  friend bool operator==(const SupportSet &, const SupportSet &) = default;
  friend auto operator<=>(const SupportSet &a, const SupportSet &b) {
    return std::lexicographical_compare_three_way(a.indices_.begin(), a.indices_.end(),
                                                  b.indices_.begin(), b.indices_.end());
  }

private:
  std::vector<Point> indices_;
};

inline void require_same_length(const Permutation &a, const Permutation &b) {
  if (a.size() != b.size()) {
    throw Error(Errc::length_mismatch,
                "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

inline std::size_t hamming_distance(const Permutation &a, const Permutation &b) {
  require_same_length(a, b);
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i];
  }
  return d;
}

inline std::size_t weight(const Permutation &a) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    w += a[i] != i;
  }
  return w;
}

inline SupportSet support(const Permutation &a) {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != i) {
      moved.push_back(static_cast<Point>(i));
    }
  }
  return SupportSet(std::move(moved));
}

/// (a∘b)(i) = a(b(i)).
inline Permutation compose(const Permutation &a, const Permutation &b) {
  require_same_length(a, b);
  std::vector<Point> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[b[i]];
  }
  return Permutation(std::move(out), Permutation::trusted{});
}

inline Permutation inverse(const Permutation &a) {
  std::vector<Point> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[a[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(out), Permutation::trusted{});
}

namespace detail {

// Visitors may return void (visit everything) or bool (false stops early).
template <class Fn, class Arg> bool invoke_visitor(Fn &fn, const Arg &arg) {
  if constexpr (std::is_void_v<std::invoke_result_t<Fn &, const Arg &>>) {
    fn(arg);
    return true;
  } else {
    return static_cast<bool>(fn(arg));
  }
}

// Assigns images to support[pos..] from the unused support points in
// increasing order, skipping fixed points. Returns false if stopped early.
template <class Fn>
bool derange_from(std::vector<Point> &images, std::span<const Point> points,
                  std::vector<bool> &used, std::size_t pos, Fn &fn) {
  if (pos == points.size()) {
    return invoke_visitor(fn, Permutation(images));
  }
  const Point at = points[pos];
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (used[j] || points[j] == at) {
      continue;
    }
    used[j] = true;
    images[at] = points[j];
    const bool go_on = derange_from(images, points, used, pos + 1, fn);
    used[j] = false;
    if (!go_on) {
      images[at] = at;
      return false;
    }
  }
  images[at] = at;
  return true;
}

} // namespace detail

/// All of S_n in lexicographic order.
template <class Fn> void iterate_all(std::size_t n, Fn &&fn) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    if (!detail::invoke_visitor(fn, Permutation(images))) {
      return;
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

/// All size-w subsets of {0..n-1} in lexicographic order.
template <class Fn> void iterate_subsets(std::size_t n, std::size_t w, Fn &&fn) {
  if (w > n) {
    return;
  }
  std::vector<Point> idx(w);
  std::iota(idx.begin(), idx.end(), Point{0});
  while (true) {
    if (!detail::invoke_visitor(fn, SupportSet(idx))) {
      return;
    }
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + i - 1) {
      --i;
    }
    if (i == 0) {
      return;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

/// Permutations of S_n that fix everything outside `supp` and move every point of it.
template <class Fn> void iterate_derangements_on(const SupportSet &supp, std::size_t n, Fn &&fn) {
  if (!supp.empty() && supp.back() >= n) {
    throw Error(Errc::out_of_range, "support point outside {0.." + std::to_string(n) + "-1}");
  }
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(supp.size(), false);
  detail::derange_from(images, supp.indices(), used, 0, fn);
}

/// Every permutation of weight w, support-first; C(n,w)·D_w of them.
template <class Fn> void iterate_weight(std::size_t n, std::size_t w, Fn &&fn) {
  if (w == 1) {
    throw Error(Errc::impossible_weight, "no permutation moves exactly one point");
  }
  if (w > n) {
    throw Error(Errc::out_of_range, "weight " + std::to_string(w) + " exceeds length " +
                                        std::to_string(n));
  }
  bool go_on = true;
  iterate_subsets(n, w, [&](const SupportSet &supp) {
    iterate_derangements_on(supp, n, [&](const Permutation &p) {
      go_on = detail::invoke_visitor(fn, p);
      return go_on;
    });
    return go_on;
  });
}

template <class Enumerate> std::vector<Permutation> collect(Enumerate &&enumerate) {
  std::vector<Permutation> out;
  enumerate([&](const Permutation &p) { out.push_back(p); });
  return out;
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  return collect([n](auto &&fn) { iterate_all(n, fn); });
}

inline std::vector<Permutation> permutations_of_weight(std::size_t n, std::size_t w) {
  return collect([n, w](auto &&fn) { iterate_weight(n, w, fn); });
}

} // namespace permbounds
