#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "permbounds/error.hpp"
#include "permbounds/perm.hpp"

namespace permbounds {

/// A set of distinct same-length permutations. Member order is the order the
/// builder produced them in; the minimum distance is computed on first use.
class PermutationArray {
public:
  PermutationArray() = default;

  PermutationArray(std::size_t n, std::vector<Permutation> members)
      : n_(n), members_(std::move(members)) {
    for (const auto &m : members_) {
      if (m.size() != n_) {
        throw Error(Errc::length_mismatch, "member (" + m.str() + ") is not of length " +
                                               std::to_string(n_));
      }
    }
    std::vector<const Permutation *> sorted;
    sorted.reserve(members_.size());
    for (const auto &m : members_) {
      sorted.push_back(&m);
    }
    std::sort(sorted.begin(), sorted.end(), [](auto *a, auto *b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (*sorted[i - 1] == *sorted[i]) {
        throw Error(Errc::precondition, "duplicate member (" + sorted[i]->str() + ")");
      }
    }
  }

  PermutationArray(const PermutationArray &other)
      : n_(other.n_), members_(other.members_), cached_(other.cached_.load()) {}
  PermutationArray(PermutationArray &&other) noexcept
      : n_(other.n_), members_(std::move(other.members_)), cached_(other.cached_.load()) {}
  PermutationArray &operator=(PermutationArray other) noexcept {
    n_ = other.n_;
    members_ = std::move(other.members_);
    cached_.store(other.cached_.load());
    return *this;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Permutation> &members() const noexcept { return members_; }
  const Permutation &operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Exact pairwise minimum Hamming distance; needs at least two members.
  std::size_t min_distance() const {
    if (members_.size() < 2) {
      throw Error(Errc::precondition, "minimum distance of an array with fewer than two members");
    }
    auto cached = cached_.load(std::memory_order_acquire);
    if (cached >= 0) {
      return static_cast<std::size_t>(cached);
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = i + 1; j < members_.size(); ++j) {
        best = std::min(best, hamming_distance(members_[i], members_[j]));
      }
    }
    // Concurrent first calls compute the same value, so a plain store is enough.
    cached_.store(static_cast<std::int64_t>(best), std::memory_order_release);
    return best;
  }

private:
  std::size_t n_ = 0;
  std::vector<Permutation> members_;
  mutable std::atomic<std::int64_t> cached_{-1};
};

/// Hamming distance between the indicator vectors of two supports.
inline std::size_t indicator_distance(const SupportSet &a, const SupportSet &b) {
  return a.size() + b.size() - 2 * a.intersection_size(b);
}

/// (n, distance, weight) constant-weight binary code, words stored by support.
class BinaryCwCode {
public:
  BinaryCwCode() = default;

  BinaryCwCode(std::size_t n, std::size_t weight, std::size_t distance,
               std::vector<SupportSet> words)
      : n_(n), weight_(weight), distance_(distance), words_(std::move(words)) {
    for (const auto &w : words_) {
      if (w.size() != weight_) {
        throw Error(Errc::precondition, "codeword weight " + std::to_string(w.size()) +
                                            " differs from declared weight " +
                                            std::to_string(weight_));
      }
      if (!w.empty() && w.back() >= n_) {
        throw Error(Errc::out_of_range, "codeword position outside the code length");
      }
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::size_t j = i + 1; j < words_.size(); ++j) {
        const auto dist = indicator_distance(words_[i], words_[j]);
        if (dist == 0 || dist < distance_) {
          throw Error(Errc::precondition, "codewords " + std::to_string(i) + " and " +
                                              std::to_string(j) + " are at distance " +
                                              std::to_string(dist));
        }
      }
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t weight() const noexcept { return weight_; }
  std::size_t distance() const noexcept { return distance_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<SupportSet> &words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

private:
  std::size_t n_ = 0;
  std::size_t weight_ = 0;
  std::size_t distance_ = 0;
  std::vector<SupportSet> words_;
};

} // namespace permbounds
