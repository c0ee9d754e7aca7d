#pragma once

// Exact maximum clique by branch and bound over bitset adjacency, with a
// greedy colouring of the candidate set as the pruning bound (the bitset
// form of the colour-sort scheme). Single-threaded and deterministic: for a
// fixed graph the same clique is returned every time.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace permbounds {

class BitGraph {
public:
  explicit BitGraph(std::size_t order)
      : order_(order), words_((order + 63) / 64), rows_(order * words_, 0) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v) {
    row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (row(u)[v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      d += static_cast<std::size_t>(std::popcount(row(u)[w]));
    }
    return d;
  }

  std::uint64_t *row(std::size_t u) { return rows_.data() + u * words_; }
  const std::uint64_t *row(std::size_t u) const { return rows_.data() + u * words_; }

private:
  std::size_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

struct CliqueLimits {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::duration<double>> max_seconds;
  /// Only cliques strictly larger than this are of interest; branches that
  /// cannot beat it are pruned.
  std::size_t floor = 0;
};

struct CliqueResult {
  /// Vertex indices of the graph, ascending.
  std::vector<std::size_t> clique;
  /// True only when the search tree was exhausted.
  bool complete = false;
  std::uint64_t nodes = 0;
};

namespace detail {

class CliqueSearch {
public:
  CliqueSearch(const BitGraph &g, const CliqueLimits &limits) : limits_(limits), g_(g.order()) {
    const std::size_t n = g.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Smallest-last order: repeatedly peel a minimum-degree vertex and put it
    // at the back, so colouring in index order starts from the dense core.
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) {
      deg[v] = g.degree(v);
    }
    std::vector<bool> removed(n, false);
    for (std::size_t slot = n; slot-- > 0;) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v] && (pick == n || deg[v] < deg[pick])) {
          pick = v;
        }
      }
      removed[pick] = true;
      order_[slot] = pick;
      const std::uint64_t *nb = g.row(pick);
      for (std::size_t w = 0; w < g.words(); ++w) {
        for (std::uint64_t bits = nb[w]; bits; bits &= bits - 1) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          if (!removed[u]) {
            --deg[u];
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g.adjacent(order_[i], order_[j])) {
          g_.add_edge(i, j);
        }
      }
    }
    words_ = g_.words();
  }

  CliqueResult run() {
    start_ = std::chrono::steady_clock::now();
    seed_greedy();
    const std::size_t n = g_.order();
    if (n > 0 && !(limits_.max_nodes && *limits_.max_nodes == 0)) {
      std::vector<std::uint64_t> all(words_, 0);
      for (std::size_t v = 0; v < n; ++v) {
        all[v / 64] |= std::uint64_t{1} << (v % 64);
      }
      current_.clear();
      expand(all, 0);
    } else if (n > 0) {
      aborted_ = true;
    }
    CliqueResult out;
    for (std::size_t v : best_) {
      out.clique.push_back(order_[v]);
    }
    std::sort(out.clique.begin(), out.clique.end());
    out.complete = !aborted_;
    out.nodes = nodes_;
    return out;
  }

private:
  struct Level {
    std::vector<std::uint64_t> uncolored, klass;
    std::vector<std::size_t> vertices, colors;
  };

  void seed_greedy() {
    std::vector<std::size_t> clique;
    for (std::size_t v = 0; v < g_.order(); ++v) {
      bool ok = true;
      for (std::size_t u : clique) {
        if (!g_.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        clique.push_back(v);
      }
    }
    best_ = clique;
  }

  std::size_t target() const { return std::max(best_.size(), limits_.floor); }

  bool out_of_budget() {
    if (limits_.max_nodes && nodes_ > *limits_.max_nodes) {
      return true;
    }
    if (limits_.max_seconds && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed > *limits_.max_seconds) {
        return true;
      }
    }
    return false;
  }

  // Greedy colouring of `cand`; keeps only vertices whose colour could still
  // beat the incumbent, ordered by nondecreasing colour.
  void colour(const std::vector<std::uint64_t> &cand, Level &lv) {
    lv.uncolored = cand;
    lv.vertices.clear();
    lv.colors.clear();
    const std::size_t need = target() + 1 > current_.size() ? target() + 1 - current_.size() : 0;
    std::size_t colour_no = 0;
    bool any = true;
    while (any) {
      any = false;
      ++colour_no;
      lv.klass = lv.uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (lv.klass[w]) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(lv.klass[w]));
          const std::size_t v = w * 64 + bit;
          any = true;
          lv.uncolored[w] &= ~(std::uint64_t{1} << bit);
          lv.klass[w] &= ~(std::uint64_t{1} << bit);
          const std::uint64_t *nb = g_.row(v);
          for (std::size_t x = w; x < words_; ++x) {
            lv.klass[x] &= ~nb[x];
          }
          if (colour_no >= need) {
            lv.vertices.push_back(v);
            lv.colors.push_back(colour_no);
          }
        }
      }
      bool left = false;
      for (std::size_t w = 0; w < words_ && !left; ++w) {
        left = lv.uncolored[w] != 0;
      }
      if (!left) {
        break;
      }
    }
  }

  void expand(std::vector<std::uint64_t> cand, std::size_t depth) {
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    if (levels_.size() <= depth) {
      levels_.resize(depth + 1);
    }
    colour(cand, levels_[depth]);
    // levels_ may reallocate during recursion, so copy what this frame needs
    const std::vector<std::size_t> vertices = levels_[depth].vertices;
    const std::vector<std::size_t> colors = levels_[depth].colors;
    std::vector<std::uint64_t> next(words_);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= target()) {
        return;
      }
      const std::size_t v = vertices[i];
      const std::uint64_t *nb = g_.row(v);
      bool empty = true;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = cand[w] & nb[w];
        empty = empty && next[w] == 0;
      }
      current_.push_back(v);
      if (empty) {
        if (current_.size() > best_.size()) {
          best_ = current_;
        }
      } else {
        expand(next, depth + 1);
      }
      current_.pop_back();
      if (aborted_) {
        return;
      }
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  CliqueLimits limits_;
  BitGraph g_;
  std::size_t words_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_, current_;
  std::vector<Level> levels_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Maximum clique of `g`. When a limit is hit, `complete` is false and the
/// clique is the best found so far.
inline CliqueResult max_clique(const BitGraph &g, const CliqueLimits &limits = {}) {
  return detail::CliqueSearch(g, limits).run();
}

} // namespace permbounds
