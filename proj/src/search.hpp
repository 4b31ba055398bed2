#pragma once

// Backtracking embedding search shared by counting, moments and simulation.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "chroma/graph.hpp"

namespace chroma::detail {

using Count = unsigned __int128;

mpz_class to_mpz(Count value);

/// Host adjacency in search-friendly form. Vertices may be relabeled by
/// descending degree so that symmetry-breaking roots land on hubs.
class HostIndex {
 public:
  static constexpr std::size_t kBitsetLimit = 8192;

  HostIndex(const Graph& g, bool rank_by_degree);
  /// Identity labeling; edges must be simple and in range.
  HostIndex(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return n_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const {
    if (!bits_.empty()) return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    if (nb.size() <= 16) return std::find(nb.begin(), nb.end(), b) != nb.end();
    return std::binary_search(nb.begin(), nb.end(), b);
  }
  /// Original label of internal vertex v.
  Vertex original(Vertex v) const { return to_orig_.empty() ? v : to_orig_[v]; }
  /// Internal label of original vertex v.
  Vertex internal(Vertex v) const { return from_orig_.empty() ? v : from_orig_[v]; }

 private:
  void build(std::vector<Edge>& edges);

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<Vertex> to_orig_;
  std::vector<Vertex> from_orig_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Search plan for one pattern: vertex order plus per-level constraints, all
/// expressed in terms of earlier positions.
struct PatternPlan {
  struct Level {
    std::vector<int> adj;           // earlier positions that must be adjacent
    std::vector<int> nonadj;        // earlier positions that must not be (induced mode)
    std::vector<int> above;         // image must exceed images at these positions
    std::vector<int> below;         // image must be less than images at these positions
    std::size_t min_degree = 0;
  };

  int size = 0;
  bool induced = false;
  std::vector<Vertex> order;  // position -> pattern vertex
  std::vector<Level> levels;

  /// With break_symmetry, each embedding class modulo Aut(h) is visited once.
  static PatternPlan build(const Graph& h, bool induced, bool break_symmetry);
};

class Searcher {
 public:
  Searcher(const PatternPlan& plan, const HostIndex& host)
      : plan_(plan), host_(host), images_(static_cast<std::size_t>(plan.size)) {}

  /// Restrict every image to the color of the root; nullptr lifts the filter.
  /// Indexed by internal host label.
  void set_colors(const std::uint32_t* colors) {
    colors_ = colors;
    cache_valid_ = false;
  }

  Count count_from_root(Vertex root) {
    auto none = [](const Vertex*) {};
    return start<true>(root, none);
  }

  /// on_leaf(images) receives internal host labels indexed by plan position.
  template <class Leaf>
  void enumerate_from_root(Vertex root, Leaf&& on_leaf) {
    start<false>(root, on_leaf);
  }

 private:
  template <bool kCount, class Leaf>
  Count start(Vertex root, Leaf& on_leaf) {
    if (plan_.size == 0 || root >= host_.size()) return 0;
    if (host_.degree(root) < plan_.levels[0].min_degree) return 0;
    images_[0] = root;
    root_color_ = colors_ ? colors_[root] : 0;
    if (plan_.size == 1) {
      if constexpr (!kCount) on_leaf(images_.data());
      return 1;
    }
    return extend<kCount>(1, on_leaf);
  }

  bool admissible(const PatternPlan::Level& level, int depth, Vertex x, int skip) const {
    if (host_.degree(x) < level.min_degree) return false;
    if (colors_ && colors_[x] != root_color_) return false;
    for (int j = 0; j < depth; ++j) {
      if (images_[j] == x) return false;
    }
    for (int j : level.adj) {
      if (j != skip && !host_.has_edge(x, images_[j])) return false;
    }
    for (int j : level.nonadj) {
      if (host_.has_edge(x, images_[j])) return false;
    }
    return true;
  }

  template <bool kCount, class Leaf>
  Count extend(int depth, Leaf& on_leaf) {
    const auto& level = plan_.levels[depth];
    Vertex lo = 0;
    auto hi = static_cast<Vertex>(host_.size());
    for (int j : level.above) lo = std::max<Vertex>(lo, images_[j] + 1);
    for (int j : level.below) hi = std::min(hi, images_[j]);
    if (lo >= hi) return 0;
    const bool last = depth + 1 == plan_.size;
    if constexpr (kCount) {
      if (last && !plan_.induced && !level.adj.empty()) return count_last(level, depth, lo, hi);
    }

    Count total = 0;
    auto visit = [&](Vertex x, int skip) {
      if (!admissible(level, depth, x, skip)) return;
      images_[depth] = x;
      if (last) {
        if constexpr (!kCount) on_leaf(images_.data());
        ++total;
      } else {
        total += extend<kCount>(depth + 1, on_leaf);
      }
    };

    if (level.adj.empty()) {
      for (Vertex x = lo; x < hi; ++x) visit(x, -1);
      return total;
    }
    const int anchor = sparsest(level.adj);
    auto nb = host_.neighbors(images_[anchor]);
    auto it = std::lower_bound(nb.begin(), nb.end(), lo);
    for (; it != nb.end() && *it < hi; ++it) visit(*it, anchor);
    return total;
  }

  int sparsest(const std::vector<int>& positions) const {
    int best = positions.front();
    for (int j : positions) {
      if (host_.degree(images_[j]) < host_.degree(images_[best])) best = j;
    }
    return best;
  }

  // Final level of a non-induced count: candidates depend only on the images of
  // the adjacency positions, so their common neighborhood is cached and counted
  // by range, minus vertices already used.
  Count count_last(const PatternPlan::Level& level, int depth, Vertex lo, Vertex hi) {
    bool same = cache_valid_ && cache_key_.size() == level.adj.size();
    for (std::size_t i = 0; same && i < level.adj.size(); ++i) {
      same = cache_key_[i] == images_[level.adj[i]];
    }
    if (!same) {
      cache_key_.clear();
      for (int j : level.adj) cache_key_.push_back(images_[j]);
      cache_.clear();
      const int anchor = sparsest(level.adj);
      for (Vertex x : host_.neighbors(images_[anchor])) {
        if (host_.degree(x) < level.min_degree) continue;
        if (colors_ && colors_[x] != root_color_) continue;
        bool ok = true;
        for (int j : level.adj) {
          if (j != anchor && !host_.has_edge(x, images_[j])) {
            ok = false;
            break;
          }
        }
        if (ok) cache_.push_back(x);
      }
      cache_valid_ = true;
    }
    auto first = std::lower_bound(cache_.begin(), cache_.end(), lo);
    auto end = std::lower_bound(first, cache_.end(), hi);
    auto count = static_cast<Count>(end - first);
    for (int j = 0; j < depth; ++j) {
      Vertex y = images_[j];
      if (y >= lo && y < hi && std::binary_search(first, end, y)) --count;
    }
    return count;
  }

  const PatternPlan& plan_;
  const HostIndex& host_;
  std::vector<Vertex> images_;
  const std::uint32_t* colors_ = nullptr;
  std::uint32_t root_color_ = 0;

  bool cache_valid_ = false;
  std::vector<Vertex> cache_key_;
  std::vector<Vertex> cache_;
};

}  // namespace chroma::detail
