#include "search.hpp"

#include <numeric>

#include "chroma/canonical.hpp"

namespace chroma::detail {

mpz_class to_mpz(Count value) {
  mpz_class high = static_cast<unsigned long>(static_cast<std::uint64_t>(value >> 64));
  mpz_class low = static_cast<unsigned long>(static_cast<std::uint64_t>(value));
  return (high << 64) + low;
}

HostIndex::HostIndex(const Graph& g, bool rank_by_degree) : n_(g.vertex_count()) {
  std::vector<Edge> edges = g.edges();
  if (rank_by_degree) {
    to_orig_.resize(n_);
    std::iota(to_orig_.begin(), to_orig_.end(), Vertex{0});
    std::stable_sort(to_orig_.begin(), to_orig_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    from_orig_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) from_orig_[to_orig_[i]] = static_cast<Vertex>(i);
    for (auto& [u, v] : edges) {
      u = from_orig_[u];
      v = from_orig_[v];
    }
  }
  build(edges);
}

HostIndex::HostIndex(std::size_t n, std::span<const Edge> edges) : n_(n) {
  std::vector<Edge> copy(edges.begin(), edges.end());
  build(copy);
}

void HostIndex::build(std::vector<Edge>& edges) {
  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adj_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
  if (n_ > 0 && n_ <= kBitsetLimit) {
    words_ = (n_ + 63) / 64;
    bits_.assign(words_ * n_, 0);
    for (const auto& [u, v] : edges) {
      bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

PatternPlan PatternPlan::build(const Graph& h, bool induced, bool break_symmetry) {
  PatternPlan plan;
  const int k = static_cast<int>(h.vertex_count());
  plan.size = k;
  plan.induced = induced;
  if (k == 0) return plan;

  std::vector<std::pair<Vertex, Vertex>> less;
  if (break_symmetry) less = symmetry_breaking_pairs(h);

  Vertex first = 0;
  if (!less.empty()) {
    first = less.front().first;
  } else {
    for (Vertex v = 1; v < static_cast<Vertex>(k); ++v) {
      if (h.degree(v) > h.degree(first)) first = v;
    }
  }

  // Greedy order: most already-placed neighbors, then higher degree, then lower label.
  std::vector<int> position(k, -1);
  plan.order.push_back(first);
  position[first] = 0;
  while (static_cast<int>(plan.order.size()) < k) {
    int best = -1;
    int best_back = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(k); ++v) {
      if (position[v] >= 0) continue;
      int back = 0;
      for (Vertex w : h.neighbors(v)) back += position[w] >= 0;
      if (back > best_back || (back == best_back && h.degree(v) > h.degree(best))) {
        best = static_cast<int>(v);
        best_back = back;
      }
    }
    position[best] = static_cast<int>(plan.order.size());
    plan.order.push_back(static_cast<Vertex>(best));
  }

  plan.levels.resize(k);
  for (int i = 0; i < k; ++i) {
    const Vertex u = plan.order[i];
    auto& level = plan.levels[i];
    level.min_degree = h.degree(u);
    for (int j = 0; j < i; ++j) {
      if (h.has_edge(u, plan.order[j])) {
        level.adj.push_back(j);
      } else if (induced) {
        level.nonadj.push_back(j);
      }
    }
  }
  for (const auto& [a, b] : less) {
    // image(a) < image(b): the later of the two positions carries the constraint.
    const int pa = position[a];
    const int pb = position[b];
    if (pa < pb) {
      plan.levels[pb].above.push_back(pa);
    } else {
      plan.levels[pa].below.push_back(pb);
    }
  }
  return plan;
}

}  // namespace chroma::detail
