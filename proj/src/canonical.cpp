#include "chroma/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace chroma {

namespace {

class Dense {
 public:
  explicit Dense(const Graph& g)
      : n_(static_cast<int>(g.vertex_count())), words_((n_ + 63) / 64), rows_(words_ * n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  int size() const { return n_; }
  bool adj(int a, int b) const { return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U; }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Equitable refinement. Cells split by neighbor count into the splitter cell,
// smaller counts first, so the result depends only on structure and cell order.
void refine(const Dense& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(p[j].size());
        for (int x : p[j]) {
          int count = 0;
          for (int y : p[s]) count += g.adj(x, y);
          keyed.emplace_back(count, x);
        }
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(j));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(j), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

Partition initial_partition(const Dense& g) {
  Partition p(1);
  p[0].resize(g.size());
  std::iota(p[0].begin(), p[0].end(), 0);
  if (g.size() > 0) refine(g, p);
  return p;
}

Partition individualize(const Dense& g, const Partition& p, int v) {
  Partition out;
  out.reserve(p.size() + 1);
  for (const Cell& cell : p) {
    if (std::find(cell.begin(), cell.end(), v) == cell.end()) {
      out.push_back(cell);
      continue;
    }
    out.push_back({v});
    Cell rest;
    for (int x : cell) {
      if (x != v) rest.push_back(x);
    }
    if (!rest.empty()) out.push_back(std::move(rest));
  }
  refine(g, out);
  return out;
}

bool discrete(const Partition& p, int n) { return static_cast<int>(p.size()) == n; }

int first_nonsingleton(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].size() > 1) return static_cast<int>(i);
  }
  return -1;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

// Searches for an automorphism fixing `fixed` pointwise and sending v to w.
// `base` is the refined partition after individualizing `fixed` in order.
class AutomorphismFinder {
 public:
  explicit AutomorphismFinder(const Dense& g) : g_(g) {}

  std::optional<std::vector<int>> find(const Partition& base, const std::vector<int>& fixed, int v,
                                       int w) const {
    const int n = g_.size();
    Partition src = individualize(g_, base, v);
    Partition dst = individualize(g_, base, w);
    if (src.size() != dst.size()) return std::nullopt;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i].size() != dst[i].size()) return std::nullopt;
    }
    std::vector<int> target_cell(n);
    std::vector<int> order;
    order.reserve(n);
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (int x : src[i]) {
        target_cell[x] = static_cast<int>(i);
        order.push_back(x);
      }
    }
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    for (int f : fixed) {
      image[f] = f;
      used[f] = 1;
    }
    if (image[v] != -1 && image[v] != w) return std::nullopt;
    if (image[v] == -1 && used[w]) return std::nullopt;
    image[v] = w;
    used[w] = 1;
    // Pinned vertices must be consistent with each other before the search.
    std::vector<int> pinned;
    for (int x = 0; x < n; ++x) {
      if (image[x] != -1) pinned.push_back(x);
    }
    for (std::size_t i = 0; i < pinned.size(); ++i) {
      if (!in_cell(dst, target_cell[pinned[i]], image[pinned[i]])) return std::nullopt;
      for (std::size_t j = i + 1; j < pinned.size(); ++j) {
        if (g_.adj(pinned[i], pinned[j]) != g_.adj(image[pinned[i]], image[pinned[j]])) {
          return std::nullopt;
        }
      }
    }
    std::vector<int> free;
    for (int x : order) {
      if (image[x] == -1) free.push_back(x);
    }
    if (!extend(free, 0, pinned, dst, target_cell, image, used)) return std::nullopt;
    return image;
  }

 private:
  static bool in_cell(const Partition& p, int cell, int x) {
    return std::find(p[cell].begin(), p[cell].end(), x) != p[cell].end();
  }

  bool extend(const std::vector<int>& free, std::size_t i, std::vector<int>& mapped,
              const Partition& dst, const std::vector<int>& target_cell, std::vector<int>& image,
              std::vector<char>& used) const {
    if (i == free.size()) return true;
    const int x = free[i];
    for (int y : dst[target_cell[x]]) {
      if (used[y]) continue;
      bool ok = true;
      for (int z : mapped) {
        if (g_.adj(x, z) != g_.adj(y, image[z])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      mapped.push_back(x);
      if (extend(free, i + 1, mapped, dst, target_cell, image, used)) return true;
      mapped.pop_back();
      used[y] = 0;
      image[x] = -1;
    }
    return false;
  }

  const Dense& g_;
};

// Orbits of the pointwise stabilizer of `fixed` on the vertices of `cell`.
// Each found automorphism merges all of its cycles into `uf`.
void orbits_in_cell(const AutomorphismFinder& finder, const Partition& base,
                    const std::vector<int>& fixed, const Cell& cell, UnionFind& uf) {
  std::vector<int> reps;
  for (int w : cell) {
    bool placed = false;
    for (int r : reps) {
      if (uf.find(r) == uf.find(w)) {
        placed = true;
        break;
      }
    }
    for (std::size_t i = 0; i < reps.size() && !placed; ++i) {
      if (auto sigma = finder.find(base, fixed, reps[i], w)) {
        for (int x = 0; x < static_cast<int>(sigma->size()); ++x) uf.unite(x, (*sigma)[x]);
        placed = true;
      }
    }
    if (!placed) reps.push_back(w);
  }
}

std::vector<std::uint8_t> leaf_code(const Dense& g, const Partition& p) {
  const int n = g.size();
  std::vector<std::uint8_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (g.adj(p[i][0], p[j][0])) code[bit / 8] |= static_cast<std::uint8_t>(0x80U >> (bit % 8));
    }
  }
  return code;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Dense& g) : g_(g), finder_(g) {}

  void run() {
    std::vector<int> fixed;
    visit(initial_partition(g_), fixed);
  }

  const std::vector<std::uint8_t>& best_code() const { return best_code_; }
  const Partition& best_leaf() const { return best_leaf_; }

 private:
  void visit(const Partition& p, std::vector<int>& fixed) {
    if (discrete(p, g_.size())) {
      auto code = leaf_code(g_, p);
      if (!have_best_ || code > best_code_) {
        best_code_ = std::move(code);
        best_leaf_ = p;
        have_best_ = true;
      }
      return;
    }
    const Cell& cell = p[first_nonsingleton(p)];
    UnionFind uf(g_.size());
    orbits_in_cell(finder_, p, fixed, cell, uf);
    std::vector<int> seen_roots;
    for (int v : cell) {
      int root = uf.find(v);
      if (std::find(seen_roots.begin(), seen_roots.end(), root) != seen_roots.end()) continue;
      seen_roots.push_back(root);
      fixed.push_back(v);
      visit(individualize(g_, p, v), fixed);
      fixed.pop_back();
    }
  }

  const Dense& g_;
  AutomorphismFinder finder_;
  std::vector<std::uint8_t> best_code_;
  Partition best_leaf_;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const Dense dense(g);
  std::vector<Vertex> label(g.vertex_count());
  if (g.vertex_count() == 0) return label;
  CanonicalSearch search(dense);
  search.run();
  const Partition& leaf = search.best_leaf();
  for (std::size_t i = 0; i < leaf.size(); ++i) label[leaf[i][0]] = static_cast<Vertex>(i);
  return label;
}

CanonicalForm canonical_form(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  CanonicalForm form;
  form.bytes = {static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(n >> 8),
                static_cast<std::uint8_t>(n >> 16), static_cast<std::uint8_t>(n >> 24)};
  if (n < 2) return form;
  const Dense dense(g);
  CanonicalSearch search(dense);
  search.run();
  const auto& code = search.best_code();
  form.bytes.insert(form.bytes.end(), code.begin(), code.end());
  return form;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

mpz_class automorphism_count(const Graph& g) {
  const Dense dense(g);
  const AutomorphismFinder finder(dense);
  mpz_class count = 1;
  std::vector<int> fixed;
  Partition p = initial_partition(dense);
  for (int c = first_nonsingleton(p); c >= 0; c = first_nonsingleton(p)) {
    const Cell& cell = p[c];
    const int v = cell.front();
    UnionFind uf(dense.size());
    orbits_in_cell(finder, p, fixed, cell, uf);
    unsigned long orbit = 0;
    for (int w : cell) orbit += uf.find(w) == uf.find(v);
    count *= orbit;
    fixed.push_back(v);
    p = individualize(dense, p, v);
  }
  return count;
}

std::vector<std::pair<Vertex, Vertex>> symmetry_breaking_pairs(const Graph& g) {
  const Dense dense(g);
  const AutomorphismFinder finder(dense);
  const int n = dense.size();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<int> fixed;
  Partition p = initial_partition(dense);
  while (!discrete(p, n)) {
    UnionFind uf(n);
    for (const Cell& cell : p) {
      if (cell.size() > 1) orbits_in_cell(finder, p, fixed, cell, uf);
    }
    std::vector<int> size(n, 0);
    for (int x = 0; x < n; ++x) ++size[uf.find(x)];
    int pick = -1;
    for (int x = 0; x < n; ++x) {
      if (size[uf.find(x)] > 1 && (pick < 0 || size[uf.find(x)] > size[uf.find(pick)])) pick = x;
    }
    if (pick < 0) break;  // trivial stabilizer; remaining cells are rigid
    for (int x = 0; x < n; ++x) {
      if (x != pick && uf.find(x) == uf.find(pick)) {
        pairs.emplace_back(static_cast<Vertex>(pick), static_cast<Vertex>(x));
      }
    }
    fixed.push_back(pick);
    p = individualize(dense, p, pick);
  }
  return pairs;
}

}  // namespace chroma
