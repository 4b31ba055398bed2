#include "chroma/counting.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "chroma/generators.hpp"
#include "parallel.hpp"
#include "search.hpp"

namespace chroma {

using detail::Count;
using detail::HostIndex;
using detail::PatternPlan;
using detail::Searcher;

namespace {

constexpr std::size_t kRootChunk = 64;

Count count_all_roots(const PatternPlan& plan, const HostIndex& host, unsigned threads) {
  if (plan.size == 0) return 1;
  const std::size_t chunks = (host.size() + kRootChunk - 1) / kRootChunk;
  std::vector<Count> partial(chunks, 0);
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<Searcher> searchers;
  searchers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) searchers.emplace_back(plan, host);
  detail::for_each_chunk(host.size(), kRootChunk, threads,
                         [&](unsigned w, std::size_t begin, std::size_t end, std::size_t c) {
                           Count sum = 0;
                           for (std::size_t r = begin; r < end; ++r) {
                             sum += searchers[w].count_from_root(static_cast<Vertex>(r));
                           }
                           partial[c] = sum;
                         });
  return std::accumulate(partial.begin(), partial.end(), Count{0});
}

mpz_class count_with(const Graph& h, const Graph& g, bool induced, bool break_symmetry,
                     unsigned threads) {
  if (h.vertex_count() > g.vertex_count()) return 0;
  const PatternPlan plan = PatternPlan::build(h, induced, break_symmetry);
  const HostIndex host(g, break_symmetry);
  return detail::to_mpz(count_all_roots(plan, host, threads));
}

}  // namespace

mpz_class count_injective_homs(const Graph& h, const Graph& g, unsigned threads) {
  return count_with(h, g, false, false, threads);
}

mpz_class count_copies(const Graph& h, const Graph& g, unsigned threads) {
  return count_with(h, g, false, true, threads);
}

mpz_class count_induced_copies(const Graph& f, const Graph& g, unsigned threads) {
  return count_with(f, g, true, true, threads);
}

CopyList enumerate_copies(const Graph& h, const Graph& g, std::size_t cap, unsigned threads) {
  const std::size_t k = h.vertex_count();
  if (k == 0 || k > g.vertex_count()) return CopyList(k, {});
  const PatternPlan plan = PatternPlan::build(h, false, true);
  const HostIndex host(g, true);
  const std::size_t chunks = (host.size() + kRootChunk - 1) / kRootChunk;
  std::vector<std::vector<Vertex>> partial(chunks);
  std::atomic<std::size_t> total{0};
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<Searcher> searchers;
  searchers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) searchers.emplace_back(plan, host);

  detail::for_each_chunk(
      host.size(), kRootChunk, threads,
      [&](unsigned w, std::size_t begin, std::size_t end, std::size_t c) {
        auto& out = partial[c];
        std::vector<Vertex> buf(k);
        for (std::size_t r = begin; r < end; ++r) {
          searchers[w].enumerate_from_root(static_cast<Vertex>(r), [&](const Vertex* images) {
            if (++total > cap) {
              throw GuardError("copy list exceeds cap of " + std::to_string(cap) + " copies");
            }
            for (std::size_t i = 0; i < k; ++i) buf[i] = host.original(images[i]);
            std::sort(buf.begin(), buf.end());
            out.insert(out.end(), buf.begin(), buf.end());
          });
        }
      });

  std::vector<Vertex> flat;
  flat.reserve(total.load() * k);
  for (auto& part : partial) flat.insert(flat.end(), part.begin(), part.end());
  return CopyList(k, std::move(flat));
}

std::map<int, mpz_class> overlap_profile(const CopyList& copies) {
  const int k = static_cast<int>(copies.pattern_size());
  std::map<int, mpz_class> result;
  for (int t = 2; t <= k; ++t) result[t] = 0;
  if (k < 2 || copies.size() < 2) return result;

  // A_j = sum over j-subsets S of m_S (m_S - 1), where m_S counts copies
  // containing S, equals sum_{t >= j} C(t, j) |K(t)|. Solve from t = k down.
  std::map<int, mpz_class> a;
  std::vector<int> pick;
  for (int j = 2; j <= k; ++j) {
    std::vector<Vertex> keys;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      auto set = copies[c];
      pick.resize(j);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        for (int i = 0; i < j; ++i) keys.push_back(set[pick[i]]);
        int i = j - 1;
        while (i >= 0 && pick[i] == k - j + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int m = i + 1; m < j; ++m) pick[m] = pick[m - 1] + 1;
      }
    }
    const std::size_t count = keys.size() / j;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [&](std::size_t i) { return keys.begin() + static_cast<std::ptrdiff_t>(i * j); };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return std::lexicographical_compare(key(x), key(x) + j, key(y), key(y) + j);
    });
    mpz_class sum = 0;
    std::size_t run = 0;
    for (std::size_t i = 0; i <= count; ++i) {
      if (i < count && run > 0 && std::equal(key(order[i]), key(order[i]) + j, key(order[i - 1]))) {
        ++run;
        continue;
      }
      if (run > 1) sum += mpz_class(static_cast<unsigned long>(run)) * (run - 1);
      run = 1;
    }
    a[j] = sum;
  }
  for (int t = k; t >= 2; --t) {
    mpz_class value = a[t];
    for (int u = t + 1; u <= k; ++u) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(t));
      value -= binom * result[u];
    }
    result[t] = value;
  }
  return result;
}

std::map<int, mpz_class> overlap_profile(const Graph& h, const Graph& g, unsigned threads) {
  return overlap_profile(enumerate_copies(h, g, kDefaultCopyCap, threads));
}

mpz_class count_overlap_pairs(const Graph& h, const Graph& g, int t, unsigned threads) {
  if (t < 2 || t > static_cast<int>(h.vertex_count())) {
    throw std::invalid_argument("overlap size must lie in [2, |V(h)|]");
  }
  return overlap_profile(h, g, threads).at(t);
}

Graph t_join(const Graph& h, std::span<const Vertex> j1, std::span<const Vertex> j2) {
  const std::size_t v = h.vertex_count();
  if (j1.size() != j2.size()) throw std::invalid_argument("pivot tuples differ in length");
  if (j1.empty() || j1.size() > v) throw std::invalid_argument("pivot length must lie in [1, |V(h)|]");
  auto check = [&](std::span<const Vertex> j) {
    std::vector<char> seen(v, 0);
    for (Vertex x : j) {
      if (x >= v) throw std::invalid_argument("pivot vertex out of range");
      if (seen[x]++) throw std::invalid_argument("pivot tuple repeats a vertex");
    }
  };
  check(j1);
  check(j2);

  std::vector<Vertex> image(v, static_cast<Vertex>(-1));
  for (std::size_t a = 0; a < j2.size(); ++a) image[j2[a]] = j1[a];
  auto next = static_cast<Vertex>(v);
  for (Vertex x = 0; x < v; ++x) {
    if (image[x] == static_cast<Vertex>(-1)) image[x] = next++;
  }
  std::vector<Edge> edges = h.edges();
  for (const auto& [a, b] : h.edges()) edges.emplace_back(image[a], image[b]);
  return Graph(next, std::move(edges));
}

namespace {

// Visits all strictly increasing length-t sequences over [0, v).
template <class F>
void for_each_subset(int v, int t, F&& f) {
  std::vector<Vertex> s(t);
  std::iota(s.begin(), s.end(), Vertex{0});
  for (;;) {
    f(s);
    int i = t - 1;
    while (i >= 0 && static_cast<int>(s[i]) == v - t + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int m = i + 1; m < t; ++m) s[m] = s[m - 1] + 1;
  }
}

}  // namespace

JoinCatalog enumerate_t_joins(const Graph& h) {
  const int v = static_cast<int>(h.vertex_count());
  if (v < 3) throw std::invalid_argument("join catalog needs a pattern with at least 3 vertices");
  double pivot_pairs = 0;
  for (int t = 2; t <= v - 1; ++t) {
    double pairs = 1;
    for (int i = 0; i < t; ++i) pairs *= static_cast<double>(v - i) * (v - i) / (t - i);
    pivot_pairs += pairs;
  }
  if (pivot_pairs > kMaxJoinPivotPairs) throw GuardError("pattern too large for the join catalog");
  JoinCatalog catalog{h, {}};
  for (int t = 2; t <= v - 1; ++t) {
    // Permuting both pivot tuples by the same permutation gives the same graph,
    // so j1 can be taken sorted while j2 ranges over all ordered tuples.
    std::map<CanonicalForm, Graph> seen;
    for_each_subset(v, t, [&](const std::vector<Vertex>& j1) {
      for_each_subset(v, t, [&](std::vector<Vertex> j2) {
        do {
          Graph joined = t_join(h, j1, j2);
          CanonicalForm form = canonical_form(joined);
          if (!seen.count(form)) seen.emplace(std::move(form), canonical_graph(joined));
        } while (std::next_permutation(j2.begin(), j2.end()));
      });
    });
    auto& bucket = catalog.by_t[t];
    for (auto& [form, rep] : seen) bucket.push_back({form, std::move(rep)});
  }
  return catalog;
}

SupergraphClasses enumerate_supergraph_classes(const Graph& h) {
  const std::size_t v = h.vertex_count();
  if (v > 10) throw GuardError("pattern too large for supergraph enumeration (|V| > 10)");
  SupergraphClasses out{h, {}};
  const Graph full = complete_graph(std::max<std::size_t>(v, 1));
  const mpz_class top = v == 0 ? mpz_class(1) : count_copies(h, full, 1);
  for (long k = 1; k <= top.get_si(); ++k) out.by_k[static_cast<int>(k)];

  // Breadth-first over edge additions: every labeled supergraph of h is reached
  // from h one edge at a time, so closing under "add a non-edge" up to
  // isomorphism yields every class.
  std::map<CanonicalForm, Graph> all;
  std::vector<Graph> frontier{canonical_graph(h)};
  all.emplace(canonical_form(h), frontier.front());
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& f : frontier) {
      const auto edges = f.edges();
      for (Vertex a = 0; a < v; ++a) {
        for (Vertex b = a + 1; b < v; ++b) {
          if (f.has_edge(a, b)) continue;
          auto grown = edges;
          grown.emplace_back(a, b);
          Graph g(v, std::move(grown));
          CanonicalForm form = canonical_form(g);
          if (all.count(form)) continue;
          if (all.size() >= kMaxSupergraphClasses) {
            throw GuardError("pattern too large: supergraph class count exceeds cap");
          }
          Graph canon = canonical_graph(g);
          all.emplace(std::move(form), canon);
          next.push_back(std::move(canon));
        }
      }
    }
    frontier = std::move(next);
  }
  for (auto& [form, rep] : all) {
    const long k = count_copies(h, rep, 1).get_si();
    out.by_k[static_cast<int>(k)].push_back({form, rep});
  }
  return out;
}

std::map<int, mpz_class> count_Dk(const SupergraphClasses& classes, const Graph& g,
                                  unsigned threads) {
  std::map<int, mpz_class> out;
  for (const auto& [k, members] : classes.by_k) {
    mpz_class total = 0;
    for (const auto& cls : members) total += count_induced_copies(cls.representative, g, threads);
    out[k] = total;
  }
  return out;
}

std::map<int, mpz_class> count_Dk(const Graph& h, const Graph& g, unsigned threads) {
  return count_Dk(enumerate_supergraph_classes(h), g, threads);
}

}  // namespace chroma
