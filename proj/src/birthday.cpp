#include "chroma/birthday.hpp"

#include <cmath>
#include <stdexcept>

#include "chroma/counting.hpp"
#include "chroma/generators.hpp"

namespace chroma {

BirthdayShape BirthdayShape::complete(std::uint64_t n) {
  BirthdayShape s;
  s.kind = Kind::complete;
  s.n = n;
  return s;
}

BirthdayShape BirthdayShape::multipartite(std::uint64_t types, std::uint64_t per_type) {
  BirthdayShape s;
  s.kind = Kind::multipartite;
  s.types = types;
  s.n = per_type;
  return s;
}

BirthdayShape BirthdayShape::explicit_graph(Graph g) {
  BirthdayShape s;
  s.kind = Kind::graph;
  s.n = g.vertex_count();
  s.network = std::make_shared<const Graph>(std::move(g));
  return s;
}

BirthdayShape BirthdayShape::with_size(std::uint64_t size) const {
  if (kind == Kind::graph) throw std::invalid_argument("an explicit network has a fixed size");
  BirthdayShape s = *this;
  s.n = size;
  return s;
}

std::string BirthdayShape::name() const {
  switch (kind) {
    case Kind::complete: return "complete";
    case Kind::multipartite: return "multipartite";
    case Kind::graph: return "graph";
  }
  return "complete";
}

namespace {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void require(int s, std::uint64_t c) {
  if (s < 2) throw std::invalid_argument("clique size s must be at least 2");
  if (c < 2) throw std::invalid_argument("color count c must be at least 2");
}

}  // namespace

mpz_class clique_count(const BirthdayShape& shape, int s) {
  if (s < 1) throw std::invalid_argument("clique size must be positive");
  const auto k = static_cast<std::uint64_t>(s);
  switch (shape.kind) {
    case BirthdayShape::Kind::complete:
      return binomial(shape.n, k);
    case BirthdayShape::Kind::multipartite: {
      // A clique takes at most one person per type: choose s types, then one
      // person from each.
      mpz_class per;
      mpz_ui_pow_ui(per.get_mpz_t(), static_cast<unsigned long>(shape.n), static_cast<unsigned long>(k));
      return binomial(shape.types, k) * per;
    }
    case BirthdayShape::Kind::graph:
      if (shape.network->vertex_count() > kBirthdayGraphVertexLimit) {
        throw GuardError("explicit network exceeds 10^4 vertices");
      }
      if (s > kBirthdayCliqueLimit) throw GuardError("clique size above 6 on an explicit network");
      return count_copies(complete_graph(k), *shape.network);
  }
  return 0;
}

double classical_match_probability(std::uint64_t n, std::uint64_t c) {
  if (n > c) return 1.0;
  long double none = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    none *= 1.0L - static_cast<long double>(i) / static_cast<long double>(c);
  }
  return static_cast<double>(1.0L - none);
}

std::uint64_t classical_min_group_size(std::uint64_t c, double target) {
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("target must lie in (0,1)");
  for (std::uint64_t n = 1;; ++n) {
    if (classical_match_probability(n, c) >= target) return n;
  }
}

MatchResult match_probability(const BirthdayShape& shape, int s, std::uint64_t c) {
  require(s, c);
  MatchResult r;
  r.cliques = clique_count(shape, s);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(s - 1));
  r.expected = mpq_class(r.cliques, scale).get_d();
  r.probability = -std::expm1(-r.expected);
  if (r.cliques == 0 && shape.kind == BirthdayShape::Kind::graph) {
    r.warning = "network has no clique of size " + std::to_string(s);
  }
  if (s == 2 && shape.kind == BirthdayShape::Kind::complete) {
    r.exact_classical = classical_match_probability(shape.n, c);
  }
  return r;
}

GroupSize min_group_size(const BirthdayShape& shape, int s, std::uint64_t c, double target) {
  require(s, c);
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("target must lie in (0,1)");
  if (shape.kind == BirthdayShape::Kind::graph) {
    throw std::invalid_argument("group size search needs a complete or multipartite shape");
  }
  if (shape.kind == BirthdayShape::Kind::multipartite && shape.types < static_cast<std::uint64_t>(s)) {
    throw std::invalid_argument("fewer types than the clique size: no match is possible");
  }
  auto reaches = [&](std::uint64_t n) {
    return match_probability(shape.with_size(n), s, c).probability >= target;
  };
  // match_probability is nondecreasing in n: bracket by doubling, then bisect.
  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  while (!reaches(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (std::uint64_t{1} << 40)) throw std::runtime_error("group size search diverged");
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (reaches(mid) ? hi : lo) = mid;
  }
  GroupSize out;
  out.n = hi;
  out.probability = match_probability(shape.with_size(hi), s, c).probability;
  out.probability_below = match_probability(shape.with_size(hi - 1), s, c).probability;
  if (s == 2 && shape.kind == BirthdayShape::Kind::complete) {
    out.exact_classical_n = classical_min_group_size(c, target);
  }
  return out;
}

}  // namespace chroma
