#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "chroma/graph.hpp"

namespace chroma {

/// A friendship network: everyone knows everyone (complete), people of
/// different types know each other (complete multipartite with equal parts),
/// or an explicit graph.
struct BirthdayShape {
  enum class Kind { complete, multipartite, graph };

  Kind kind = Kind::complete;
  std::uint64_t n = 0;      // people (complete) or people per type (multipartite)
  std::uint64_t types = 0;  // multipartite only
  std::shared_ptr<const Graph> network;

  static BirthdayShape complete(std::uint64_t n);
  static BirthdayShape multipartite(std::uint64_t types, std::uint64_t per_type);
  static BirthdayShape explicit_graph(Graph g);

  BirthdayShape with_size(std::uint64_t size) const;
  std::string name() const;
};

inline constexpr std::size_t kBirthdayGraphVertexLimit = 10'000;
inline constexpr int kBirthdayCliqueLimit = 6;

/// N(K_s, network). Explicit graphs are searched, guarded by the limits above.
mpz_class clique_count(const BirthdayShape& shape, int s);

struct MatchResult {
  double probability = 0;      // 1 - exp(-expected), a Poisson approximation
  double expected = 0;         // N(K_s) / c^(s-1)
  mpz_class cliques;
  std::optional<double> exact_classical;  // s = 2 on a complete shape
  std::string warning;
};

MatchResult match_probability(const BirthdayShape& shape, int s, std::uint64_t c);

struct GroupSize {
  std::uint64_t n = 0;  // people, or people per type
  double probability = 0;
  double probability_below = 0;  // at n - 1
  std::optional<std::uint64_t> exact_classical_n;
};

/// Smallest size reaching `target` under match_probability. Explicit graphs
/// are not families and are rejected.
GroupSize min_group_size(const BirthdayShape& shape, int s, std::uint64_t c, double target);

/// 1 - prod_{i<n} (1 - i/c): probability that n people with c equally likely
/// birthdays include a shared one.
double classical_match_probability(std::uint64_t n, std::uint64_t c);
std::uint64_t classical_min_group_size(std::uint64_t c, double target);

}  // namespace chroma
