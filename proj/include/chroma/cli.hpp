#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "chroma/graph.hpp"
#include "chroma/limit_theory.hpp"

namespace chroma::cli {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr const char* kSeedEnvVar = "CHROMA_SEED";

/// Exit codes: 0 success, 1 usage or input error, 2 guard violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// An existing file path, a generator "kind:params" (complete:N, cycle:N, path:N,
/// star:R, wheel:N, multipartite:A,B,..., er:N,P,SEED, pyramid:PAT,N,
/// counterexample:PAT,N,LAMBDA, copies:PAT,M, union:SPEC;SPEC;...), or a
/// named pattern.
Graph parse_graph_spec(const std::string& spec);

/// "a/b", an integer, or a finite decimal, converted exactly.
mpq_class parse_rational(std::string_view text);

/// "k:rate,k:rate,..."
PoissonMixture parse_mixture(std::string_view text);

}  // namespace chroma::cli
