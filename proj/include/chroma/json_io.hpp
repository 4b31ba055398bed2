#pragma once

#include <json.hpp>

#include <gmpxx.h>

#include "chroma/birthday.hpp"
#include "chroma/canonical.hpp"
#include "chroma/counting.hpp"
#include "chroma/limit_theory.hpp"
#include "chroma/moments.hpp"
#include "chroma/simulation.hpp"

namespace chroma {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const mpz_class& value);
/// Exact rationals as "a/b" strings ("a" when the denominator is 1).
Json rational_json(const mpq_class& value);

Json to_json(const Graph& g);
Json to_json(const GraphClass& cls);
Json to_json(const MomentReport& report);
/// Array of [value, probability] pairs, plus exact rationals when present.
Json to_json(const Pmf& pmf);
Json to_json(const PoissonMixture& mixture);
Json to_json(const RegimeReport& report);
Json to_json(const EmpiricalDistribution& emp);
Json to_json(const SecondMomentReport& report);
Json to_json(const ColorChoice& choice);
Json to_json(const JoinCatalog& catalog);
Json to_json(const SupergraphClasses& classes);
Json to_json(const MatchResult& result);
Json to_json(const GroupSize& result);

}  // namespace chroma
