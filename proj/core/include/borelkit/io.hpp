#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"
#include "borelkit/resolution.hpp"
#include "borelkit/tspread.hpp"

namespace borelkit {

using Json = nlohmann::ordered_json;

// Ideal document:
//   { "n": 5, "k": 1, "borel_generators": ["x2*x4", "x3*x5"] }
//   { "n": 4, "generators": ["x1*x3", "x1*x4", "x2*x4"] }
//   { "tspread": { "n": 4, "d": 2, "t": 2 } }
// Monomials may also be given as exponent vectors, e.g. [1, 2, 0, 0, 1].
struct IdealSpec {
  int n = 0;
  std::optional<int> k;
  std::optional<std::vector<Monomial>> borel_generators;
  std::optional<std::vector<Monomial>> generators;
  std::optional<TSpreadVeroneseSpec> tspread;
};

struct ResolvedIdeal {
  MonomialIdeal ideal;
  // Bound k for which the ideal is known (or checked) to be k-Borel.
  std::optional<int> k;
  // Borel generators, when the ideal was given by them or is squarefree Borel.
  std::optional<std::vector<Monomial>> borel_generators;
  std::optional<TSpreadVeroneseSpec> tspread;
};

IdealSpec ideal_spec_from_json(const Json& doc);
// Parses JSON text; syntax errors report line and column.
IdealSpec ideal_spec_from_text(std::string_view text);
ResolvedIdeal resolve(const IdealSpec& spec);

Monomial monomial_from_json(const Json& j, int n);
Json monomial_to_exponent_json(const Monomial& u);
Json monomials_to_json(const std::vector<Monomial>& gens);  // text form, order kept
Json ideal_to_json(const MonomialIdeal& I);
Json betti_to_json(const BettiTable& t, bool quotient_module = false);
Json multigraded_betti_to_json(const MultigradedBettiTable& t, bool quotient_module = false);
Json index_sets_to_json(const std::vector<std::vector<VarIndex>>& sets);

}  // namespace borelkit
