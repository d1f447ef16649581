#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"

namespace borelkit {

// I_{n,d,t}: generated by all t-spread squarefree monomials of degree d in n
// variables. Requires 1 <= d, t <= n.
struct TSpreadVeroneseSpec {
  int n = 0;
  int d = 0;
  int t = 0;

  void validate() const;
  // C(n - (t - 1)(d - 1), d).
  std::int64_t expected_generator_count() const;
};

MonomialIdeal tspread_generators(const TSpreadVeroneseSpec& spec);

// set(u) under descending lex: the union of the gap intervals of u.
std::vector<VarIndex> tspread_set(const Monomial& u, const TSpreadVeroneseSpec& spec);

// HS_j(I_{n,d,t}): squarefree degree d + j monomials with at most j
// t-irregular pairs.
MonomialIdeal tspread_hs(const TSpreadVeroneseSpec& spec, int j);

struct RightPresentation {
  Monomial w;
  Monomial u;
  VarIndex i = 0;
};

// w = x_i u with u in G(I), i in a gap interval of u, u lex-greatest.
RightPresentation right_presentation(const Monomial& w, const TSpreadVeroneseSpec& spec);

// Orders G(HS_1(I)) by right presentation (u descending lex, then i ascending)
// and verifies linear quotients. Throws InternalError if verification fails.
LinearQuotientCertificate hs1_linear_quotient_order(const TSpreadVeroneseSpec& spec);

struct HigherShiftOrderExperiment {
  int j = 0;
  std::vector<Monomial> order;
  bool has_linear_quotients = false;
  std::optional<LinearQuotientFailure> failure;
};

// The analogous order for HS_j, j >= 2: presentations w = x^F u with F a
// j-subset of the gap set of u, u lex-greatest, then F ascending. Returned as
// an observation only.
HigherShiftOrderExperiment hsj_order_experiment(const TSpreadVeroneseSpec& spec, int j);

}  // namespace borelkit
