#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"

namespace borelkit {

// Minimal monomial primes P_A = (x_i : i in A) of a squarefree ideal, i.e. the
// minimal vertex covers of the generator-support hypergraph.
struct MinimalPrimeSet {
  std::vector<std::vector<VarIndex>> primes;  // sorted lexicographically
  int height = 0;

  std::vector<std::vector<VarIndex>> at_height() const;
  std::int64_t multiplicity() const { return static_cast<std::int64_t>(at_height().size()); }
};

MinimalPrimeSet minimal_primes(const MonomialIdeal& I);

struct PrincipalMultiplicity {
  std::int64_t value = 0;        // C(max(B_1), |B_1| - 1)
  int height = 0;                // min(u)
  VarIndex first_block_max = 0;  // max(B_1)

  // Predicted minimal primes of minimal height: all A ⊆ [1, max(B_1)], |A| = h.
  std::vector<std::vector<VarIndex>> predicted_primes() const;
};

PrincipalMultiplicity multiplicity_principal(const Monomial& u);

struct HypothesisNotSatisfied {};

// Either the formula value, or a marker that no generator's first block is
// contained in every other generator's first block.
using MultiplicityOutcome = std::variant<std::int64_t, HypothesisNotSatisfied>;

MultiplicityOutcome multiplicity_multi(const std::vector<Monomial>& borel_gens);

struct LinearRelationGraph {
  std::vector<VarIndex> vertices;
  std::vector<std::pair<VarIndex, VarIndex>> edges;  // i < j, sorted

  // Connected, with vertex set exactly [1, n].
  bool connected_on(int n) const;
};

LinearRelationGraph linear_relation_graph(const MonomialIdeal& I);

// l(I) = n if 1 is not in the intersection of the first blocks, otherwise
// n - |intersection|, with n = max_i max(u_i).
int analytic_spread(const std::vector<Monomial>& borel_gens);

// Rank of the exponent matrix of G(I).
int oracle_analytic_spread(const MonomialIdeal& I);

}  // namespace borelkit
