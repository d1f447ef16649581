#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"

namespace borelkit {

// Borel generators of HS_1(B_1(u_1, ..., u_m)): x_{p_i} u_i with p_i the
// maximal gap of u_i; generators without gaps are dropped.
std::vector<Monomial> hs1_borel(const std::vector<Monomial>& borel_gens);

// Borel generators of HS_j: each u_i with |gap(u_i)| >= j multiplied by its j
// largest gaps, reduced to the ⪯-maximal ones.
std::vector<Monomial> hsk_borel(const std::vector<Monomial>& borel_gens, int j);

// HS_1(HS_j(I)) == HS_{j+1}(I), compared as expanded ideals.
bool hs_recursion_check(const std::vector<Monomial>& borel_gens, int j);

enum class Provenance { formula, oracle, not_applicable };
std::string to_string(Provenance p);

struct ShiftStratum {
  int j = 0;
  std::vector<Monomial> borel_generators;
  MonomialIdeal ideal;
  int height = 0;
  std::int64_t multiplicity = 0;
  Provenance multiplicity_source = Provenance::not_applicable;
  int analytic_spread = 0;
  Provenance analytic_spread_source = Provenance::not_applicable;
};

struct ShiftProfile {
  std::vector<ShiftStratum> strata;  // j = 0 .. projdim(I)
  bool height_nonincreasing = true;
  // Asserted only across strata whose analytic spread comes from the formula.
  bool analytic_spread_nonincreasing = true;
};

// Equigenerated squarefree Borel ideal given by Borel generators.
ShiftProfile monotonicity_profile(const std::vector<Monomial>& borel_gens);

struct UnimodalityResult {
  std::vector<std::int64_t> multiplicities;  // e(S/HS_k(B_1(u))), k = 0 .. projdim
  bool unimodal = true;
};

UnimodalityResult multiplicity_unimodality(const Monomial& u);

// No strict decrease is followed later by a strict increase.
bool is_unimodal(const std::vector<std::int64_t>& seq);

}  // namespace borelkit
