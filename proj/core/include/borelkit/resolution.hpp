#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"

namespace borelkit {

// Graded Betti numbers beta_{i,j}(I) of the ideal I (beta_{0,.} counts generators).
class BettiTable {
 public:
  void add(int i, int j, std::int64_t beta);
  std::int64_t at(int i, int j) const;
  std::int64_t total(int i) const;
  // Largest i with a nonzero entry; -1 for the empty table.
  int projdim() const;
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

  // Re-indexes to S/I: beta_{i+1,j}(S/I) = beta_{i,j}(I), plus beta_{0,0}(S/I) = 1.
  BettiTable shifted_to_quotient() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;  // nonzero entries only
};

// beta_{i,a}(I) keyed by homological degree and multidegree x^a.
class MultigradedBettiTable {
 public:
  void add(int i, const Monomial& a, std::int64_t beta);
  std::int64_t at(int i, const Monomial& a) const;
  const std::map<std::pair<int, Monomial>, std::int64_t>& entries() const { return entries_; }
  BettiTable collapse() const;
  // Multidegrees carrying a nonzero beta in homological degree i.
  std::vector<Monomial> shifts(int i) const;
  int projdim() const;

  friend bool operator==(const MultigradedBettiTable&, const MultigradedBettiTable&) = default;

 private:
  std::map<std::pair<int, Monomial>, std::int64_t> entries_;
};

// beta_{i,i+j}(I) = sum over u in G(I) of degree j of C(m(u) - L(u) - 1, i),
// L(u) = #{l < m(u) : deg_{x_l}(u) = k}. Throws InputError if I is not k-Borel.
BettiTable betti_kborel(const MonomialIdeal& I, int k);

struct KoszulBasisElement {
  Monomial u;
  std::vector<VarIndex> F;
  Monomial multidegree;  // x^F u
};

// Basis of H_i(x; S/I) for i >= 1: pairs (u, F), |F| = i - 1, max(F) < m(u),
// x^F u k-bounded.
std::vector<KoszulBasisElement> koszul_basis(const MonomialIdeal& I, int k, int i);

// Basis of H_i(x_n, ..., x_j; S/I): the same pairs restricted to j <= min(F)
// and, for i = 1, to m(u) >= j.
std::vector<KoszulBasisElement> koszul_basis_partial(const MonomialIdeal& I, int k, int i,
                                                     VarIndex j);

// HS_j(I) = (x^F u : u in G(I), F ⊆ set(u), |F| = j) for an ideal with linear
// quotients. The certificate is re-verified first.
MonomialIdeal hs_via_linear_quotients(const MonomialIdeal& I,
                                      const LinearQuotientCertificate& cert, int j);

// Betti numbers of an ideal with linear quotients: beta_{i, deg u + i} += C(|set(u)|, i).
BettiTable betti_from_linear_quotients(const LinearQuotientCertificate& cert);

struct OracleOptions {
  // Scan every multidegree dominated by the total lcm instead of the lcm lattice.
  bool exhaustive = false;
  // Cap on the number of candidate multidegrees.
  std::size_t limit = 20000;
  // Extra candidate multidegrees to include (self-check of the oracle).
  std::vector<Monomial> extra_degrees;
};

// Default candidate cap, overridden by the BORELKIT_LIMIT environment variable.
std::size_t default_oracle_limit();

// Candidate multidegrees: all lcms of nonempty generator subsets.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, std::size_t limit);

// Dimension of reduced homology of the upper Koszul simplicial complex
// K^a(I) = { F ⊆ supp(a) : x^a / x^F in I } in every degree. Index q of the
// result is dim H~_{q-1}; the vector is empty for the void complex.
std::vector<std::int64_t> upper_koszul_homology(const MonomialIdeal& I, const Monomial& a);

// Exact multigraded Betti numbers over Q: beta_{i,a}(I) = dim H~_{i-1}(K^a(I)).
MultigradedBettiTable koszul_homology_oracle(const MonomialIdeal& I,
                                             const OracleOptions& options = {});

// Ideal generated by x^a with beta_{j,a}(I) > 0.
MonomialIdeal hs_from_oracle(const MonomialIdeal& I, int j, const OracleOptions& options = {});
MonomialIdeal hs_from_table(const MultigradedBettiTable& table, int n, int j);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace borelkit
