#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "borelkit/monomial.hpp"

namespace borelkit {

// Passing this as k means "no exponent bound" (plain Borel ideals).
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// A monomial ideal held by its minimal generating set G(I), sorted in
// descending lex order. The zero ideal has no generators; the unit ideal is
// generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int n) : n_(n) {}

  // Minimalizes `gens` under divisibility.
  MonomialIdeal(int n, std::vector<Monomial> gens, std::optional<int> bound = std::nullopt);

  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<int> bound() const { return bound_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_principal() const { return gens_.size() == 1; }
  bool is_squarefree() const;
  bool is_equigenerated() const;
  int max_degree() const;
  int max_exponent() const;

  // Membership: some generator divides u.
  bool contains(const Monomial& u) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
  std::optional<int> bound_;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, int n);

// All k-bounded v of the same degree with v ⪯ u: direct enumeration of sorted
// index forms j_1 <= ... <= j_d with j_l <= i_l and multiplicities <= k.
std::vector<Monomial> borel_principal_k(const Monomial& u, int k);

// G(B_k(u_1, ..., u_m)).
MonomialIdeal borel_closure_k(const std::vector<Monomial>& borel_gens, int k, int n);

bool is_k_borel(const MonomialIdeal& I, int k);

// Ideal generated by the k-bounded members of G(I).
MonomialIdeal bounded_part(const MonomialIdeal& I, int k);

// height(B_k(u_1, ..., u_m)) = max_i min(u_i).
int height_kborel(const std::vector<Monomial>& borel_gens);

// Maximal elements of G(I) under ⪯ within each degree; the canonical Borel
// generators of a squarefree Borel ideal.
std::vector<Monomial> borel_generators_squarefree(const MonomialIdeal& I);

MonomialIdeal colon_by_monomial(const MonomialIdeal& J, const Monomial& u);

struct LinearQuotientCertificate {
  std::vector<Monomial> order;
  std::vector<std::vector<VarIndex>> sets;  // sets[j] = set(order[j]), sorted

  const std::vector<VarIndex>& set_of(const Monomial& u) const;
  std::size_t position_of(const Monomial& u) const;
};

struct LinearQuotientFailure {
  std::size_t index = 0;  // position in the order whose colon ideal is not linear
  Monomial offending;     // a non-variable generator of that colon ideal
};

struct LinearQuotientResult {
  std::optional<LinearQuotientCertificate> certificate;
  std::optional<LinearQuotientFailure> failure;

  bool ok() const { return certificate.has_value(); }
};

// Checks successive colon ideals (u_1, ..., u_{j-1}) : u_j along `order`.
// Throws InputError if `order` is not a permutation of G(I).
LinearQuotientResult linear_quotient_certificate(const MonomialIdeal& I,
                                                 const std::vector<Monomial>& order);

// Descending lex order of G(I) (x1 > x2 > ... > xn).
std::vector<Monomial> lex_order(const MonomialIdeal& I);

struct DecompositionEntry {
  Monomial u;
  VarIndex s = 0;
  Monomial g;  // g(x_s u)
};

struct DecompositionFunctionTable {
  std::vector<DecompositionEntry> entries;
  const Monomial& at(const Monomial& u, VarIndex s) const;
};

// g(w) = u_j for the smallest j with w in (u_1, ..., u_j).
Monomial decomposition_function_value(const LinearQuotientCertificate& cert, const Monomial& w);

DecompositionFunctionTable decomposition_function(const MonomialIdeal& I,
                                                  const LinearQuotientCertificate& cert);

struct RegularityResult {
  bool regular = true;
  std::optional<std::pair<Monomial, VarIndex>> witness;  // (u, s) violating the inclusion
};

// set(g(x_s u)) ⊆ set(u) for all u in G(I), s in set(u).
RegularityResult is_regular_decomposition(const MonomialIdeal& I,
                                          const LinearQuotientCertificate& cert);

}  // namespace borelkit
