#include <doctest.h>

#include "borelkit/error.hpp"
#include "borelkit/invariants.hpp"
#include "borelkit/resolution.hpp"
#include "borelkit/shifts.hpp"
#include "helpers.hpp"

using namespace borelkit;
using testutil::all_monomials;
using testutil::M;
using testutil::Ms;
using testutil::texts;

using Strs = std::vector<std::string>;

TEST_CASE("HS_1 Borel generators") {
  CHECK(texts(hs1_borel(Ms({"x1*x2*x4"}, 4))) == Strs{"x1*x2*x3*x4"});
  CHECK(hs1_borel(Ms({"x1*x2*x3"}, 3)).empty());
  CHECK_THROWS_AS(hs1_borel(Ms({"x2*x4", "x3*x4*x5"}, 5)), InputError);
}

TEST_CASE("HS_j Borel generators") {
  const auto u = Ms({"x1*x3*x5"}, 5);
  CHECK(texts(hsk_borel(u, 2)) == Strs{"x1*x2*x3*x4*x5"});
  CHECK(hsk_borel(u, 3).empty());
  CHECK(betti_kborel(borel_closure_k(u, 1, 5), 1).projdim() == 2);
  CHECK(texts(hsk_borel(u, 0)) == Strs{"x1*x3*x5"});
  CHECK(texts(hsk_borel(u, 1)) == Strs{"x1*x3*x4*x5"});
  CHECK(texts(hsk_borel(Ms({"x2*x4"}, 4), 2)) == Strs{"x1*x2*x3*x4"});
}

TEST_CASE("HS recursion") {
  CHECK(hs_recursion_check(Ms({"x1*x3*x5"}, 5), 1));
  CHECK(hs_recursion_check(Ms({"x1*x2*x3"}, 4), 1));
}

TEST_CASE("three computations of HS_j coincide on all principal ideals with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (const Monomial& u : all_monomials(n, d, 1)) {
        const MonomialIdeal I = borel_closure_k({u}, 1, n);
        const auto oracle = koszul_homology_oracle(I);
        const auto cert = *linear_quotient_certificate(I, lex_order(I)).certificate;
        const int projdim = betti_kborel(I, 1).projdim();
        for (int j = 0; j <= projdim + 1; ++j) {
          const MonomialIdeal formula = borel_closure_k(hsk_borel({u}, j), 1, n);
          CHECK(formula == hs_from_table(oracle, n, j));
          CHECK(formula == hs_via_linear_quotients(I, cert, j));
          if (j >= 1 && j < projdim) CHECK(hs_recursion_check({u}, j));
        }
      }
    }
  }
}

TEST_CASE("three computations of HS_j coincide on two-generator ideals") {
  for (int n = 3; n <= 5; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const auto ms = all_monomials(n, d, 1);
      for (std::size_t a = 0; a < ms.size(); ++a) {
        for (std::size_t b = a + 1; b < ms.size(); ++b) {
          const std::vector<Monomial> gens{ms[a], ms[b]};
          const MonomialIdeal I = borel_closure_k(gens, 1, n);
          const auto oracle = koszul_homology_oracle(I);
          const auto cert = *linear_quotient_certificate(I, lex_order(I)).certificate;
          const int projdim = betti_kborel(I, 1).projdim();
          for (int j = 0; j <= projdim + 1; ++j) {
            const MonomialIdeal formula = borel_closure_k(hsk_borel(gens, j), 1, n);
            CHECK(formula == hs_from_table(oracle, n, j));
            CHECK(formula == hs_via_linear_quotients(I, cert, j));
          }
        }
      }
    }
  }
}

TEST_CASE("monotonicity profile of B1(x2x4)") {
  const ShiftProfile p = monotonicity_profile(Ms({"x2*x4"}, 4));
  REQUIRE(p.strata.size() == 3);
  CHECK(p.strata[0].height == 2);
  CHECK(p.strata[1].height == 2);
  CHECK(p.strata[2].height == 1);
  CHECK(p.height_nonincreasing);
  CHECK(p.analytic_spread_nonincreasing);
  for (const auto& s : p.strata) {
    CHECK(s.height == minimal_primes(s.ideal).height);
    CHECK(s.multiplicity == minimal_primes(s.ideal).multiplicity());
  }
}

TEST_CASE("monotonicity profile edge cases") {
  CHECK(monotonicity_profile(Ms({"x1*x2*x3"}, 3)).strata.size() == 1);
  const ShiftProfile p = monotonicity_profile(Ms({"x1*x2*x4"}, 4));
  REQUIRE(p.strata.size() == 2);
  CHECK(p.strata[0].height == 1);
  CHECK(p.strata[1].height == 1);
  CHECK(p.strata[0].analytic_spread == 2);
  CHECK(p.strata[1].analytic_spread == 1);
  CHECK(p.strata[1].analytic_spread_source == Provenance::oracle);
  CHECK(to_string(Provenance::not_applicable) == "n/a");
}

TEST_CASE("multiplicity unimodality") {
  const UnimodalityResult r = multiplicity_unimodality(M("x2*x4", 4));
  CHECK(r.multiplicities == std::vector<std::int64_t>{1, 6, 4});
  CHECK(r.unimodal);
  // (x1x2x3) is principal with HS_1 = 0: a one-term sequence, e = 3.
  CHECK(multiplicity_unimodality(M("x1*x2*x3", 3)).multiplicities == std::vector<std::int64_t>{3});
  CHECK(multiplicity_unimodality(M("x1*x3*x5", 5)).multiplicities.size() == 3);
  CHECK(is_unimodal({1, 3, 3, 2}));
  CHECK_FALSE(is_unimodal({2, 1, 2}));
}

TEST_CASE("unimodality and chains hold for every principal ideal with n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (const Monomial& u : all_monomials(n, d, 1)) {
        const UnimodalityResult r = multiplicity_unimodality(u);
        CHECK(r.unimodal);
        const ShiftProfile p = monotonicity_profile({u});
        CHECK(p.height_nonincreasing);
        CHECK(p.analytic_spread_nonincreasing);
        for (std::size_t j = 0; j < p.strata.size(); ++j) {
          CHECK(r.multiplicities[j] == minimal_primes(p.strata[j].ideal).multiplicity());
        }
      }
    }
  }
}
