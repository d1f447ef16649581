#include <doctest.h>

#include <set>

#include "borelkit/error.hpp"
#include "helpers.hpp"

using namespace borelkit;
using testutil::all_monomials;
using testutil::B1;
using testutil::M;
using testutil::Ms;
using testutil::texts;

namespace {

// Fixpoint of the k-bounded Borel moves applied to the whole generating set.
MonomialIdeal borel_move_fixpoint(const std::vector<Monomial>& gens, int k, int n) {
  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  for (const Monomial& g : gens) {
    if (k_bounded(g, k) && seen.insert(g).second) stack.push_back(g);
  }
  while (!stack.empty()) {
    const Monomial w = stack.back();
    stack.pop_back();
    for (int j = 1; j <= n; ++j) {
      if (w.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        const Monomial m = w.divided_by_var(j).times_var(i);
        if (k_bounded(m, k) && seen.insert(m).second) stack.push_back(m);
      }
    }
  }
  return minimalize({seen.begin(), seen.end()}, n);
}

}  // namespace

TEST_CASE("minimalize") {
  CHECK(texts(minimalize(Ms({"x1*x2", "x1*x2*x3"}, 3), 3)) == std::vector<std::string>{"x1*x2"});
  CHECK(minimalize({}, 3).is_zero());
  CHECK(texts(minimalize(Ms({"x1*x2", "x2*x3", "x1*x2*x3"}, 3), 3)) == std::vector<std::string>{"x1*x2", "x2*x3"});
}

TEST_CASE("generators are kept in descending lex order") {
  const MonomialIdeal I(4, Ms({"x2*x4", "x1*x3", "x1*x2", "x2*x3", "x1*x4"}, 4));
  CHECK(texts(I) == std::vector<std::string>{"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4"});
}

TEST_CASE("ideal construction errors") {
  CHECK_THROWS_AS(MonomialIdeal(3, {M("x1", 2)}), InputError);
  CHECK_THROWS_AS(MonomialIdeal(2, {M("x1^2", 2)}, 1), InputError);
}

TEST_CASE("Borel closures") {
  CHECK(texts(B1({"x2*x4"}, 4)) == std::vector<std::string>{"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4"});
  CHECK(texts(borel_closure_k({M("x1^2*x2", 3)}, 2, 3)) == std::vector<std::string>{"x1^2*x2"});
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> idx;
    for (int i = 1; i <= d; ++i) idx.push_back(i);
    const Monomial u = Monomial::from_indices(5, idx);
    CHECK(borel_closure_k({u}, 1, 5).generators() == std::vector<Monomial>{u});
  }
  CHECK(texts(borel_closure_k({M("x1*x2^2", 2)}, 2, 2)) == std::vector<std::string>{"x1^2*x2", "x1*x2^2"});
  CHECK_THROWS_AS(borel_closure_k({M("x1^3", 2)}, 2, 2), InputError);
}

TEST_CASE("closure by enumeration equals the Borel-move fixpoint") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int d = 1; d <= 3; ++d) {
        for (const Monomial& u : all_monomials(n, d, k)) {
          CHECK(borel_closure_k({u}, k, n) == borel_move_fixpoint({u}, k, n));
        }
      }
    }
  }
  const auto pair = Ms({"x2*x3^2", "x1*x4"}, 4);
  CHECK(borel_closure_k(pair, 2, 4) == borel_move_fixpoint(pair, 2, 4));
}

TEST_CASE("bounded part of an unbounded closure") {
  CHECK(bounded_part(borel_closure_k({M("x1*x2", 3)}, kUnbounded, 3), 1) == B1({"x1*x2"}, 3));
  CHECK(bounded_part(MonomialIdeal(2, {M("x1^3", 2)}), 2).is_zero());
  CHECK(texts(bounded_part(MonomialIdeal(2, Ms({"x1^2", "x1*x2"}, 2)), 1)) == std::vector<std::string>{"x1*x2"});
  for (int d = 1; d <= 3; ++d) {
    for (const Monomial& u : all_monomials(4, d, 1)) {
      for (int k = 1; k <= 3; ++k) {
        CHECK(bounded_part(borel_closure_k({u}, kUnbounded, 4), k) == borel_closure_k({u}, k, 4));
      }
    }
  }
}

TEST_CASE("is_k_borel") {
  CHECK(is_k_borel(B1({"x2*x4"}, 4), 1));
  CHECK_FALSE(is_k_borel(testutil::ideal({"x2*x3"}, 3), 1));
  CHECK(is_k_borel(testutil::ideal({"x1"}, 2), 1));
  CHECK_FALSE(is_k_borel(testutil::ideal({"x1^2"}, 2), 1));
}

TEST_CASE("height of k-Borel ideals") {
  CHECK(height_kborel(Ms({"x2*x4", "x3*x5"}, 5)) == 3);
  CHECK(height_kborel(Ms({"x1*x2*x3"}, 3)) == 1);
  CHECK(height_kborel(Ms({"x2^2*x3"}, 3)) == 2);
  CHECK_THROWS_AS(height_kborel({}), InputError);
}

TEST_CASE("Borel generators of squarefree Borel ideals") {
  // x2*x4 ⪯ x3*x5, so one Borel generator suffices.
  CHECK(texts(borel_generators_squarefree(B1({"x2*x4", "x3*x5"}, 5))) == std::vector<std::string>{"x3*x5"});
  CHECK(texts(borel_generators_squarefree(B1({"x1*x5", "x3*x4"}, 5))) ==
        std::vector<std::string>{"x1*x5", "x3*x4"});
  CHECK(texts(borel_generators_squarefree(B1({"x1*x4", "x2*x3"}, 4))) ==
        std::vector<std::string>{"x1*x4", "x2*x3"});
}

TEST_CASE("colon by a monomial") {
  CHECK(texts(colon_by_monomial(testutil::ideal({"x1*x3"}, 4), M("x1*x4", 4))) == std::vector<std::string>{"x3"});
  CHECK(texts(colon_by_monomial(testutil::ideal({"x1*x3", "x1*x4"}, 4), M("x2*x4", 4))) ==
        std::vector<std::string>{"x1"});
  CHECK(colon_by_monomial(testutil::ideal({"x1*x3"}, 4), M("x1*x2*x3", 4)).is_unit());
}

TEST_CASE("linear quotients under lex") {
  const MonomialIdeal I = B1({"x2*x4"}, 4);
  const auto r = linear_quotient_certificate(I, lex_order(I));
  REQUIRE(r.ok());
  using S = std::vector<std::vector<VarIndex>>;
  CHECK(r.certificate->sets == S{{}, {2}, {2, 3}, {1}, {1, 3}});
}

TEST_CASE("linear quotients under a given order") {
  const auto order = Ms({"x2*x4", "x1*x2", "x1*x3"}, 4);
  const MonomialIdeal I(4, order);
  const auto r = linear_quotient_certificate(I, order);
  REQUIRE(r.ok());
  CHECK(r.certificate->set_of(M("x1*x3", 4)) == std::vector<VarIndex>{2});
  CHECK(r.certificate->set_of(M("x1*x2", 4)) == std::vector<VarIndex>{4});

  const MonomialIdeal P(3, {M("x1*x2*x3", 3)});
  const auto rp = linear_quotient_certificate(P, P.generators());
  REQUIRE(rp.ok());
  CHECK(rp.certificate->sets.front().empty());
}

TEST_CASE("linear quotient failures are reported") {
  // (x1*x2, x3*x4) has colon (x1*x2) : x3*x4 = (x1*x2), not linear.
  const MonomialIdeal I(4, Ms({"x1*x2", "x3*x4"}, 4));
  const auto r = linear_quotient_certificate(I, I.generators());
  REQUIRE_FALSE(r.ok());
  CHECK(r.failure->index == 1);
  CHECK(r.failure->offending == M("x1*x2", 4));
  CHECK_THROWS_AS(linear_quotient_certificate(I, {M("x1*x2", 4)}), InputError);
}

TEST_CASE("decomposition function") {
  const auto order = Ms({"x2*x4", "x1*x2", "x1*x3"}, 4);
  const MonomialIdeal I(4, order);
  const auto cert = *linear_quotient_certificate(I, order).certificate;
  CHECK(decomposition_function_value(cert, M("x1*x2*x3", 4)) == M("x1*x2", 4));
  const auto table = decomposition_function(I, cert);
  for (const auto& e : table.entries) CHECK(e.g.divides(e.u.times_var(e.s)));
  CHECK_THROWS_AS(decomposition_function_value(cert, M("x3*x4", 4)), InternalError);

  const MonomialIdeal J = B1({"x2*x4"}, 4);
  const auto lex = *linear_quotient_certificate(J, lex_order(J)).certificate;
  CHECK(decomposition_function_value(lex, M("x1*x2*x4", 4)) == M("x1*x2", 4));
}

TEST_CASE("regular decomposition function") {
  const auto order = Ms({"x2*x4", "x1*x2", "x1*x3"}, 4);
  const MonomialIdeal I(4, order);
  const auto cert = *linear_quotient_certificate(I, order).certificate;
  const RegularityResult r = is_regular_decomposition(I, cert);
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness);
  CHECK(r.witness->first == M("x1*x3", 4));
  CHECK(r.witness->second == 2);

  const MonomialIdeal P(3, {M("x2*x3", 3)});
  CHECK(is_regular_decomposition(P, *linear_quotient_certificate(P, P.generators()).certificate).regular);
}

TEST_CASE("k-Borel ideals have linear quotients and regular decomposition under lex") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int d = 1; d <= 3; ++d) {
        for (const Monomial& u : all_monomials(n, d, k)) {
          const MonomialIdeal I = borel_closure_k({u}, k, n);
          if (I.is_zero()) continue;
          const auto r = linear_quotient_certificate(I, lex_order(I));
          REQUIRE(r.ok());
          CHECK(is_regular_decomposition(I, *r.certificate).regular);
        }
      }
    }
  }
}
