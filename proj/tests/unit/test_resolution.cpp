#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "borelkit/error.hpp"
#include "borelkit/exact_rank.hpp"
#include "borelkit/resolution.hpp"
#include "helpers.hpp"

using namespace borelkit;
using testutil::all_monomials;
using testutil::B1;
using testutil::M;
using testutil::Ms;
using testutil::texts;

namespace {

int rational_rank(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(static_cast<std::size_t>(m.rows), std::vector<Q>(static_cast<std::size_t>(m.cols)));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) a[r][c] = Q(m(r, c));
  }
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (int cc = c; cc < m.cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

BettiTable table(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
  BettiTable t;
  for (const auto& [i, j, b] : entries) t.add(i, j, b);
  return t;
}

}  // namespace

TEST_CASE("exact rank agrees with rational elimination") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    IntMatrix m(rows, cols);
    for (auto& x : m.data) x = static_cast<std::int64_t>(rng() % 7) - 3;
    if (trial % 3 == 0 && rows > 1) {
      for (int c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2 - (rows > 2 ? m(1, c) : 0);
    }
    CHECK(exact_rank(m) == rational_rank(m));
  }
}

TEST_CASE("exact rank survives int64 overflow") {
  IntMatrix m(3, 3);
  const std::int64_t big = std::int64_t{1} << 40;
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = big + 3;
  m(1, 1) = big - 7;
  m(2, 0) = 2 * big + 3;
  m(2, 1) = 2 * big - 6;
  m(0, 2) = 1;
  m(1, 2) = 5;
  m(2, 2) = 6;
  CHECK(exact_rank(m) == 2);
  m(2, 2) = 7;
  CHECK(exact_rank(m) == 3);
  CHECK(exact_rank(IntMatrix(0, 4)) == 0);
  CHECK(exact_rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("Betti numbers from the k-Borel formula") {
  CHECK(betti_kborel(B1({"x2*x4"}, 4), 1) == table({{0, 2, 5}, {1, 3, 6}, {2, 4, 2}}));
  CHECK(betti_kborel(MonomialIdeal(4, {M("x1*x2*x3", 4)}), 1) == table({{0, 3, 1}}));
  const MonomialIdeal I = borel_closure_k({M("x1*x2^2", 2)}, 2, 2);
  CHECK(texts(I) == std::vector<std::string>{"x1^2*x2", "x1*x2^2"});
  CHECK(betti_kborel(I, 2) == table({{0, 3, 2}, {1, 4, 1}}));
  CHECK_THROWS_AS(betti_kborel(testutil::ideal({"x2*x3"}, 3), 1), InputError);
  CHECK_THROWS_AS(betti_kborel(MonomialIdeal(3), 1), InputError);
}

TEST_CASE("S/I re-indexing") {
  const BettiTable q = betti_kborel(B1({"x2*x4"}, 4), 1).shifted_to_quotient();
  CHECK(q == table({{0, 0, 1}, {1, 2, 5}, {2, 3, 6}, {3, 4, 2}}));
  CHECK(q.projdim() == 3);
  CHECK(BettiTable{}.projdim() == -1);
}

TEST_CASE("Koszul basis") {
  const MonomialIdeal I = B1({"x2*x4"}, 4);
  const auto b1 = koszul_basis(I, 1, 1);
  CHECK(b1.size() == 5);
  for (const auto& e : b1) CHECK(e.F.empty());
  const auto b3 = koszul_basis(I, 1, 3);
  REQUIRE(b3.size() == 2);
  CHECK(b3[0].u == M("x1*x4", 4));
  CHECK(b3[0].F == std::vector<VarIndex>{2, 3});
  CHECK(b3[1].u == M("x2*x4", 4));
  CHECK(b3[1].F == std::vector<VarIndex>{1, 3});
  for (const auto& e : b3) CHECK(e.multidegree == M("x1*x2*x3*x4", 4));
  CHECK(koszul_basis(I, 1, 4).empty());
}

TEST_CASE("partial Koszul bases shrink with j") {
  const MonomialIdeal I = B1({"x2*x4"}, 4);
  CHECK(koszul_basis_partial(I, 1, 2, 1).size() == koszul_basis(I, 1, 2).size());
  for (VarIndex j = 1; j <= 4; ++j) {
    for (const auto& e : koszul_basis_partial(I, 1, 2, j)) {
      REQUIRE_FALSE(e.F.empty());
      CHECK(e.F.front() >= j);
    }
  }
  CHECK(koszul_basis_partial(I, 1, 2, 4).empty());
}

TEST_CASE("oracle on small ideals") {
  const MonomialIdeal I = testutil::ideal({"x1", "x2"}, 2);
  const MultigradedBettiTable t = koszul_homology_oracle(I);
  CHECK(t.at(0, M("x1", 2)) == 1);
  CHECK(t.at(0, M("x2", 2)) == 1);
  CHECK(t.at(1, M("x1*x2", 2)) == 1);
  CHECK(t.collapse() == table({{0, 1, 2}, {1, 2, 1}}));
  CHECK(texts(hs_from_oracle(I, 1)) == std::vector<std::string>{"x1*x2"});

  const MonomialIdeal tri = testutil::ideal({"x1*x2", "x2*x3", "x1*x3"}, 3);
  CHECK(koszul_homology_oracle(tri).collapse() == table({{0, 2, 3}, {1, 3, 2}}));

  CHECK(koszul_homology_oracle(B1({"x2*x4"}, 4)).collapse() == betti_kborel(B1({"x2*x4"}, 4), 1));
  CHECK(texts(hs_from_oracle(B1({"x2*x4"}, 4), 2)) == std::vector<std::string>{"x1*x2*x3*x4"});
  CHECK(hs_from_oracle(B1({"x2*x4"}, 4), 0) == B1({"x2*x4"}, 4));
  CHECK_THROWS_AS(koszul_homology_oracle(MonomialIdeal(3)), InputError);
}

TEST_CASE("upper Koszul complex edge cases") {
  const MonomialIdeal I = testutil::ideal({"x1"}, 2);
  CHECK(upper_koszul_homology(I, M("x2", 2)).empty());
  // x1 over (x1): the complex {∅} has reduced homology only in degree -1.
  const auto h = upper_koszul_homology(I, M("x1", 2));
  REQUIRE_FALSE(h.empty());
  CHECK(h[0] == 1);
  for (std::size_t q = 1; q < h.size(); ++q) CHECK(h[q] == 0);
  // x1*x2 over (x1): the complex is the cone {∅, {2}}, acyclic.
  for (auto h : upper_koszul_homology(I, M("x1*x2", 2))) CHECK(h == 0);
}

TEST_CASE("oracle candidate cap raises a resource error") {
  OracleOptions small;
  small.limit = 3;
  CHECK_THROWS_AS(koszul_homology_oracle(B1({"x2*x4"}, 4), small), ResourceError);
}

TEST_CASE("extra multidegrees outside the lcm lattice carry no homology") {
  for (int d = 1; d <= 3; ++d) {
    for (const Monomial& u : all_monomials(4, d, 2)) {
      const MonomialIdeal I = borel_closure_k({u}, 2, 4);
      if (I.is_zero()) continue;
      OracleOptions exhaustive;
      exhaustive.exhaustive = true;
      CHECK(koszul_homology_oracle(I, exhaustive) == koszul_homology_oracle(I));
    }
  }
}

TEST_CASE("formula and Koszul basis and oracle agree on k-Borel ideals") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int d = 1; d <= 3; ++d) {
        for (const Monomial& u : all_monomials(n, d, k)) {
          const MonomialIdeal I = borel_closure_k({u}, k, n);
          if (I.is_zero()) continue;
          const BettiTable formula = betti_kborel(I, k);
          CHECK(formula == koszul_homology_oracle(I).collapse());
          for (int i = 0; i <= formula.projdim() + 1; ++i) {
            CHECK(static_cast<std::int64_t>(koszul_basis(I, k, i + 1).size()) == formula.total(i));
          }
        }
      }
    }
  }
}

TEST_CASE("mapping-cone Betti numbers match for equigenerated ideals with linear quotients") {
  for (int d = 1; d <= 3; ++d) {
    for (const Monomial& u : all_monomials(5, d, 1)) {
      const MonomialIdeal I = B1({to_string(u).c_str()}, 5);
      const auto cert = linear_quotient_certificate(I, lex_order(I));
      REQUIRE(cert.ok());
      CHECK(betti_from_linear_quotients(*cert.certificate) == betti_kborel(I, 1));
    }
  }
}

TEST_CASE("HS via linear quotients") {
  const MonomialIdeal I = B1({"x1*x2*x4"}, 4);
  const auto cert = *linear_quotient_certificate(I, lex_order(I)).certificate;
  CHECK(texts(hs_via_linear_quotients(I, cert, 1)) == std::vector<std::string>{"x1*x2*x3*x4"});
  CHECK(hs_via_linear_quotients(I, cert, 0) == I);
  CHECK(hs_via_linear_quotients(I, cert, 2).is_zero());
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, 4) == 0);
}
