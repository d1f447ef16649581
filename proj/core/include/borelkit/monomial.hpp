#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace borelkit {

// Variable indices are 1-based throughout: x1, ..., xn.
using VarIndex = int;

// A monomial x1^a1 ... xn^an over a fixed ambient variable count n.
// The all-zero vector is the unit monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n);
  explicit Monomial(std::vector<int> exponents);

  // Builds a monomial from a list of variable indices, repeated by multiplicity.
  static Monomial from_indices(int n, const std::vector<VarIndex>& indices);

  int n() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  // Exponent of x_i (1-based).
  int exponent(VarIndex i) const;
  const std::vector<int>& exponents() const { return exps_; }

  std::vector<VarIndex> support() const;
  VarIndex min_index() const;  // throws on 1
  VarIndex max_index() const;  // throws on 1
  int max_exponent() const;

  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Exact division; throws if other does not divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial times_var(VarIndex i) const;
  Monomial divided_by_var(VarIndex i) const;

  // Weakly increasing index list i1 <= ... <= id (the sorted index form).
  std::vector<VarIndex> sorted_indices() const;

  // Lexicographic comparison of exponent vectors; a > b means a is
  // lex-greater under x1 > x2 > ... > xn.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Strict lex-greater, the ordering used for generator lists.
inline bool lex_greater(const Monomial& a, const Monomial& b) { return a > b; }

bool k_bounded(const Monomial& u, int k);

// v ⪯ u: the sorted index forms satisfy j_l <= i_l at every position.
// For k-bounded monomials this also decides membership v in B_k(u).
bool precedes(const Monomial& v, const Monomial& u);

bool is_t_spread(const Monomial& u, int t);

struct Block {
  VarIndex first = 0;
  VarIndex last = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

// Maximal runs of a squarefree support in which consecutive elements differ
// by exactly `stride`.
struct BlockDecomposition {
  int stride = 1;
  std::vector<Block> blocks;

  std::vector<VarIndex> elements(std::size_t block) const;
  std::size_t size(std::size_t block) const;
};

BlockDecomposition block_decomposition(const Monomial& u, int stride = 1);

// Gaps of a squarefree monomial: indices below max(u) not in the support.
std::vector<VarIndex> gaps_squarefree(const Monomial& u);

struct Interval {
  VarIndex lo = 0;
  VarIndex hi = 0;
  bool contains(VarIndex i) const { return lo <= i && i <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Nonempty gap intervals [max(B_j) + t, min(B_{j+1}) - 1] between consecutive
// maximal t-blocks, with the convention max(B_0) = -t + 1.
std::vector<Interval> gap_intervals_t(const Monomial& u, int t);

// Union of gap_intervals_t, sorted.
std::vector<VarIndex> gap_set_t(const Monomial& u, int t);

// Consecutive pairs (i_l, i_{l+1}) of the sorted index form with i_{l+1} - i_l < t.
std::vector<std::pair<VarIndex, VarIndex>> irregular_pairs(const Monomial& v, int t);

// Text form "x1*x2^2*x5"; "1" for the unit monomial.
Monomial parse_monomial(std::string_view text, int n);
std::string to_string(const Monomial& u);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const noexcept;
};

}  // namespace borelkit
