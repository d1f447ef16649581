#include "borelkit/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "borelkit/error.hpp"
#include "borelkit/exact_rank.hpp"
#include "borelkit/resolution.hpp"

namespace borelkit {

std::vector<std::vector<VarIndex>> MinimalPrimeSet::at_height() const {
  std::vector<std::vector<VarIndex>> out;
  for (const auto& p : primes) {
    if (static_cast<int>(p.size()) == height) out.push_back(p);
  }
  return out;
}

MinimalPrimeSet minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero()) throw InputError("minimal_primes: zero ideal");
  if (I.is_unit()) throw InputError("minimal_primes: unit ideal");
  if (!I.is_squarefree()) throw InputError("minimal_primes: ideal is not squarefree");
  if (I.n() > 30) throw ResourceError("minimal_primes: more than 30 variables");

  std::vector<std::uint32_t> edges;
  for (const Monomial& g : I.generators()) {
    std::uint32_t m = 0;
    for (VarIndex i : g.support()) m |= 1u << (i - 1);
    edges.push_back(m);
  }

  // Branch on the vertices of the first uncovered edge; every minimal cover
  // arises on some branch.
  std::set<std::uint32_t> covers;
  std::function<void(std::uint32_t)> branch = [&](std::uint32_t chosen) {
    const auto open = std::find_if(edges.begin(), edges.end(),
                                   [&](std::uint32_t e) { return (e & chosen) == 0; });
    if (open == edges.end()) {
      covers.insert(chosen);
      return;
    }
    for (int v = 0; v < I.n(); ++v) {
      if (*open & (1u << v)) branch(chosen | (1u << v));
    }
  };
  branch(0);

  MinimalPrimeSet result;
  for (std::uint32_t c : covers) {
    const bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t o) {
      return o != c && (o & c) == o;
    });
    if (!minimal) continue;
    std::vector<VarIndex> A;
    for (int v = 0; v < I.n(); ++v) {
      if (c & (1u << v)) A.push_back(v + 1);
    }
    result.primes.push_back(std::move(A));
  }
  std::sort(result.primes.begin(), result.primes.end());
  result.height = static_cast<int>(result.primes.front().size());
  for (const auto& p : result.primes) result.height = std::min(result.height, static_cast<int>(p.size()));
  return result;
}

std::vector<std::vector<VarIndex>> PrincipalMultiplicity::predicted_primes() const {
  std::vector<std::vector<VarIndex>> out;
  std::vector<VarIndex> cur;
  std::function<void(VarIndex)> rec = [&](VarIndex next) {
    if (static_cast<int>(cur.size()) == height) {
      out.push_back(cur);
      return;
    }
    for (VarIndex i = next; i <= first_block_max; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

PrincipalMultiplicity multiplicity_principal(const Monomial& u) {
  const BlockDecomposition bd = block_decomposition(u, 1);
  const Block& b1 = bd.blocks.front();
  PrincipalMultiplicity r;
  r.first_block_max = b1.last;
  r.height = u.min_index();
  r.value = binomial(b1.last, static_cast<std::int64_t>(bd.size(0)) - 1);
  return r;
}

MultiplicityOutcome multiplicity_multi(const std::vector<Monomial>& borel_gens) {
  if (borel_gens.empty()) throw InputError("multiplicity: zero ideal");
  std::vector<Block> first;
  for (const Monomial& u : borel_gens) first.push_back(block_decomposition(u, 1).blocks.front());
  for (const Block& candidate : first) {
    const bool contained = std::all_of(first.begin(), first.end(), [&](const Block& b) {
      return b.first <= candidate.first && candidate.last <= b.last;
    });
    if (contained) {
      return binomial(candidate.last, static_cast<std::int64_t>(candidate.last - candidate.first));
    }
  }
  return HypothesisNotSatisfied{};
}

bool LinearRelationGraph::connected_on(int n) const {
  if (static_cast<int>(vertices.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (vertices[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x
                                                    : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int components = n;
  for (const auto& [a, b] : edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components == 1;
}

LinearRelationGraph linear_relation_graph(const MonomialIdeal& I) {
  if (!I.is_equigenerated()) throw InputError("linear_relation_graph: ideal is not equigenerated");
  std::set<std::pair<VarIndex, VarIndex>> edges;
  const auto& G = I.generators();
  // x_i u_k = x_j u_l with i != j iff u_k / u_l = x_j / x_i.
  for (std::size_t a = 0; a < G.size(); ++a) {
    for (std::size_t b = a + 1; b < G.size(); ++b) {
      VarIndex plus = 0;
      VarIndex minus = 0;
      bool linear = true;
      for (VarIndex v = 1; v <= I.n() && linear; ++v) {
        const int diff = G[a].exponent(v) - G[b].exponent(v);
        if (diff == 0) continue;
        if (diff == 1 && plus == 0) {
          plus = v;
        } else if (diff == -1 && minus == 0) {
          minus = v;
        } else {
          linear = false;
        }
      }
      if (linear && plus != 0 && minus != 0) edges.insert(std::minmax(plus, minus));
    }
  }
  LinearRelationGraph g;
  g.edges.assign(edges.begin(), edges.end());
  std::set<VarIndex> verts;
  for (const auto& [a, b] : g.edges) {
    verts.insert(a);
    verts.insert(b);
  }
  g.vertices.assign(verts.begin(), verts.end());
  return g;
}

int analytic_spread(const std::vector<Monomial>& borel_gens) {
  if (borel_gens.empty()) throw InputError("analytic_spread: zero ideal");
  const int n_amb = borel_gens.front().n();
  const int d = borel_gens.front().degree();
  for (const Monomial& u : borel_gens) {
    if (!u.is_squarefree()) throw InputError("analytic_spread: Borel generators must be squarefree");
    if (u.degree() != d) throw InputError("analytic_spread: Borel generators must have equal degree");
  }
  if (borel_closure_k(borel_gens, 1, n_amb).is_principal()) {
    throw InputError("analytic_spread: theorem hypothesis: not a principal ideal");
  }
  int n = 0;
  VarIndex lo = 1;
  VarIndex hi = n_amb;
  for (const Monomial& u : borel_gens) {
    n = std::max(n, u.max_index());
    const Block b = block_decomposition(u, 1).blocks.front();
    lo = std::max(lo, b.first);
    hi = std::min(hi, b.last);
  }
  // The first blocks are intervals, so their intersection is [lo, hi].
  if (lo != 1) return n;
  return n - (hi - lo + 1);
}

int oracle_analytic_spread(const MonomialIdeal& I) {
  if (I.is_zero()) throw InputError("oracle_analytic_spread: zero ideal");
  if (!I.is_equigenerated()) throw InputError("oracle_analytic_spread: ideal is not equigenerated");
  IntMatrix m(static_cast<int>(I.size()), I.n());
  for (std::size_t r = 0; r < I.size(); ++r) {
    for (VarIndex v = 1; v <= I.n(); ++v) m(static_cast<int>(r), v - 1) = I.generators()[r].exponent(v);
  }
  return exact_rank(m);
}

}  // namespace borelkit
