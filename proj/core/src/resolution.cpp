#include "borelkit/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "borelkit/error.hpp"
#include "borelkit/exact_rank.hpp"

namespace borelkit {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void BettiTable::add(int i, int j, std::int64_t beta) {
  if (beta == 0) return;
  entries_[{i, j}] += beta;
}

std::int64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [key, beta] : entries_) {
    if (key.first == i) s += beta;
  }
  return s;
}

int BettiTable::projdim() const {
  int p = -1;
  for (const auto& [key, beta] : entries_) p = std::max(p, key.first);
  return p;
}

BettiTable BettiTable::shifted_to_quotient() const {
  BettiTable q;
  q.add(0, 0, 1);
  for (const auto& [key, beta] : entries_) q.add(key.first + 1, key.second, beta);
  return q;
}

void MultigradedBettiTable::add(int i, const Monomial& a, std::int64_t beta) {
  if (beta == 0) return;
  entries_[{i, a}] += beta;
}

std::int64_t MultigradedBettiTable::at(int i, const Monomial& a) const {
  const auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

BettiTable MultigradedBettiTable::collapse() const {
  BettiTable t;
  for (const auto& [key, beta] : entries_) t.add(key.first, key.second.degree(), beta);
  return t;
}

std::vector<Monomial> MultigradedBettiTable::shifts(int i) const {
  std::vector<Monomial> out;
  for (const auto& [key, beta] : entries_) {
    if (key.first == i && beta > 0) out.push_back(key.second);
  }
  return out;
}

int MultigradedBettiTable::projdim() const {
  int p = -1;
  for (const auto& [key, beta] : entries_) p = std::max(p, key.first);
  return p;
}

namespace {

void require_proper_nonzero(const MonomialIdeal& I, const char* what) {
  if (I.is_zero()) throw InputError(std::string(what) + ": zero ideal");
  if (I.is_unit()) throw InputError(std::string(what) + ": unit ideal");
}

// Indices l < m(u) at which x_l may still be multiplied into u without
// breaking the k-bound.
std::vector<VarIndex> free_positions(const Monomial& u, int k, VarIndex from) {
  std::vector<VarIndex> out;
  for (VarIndex l = std::max(from, 1); l < u.max_index(); ++l) {
    if (u.exponent(l) < k) out.push_back(l);
  }
  return out;
}

void for_each_subset(const std::vector<VarIndex>& pool, int size,
                     const std::function<void(const std::vector<VarIndex>&)>& fn) {
  if (size < 0 || static_cast<std::size_t>(size) > pool.size()) return;
  std::vector<VarIndex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == size) {
      fn(cur);
      return;
    }
    const std::size_t need = static_cast<std::size_t>(size) - cur.size();
    for (std::size_t p = start; p + need <= pool.size(); ++p) {
      cur.push_back(pool[p]);
      rec(p + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

BettiTable betti_kborel(const MonomialIdeal& I, int k) {
  require_proper_nonzero(I, "betti_kborel");
  if (!is_k_borel(I, k)) throw InputError("betti_kborel: ideal is not " + std::to_string(k) + "-Borel");
  BettiTable t;
  for (const Monomial& u : I.generators()) {
    const int m = u.max_index();
    int L = 0;
    for (VarIndex l = 1; l < m; ++l) {
      if (u.exponent(l) == k) ++L;
    }
    const int c = m - L - 1;
    for (int i = 0; i <= c; ++i) t.add(i, i + u.degree(), binomial(c, i));
  }
  return t;
}

std::vector<KoszulBasisElement> koszul_basis_partial(const MonomialIdeal& I, int k, int i,
                                                     VarIndex j) {
  require_proper_nonzero(I, "koszul_basis");
  if (i < 1) throw InputError("koszul_basis: homological degree must be >= 1");
  if (!is_k_borel(I, k)) throw InputError("koszul_basis: ideal is not " + std::to_string(k) + "-Borel");
  std::vector<KoszulBasisElement> out;
  for (const Monomial& u : I.generators()) {
    if (i == 1) {
      if (u.max_index() >= j) out.push_back({u, {}, u});
      continue;
    }
    for_each_subset(free_positions(u, k, j), i - 1, [&](const std::vector<VarIndex>& F) {
      Monomial a = u;
      for (VarIndex f : F) a = a.times_var(f);
      out.push_back({u, F, std::move(a)});
    });
  }
  return out;
}

std::vector<KoszulBasisElement> koszul_basis(const MonomialIdeal& I, int k, int i) {
  return koszul_basis_partial(I, k, i, 1);
}

MonomialIdeal hs_via_linear_quotients(const MonomialIdeal& I,
                                      const LinearQuotientCertificate& cert, int j) {
  const LinearQuotientResult check = linear_quotient_certificate(I, cert.order);
  if (!check.ok() || check.certificate->sets != cert.sets) {
    throw InputError("hs_via_linear_quotients: invalid linear-quotient certificate");
  }
  if (j < 0) throw InputError("homological degree must be non-negative");
  if (j == 0) return I;
  std::vector<Monomial> gens;
  for (std::size_t p = 0; p < cert.order.size(); ++p) {
    for_each_subset(cert.sets[p], j, [&](const std::vector<VarIndex>& F) {
      Monomial w = cert.order[p];
      for (VarIndex f : F) w = w.times_var(f);
      gens.push_back(std::move(w));
    });
  }
  return MonomialIdeal(I.n(), std::move(gens));
}

BettiTable betti_from_linear_quotients(const LinearQuotientCertificate& cert) {
  BettiTable t;
  for (std::size_t p = 0; p < cert.order.size(); ++p) {
    const auto r = static_cast<std::int64_t>(cert.sets[p].size());
    for (std::int64_t i = 0; i <= r; ++i) {
      t.add(static_cast<int>(i), cert.order[p].degree() + static_cast<int>(i), binomial(r, i));
    }
  }
  return t;
}

std::size_t default_oracle_limit() {
  if (const char* env = std::getenv("BORELKIT_LIMIT")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError(std::string("BORELKIT_LIMIT is not a positive integer: ") + env);
    }
  }
  return OracleOptions{}.limit;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, std::size_t limit) {
  std::set<Monomial> seen(I.generators().begin(), I.generators().end());
  std::vector<Monomial> frontier(I.generators().begin(), I.generators().end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& a : frontier) {
      for (const Monomial& g : I.generators()) {
        Monomial l = lcm(a, g);
        if (seen.insert(l).second) {
          if (seen.size() > limit) {
            throw ResourceError("lcm lattice exceeds the candidate limit of " +
                                std::to_string(limit));
          }
          next.push_back(std::move(l));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::vector<Monomial> dominated_degrees(const Monomial& top, std::size_t limit) {
  std::size_t count = 1;
  for (int e : top.exponents()) {
    count *= static_cast<std::size_t>(e + 1);
    if (count > limit) {
      throw ResourceError("exhaustive multidegree scan exceeds the candidate limit of " +
                          std::to_string(limit));
    }
  }
  std::vector<Monomial> out;
  out.reserve(count);
  std::vector<int> e(static_cast<std::size_t>(top.n()), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == e.size()) {
      out.emplace_back(e);
      return;
    }
    for (int v = 0; v <= top.exponents()[p]; ++v) {
      e[p] = v;
      rec(p + 1);
    }
    e[p] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<std::int64_t> upper_koszul_homology(const MonomialIdeal& I, const Monomial& a) {
  const std::vector<VarIndex> verts = a.support();
  const int s = static_cast<int>(verts.size());
  if (s > 20) throw ResourceError("upper Koszul complex on more than 20 vertices");

  // F is a face iff F ⊆ {v : a_v > g_v} for some generator g dividing x^a.
  std::vector<std::uint32_t> facet_masks;
  for (const Monomial& g : I.generators()) {
    if (!g.divides(a)) continue;
    std::uint32_t mask = 0;
    for (int p = 0; p < s; ++p) {
      if (a.exponent(verts[static_cast<std::size_t>(p)]) > g.exponent(verts[static_cast<std::size_t>(p)])) {
        mask |= 1u << p;
      }
    }
    facet_masks.push_back(mask);
  }
  if (facet_masks.empty()) return {};  // void complex

  const std::uint32_t full = s == 32 ? ~0u : ((1u << s) - 1u);
  std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(s) + 1);
  for (std::uint32_t F = 0;; ++F) {
    const bool face = std::any_of(facet_masks.begin(), facet_masks.end(),
                                  [&](std::uint32_t m) { return (F & ~m) == 0; });
    if (face) faces[static_cast<std::size_t>(std::popcount(F))].push_back(F);
    if (F == full) break;
  }

  // rank[q] = rank of the boundary map from size-q faces to size-(q-1) faces.
  std::vector<int> rank(static_cast<std::size_t>(s) + 2, 0);
  for (int q = 1; q <= s; ++q) {
    const auto& rows_f = faces[static_cast<std::size_t>(q - 1)];
    const auto& cols_f = faces[static_cast<std::size_t>(q)];
    if (rows_f.empty() || cols_f.empty()) continue;
    IntMatrix d(static_cast<int>(rows_f.size()), static_cast<int>(cols_f.size()));
    for (std::size_t c = 0; c < cols_f.size(); ++c) {
      const std::uint32_t F = cols_f[c];
      int pos = 0;
      for (int b = 0; b < s; ++b) {
        if (!(F & (1u << b))) continue;
        const std::uint32_t facet = F & ~(1u << b);
        const auto it = std::lower_bound(rows_f.begin(), rows_f.end(), facet);
        d(static_cast<int>(it - rows_f.begin()), static_cast<int>(c)) = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    rank[static_cast<std::size_t>(q)] = exact_rank(d);
  }

  std::vector<std::int64_t> h(static_cast<std::size_t>(s) + 1, 0);
  for (int q = 0; q <= s; ++q) {
    h[static_cast<std::size_t>(q)] = static_cast<std::int64_t>(faces[static_cast<std::size_t>(q)].size()) -
                                     rank[static_cast<std::size_t>(q)] -
                                     rank[static_cast<std::size_t>(q) + 1];
  }
  return h;
}

MultigradedBettiTable koszul_homology_oracle(const MonomialIdeal& I, const OracleOptions& options) {
  if (I.is_zero()) throw InputError("koszul_homology_oracle: zero ideal");
  std::vector<Monomial> candidates;
  if (options.exhaustive) {
    Monomial top(I.n());
    for (const Monomial& g : I.generators()) top = lcm(top, g);
    candidates = dominated_degrees(top, options.limit);
  } else {
    candidates = lcm_lattice(I, options.limit);
  }
  candidates.insert(candidates.end(), options.extra_degrees.begin(), options.extra_degrees.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  MultigradedBettiTable table;
  for (const Monomial& a : candidates) {
    const auto h = upper_koszul_homology(I, a);
    for (std::size_t q = 0; q < h.size(); ++q) {
      if (h[q] < 0) throw InternalError("negative homology dimension");
      table.add(static_cast<int>(q), a, h[q]);
    }
  }
  return table;
}

MonomialIdeal hs_from_table(const MultigradedBettiTable& table, int n, int j) {
  return MonomialIdeal(n, table.shifts(j));
}

MonomialIdeal hs_from_oracle(const MonomialIdeal& I, int j, const OracleOptions& options) {
  if (j < 0) throw InputError("homological degree must be non-negative");
  return hs_from_table(koszul_homology_oracle(I, options), I.n(), j);
}

}  // namespace borelkit
