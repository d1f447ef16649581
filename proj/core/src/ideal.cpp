#include "borelkit/ideal.hpp"

#include <algorithm>
#include <functional>

#include "borelkit/error.hpp"

namespace borelkit {

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens, std::optional<int> bound)
    : n_(n), bound_(bound) {
  for (const Monomial& g : gens) {
    if (g.n() != n) {
      throw InputError("generator " + to_string(g) + " has " + std::to_string(g.n()) +
                       " variables, ideal has " + std::to_string(n));
    }
  }
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Monomial& g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
  if (bound_) {
    for (const Monomial& g : gens_) {
      if (!k_bounded(g, *bound_)) {
        throw InputError("generator " + to_string(g) + " is not " + std::to_string(*bound_) +
                         "-bounded");
      }
    }
  }
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.degree() == gens_.front().degree(); });
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::max_exponent() const {
  int e = 0;
  for (const Monomial& g : gens_) e = std::max(e, g.max_exponent());
  return e;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int n) {
  return MonomialIdeal(n, std::move(gens));
}

std::vector<Monomial> borel_principal_k(const Monomial& u, int k) {
  if (!k_bounded(u, k)) {
    throw InputError("Borel generator " + to_string(u) + " is not " + std::to_string(k) +
                     "-bounded");
  }
  const auto bound = u.sorted_indices();
  const int d = static_cast<int>(bound.size());
  const int n = u.n();
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);

  // Position l chooses j_l in [j_{l-1}, i_l]; the running exponent of the
  // chosen variable enforces the k-bound.
  std::function<void(int, int)> place = [&](int l, int lo) {
    if (l == d) {
      out.emplace_back(exps);
      return;
    }
    for (int j = lo; j <= bound[static_cast<std::size_t>(l)]; ++j) {
      auto& e = exps[static_cast<std::size_t>(j - 1)];
      if (e >= k) continue;
      ++e;
      place(l + 1, j);
      --e;
    }
  };
  place(0, 1);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MonomialIdeal borel_closure_k(const std::vector<Monomial>& borel_gens, int k, int n) {
  if (k < 1) throw InputError("bound k must be positive");
  std::vector<Monomial> all;
  for (const Monomial& u : borel_gens) {
    if (u.n() != n) {
      throw InputError("Borel generator " + to_string(u) + " does not live in " +
                       std::to_string(n) + " variables");
    }
    auto part = borel_principal_k(u, k);
    all.insert(all.end(), part.begin(), part.end());
  }
  return MonomialIdeal(n, std::move(all), k == kUnbounded ? std::nullopt : std::optional<int>(k));
}

bool is_k_borel(const MonomialIdeal& I, int k) {
  for (const Monomial& u : I.generators()) {
    if (!k_bounded(u, k)) return false;
  }
  for (const Monomial& u : I.generators()) {
    for (VarIndex j : u.support()) {
      const Monomial base = u.divided_by_var(j);
      for (VarIndex i = 1; i < j; ++i) {
        if (base.exponent(i) + 1 > k) continue;
        if (!I.contains(base.times_var(i))) return false;
      }
    }
  }
  return true;
}

MonomialIdeal bounded_part(const MonomialIdeal& I, int k) {
  std::vector<Monomial> keep;
  for (const Monomial& u : I.generators()) {
    if (k_bounded(u, k)) keep.push_back(u);
  }
  return MonomialIdeal(I.n(), std::move(keep));
}

int height_kborel(const std::vector<Monomial>& borel_gens) {
  if (borel_gens.empty()) throw InputError("height undefined for the zero ideal");
  int h = 0;
  for (const Monomial& u : borel_gens) {
    if (u.is_one()) throw InputError("height undefined for the unit ideal");
    h = std::max(h, u.min_index());
  }
  return h;
}

std::vector<Monomial> borel_generators_squarefree(const MonomialIdeal& I) {
  if (!I.is_squarefree()) {
    throw InputError("Borel generator extraction is only defined for squarefree ideals");
  }
  std::vector<Monomial> out;
  const auto& G = I.generators();
  for (const Monomial& u : G) {
    const bool dominated = std::any_of(G.begin(), G.end(), [&](const Monomial& w) {
      return w != u && w.degree() == u.degree() && precedes(u, w);
    });
    if (!dominated) out.push_back(u);
  }
  return out;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& J, const Monomial& u) {
  std::vector<Monomial> q;
  q.reserve(J.size());
  for (const Monomial& v : J.generators()) q.push_back(v / gcd(v, u));
  return MonomialIdeal(J.n(), std::move(q));
}

const std::vector<VarIndex>& LinearQuotientCertificate::set_of(const Monomial& u) const {
  return sets.at(position_of(u));
}

std::size_t LinearQuotientCertificate::position_of(const Monomial& u) const {
  const auto it = std::find(order.begin(), order.end(), u);
  if (it == order.end()) throw InputError(to_string(u) + " is not in the certificate order");
  return static_cast<std::size_t>(it - order.begin());
}

LinearQuotientResult linear_quotient_certificate(const MonomialIdeal& I,
                                                 const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted(order);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted != I.generators()) {
    throw InputError("order is not a permutation of the minimal generators");
  }

  LinearQuotientResult result;
  LinearQuotientCertificate cert;
  cert.order = order;
  cert.sets.reserve(order.size());
  std::vector<Monomial> prefix;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::vector<VarIndex> set;
    if (j > 0) {
      const MonomialIdeal colon = colon_by_monomial(MonomialIdeal(I.n(), prefix), order[j]);
      for (const Monomial& c : colon.generators()) {
        if (c.degree() != 1) {
          result.failure = LinearQuotientFailure{j, c};
          return result;
        }
        set.push_back(c.min_index());
      }
      std::sort(set.begin(), set.end());
    }
    cert.sets.push_back(std::move(set));
    prefix.push_back(order[j]);
  }
  result.certificate = std::move(cert);
  return result;
}

std::vector<Monomial> lex_order(const MonomialIdeal& I) { return I.generators(); }

const Monomial& DecompositionFunctionTable::at(const Monomial& u, VarIndex s) const {
  for (const auto& e : entries) {
    if (e.u == u && e.s == s) return e.g;
  }
  throw InputError("no decomposition entry for (" + to_string(u) + ", " + std::to_string(s) + ")");
}

Monomial decomposition_function_value(const LinearQuotientCertificate& cert, const Monomial& w) {
  for (const Monomial& g : cert.order) {
    if (g.divides(w)) return g;
  }
  throw InternalError("decomposition function: " + to_string(w) + " is not in the ideal");
}

DecompositionFunctionTable decomposition_function(const MonomialIdeal& I,
                                                  const LinearQuotientCertificate& cert) {
  (void)I;
  DecompositionFunctionTable table;
  for (std::size_t j = 0; j < cert.order.size(); ++j) {
    const Monomial& u = cert.order[j];
    for (VarIndex s : cert.sets[j]) {
      table.entries.push_back({u, s, decomposition_function_value(cert, u.times_var(s))});
    }
  }
  return table;
}

RegularityResult is_regular_decomposition(const MonomialIdeal& I,
                                          const LinearQuotientCertificate& cert) {
  const DecompositionFunctionTable table = decomposition_function(I, cert);
  for (const auto& e : table.entries) {
    const auto& su = cert.set_of(e.u);
    const auto& sg = cert.set_of(e.g);
    if (!std::includes(su.begin(), su.end(), sg.begin(), sg.end())) {
      return RegularityResult{false, std::make_pair(e.u, e.s)};
    }
  }
  return RegularityResult{};
}

}  // namespace borelkit
