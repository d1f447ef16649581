#include "borelkit/tspread.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "borelkit/error.hpp"
#include "borelkit/resolution.hpp"

namespace borelkit {

namespace {

// Calls fn on every strictly increasing index tuple in [1, n] of the given
// size whose consecutive differences are all >= min_step.
void for_each_tuple(int n, int size, int min_step,
                    const std::function<void(const std::vector<VarIndex>&)>& fn) {
  std::vector<VarIndex> cur;
  std::function<void(VarIndex)> rec = [&](VarIndex lo) {
    if (static_cast<int>(cur.size()) == size) {
      fn(cur);
      return;
    }
    const int remaining = size - static_cast<int>(cur.size()) - 1;
    for (VarIndex i = lo; i + remaining * min_step <= n; ++i) {
      cur.push_back(i);
      rec(i + min_step);
      cur.pop_back();
    }
  };
  rec(1);
}

std::string describe(const TSpreadVeroneseSpec& s) {
  return "(n=" + std::to_string(s.n) + ", d=" + std::to_string(s.d) + ", t=" + std::to_string(s.t) + ")";
}

}  // namespace

void TSpreadVeroneseSpec::validate() const {
  if (n < 1 || d < 1 || t < 1 || d > n || t > n) {
    throw InputError("t-spread Veronese parameters " + describe(*this) + " requires 1 <= d, t <= n");
  }
}

std::int64_t TSpreadVeroneseSpec::expected_generator_count() const {
  return binomial(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(t - 1) * (d - 1), d);
}

MonomialIdeal tspread_generators(const TSpreadVeroneseSpec& spec) {
  spec.validate();
  std::vector<Monomial> gens;
  for_each_tuple(spec.n, spec.d, spec.t, [&](const std::vector<VarIndex>& idx) {
    gens.push_back(Monomial::from_indices(spec.n, idx));
  });
  return MonomialIdeal(spec.n, std::move(gens), 1);
}

std::vector<VarIndex> tspread_set(const Monomial& u, const TSpreadVeroneseSpec& spec) {
  spec.validate();
  if (u.n() != spec.n || u.degree() != spec.d || !u.is_squarefree() || !is_t_spread(u, spec.t)) {
    throw InputError(to_string(u) + " is not a generator of I" + describe(spec));
  }
  return gap_set_t(u, spec.t);
}

MonomialIdeal tspread_hs(const TSpreadVeroneseSpec& spec, int j) {
  spec.validate();
  if (j < 0) throw InputError("tspread_hs: j must be non-negative");
  std::vector<Monomial> gens;
  if (spec.d + j <= spec.n) {
    for_each_tuple(spec.n, spec.d + j, 1, [&](const std::vector<VarIndex>& idx) {
      const Monomial w = Monomial::from_indices(spec.n, idx);
      if (static_cast<int>(irregular_pairs(w, spec.t).size()) <= j) gens.push_back(w);
    });
  }
  return MonomialIdeal(spec.n, std::move(gens));
}

RightPresentation right_presentation(const Monomial& w, const TSpreadVeroneseSpec& spec) {
  spec.validate();
  std::optional<RightPresentation> best;
  if (w.n() == spec.n && w.is_squarefree() && w.degree() == spec.d + 1) {
    for (VarIndex i : w.support()) {
      const Monomial u = w.divided_by_var(i);
      if (!is_t_spread(u, spec.t)) continue;
      const auto gaps = gap_set_t(u, spec.t);
      if (!std::binary_search(gaps.begin(), gaps.end(), i)) continue;
      if (!best || u > best->u) best = RightPresentation{w, u, i};
    }
  }
  if (!best) throw InputError(to_string(w) + " is not a generator of HS_1(I" + describe(spec) + ")");
  return *best;
}

LinearQuotientCertificate hs1_linear_quotient_order(const TSpreadVeroneseSpec& spec) {
  const MonomialIdeal hs1 = tspread_hs(spec, 1);
  std::vector<RightPresentation> pres;
  for (const Monomial& w : hs1.generators()) pres.push_back(right_presentation(w, spec));
  std::sort(pres.begin(), pres.end(), [](const RightPresentation& a, const RightPresentation& b) {
    if (a.u != b.u) return a.u > b.u;
    return a.i < b.i;
  });
  std::vector<Monomial> order;
  for (const auto& p : pres) order.push_back(p.w);
  LinearQuotientResult r = linear_quotient_certificate(hs1, order);
  if (!r.ok()) {
    throw InternalError("HS_1(I" + describe(spec) + ") right-presentation order fails at position " +
                        std::to_string(r.failure->index) + " (" + to_string(order[r.failure->index]) +
                        "), colon generator " + to_string(r.failure->offending));
  }
  return std::move(*r.certificate);
}

HigherShiftOrderExperiment hsj_order_experiment(const TSpreadVeroneseSpec& spec, int j) {
  const MonomialIdeal hsj = tspread_hs(spec, j);
  const MonomialIdeal base = tspread_generators(spec);

  struct Presentation {
    Monomial w;
    Monomial u;
    std::vector<VarIndex> F;
  };
  std::vector<Presentation> pres;
  for (const Monomial& w : hsj.generators()) {
    std::optional<Presentation> best;
    for (const Monomial& u : base.generators()) {
      if (!u.divides(w)) continue;
      const Monomial rest = w / u;
      const auto gaps = gap_set_t(u, spec.t);
      const auto F = rest.support();
      if (!std::includes(gaps.begin(), gaps.end(), F.begin(), F.end())) continue;
      if (!best || u > best->u || (u == best->u && F < best->F)) best = Presentation{w, u, F};
    }
    if (!best) throw InternalError(to_string(w) + " has no presentation x^F u with F in gap(u)");
    pres.push_back(std::move(*best));
  }
  std::sort(pres.begin(), pres.end(), [](const Presentation& a, const Presentation& b) {
    if (a.u != b.u) return a.u > b.u;
    return a.F < b.F;
  });

  HigherShiftOrderExperiment ex;
  ex.j = j;
  for (const auto& p : pres) ex.order.push_back(p.w);
  LinearQuotientResult r = linear_quotient_certificate(hsj, ex.order);
  ex.has_linear_quotients = r.ok();
  ex.failure = r.failure;
  return ex;
}

}  // namespace borelkit
