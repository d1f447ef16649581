#include "borelkit/shifts.hpp"

#include <algorithm>
#include <variant>

#include "borelkit/error.hpp"
#include "borelkit/invariants.hpp"

namespace borelkit {

namespace {

void require_equigenerated_squarefree(const std::vector<Monomial>& gens, const char* what) {
  for (const Monomial& u : gens) {
    if (!u.is_squarefree()) {
      throw InputError(std::string(what) + ": Borel generator " + to_string(u) + " is not squarefree");
    }
    if (u.degree() != gens.front().degree()) {
      throw InputError(std::string(what) + ": Borel generators must have equal degree");
    }
    if (u.n() != gens.front().n()) throw InputError(std::string(what) + ": mixed variable counts");
  }
}

std::vector<Monomial> keep_maximal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& u : gens) {
    const bool dominated = std::any_of(gens.begin(), gens.end(), [&](const Monomial& w) {
      return w != u && precedes(u, w);
    });
    if (!dominated) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<Monomial> hs1_borel(const std::vector<Monomial>& borel_gens) {
  return hsk_borel(borel_gens, 1);
}

std::vector<Monomial> hsk_borel(const std::vector<Monomial>& borel_gens, int j) {
  require_equigenerated_squarefree(borel_gens, "hsk_borel");
  if (j < 0) throw InputError("hsk_borel: j must be non-negative");
  if (j == 0) return keep_maximal(borel_gens);
  std::vector<Monomial> out;
  for (const Monomial& u : borel_gens) {
    const auto gaps = gaps_squarefree(u);
    if (static_cast<int>(gaps.size()) < j) continue;
    Monomial w = u;
    for (auto it = gaps.rbegin(); it != gaps.rbegin() + j; ++it) w = w.times_var(*it);
    out.push_back(std::move(w));
  }
  return keep_maximal(std::move(out));
}

bool hs_recursion_check(const std::vector<Monomial>& borel_gens, int j) {
  if (borel_gens.empty()) return true;
  const int n = borel_gens.front().n();
  const auto hsj = hsk_borel(borel_gens, j);
  const auto lhs = hsj.empty() ? std::vector<Monomial>{} : hs1_borel(hsj);
  const auto rhs = hsk_borel(borel_gens, j + 1);
  return borel_closure_k(lhs, 1, n) == borel_closure_k(rhs, 1, n);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::formula:
      return "formula";
    case Provenance::oracle:
      return "oracle";
    case Provenance::not_applicable:
      break;
  }
  return "n/a";
}

ShiftProfile monotonicity_profile(const std::vector<Monomial>& borel_gens) {
  require_equigenerated_squarefree(borel_gens, "monotonicity_profile");
  if (borel_gens.empty()) throw InputError("monotonicity_profile: zero ideal");
  const int n = borel_gens.front().n();
  ShiftProfile profile;
  for (int j = 0;; ++j) {
    std::vector<Monomial> gens = hsk_borel(borel_gens, j);
    if (gens.empty()) break;
    ShiftStratum s;
    s.j = j;
    s.ideal = borel_closure_k(gens, 1, n);
    s.height = height_kborel(gens);
    const MultiplicityOutcome mult = multiplicity_multi(gens);
    if (const auto* v = std::get_if<std::int64_t>(&mult)) {
      s.multiplicity = *v;
      s.multiplicity_source = Provenance::formula;
    } else {
      s.multiplicity = minimal_primes(s.ideal).multiplicity();
      s.multiplicity_source = Provenance::oracle;
    }
    if (s.ideal.is_principal()) {
      s.analytic_spread = oracle_analytic_spread(s.ideal);
      s.analytic_spread_source = Provenance::oracle;
    } else {
      s.analytic_spread = analytic_spread(gens);
      s.analytic_spread_source = Provenance::formula;
    }
    s.borel_generators = std::move(gens);
    profile.strata.push_back(std::move(s));
  }
  const ShiftStratum* last_formula = nullptr;
  for (std::size_t p = 0; p < profile.strata.size(); ++p) {
    const ShiftStratum& cur = profile.strata[p];
    if (p > 0 && cur.height > profile.strata[p - 1].height) profile.height_nonincreasing = false;
    if (cur.analytic_spread_source == Provenance::formula) {
      if (last_formula && cur.analytic_spread > last_formula->analytic_spread) {
        profile.analytic_spread_nonincreasing = false;
      }
      last_formula = &cur;
    }
  }
  return profile;
}

bool is_unimodal(const std::vector<std::int64_t>& seq) {
  bool decreased = false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < seq[i - 1]) decreased = true;
    if (seq[i] > seq[i - 1] && decreased) return false;
  }
  return true;
}

UnimodalityResult multiplicity_unimodality(const Monomial& u) {
  if (!u.is_squarefree() || u.is_one()) {
    throw InputError("multiplicity_unimodality: generator must be squarefree and not 1");
  }
  UnimodalityResult r;
  for (int k = 0;; ++k) {
    const auto gens = hsk_borel({u}, k);
    if (gens.empty()) break;
    if (gens.size() != 1) throw InternalError("HS_k of a principal Borel ideal is not principal Borel");
    r.multiplicities.push_back(multiplicity_principal(gens.front()).value);
  }
  r.unimodal = is_unimodal(r.multiplicities);
  return r;
}

}  // namespace borelkit
