#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <variant>

#include "borelkit/error.hpp"
#include "borelkit/invariants.hpp"
#include "borelkit/resolution.hpp"
#include "borelkit/shifts.hpp"
#include "borelkit/tspread.hpp"
#include "instances.hpp"

namespace borelkit::cli {

namespace {

constexpr std::size_t kMaxDetails = 20;

class Tally {
 public:
  explicit Tally(SuiteReport& r) : r_(r) {}

  void check(const std::string& what, const Json& instance, const Json& formula,
             const Json& oracle, bool match) {
    ++r_.checks;
    if (match) return;
    ++r_.mismatches;
    if (r_.details.size() < kMaxDetails) {
      r_.details.push_back(Json{{"check", what},
                                {"instance", instance},
                                {"formula", formula},
                                {"oracle", oracle}});
    }
  }

  void check(const std::string& what, const Json& instance, bool ok) {
    check(what, instance, true, ok, ok);
  }

  void observe(const std::string& key, int delta = 1) {
    auto& slot = r_.observations[key];
    slot = slot.is_null() ? delta : slot.get<int>() + delta;
  }

  // Runs one instance; resource-limit errors are counted, not fatal.
  void instance(const std::function<void()>& body) {
    ++r_.instances;
    try {
      body();
    } catch (const ResourceError&) {
      ++r_.resource_errors;
    }
  }

 private:
  SuiteReport& r_;
};

int instance_count(const std::string& size) { return size == "medium" ? 100 : 30; }

std::uint64_t suite_seed(const std::string& name, std::uint64_t seed) {
  // FNV-1a of the suite name, mixed into the user seed.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  return seed ^ h;
}

MultigradedBettiTable oracle_table(const MonomialIdeal& I) {
  OracleOptions options;
  options.limit = default_oracle_limit();
  return koszul_homology_oracle(I, options);
}

Json describe(const BorelInstance& inst) {
  return Json{{"n", inst.n}, {"k", inst.k}, {"borel_generators", monomials_to_json(inst.borel_generators)}};
}

Json table_json(const BettiTable& t) { return betti_to_json(t)["entries"]; }

void suite_betti(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  for (int c = 0; c < instance_count(r.size); ++c) {
    const BorelInstance inst = random_kborel(rng, lim);
    tally.instance([&] {
      const BettiTable formula = betti_kborel(inst.ideal, inst.k);
      const BettiTable oracle = oracle_table(inst.ideal).collapse();
      tally.check("betti formula vs oracle", describe(inst), table_json(formula), table_json(oracle),
                  formula == oracle);
      int basis_total = 0;
      for (int i = 0; i <= formula.projdim() + 1; ++i) {
        basis_total += static_cast<int>(koszul_basis(inst.ideal, inst.k, i + 1).size());
      }
      int betti_total = 0;
      for (const auto& [key, beta] : formula.entries()) betti_total += static_cast<int>(beta);
      tally.check("koszul basis size vs betti total", describe(inst), betti_total, basis_total,
                  betti_total == basis_total);
    });
  }
}

void suite_hs(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  for (int c = 0; c < instance_count(r.size); ++c) {
    const BorelInstance inst = random_squarefree_borel(rng, std::min(lim.max_n + 1, 7), lim.max_d + 1, 3);
    tally.instance([&] {
      const Json desc = describe(inst);
      const MultigradedBettiTable oracle = oracle_table(inst.ideal);
      const auto cert = linear_quotient_certificate(inst.ideal, lex_order(inst.ideal));
      tally.check("lex linear quotients", desc, cert.ok());
      if (!cert.ok()) return;
      const int projdim = betti_kborel(inst.ideal, 1).projdim();
      for (int j = 0; j <= projdim + 1; ++j) {
        const MonomialIdeal by_formula = borel_closure_k(hsk_borel(inst.borel_generators, j), 1, inst.n);
        const MonomialIdeal by_cone = hs_via_linear_quotients(inst.ideal, *cert.certificate, j);
        const MonomialIdeal by_oracle = hs_from_table(oracle, inst.n, j);
        Json d = desc;
        d["j"] = j;
        tally.check("HS_j Borel formula vs oracle", d, monomials_to_json(by_formula.generators()),
                    monomials_to_json(by_oracle.generators()), by_formula == by_oracle);
        tally.check("HS_j mapping cone vs oracle", d, monomials_to_json(by_cone.generators()),
                    monomials_to_json(by_oracle.generators()), by_cone == by_oracle);
        if (!by_formula.is_zero()) tally.check("HS_j squarefree Borel", d, is_k_borel(by_formula, 1));
        if (j >= 1 && j < projdim) tally.check("HS_1(HS_j) = HS_{j+1}", d, hs_recursion_check(inst.borel_generators, j));
      }
      const ShiftProfile profile = monotonicity_profile(inst.borel_generators);
      tally.check("height chain non-increasing", desc, profile.height_nonincreasing);
      tally.check("analytic spread chain non-increasing", desc, profile.analytic_spread_nonincreasing);
      tally.check("profile length is projdim + 1", desc, projdim + 1, static_cast<int>(profile.strata.size()),
                  projdim + 1 == static_cast<int>(profile.strata.size()));
      if (inst.ideal.is_principal() || inst.borel_generators.size() == 1) {
        const auto uni = multiplicity_unimodality(inst.borel_generators.front());
        tally.check("multiplicity unimodal", desc, uni.unimodal);
      }
    });
  }
}

void suite_mult(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  for (int c = 0; c < instance_count(r.size); ++c) {
    const Monomial u = random_squarefree_principal(rng, lim.max_n + 2);
    tally.instance([&] {
      const Json desc{{"n", u.n()}, {"borel_generators", monomials_to_json({u})}};
      const PrincipalMultiplicity formula = multiplicity_principal(u);
      const MinimalPrimeSet oracle = minimal_primes(borel_closure_k({u}, 1, u.n()));
      tally.check("principal multiplicity vs cover count", desc, formula.value, oracle.multiplicity(),
                  formula.value == oracle.multiplicity());
      tally.check("principal height vs cover height", desc, formula.height, oracle.height,
                  formula.height == oracle.height);
      tally.check("minimal-height primes are the predicted family", desc,
                  index_sets_to_json(formula.predicted_primes()), index_sets_to_json(oracle.at_height()),
                  formula.predicted_primes() == oracle.at_height());
    });
  }
  for (int c = 0; c < instance_count(r.size); ++c) {
    const int n = rng.uniform(2, lim.max_n + 2);
    const int m = rng.uniform(1, 3);
    std::vector<Monomial> gens;
    for (int g = 0; g < m; ++g) gens.push_back(random_bounded_monomial(rng, n, rng.uniform(1, n), 1));
    tally.instance([&] {
      const Json desc{{"n", n}, {"borel_generators", monomials_to_json(gens)}};
      const MinimalPrimeSet oracle = minimal_primes(borel_closure_k(gens, 1, n));
      const MultiplicityOutcome formula = multiplicity_multi(gens);
      tally.check("height formula vs cover height", desc, height_kborel(gens), oracle.height,
                  height_kborel(gens) == oracle.height);
      if (const auto* v = std::get_if<std::int64_t>(&formula)) {
        tally.check("multi-generator multiplicity vs cover count", desc, *v, oracle.multiplicity(),
                    *v == oracle.multiplicity());
      } else {
        tally.observe("hypothesis_not_satisfied");
      }
    });
  }
}

bool one_in_all_first_blocks(const std::vector<Monomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Monomial& u) { return u.min_index() == 1; });
}

void suite_aspread(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  for (int c = 0; c < instance_count(r.size); ++c) {
    const BorelInstance inst = random_squarefree_borel(rng, lim.max_n + 2, lim.max_d + 1, 3);
    if (inst.ideal.is_principal()) {
      tally.observe("principal_skipped");
      continue;
    }
    tally.instance([&] {
      const int formula = analytic_spread(inst.borel_generators);
      const int oracle = oracle_analytic_spread(inst.ideal);
      tally.check("analytic spread formula vs exponent rank", describe(inst), formula, oracle, formula == oracle);
      if (!one_in_all_first_blocks(inst.borel_generators)) {
        int n = 0;
        for (const Monomial& u : inst.borel_generators) n = std::max(n, u.max_index());
        tally.check("linear relation graph connected on [n]", describe(inst),
                    linear_relation_graph(inst.ideal).connected_on(n));
      }
    });
  }
}

void suite_lq(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  for (int c = 0; c < instance_count(r.size); ++c) {
    const BorelInstance inst = random_kborel(rng, lim);
    tally.instance([&] {
      const auto lex = linear_quotient_certificate(inst.ideal, lex_order(inst.ideal));
      tally.check("lex order has linear quotients", describe(inst), lex.ok());
      if (!inst.ideal.is_equigenerated()) return;
      if (lex.ok()) {
        const BettiTable cone = betti_from_linear_quotients(*lex.certificate);
        const BettiTable formula = betti_kborel(inst.ideal, inst.k);
        tally.check("mapping-cone betti vs formula", describe(inst), table_json(cone), table_json(formula),
                    cone == formula);
      }
      for (int e = 0; e < 5; ++e) {
        const auto order = random_linear_extension(rng, inst.ideal);
        Json d = describe(inst);
        d["order"] = monomials_to_json(order);
        tally.check("linear extension has linear quotients", d,
                    linear_quotient_certificate(inst.ideal, order).ok());
      }
    });
  }
}

void suite_regular(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  {
    const int n = 4;
    const std::vector<Monomial> order{parse_monomial("x2*x4", n), parse_monomial("x1*x2", n),
                                      parse_monomial("x1*x3", n)};
    const MonomialIdeal I(n, order);
    tally.instance([&] {
      const auto cert = linear_quotient_certificate(I, order);
      const Json desc{{"n", n}, {"order", monomials_to_json(order)}};
      tally.check("counterexample has linear quotients", desc, cert.ok());
      if (!cert.ok()) return;
      const RegularityResult reg = is_regular_decomposition(I, *cert.certificate);
      const bool pinned = !reg.regular && reg.witness &&
                          reg.witness->first == parse_monomial("x1*x3", n) && reg.witness->second == 2;
      tally.check("counterexample is not regular with witness (x1*x3, 2)", desc, pinned);
    });
  }
  for (int c = 0; c < instance_count(r.size); ++c) {
    const BorelInstance inst = random_kborel(rng, lim);
    tally.instance([&] {
      const auto cert = linear_quotient_certificate(inst.ideal, lex_order(inst.ideal));
      tally.check("lex order has linear quotients", describe(inst), cert.ok());
      if (!cert.ok()) return;
      const RegularityResult reg = is_regular_decomposition(inst.ideal, *cert.certificate);
      Json witness = nullptr;
      if (reg.witness) witness = Json{{"u", to_string(reg.witness->first)}, {"s", reg.witness->second}};
      tally.check("lex decomposition function is regular", describe(inst), true, witness, reg.regular);
    });
  }
}

void suite_tspread(SuiteReport& r, InstanceRng& rng, const SizeLimits& lim) {
  Tally tally(r);
  const int max_n = std::min(lim.max_n + 2, 7);
  for (int c = 0; c < instance_count(r.size); ++c) {
    TSpreadVeroneseSpec spec;
    spec.n = rng.uniform(1, max_n);
    spec.d = rng.uniform(1, std::min(4, spec.n));
    spec.t = rng.uniform(1, std::min(3, spec.n));
    tally.instance([&] {
      const Json desc{{"n", spec.n}, {"d", spec.d}, {"t", spec.t}};
      const MonomialIdeal I = tspread_generators(spec);
      tally.check("generator count", desc, spec.expected_generator_count(), static_cast<std::int64_t>(I.size()),
                  spec.expected_generator_count() == static_cast<std::int64_t>(I.size()));
      if (I.is_zero()) return;
      const auto cert = linear_quotient_certificate(I, lex_order(I));
      tally.check("lex linear quotients", desc, cert.ok());
      if (!cert.ok()) return;
      for (std::size_t p = 0; p < I.size(); ++p) {
        const auto& u = I.generators()[p];
        const auto gaps = tspread_set(u, spec);
        Json d = desc;
        d["u"] = to_string(u);
        tally.check("gap intervals vs colon set", d, Json(gaps), Json(cert.certificate->set_of(u)),
                    gaps == cert.certificate->set_of(u));
      }
      const MultigradedBettiTable oracle = oracle_table(I);
      for (int j = 0;; ++j) {
        const MonomialIdeal by_formula = tspread_hs(spec, j);
        const MonomialIdeal by_cone = hs_via_linear_quotients(I, *cert.certificate, j);
        const MonomialIdeal by_oracle = hs_from_table(oracle, spec.n, j);
        Json d = desc;
        d["j"] = j;
        tally.check("t-spread HS_j formula vs oracle", d, monomials_to_json(by_formula.generators()),
                    monomials_to_json(by_oracle.generators()), by_formula == by_oracle);
        tally.check("t-spread HS_j mapping cone vs oracle", d, monomials_to_json(by_cone.generators()),
                    monomials_to_json(by_oracle.generators()), by_cone == by_oracle);
        if (by_formula.is_zero() && by_oracle.is_zero()) break;
        if (j >= 2) {
          const auto ex = hsj_order_experiment(spec, j);
          tally.observe(ex.has_linear_quotients ? "hsj_order_linear_quotients" : "hsj_order_failures");
        }
      }
      if (!tspread_hs(spec, 1).is_zero()) {
        bool ok = true;
        try {
          (void)hs1_linear_quotient_order(spec);
        } catch (const InternalError&) {
          ok = false;
        }
        tally.check("HS_1 right-presentation order has linear quotients", desc, ok);
      }
    });
  }
}

using SuiteFn = void (*)(SuiteReport&, InstanceRng&, const SizeLimits&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"betti", suite_betti}, {"hs", suite_hs},        {"mult", suite_mult},         {"aspread", suite_aspread},
      {"lq", suite_lq},       {"regular-decomp", suite_regular}, {"tspread", suite_tspread}};
  return suites;
}

}  // namespace

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = name;
  j["seed"] = seed;
  j["size"] = size;
  j["instances"] = instances;
  j["checks"] = checks;
  j["mismatches"] = mismatches;
  j["resource_errors"] = resource_errors;
  j["observations"] = observations;
  j["details"] = details;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"betti", "hs", "mult", "aspread", "lq", "regular-decomp", "tspread"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const std::string& size) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown suite '" + name + "'");
  SuiteReport report;
  report.name = name;
  report.seed = seed;
  report.size = size;
  InstanceRng rng(suite_seed(name, seed));
  it->second(report, rng, size_limits(size));
  return report;
}

}  // namespace borelkit::cli
