#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "borelkit/error.hpp"
#include "borelkit/invariants.hpp"
#include "borelkit/io.hpp"
#include "borelkit/resolution.hpp"
#include "borelkit/shifts.hpp"
#include "borelkit/tspread.hpp"
#include "suites.hpp"

namespace borelkit::cli {

namespace {

struct GlobalArgs {
  bool pretty = false;
  std::uint64_t seed = 1;
  std::size_t limit_lcm = 0;
  std::string module = "ideal";
  bool timing = false;
  bool exhaustive = false;

  bool quotient() const { return module == "s-mod-i"; }
  OracleOptions oracle() const {
    OracleOptions o;
    o.limit = limit_lcm > 0 ? limit_lcm : default_oracle_limit();
    o.exhaustive = exhaustive;
    return o;
  }
};

struct IdealArgs {
  std::string file;
  int n = 0;
  int k = 0;
  std::vector<std::string> borel;
  std::vector<std::string> gens;
  std::string tspread;
};

void add_ideal_options(CLI::App* cmd, IdealArgs& a) {
  cmd->add_option("--ideal", a.file, "ideal JSON document");
  cmd->add_option("--n", a.n, "number of variables");
  cmd->add_option("--k", a.k, "exponent bound");
  cmd->add_option("--borel", a.borel, "Borel generators, e.g. x2*x4 (comma-separated, repeatable)")->delimiter(',');
  cmd->add_option("--gens", a.gens, "minimal generators (comma-separated, repeatable)")->delimiter(',');
  cmd->add_option("--tspread", a.tspread, "t-spread Veronese ideal n,d,t");
}

TSpreadVeroneseSpec parse_tspread_triple(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InputError("--tspread expects n,d,t with integers, got '" + text + "'");
    }
  }
  if (v.size() != 3) throw InputError("--tspread expects n,d,t, got '" + text + "'");
  TSpreadVeroneseSpec spec{v[0], v[1], v[2]};
  spec.validate();
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open ideal file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IdealSpec ideal_spec(const IdealArgs& a) {
  const bool inline_given = a.n != 0 || a.k != 0 || !a.borel.empty() || !a.gens.empty();
  if (!a.file.empty()) {
    if (inline_given || !a.tspread.empty()) throw InputError("--ideal cannot be combined with inline ideal flags");
    return ideal_spec_from_text(read_file(a.file));
  }
  if (!a.tspread.empty()) {
    if (inline_given) throw InputError("--tspread cannot be combined with --n/--k/--borel/--gens");
    IdealSpec spec;
    spec.tspread = parse_tspread_triple(a.tspread);
    spec.n = spec.tspread->n;
    return spec;
  }
  if (a.n < 1) throw InputError("an ideal needs --ideal FILE, --tspread n,d,t, or --n with --borel or --gens");
  if (a.borel.empty() == a.gens.empty()) throw InputError("give exactly one of --borel or --gens");
  IdealSpec spec;
  spec.n = a.n;
  if (a.k != 0) {
    if (a.k < 1) throw InputError("--k must be positive");
    spec.k = a.k;
  }
  std::vector<Monomial> ms;
  for (const std::string& t : a.borel.empty() ? a.gens : a.borel) ms.push_back(parse_monomial(t, a.n));
  if (a.borel.empty()) {
    spec.generators = std::move(ms);
  } else {
    spec.borel_generators = std::move(ms);
  }
  return spec;
}

Json spec_echo(const IdealSpec& s) {
  Json j;
  if (s.tspread) {
    j["tspread"] = Json{{"n", s.tspread->n}, {"d", s.tspread->d}, {"t", s.tspread->t}};
    return j;
  }
  j["n"] = s.n;
  if (s.k) j["k"] = *s.k;
  if (s.borel_generators) j["borel_generators"] = monomials_to_json(*s.borel_generators);
  if (s.generators) j["generators"] = monomials_to_json(*s.generators);
  return j;
}

// Betti table as a text grid: column i, row j - i.
std::string render_betti(const std::string& title, const BettiTable& t) {
  std::ostringstream os;
  os << title << "\n";
  if (t.entries().empty()) {
    os << "  (zero)\n";
    return os.str();
  }
  int lo = INT32_MAX;
  int hi = INT32_MIN;
  for (const auto& [key, beta] : t.entries()) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  const int cols = t.projdim() + 1;
  os << std::setw(8) << "";
  for (int i = 0; i < cols; ++i) os << std::setw(6) << i;
  os << "\n" << std::setw(8) << "total:";
  for (int i = 0; i < cols; ++i) os << std::setw(6) << t.total(i);
  os << "\n";
  for (int r = lo; r <= hi; ++r) {
    os << std::setw(7) << r << ":";
    for (int i = 0; i < cols; ++i) {
      const auto b = t.at(i, i + r);
      os << std::setw(6) << (b == 0 ? std::string(".") : std::to_string(b));
    }
    os << "\n";
  }
  return os.str();
}

class Report {
 public:
  Report(std::string command, Json inputs) : command_(std::move(command)), inputs_(std::move(inputs)) {}

  Json outputs = Json::object();
  std::vector<std::string> tables;

  bool check(const std::string& name, const Json& formula, const Json& oracle) {
    const bool match = formula == oracle;
    checks_.push_back(Json{{"check", name}, {"formula", formula}, {"oracle", oracle}, {"match", match}});
    if (!match) mismatch_ = true;
    return match;
  }

  bool mismatch() const { return mismatch_; }

  Json to_json(std::optional<double> wall_ms) const {
    Json j;
    j["command"] = command_;
    j["inputs"] = inputs_;
    j["outputs"] = outputs;
    j["checks"] = checks_;
    j["status"] = mismatch_ ? "mismatch" : "ok";
    if (wall_ms) j["wall_time_ms"] = *wall_ms;
    return j;
  }

 private:
  std::string command_;
  Json inputs_;
  Json checks_ = Json::array();
  bool mismatch_ = false;
};

Json table_entries(const BettiTable& t, bool quotient) { return betti_to_json(t, quotient); }

bool has_squarefree_borel(const ResolvedIdeal& r) { return r.k == 1 && r.borel_generators.has_value(); }

// --- subcommands -----------------------------------------------------------

void cmd_betti(const ResolvedIdeal& r, const GlobalArgs& g, bool multigraded, Report& rep) {
  const bool q = g.quotient();
  const MultigradedBettiTable oracle = koszul_homology_oracle(r.ideal, g.oracle());
  const BettiTable collapsed = oracle.collapse();
  if (r.k && !r.ideal.is_unit()) {
    const BettiTable formula = betti_kborel(r.ideal, *r.k);
    rep.check("graded betti numbers", table_entries(formula, q), table_entries(collapsed, q));
    rep.outputs["betti"] = table_entries(formula, q);
    rep.outputs["source"] = "formula";
  } else {
    rep.outputs["betti"] = table_entries(collapsed, q);
    rep.outputs["source"] = "oracle";
  }
  if (multigraded) rep.outputs["multigraded"] = multigraded_betti_to_json(oracle, q);
  rep.tables.push_back(render_betti(q ? "betti numbers of S/I" : "betti numbers of I",
                                    q ? collapsed.shifted_to_quotient() : collapsed));
}

enum class PrimeMode { minprimes, mult, aspread };

void cmd_primes(const ResolvedIdeal& r, PrimeMode mode, Report& rep) {
  const MonomialIdeal& I = r.ideal;
  if (!I.is_squarefree()) throw InputError("minimal primes need a squarefree ideal");
  if (I.is_zero() || I.is_unit()) throw InputError("minimal primes need a proper nonzero ideal");
  const MinimalPrimeSet oracle = minimal_primes(I);
  rep.outputs["height"] = oracle.height;
  rep.outputs["multiplicity"] = oracle.multiplicity();
  rep.outputs["minimal_primes_at_height"] = index_sets_to_json(oracle.at_height());
  if (mode == PrimeMode::minprimes) rep.outputs["minimal_primes"] = index_sets_to_json(oracle.primes);

  if (has_squarefree_borel(r)) {
    const auto& bg = *r.borel_generators;
    rep.check("height", height_kborel(bg), oracle.height);
    if (mode == PrimeMode::mult) {
      if (bg.size() == 1) {
        const PrincipalMultiplicity p = multiplicity_principal(bg.front());
        rep.check("multiplicity", p.value, oracle.multiplicity());
        rep.check("minimal primes at height", index_sets_to_json(p.predicted_primes()),
                  index_sets_to_json(oracle.at_height()));
      } else {
        const MultiplicityOutcome outcome = multiplicity_multi(bg);
        if (const auto* v = std::get_if<std::int64_t>(&outcome)) {
          rep.check("multiplicity", *v, oracle.multiplicity());
        } else {
          rep.outputs["formula_status"] = "hypothesis not satisfied";
        }
      }
    }
  }

  if (mode == PrimeMode::aspread) {
    if (!I.is_equigenerated()) throw InputError("analytic spread needs an equigenerated ideal");
    const int rank = oracle_analytic_spread(I);
    rep.outputs["analytic_spread"] = rank;
    const LinearRelationGraph graph = linear_relation_graph(I);
    Json edges = Json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back(Json::array({a, b}));
    rep.outputs["linear_relation_graph"] = Json{{"vertices", graph.vertices}, {"edges", edges}};
    if (has_squarefree_borel(r) && !I.is_principal()) {
      rep.check("analytic spread", analytic_spread(*r.borel_generators), rank);
      rep.outputs["analytic_spread_source"] = "formula";
    } else {
      rep.outputs["analytic_spread_source"] = "oracle";
    }
  }
}

Json profile_json(const ShiftProfile& p) {
  Json strata = Json::array();
  for (const ShiftStratum& s : p.strata) {
    strata.push_back(Json{{"j", s.j},
                          {"borel_generators", monomials_to_json(s.borel_generators)},
                          {"count", s.ideal.size()},
                          {"height", s.height},
                          {"multiplicity", s.multiplicity},
                          {"multiplicity_source", to_string(s.multiplicity_source)},
                          {"analytic_spread", s.analytic_spread},
                          {"analytic_spread_source", to_string(s.analytic_spread_source)}});
  }
  return Json{{"strata", strata},
              {"height_nonincreasing", p.height_nonincreasing},
              {"analytic_spread_nonincreasing", p.analytic_spread_nonincreasing}};
}

bool hs_formula_applies(const ResolvedIdeal& r) {
  return has_squarefree_borel(r) && r.ideal.is_equigenerated() && !r.ideal.is_zero() && !r.ideal.is_unit();
}

void hs_checks(const ResolvedIdeal& r, const MultigradedBettiTable& oracle, int j, Report& rep, Json& slot) {
  const MonomialIdeal by_oracle = hs_from_table(oracle, r.ideal.n(), j);
  slot = ideal_to_json(by_oracle);
  const std::string tag = "HS_" + std::to_string(j);
  if (hs_formula_applies(r)) {
    const auto bg = hsk_borel(*r.borel_generators, j);
    slot["borel_generators"] = monomials_to_json(bg);
    const MonomialIdeal by_formula = borel_closure_k(bg, 1, r.ideal.n());
    rep.check(tag + " from Borel generators", monomials_to_json(by_formula.generators()),
              monomials_to_json(by_oracle.generators()));
  }
  if (r.tspread) {
    rep.check(tag + " t-spread", monomials_to_json(tspread_hs(*r.tspread, j).generators()),
              monomials_to_json(by_oracle.generators()));
  }
  if (r.ideal.is_equigenerated() && !r.ideal.is_zero()) {
    const auto cert = linear_quotient_certificate(r.ideal, lex_order(r.ideal));
    if (cert.ok()) {
      rep.check(tag + " from linear quotients",
                monomials_to_json(hs_via_linear_quotients(r.ideal, *cert.certificate, j).generators()),
                monomials_to_json(by_oracle.generators()));
    }
  }
}

void cmd_hs(const ResolvedIdeal& r, const GlobalArgs& g, int j, bool profile, Report& rep) {
  if (j < 0) throw InputError("--j must be non-negative");
  if (r.ideal.is_zero()) throw InputError("homological shifts of the zero ideal");
  const MultigradedBettiTable oracle = koszul_homology_oracle(r.ideal, g.oracle());
  rep.outputs["j"] = j;
  hs_checks(r, oracle, j, rep, rep.outputs["hs"]);
  if (profile) {
    if (!hs_formula_applies(r)) throw InputError("--profile needs an equigenerated squarefree Borel ideal");
    const ShiftProfile p = monotonicity_profile(*r.borel_generators);
    rep.outputs["profile"] = profile_json(p);
    rep.check("height chain non-increasing", true, p.height_nonincreasing);
    rep.check("analytic spread chain non-increasing", true, p.analytic_spread_nonincreasing);
  }
}

void cmd_tspread(const TSpreadVeroneseSpec& spec, const GlobalArgs& g, std::optional<int> hs_j, bool check_lq,
                 Report& rep) {
  const MonomialIdeal I = tspread_generators(spec);
  rep.outputs["ideal"] = ideal_to_json(I);
  rep.check("generator count", spec.expected_generator_count(), static_cast<std::int64_t>(I.size()));
  if (I.is_zero()) return;
  const auto cert = linear_quotient_certificate(I, lex_order(I));
  Json sets = Json::array();
  for (const Monomial& u : I.generators()) {
    sets.push_back(Json{{"u", to_string(u)}, {"set", tspread_set(u, spec)}});
    if (cert.ok()) rep.check("set(" + to_string(u) + ")", Json(tspread_set(u, spec)), Json(cert.certificate->set_of(u)));
  }
  rep.outputs["sets"] = sets;
  rep.check("lex linear quotients", true, cert.ok());
  if (!hs_j) return;
  const int j = *hs_j;
  if (j < 0) throw InputError("--hs must be non-negative");
  ResolvedIdeal r;
  r.ideal = I;
  r.tspread = spec;
  const MultigradedBettiTable oracle = koszul_homology_oracle(I, g.oracle());
  hs_checks(r, oracle, j, rep, rep.outputs["hs"]);
  if (!check_lq || j == 0) return;
  if (j == 1) {
    bool ok = true;
    Json order = Json::array();
    try {
      const LinearQuotientCertificate c = hs1_linear_quotient_order(spec);
      for (const Monomial& w : c.order) {
        const RightPresentation p = right_presentation(w, spec);
        order.push_back(Json{{"w", to_string(w)}, {"u", to_string(p.u)}, {"i", p.i}, {"set", c.set_of(w)}});
      }
    } catch (const InternalError&) {
      ok = false;
    }
    rep.outputs["hs1_order"] = order;
    rep.check("HS_1 order has linear quotients", true, ok);
  } else {
    const HigherShiftOrderExperiment ex = hsj_order_experiment(spec, j);
    Json obs{{"order", monomials_to_json(ex.order)}, {"has_linear_quotients", ex.has_linear_quotients}};
    if (ex.failure) obs["failure"] = Json{{"index", ex.failure->index}, {"offending", to_string(ex.failure->offending)}};
    rep.outputs["hsj_order_observation"] = obs;
  }
}

void cmd_invariants(const ResolvedIdeal& r, const GlobalArgs& g, Report& rep) {
  const MonomialIdeal& I = r.ideal;
  rep.outputs["ideal"] = ideal_to_json(I);
  if (r.k) rep.outputs["k"] = *r.k;
  if (r.borel_generators) rep.outputs["borel_generators"] = monomials_to_json(*r.borel_generators);
  if (I.is_zero()) throw InputError("invariants of the zero ideal");
  cmd_betti(r, g, false, rep);
  const MultigradedBettiTable oracle = koszul_homology_oracle(I, g.oracle());
  const int projdim = oracle.projdim();
  if (I.is_squarefree() && !I.is_unit()) {
    cmd_primes(r, I.is_equigenerated() ? PrimeMode::aspread : PrimeMode::mult, rep);
    if (has_squarefree_borel(r) && I.is_equigenerated()) {
      // Keep the multiplicity check too when the analytic spread path ran.
      const auto& bg = *r.borel_generators;
      const MinimalPrimeSet primes = minimal_primes(I);
      if (bg.size() == 1) {
        rep.check("multiplicity", multiplicity_principal(bg.front()).value, primes.multiplicity());
      } else {
        const MultiplicityOutcome outcome = multiplicity_multi(bg);
        if (const auto* v = std::get_if<std::int64_t>(&outcome)) rep.check("multiplicity", *v, primes.multiplicity());
      }
    }
  }
  Json shifts = Json::array();
  for (int j = 0; j <= projdim; ++j) {
    Json slot;
    hs_checks(r, oracle, j, rep, slot);
    slot["j"] = j;
    shifts.push_back(slot);
  }
  rep.outputs["homological_shifts"] = shifts;
  if (hs_formula_applies(r)) {
    const ShiftProfile p = monotonicity_profile(*r.borel_generators);
    rep.outputs["profile"] = profile_json(p);
    rep.check("height chain non-increasing", true, p.height_nonincreasing);
    rep.check("analytic spread chain non-increasing", true, p.analytic_spread_nonincreasing);
  }
}

void emit(std::ostream& out, const Json& doc, const GlobalArgs& g, const std::vector<std::string>& tables = {}) {
  if (g.pretty) {
    for (const std::string& t : tables) out << t << "\n";
    out << doc.dump(2) << "\n";
  } else {
    out << doc.dump() << "\n";
  }
}

int run_check(const std::string& suite, const std::string& size, const GlobalArgs& g, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  SuiteReport total;
  total.name = "all";
  total.seed = g.seed;
  total.size = size;
  for (const std::string& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport rep = run_suite(name, g.seed, size);
    Json doc = rep.to_json();
    if (g.timing) {
      doc["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    emit(out, doc, g);
    total.instances += rep.instances;
    total.checks += rep.checks;
    total.mismatches += rep.mismatches;
    total.resource_errors += rep.resource_errors;
  }
  if (suite == "all") {
    Json doc = total.to_json();
    doc.erase("details");
    doc.erase("observations");
    emit(out, doc, g);
  }
  return total.mismatches > 0 ? kMismatch : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Borel-type monomial ideals", "borelkit"};
  app.require_subcommand(1);
  GlobalArgs g;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON-lines output (default)");
  app.add_flag("--pretty", g.pretty, "indented JSON with text Betti tables");
  app.add_option("--seed", g.seed, "seed for random instances");
  app.add_option("--limit-lcm", g.limit_lcm, "cap on oracle candidate multidegrees");
  app.add_option("--module", g.module, "report Betti numbers of the ideal or of S/I")
      ->check(CLI::IsMember({"ideal", "s-mod-i"}));
  app.add_flag("--timing", g.timing, "include wall time in reports");
  app.add_flag("--exhaustive", g.exhaustive, "oracle scans every multidegree below the total lcm");

  IdealArgs ia;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  bool count_only = false;
  CLI::App* expand = sub("expand", "print the minimal generators");
  add_ideal_options(expand, ia);
  expand->add_flag("--count", count_only, "print only the number of generators");

  bool multigraded = false;
  CLI::App* betti = sub("betti", "graded Betti numbers, formula and oracle");
  add_ideal_options(betti, ia);
  betti->add_flag("--multigraded", multigraded, "also print multigraded Betti numbers");

  CLI::App* minprimes = sub("minprimes", "minimal primes of a squarefree ideal");
  add_ideal_options(minprimes, ia);
  CLI::App* mult = sub("mult", "height and multiplicity");
  add_ideal_options(mult, ia);
  CLI::App* aspread = sub("aspread", "analytic spread and linear relation graph");
  add_ideal_options(aspread, ia);

  int hs_j = 1;
  bool profile = false;
  CLI::App* hs = sub("hs", "homological shift ideals");
  add_ideal_options(hs, ia);
  hs->add_option("--j", hs_j, "homological degree");
  hs->add_flag("--profile", profile, "invariants of every HS_j");

  TSpreadVeroneseSpec ts;
  std::string ts_triple;
  std::optional<int> ts_hs;
  bool check_lq = false;
  CLI::App* tspread = sub("tspread", "t-spread Veronese ideals");
  tspread->add_option("--n", ts.n, "number of variables");
  tspread->add_option("--d", ts.d, "degree");
  tspread->add_option("--t", ts.t, "spread");
  tspread->add_option("--tspread", ts_triple, "n,d,t");
  tspread->add_option("--hs", ts_hs, "homological shift degree");
  tspread->add_flag("--check-lq", check_lq, "verify the linear-quotient order of HS_j");

  std::string suite;
  std::string size = "small";
  CLI::App* check = sub("check", "run a seeded property suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_choices));
  check->add_option("--size", size, "instance size")->check(CLI::IsMember({"small", "medium"}));

  CLI::App* invariants = sub("invariants", "every invariant with formula and oracle columns");
  add_ideal_options(invariants, ia);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto wall = [&]() -> std::optional<double> {
    if (!g.timing) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    if (check->parsed()) return run_check(suite, size, g, out);

    if (tspread->parsed()) {
      if (!ts_triple.empty()) {
        if (ts.n || ts.d || ts.t) throw InputError("give either --tspread or --n/--d/--t");
        ts = parse_tspread_triple(ts_triple);
      }
      ts.validate();
      Report rep("tspread", Json{{"n", ts.n}, {"d", ts.d}, {"t", ts.t}});
      if (ts_hs) rep.outputs["hs_j"] = *ts_hs;
      cmd_tspread(ts, g, ts_hs, check_lq, rep);
      emit(out, rep.to_json(wall()), g);
      return rep.mismatch() ? kMismatch : kOk;
    }

    const IdealSpec spec = ideal_spec(ia);
    const ResolvedIdeal r = resolve(spec);

    if (expand->parsed() && count_only) {
      out << r.ideal.size() << "\n";
      return kOk;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Report rep(chosen->get_name(), spec_echo(spec));
    if (expand->parsed()) {
      rep.outputs = ideal_to_json(r.ideal);
    } else if (betti->parsed()) {
      if (r.ideal.is_zero()) throw InputError("Betti numbers of the zero ideal");
      cmd_betti(r, g, multigraded, rep);
    } else if (minprimes->parsed()) {
      cmd_primes(r, PrimeMode::minprimes, rep);
    } else if (mult->parsed()) {
      cmd_primes(r, PrimeMode::mult, rep);
    } else if (aspread->parsed()) {
      cmd_primes(r, PrimeMode::aspread, rep);
    } else if (hs->parsed()) {
      cmd_hs(r, g, hs_j, profile, rep);
    } else if (invariants->parsed()) {
      cmd_invariants(r, g, rep);
    }
    emit(out, rep.to_json(wall()), g, rep.tables);
    return rep.mismatch() ? kMismatch : kOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace borelkit::cli
