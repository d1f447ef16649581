#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "borelkit/error.hpp"
#include "borelkit/io.hpp"
#include "commands.hpp"
#include "helpers.hpp"
#include "instances.hpp"

using namespace borelkit;
using testutil::M;
using testutil::texts;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json parse_line(const std::string& s) { return Json::parse(s); }

std::vector<Json> parse_lines(const std::string& s) {
  std::vector<Json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("ideal documents") {
  const ResolvedIdeal r = resolve(ideal_spec_from_text(R"({ "n": 5, "k": 1, "borel_generators": ["x2*x4","x3*x5"] })"));
  CHECK(r.k == 1);
  CHECK(r.ideal.size() == 9);
  CHECK(texts(*r.borel_generators) == std::vector<std::string>{"x3*x5"});

  const ResolvedIdeal g = resolve(ideal_spec_from_text(R"({ "n": 4, "generators": ["x1*x3","x1*x4","x2*x4"] })"));
  CHECK(g.ideal.size() == 3);
  CHECK_FALSE(g.k.has_value());

  const ResolvedIdeal v = resolve(ideal_spec_from_text(R"({ "n": 3, "generators": [[1,0,0],[0,1,0]] })"));
  CHECK(texts(v.ideal) == std::vector<std::string>{"x1", "x2"});
  CHECK(v.k == 1);

  const ResolvedIdeal t = resolve(ideal_spec_from_text(R"({ "tspread": {"n": 4, "d": 2, "t": 2} })"));
  CHECK(t.ideal.size() == 3);
}

TEST_CASE("ideal document errors carry positions and offending monomials") {
  try {
    ideal_spec_from_text("{\n  \"n\": 4,\n  \"k\" 1\n}");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    resolve(ideal_spec_from_text(R"({ "n": 3, "k": 1, "borel_generators": ["x1^2*x3"] })"));
    FAIL("expected a semantic error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("x1^2*x3") != std::string::npos);
  }
  CHECK_THROWS_AS(ideal_spec_from_text(R"({ "n": 3 })"), InputError);
  CHECK_THROWS_AS(ideal_spec_from_text(R"({ "n": 3, "generators": [[1,0]] })"), InputError);
}

TEST_CASE("monomial exponent-vector form round-trips") {
  const Monomial u = M("x1*x2^2*x5", 5);
  CHECK(monomial_from_json(monomial_to_exponent_json(u), 5) == u);
  CHECK(monomial_from_json(Json("x5*x1*x2^2"), 5) == u);
}

TEST_CASE("expand") {
  const Run a = run({"expand", "--n", "4", "--k", "1", "--borel", "x2*x4"});
  CHECK(a.code == 0);
  CHECK(parse_line(a.out)["outputs"]["count"] == 5);
  CHECK(run({"expand", "--tspread", "4,2,2", "--count"}).out == "3\n");
  CHECK(run({"expand", "--n", "2", "--k", "1", "--borel", "x1", "--count"}).out == "1\n");
  CHECK(run({"expand", "--n", "5", "--k", "1", "--borel", "x2*x4,x3*x5", "--count"}).out ==
        run({"expand", "--n", "5", "--k", "1", "--borel", "x2*x4", "--borel", "x3*x5", "--count"}).out);
}

TEST_CASE("expand reads ideal files") {
  const std::string path = "borelkit_cli_test_ideal.json";
  {
    std::ofstream f(path);
    f << R"({ "n": 4, "k": 1, "borel_generators": ["x2*x4"] })";
  }
  CHECK(run({"expand", "--ideal", path, "--count"}).out == "5\n");
  std::remove(path.c_str());
  CHECK(run({"expand", "--ideal", "does-not-exist.json"}).code == cli::kInputError);
}

TEST_CASE("exit codes") {
  CHECK(run({"expand", "--n", "3", "--k", "1", "--borel", "x1^2"}).code == cli::kInputError);
  CHECK(run({"expand", "--n", "3", "--borel", "y1"}).code == cli::kInputError);
  CHECK(run({"nonsense"}).code == cli::kInputError);
  CHECK(run({"betti", "--n", "4", "--k", "1", "--borel", "x2*x4", "--limit-lcm", "2"}).code == cli::kResourceLimit);
  CHECK(run({"mult", "--n", "2", "--gens", "x1^2"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("betti output and module toggle") {
  const Json ideal = parse_line(run({"betti", "--n", "4", "--k", "1", "--borel", "x2*x4"}).out);
  CHECK(ideal["outputs"]["betti"]["module"] == "ideal");
  CHECK(ideal["outputs"]["betti"]["projdim"] == 2);
  CHECK(ideal["checks"][0]["match"] == true);
  const Json quotient = parse_line(run({"--module", "s-mod-i", "betti", "--n", "4", "--k", "1", "--borel", "x2*x4"}).out);
  CHECK(quotient["outputs"]["betti"]["projdim"] == 3);
  const Json trailing = parse_line(run({"betti", "--n", "4", "--k", "1", "--borel", "x2*x4", "--module", "s-mod-i"}).out);
  CHECK(trailing == quotient);
}

TEST_CASE("mult, minprimes and aspread") {
  const Json m = parse_line(run({"mult", "--n", "5", "--k", "1", "--borel", "x2*x3*x5"}).out);
  CHECK(m["outputs"]["height"] == 2);
  CHECK(m["outputs"]["multiplicity"] == 3);
  CHECK(m["outputs"]["minimal_primes_at_height"] == Json::parse("[[1,2],[1,3],[2,3]]"));
  const Json p = parse_line(run({"minprimes", "--n", "3", "--gens", "x1*x2,x2*x3,x1*x3"}).out);
  CHECK(p["outputs"]["minimal_primes"] == Json::parse("[[1,2],[1,3],[2,3]]"));
  const Json a = parse_line(run({"aspread", "--n", "4", "--k", "1", "--borel", "x1*x3,x1*x4"}).out);
  CHECK(a["outputs"]["analytic_spread"] == 3);
  CHECK(a["outputs"]["analytic_spread_source"] == "formula");
}

TEST_CASE("hs and tspread") {
  const Json h = parse_line(run({"hs", "--n", "4", "--k", "1", "--borel", "x2*x4", "--j", "2", "--profile"}).out);
  CHECK(h["outputs"]["hs"]["generators"] == Json::parse(R"(["x1*x2*x3*x4"])"));
  CHECK(h["outputs"]["profile"]["strata"].size() == 3);
  CHECK(h["status"] == "ok");
  const Run t = run({"tspread", "--n", "4", "--d", "2", "--t", "2", "--hs", "1", "--check-lq"});
  CHECK(t.code == 0);
  const Json tj = parse_line(t.out);
  CHECK(tj["outputs"]["hs"]["count"] == 2);
  CHECK(tj["outputs"]["hs1_order"][0]["w"] == "x1*x3*x4");
}

TEST_CASE("invariants reports") {
  const Json b = parse_line(run({"invariants", "--n", "5", "--k", "1", "--borel", "x2*x3*x5"}).out);
  CHECK(b["outputs"]["height"] == 2);
  CHECK(b["outputs"]["multiplicity"] == 3);
  CHECK(b["status"] == "ok");
  const Json t = parse_line(run({"invariants", "--tspread", "4,2,2"}).out);
  CHECK(t["outputs"]["betti"]["projdim"] == 1);
  CHECK(t["outputs"]["homological_shifts"][1]["count"] == 2);
  const Json f = parse_line(run({"invariants", "--n", "3", "--k", "1", "--borel", "x1*x2*x3"}).out);
  CHECK(f["outputs"]["betti"]["projdim"] == 0);
}

TEST_CASE("check suites") {
  const Run b = run({"check", "betti", "--seed", "7", "--size", "small"});
  CHECK(b.code == 0);
  const Json bj = parse_line(b.out);
  CHECK(bj["mismatches"] == 0);
  CHECK(bj["seed"] == 7);
  const Json lq = parse_line(run({"check", "lq", "--seed", "3"}).out);
  CHECK(lq["mismatches"] == 0);
  CHECK(lq["instances"].get<int>() > 0);
  const Run all = run({"check", "all", "--seed", "1"});
  const auto lines = parse_lines(all.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines.back()["suite"] == "all");
  CHECK(lines.back()["mismatches"] == 0);
  CHECK(run({"check", "all", "--seed", "1"}).out == all.out);
  CHECK(run({"check", "nope"}).code == cli::kInputError);
}

TEST_CASE("instance generation is reproducible") {
  cli::InstanceRng a(99);
  cli::InstanceRng b(99);
  const auto lim = cli::size_limits("medium");
  for (int i = 0; i < 20; ++i) {
    const auto x = cli::random_kborel(a, lim);
    const auto y = cli::random_kborel(b, lim);
    CHECK(x.ideal == y.ideal);
    CHECK(x.k == y.k);
    CHECK(is_k_borel(x.ideal, x.k));
  }
  cli::InstanceRng r(5);
  const MonomialIdeal I = testutil::B1({"x2*x4", "x3*x5"}, 5);
  for (int i = 0; i < 10; ++i) {
    const auto order = cli::random_linear_extension(r, I);
    for (std::size_t p = 0; p < order.size(); ++p) {
      for (std::size_t q = p + 1; q < order.size(); ++q) CHECK_FALSE(precedes(order[q], order[p]));
    }
  }
}
