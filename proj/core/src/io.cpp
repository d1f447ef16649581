#include "borelkit/io.hpp"

#include <algorithm>

#include "borelkit/error.hpp"

namespace borelkit {

namespace {

int require_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw InputError(std::string("ideal document: '") + key + "' must be an integer");
  }
  return doc[key].get<int>();
}

std::vector<Monomial> monomial_list(const Json& doc, const char* key, int n) {
  if (!doc[key].is_array()) throw InputError(std::string("ideal document: '") + key + "' must be an array");
  std::vector<Monomial> out;
  for (const Json& m : doc[key]) out.push_back(monomial_from_json(m, n));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Monomial monomial_from_json(const Json& j, int n) {
  if (j.is_string()) return parse_monomial(j.get<std::string>(), n);
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != n) {
      throw InputError("exponent vector has length " + std::to_string(j.size()) + ", expected " +
                       std::to_string(n));
    }
    std::vector<int> e;
    for (const Json& a : j) {
      if (!a.is_number_integer() || a.get<int>() < 0) {
        throw InputError("exponent vector entries must be non-negative integers");
      }
      e.push_back(a.get<int>());
    }
    return Monomial(std::move(e));
  }
  throw InputError("monomial must be a string like \"x1*x2^2\" or an exponent vector");
}

IdealSpec ideal_spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("ideal document must be a JSON object");
  IdealSpec spec;
  if (doc.contains("tspread")) {
    const Json& t = doc["tspread"];
    TSpreadVeroneseSpec ts;
    if (t.is_array() && t.size() == 3) {
      ts = {t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
    } else if (t.is_object()) {
      ts = {require_int(t, "n"), require_int(t, "d"), require_int(t, "t")};
    } else {
      throw InputError("ideal document: 'tspread' must be {n, d, t} or [n, d, t]");
    }
    ts.validate();
    spec.n = ts.n;
    spec.tspread = ts;
    return spec;
  }
  spec.n = require_int(doc, "n");
  if (spec.n < 1) throw InputError("ideal document: 'n' must be positive");
  if (doc.contains("k")) {
    spec.k = require_int(doc, "k");
    if (*spec.k < 1) throw InputError("ideal document: 'k' must be positive");
  }
  const bool has_borel = doc.contains("borel_generators");
  const bool has_gens = doc.contains("generators");
  if (has_borel == has_gens) {
    throw InputError("ideal document needs exactly one of 'borel_generators' or 'generators'");
  }
  if (has_borel) spec.borel_generators = monomial_list(doc, "borel_generators", spec.n);
  if (has_gens) spec.generators = monomial_list(doc, "generators", spec.n);
  return spec;
}

IdealSpec ideal_spec_from_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("JSON parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  try {
    return ideal_spec_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("ideal document: ") + e.what());
  }
}

ResolvedIdeal resolve(const IdealSpec& spec) {
  ResolvedIdeal r;
  if (spec.tspread) {
    r.ideal = tspread_generators(*spec.tspread);
    r.tspread = spec.tspread;
    if (!r.ideal.is_zero() && is_k_borel(r.ideal, 1)) {
      r.k = 1;
      r.borel_generators = borel_generators_squarefree(r.ideal);
    }
    return r;
  }
  if (spec.borel_generators) {
    int k = spec.k.value_or(kUnbounded);
    for (const Monomial& u : *spec.borel_generators) {
      if (!k_bounded(u, k)) {
        throw InputError("Borel generator " + to_string(u) + " is not " + std::to_string(k) + "-bounded");
      }
    }
    r.ideal = borel_closure_k(*spec.borel_generators, k, spec.n);
    // An unbounded closure is k-Borel for k = its largest exponent.
    r.k = spec.k ? *spec.k : std::max(1, r.ideal.max_exponent());
    if (!spec.k && !is_k_borel(r.ideal, *r.k)) r.k.reset();
    if (r.k == 1) {
      r.borel_generators = borel_generators_squarefree(r.ideal);
    } else {
      r.borel_generators = *spec.borel_generators;
    }
    return r;
  }
  r.ideal = MonomialIdeal(spec.n, *spec.generators);
  const int k = spec.k.value_or(std::max(1, r.ideal.max_exponent()));
  if (spec.k && r.ideal.max_exponent() > *spec.k) {
    throw InputError("generators are not " + std::to_string(*spec.k) + "-bounded");
  }
  if (!r.ideal.is_zero() && !r.ideal.is_unit() && is_k_borel(r.ideal, k)) {
    r.k = k;
    if (k == 1) r.borel_generators = borel_generators_squarefree(r.ideal);
  }
  return r;
}

Json monomial_to_exponent_json(const Monomial& u) { return Json(u.exponents()); }

Json monomials_to_json(const std::vector<Monomial>& gens) {
  Json arr = Json::array();
  for (const Monomial& g : gens) arr.push_back(to_string(g));
  return arr;
}

Json ideal_to_json(const MonomialIdeal& I) {
  Json j;
  j["n"] = I.n();
  j["count"] = I.size();
  j["generators"] = monomials_to_json(I.generators());
  return j;
}

Json betti_to_json(const BettiTable& t, bool quotient_module) {
  const BettiTable shown = quotient_module ? t.shifted_to_quotient() : t;
  Json j;
  j["module"] = quotient_module ? "s-mod-i" : "ideal";
  Json entries = Json::array();
  for (const auto& [key, beta] : shown.entries()) {
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", beta}});
  }
  j["entries"] = std::move(entries);
  j["projdim"] = shown.projdim();
  return j;
}

Json multigraded_betti_to_json(const MultigradedBettiTable& t, bool quotient_module) {
  Json j;
  j["module"] = quotient_module ? "s-mod-i" : "ideal";
  Json entries = Json::array();
  const int shift = quotient_module ? 1 : 0;
  if (quotient_module && !t.entries().empty()) {
    const int n = t.entries().begin()->first.second.n();
    entries.push_back(Json{{"i", 0}, {"j", 0}, {"a", Json(std::vector<int>(static_cast<std::size_t>(n), 0))}, {"beta", 1}});
  }
  for (const auto& [key, beta] : t.entries()) {
    entries.push_back(Json{{"i", key.first + shift},
                           {"j", key.second.degree()},
                           {"a", monomial_to_exponent_json(key.second)},
                           {"beta", beta}});
  }
  j["entries"] = std::move(entries);
  j["projdim"] = t.projdim() < 0 ? -1 : t.projdim() + shift;
  return j;
}

Json index_sets_to_json(const std::vector<std::vector<VarIndex>>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(Json(s));
  return arr;
}

}  // namespace borelkit
