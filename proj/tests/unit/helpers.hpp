#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"

namespace testutil {

using borelkit::Monomial;
using borelkit::MonomialIdeal;

inline Monomial M(const std::string& text, int n) { return borelkit::parse_monomial(text, n); }

inline std::vector<Monomial> Ms(std::initializer_list<const char*> texts, int n) {
  std::vector<Monomial> out;
  for (const char* t : texts) out.push_back(M(t, n));
  return out;
}

inline MonomialIdeal ideal(std::initializer_list<const char*> texts, int n) { return MonomialIdeal(n, Ms(texts, n)); }

inline MonomialIdeal B1(std::initializer_list<const char*> texts, int n) {
  return borelkit::borel_closure_k(Ms(texts, n), 1, n);
}

// Every monomial in n variables of degree d with exponents at most k.
inline std::vector<Monomial> all_monomials(int n, int d, int k) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      if (left == 0) out.emplace_back(e);
      return;
    }
    for (int v = 0; v <= std::min(k, left); ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, d);
  return out;
}

inline std::vector<std::string> texts(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(borelkit::to_string(m));
  return out;
}

inline std::vector<std::string> texts(const MonomialIdeal& I) { return texts(I.generators()); }

}  // namespace testutil
