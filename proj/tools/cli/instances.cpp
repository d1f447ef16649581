#include "instances.hpp"

#include <algorithm>
#include <limits>

#include "borelkit/error.hpp"

namespace borelkit::cli {

int InstanceRng::uniform(int lo, int hi) {
  if (hi < lo) throw InputError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

SizeLimits size_limits(const std::string& size_name) {
  if (size_name == "small") return {5, 3, 2, 2};
  if (size_name == "medium") return {6, 4, 3, 3};
  throw InputError("unknown size '" + size_name + "' (expected small or medium)");
}

Monomial random_bounded_monomial(InstanceRng& rng, int n, int d, int k) {
  if (static_cast<long long>(n) * k < d) throw InputError("no k-bounded monomial of that degree");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int placed = 0; placed < d;) {
    const int i = rng.uniform(0, n - 1);
    if (e[static_cast<std::size_t>(i)] < k) {
      ++e[static_cast<std::size_t>(i)];
      ++placed;
    }
  }
  return Monomial(std::move(e));
}

BorelInstance random_kborel(InstanceRng& rng, const SizeLimits& lim) {
  BorelInstance inst;
  inst.n = rng.uniform(2, lim.max_n);
  inst.k = rng.uniform(1, lim.max_k);
  const int m = rng.uniform(1, lim.max_m);
  const int top = std::min(lim.max_d, inst.n * inst.k);
  // Half of the instances share one degree; the rest mix degrees.
  // Degree 1 is drawn rarely: a linear generator absorbs most others.
  auto degree = [&] { return top == 1 || rng.uniform(0, 7) == 0 ? 1 : rng.uniform(2, top); };
  const bool shared = rng.uniform(0, 1) == 0;
  const int common = degree();
  for (int g = 0; g < m; ++g) {
    const int d = shared ? common : degree();
    inst.borel_generators.push_back(random_bounded_monomial(rng, inst.n, d, inst.k));
  }
  inst.ideal = borel_closure_k(inst.borel_generators, inst.k, inst.n);
  return inst;
}

BorelInstance random_squarefree_borel(InstanceRng& rng, int max_n, int max_d, int max_m) {
  BorelInstance inst;
  inst.n = rng.uniform(2, max_n);
  inst.k = 1;
  const int d = rng.uniform(1, std::min(max_d, inst.n));
  const int m = rng.uniform(1, max_m);
  for (int g = 0; g < m; ++g) {
    inst.borel_generators.push_back(random_bounded_monomial(rng, inst.n, d, 1));
  }
  inst.ideal = borel_closure_k(inst.borel_generators, 1, inst.n);
  return inst;
}

Monomial random_squarefree_principal(InstanceRng& rng, int max_n) {
  const int n = rng.uniform(2, max_n);
  const int d = rng.uniform(1, n);
  return random_bounded_monomial(rng, n, d, 1);
}

std::vector<Monomial> random_linear_extension(InstanceRng& rng, const MonomialIdeal& I) {
  std::vector<Monomial> remaining = I.generators();
  std::vector<Monomial> order;
  while (!remaining.empty()) {
    std::vector<std::size_t> minimal;
    for (std::size_t a = 0; a < remaining.size(); ++a) {
      const bool has_pred = std::any_of(remaining.begin(), remaining.end(), [&](const Monomial& w) {
        return w != remaining[a] && w.degree() == remaining[a].degree() && precedes(w, remaining[a]);
      });
      if (!has_pred) minimal.push_back(a);
    }
    const std::size_t pick = minimal[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(minimal.size()) - 1))];
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return order;
}

}  // namespace borelkit::cli
