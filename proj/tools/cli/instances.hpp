#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "borelkit/ideal.hpp"
#include "borelkit/monomial.hpp"

namespace borelkit::cli {

// Seeded source for instance generation. mt19937_64's output sequence is fixed
// by the standard; bounded draws use rejection sampling so instances replay
// identically across standard libraries.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct SizeLimits {
  int max_n = 5;
  int max_d = 3;
  int max_k = 2;
  int max_m = 2;
};

SizeLimits size_limits(const std::string& size_name);

struct BorelInstance {
  int n = 0;
  int k = 1;
  std::vector<Monomial> borel_generators;
  MonomialIdeal ideal;
};

// Random k-bounded sorted index tuple of degree d in n variables (n * k >= d).
Monomial random_bounded_monomial(InstanceRng& rng, int n, int d, int k);

// k-Borel ideal with up to max_m Borel generators; half the draws use one
// common degree, the rest independent degrees.
BorelInstance random_kborel(InstanceRng& rng, const SizeLimits& lim);

// Equigenerated squarefree Borel ideal: n in [2, max_n], d in [1, min(max_d, n)].
BorelInstance random_squarefree_borel(InstanceRng& rng, int max_n, int max_d, int max_m);

// Squarefree Borel generator u != 1 in n variables, 2 <= n <= max_n.
Monomial random_squarefree_principal(InstanceRng& rng, int max_n);

// Random order of G(I) extending ⪯: at each step pick uniformly among the
// remaining generators with no remaining strict ⪯-predecessor.
std::vector<Monomial> random_linear_extension(InstanceRng& rng, const MonomialIdeal& I);

}  // namespace borelkit::cli
