#include "borelkit/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "borelkit/error.hpp"

namespace borelkit {

namespace {

void require_same_n(const Monomial& a, const Monomial& b, const char* what) {
  if (a.n() != b.n()) {
    throw InputError(std::string(what) + ": ambient variable counts differ (" +
                     std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  }
}

void require_squarefree_nonunit(const Monomial& u, const char* what) {
  if (u.is_one()) throw InputError(std::string(what) + ": unit monomial has no support");
  if (!u.is_squarefree()) {
    throw InputError(std::string(what) + ": monomial " + to_string(u) + " is not squarefree");
  }
}

}  // namespace

Monomial::Monomial(int n) {
  if (n < 0) throw InputError("negative variable count");
  exps_.assign(static_cast<std::size_t>(n), 0);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int a : exps_) {
    if (a < 0) throw InputError("negative exponent");
    degree_ += a;
  }
}

Monomial Monomial::from_indices(int n, const std::vector<VarIndex>& indices) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (VarIndex i : indices) {
    if (i < 1 || i > n) {
      throw InputError("variable index x" + std::to_string(i) + " outside [1, " +
                       std::to_string(n) + "]");
    }
    ++e[static_cast<std::size_t>(i - 1)];
  }
  return Monomial(std::move(e));
}

int Monomial::exponent(VarIndex i) const {
  if (i < 1 || i > n()) return 0;
  return exps_[static_cast<std::size_t>(i - 1)];
}

std::vector<VarIndex> Monomial::support() const {
  std::vector<VarIndex> s;
  for (int i = 0; i < n(); ++i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i + 1);
  }
  return s;
}

VarIndex Monomial::min_index() const {
  for (int i = 0; i < n(); ++i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) return i + 1;
  }
  throw InputError("min(u) undefined for the unit monomial");
}

VarIndex Monomial::max_index() const {
  for (int i = n() - 1; i >= 0; --i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) return i + 1;
  }
  throw InputError("max(u) undefined for the unit monomial");
}

int Monomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int a) { return a <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_n(*this, other, "divides");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_n(*this, other, "multiply");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  require_same_n(*this, other, "divide");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= other.exps_[i];
    if (e[i] < 0) {
      throw InputError(to_string(other) + " does not divide " + to_string(*this));
    }
  }
  return Monomial(std::move(e));
}

Monomial Monomial::times_var(VarIndex i) const {
  if (i < 1 || i > n()) throw InputError("variable index out of range");
  Monomial r = *this;
  ++r.exps_[static_cast<std::size_t>(i - 1)];
  ++r.degree_;
  return r;
}

Monomial Monomial::divided_by_var(VarIndex i) const {
  if (exponent(i) == 0) {
    throw InputError("x" + std::to_string(i) + " does not divide " + to_string(*this));
  }
  Monomial r = *this;
  --r.exps_[static_cast<std::size_t>(i - 1)];
  --r.degree_;
  return r;
}

std::vector<VarIndex> Monomial::sorted_indices() const {
  std::vector<VarIndex> idx;
  idx.reserve(static_cast<std::size_t>(degree_));
  for (int i = 0; i < n(); ++i) {
    for (int c = 0; c < exps_[static_cast<std::size_t>(i)]; ++c) idx.push_back(i + 1);
  }
  return idx;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "lcm");
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "gcd");
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

bool k_bounded(const Monomial& u, int k) { return u.max_exponent() <= k; }

bool precedes(const Monomial& v, const Monomial& u) {
  require_same_n(v, u, "precedes");
  if (v.degree() != u.degree()) throw InputError("precedes: incomparable degrees");
  const auto vi = v.sorted_indices();
  const auto ui = u.sorted_indices();
  for (std::size_t l = 0; l < vi.size(); ++l) {
    if (vi[l] > ui[l]) return false;
  }
  return true;
}

bool is_t_spread(const Monomial& u, int t) {
  const auto idx = u.sorted_indices();
  for (std::size_t l = 1; l < idx.size(); ++l) {
    if (idx[l] - idx[l - 1] < t) return false;
  }
  return true;
}

std::vector<VarIndex> BlockDecomposition::elements(std::size_t block) const {
  const Block& b = blocks.at(block);
  std::vector<VarIndex> out;
  for (VarIndex i = b.first; i <= b.last; i += stride) out.push_back(i);
  return out;
}

std::size_t BlockDecomposition::size(std::size_t block) const {
  const Block& b = blocks.at(block);
  return static_cast<std::size_t>((b.last - b.first) / stride + 1);
}

BlockDecomposition block_decomposition(const Monomial& u, int stride) {
  if (stride < 1) throw InputError("block stride must be positive");
  require_squarefree_nonunit(u, "block_decomposition");
  if (stride > 1 && !is_t_spread(u, stride)) {
    throw InputError("block_decomposition: " + to_string(u) + " is not " +
                     std::to_string(stride) + "-spread");
  }
  BlockDecomposition bd;
  bd.stride = stride;
  for (VarIndex i : u.support()) {
    if (!bd.blocks.empty() && i - bd.blocks.back().last == stride) {
      bd.blocks.back().last = i;
    } else {
      bd.blocks.push_back(Block{i, i});
    }
  }
  return bd;
}

std::vector<VarIndex> gaps_squarefree(const Monomial& u) {
  require_squarefree_nonunit(u, "gaps");
  std::vector<VarIndex> g;
  for (VarIndex i = 1; i < u.max_index(); ++i) {
    if (u.exponent(i) == 0) g.push_back(i);
  }
  return g;
}

std::vector<Interval> gap_intervals_t(const Monomial& u, int t) {
  if (t < 1) throw InputError("spread t must be positive");
  const BlockDecomposition bd = block_decomposition(u, t);
  std::vector<Interval> out;
  VarIndex prev_max = -t + 1;
  for (const Block& b : bd.blocks) {
    Interval L{prev_max + t, b.first - 1};
    if (L.lo <= L.hi) out.push_back(L);
    prev_max = b.last;
  }
  return out;
}

std::vector<VarIndex> gap_set_t(const Monomial& u, int t) {
  std::vector<VarIndex> s;
  for (const Interval& L : gap_intervals_t(u, t)) {
    for (VarIndex i = L.lo; i <= L.hi; ++i) s.push_back(i);
  }
  return s;
}

std::vector<std::pair<VarIndex, VarIndex>> irregular_pairs(const Monomial& v, int t) {
  const auto idx = v.sorted_indices();
  std::vector<std::pair<VarIndex, VarIndex>> out;
  for (std::size_t l = 1; l < idx.size(); ++l) {
    if (idx[l] - idx[l - 1] < t) out.emplace_back(idx[l - 1], idx[l]);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, int n) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s, std::string_view ctx) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw InputError("malformed monomial '" + std::string(text) + "' near '" +
                       std::string(ctx) + "'");
    }
    return value;
  };

  std::vector<int> e(static_cast<std::size_t>(n < 0 ? 0 : n), 0);
  if (n < 1) throw InputError("variable count must be positive");
  std::string_view body = trim(text);
  if (body == "1") return Monomial(std::move(e));
  if (body.empty()) throw InputError("empty monomial");

  while (!body.empty()) {
    const auto star = body.find('*');
    std::string_view factor = trim(body.substr(0, star));
    body = star == std::string_view::npos ? std::string_view{} : body.substr(star + 1);
    if (star != std::string_view::npos && trim(body).empty()) {
      throw InputError("malformed monomial '" + std::string(text) + "': trailing '*'");
    }
    if (factor.size() < 2 || factor.front() != 'x') {
      throw InputError("malformed monomial '" + std::string(text) + "' near '" +
                       std::string(factor) + "'");
    }
    factor.remove_prefix(1);
    int power = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      power = parse_int(factor.substr(caret + 1), factor);
      factor = factor.substr(0, caret);
    }
    const int var = parse_int(factor, factor);
    if (var < 1 || var > n) {
      throw InputError("variable x" + std::to_string(var) + " outside [1, " +
                       std::to_string(n) + "] in '" + std::string(text) + "'");
    }
    if (power < 0) throw InputError("negative exponent in '" + std::string(text) + "'");
    e[static_cast<std::size_t>(var - 1)] += power;
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& u) {
  if (u.is_one()) return "1";
  std::string s;
  for (VarIndex i = 1; i <= u.n(); ++i) {
    const int a = u.exponent(i);
    if (a == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i);
    if (a > 1) {
      s += '^';
      s += std::to_string(a);
    }
  }
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
  std::size_t h = static_cast<std::size_t>(u.n());
  for (int a : u.exponents()) h = h * 1000003u ^ static_cast<std::size_t>(a);
  return h;
}

}  // namespace borelkit
