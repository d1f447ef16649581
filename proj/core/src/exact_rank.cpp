#include "borelkit/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

namespace borelkit {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Checked {
  static bool mul_sub_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                          std::int64_t div, std::int64_t& out) {
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(a, b, &ab)) return false;
    if (__builtin_mul_overflow(c, d, &cd)) return false;
    if (__builtin_sub_overflow(ab, cd, &diff)) return false;
    out = diff / div;
    return true;
  }
};

// Returns nullopt on overflow.
std::optional<int> bareiss_rank_i64(std::vector<std::int64_t> a, int rows, int cols) {
  auto at = [&](int r, int c) -> std::int64_t& {
    return a[static_cast<std::size_t>(r) * cols + c];
  };
  int rank = 0;
  std::int64_t prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    const std::int64_t p = at(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      const std::int64_t f = at(r, c);
      for (int k = c + 1; k < cols; ++k) {
        std::int64_t v = 0;
        if (!Checked::mul_sub_div(p, at(r, k), f, at(rank, k), prev, v)) return std::nullopt;
        at(r, k) = v;
      }
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int bareiss_rank_big(const IntMatrix& m) {
  const int rows = m.rows;
  const int cols = m.cols;
  std::vector<BigInt> a(m.data.begin(), m.data.end());
  auto at = [&](int r, int c) -> BigInt& { return a[static_cast<std::size_t>(r) * cols + c]; };
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    const BigInt p = at(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      const BigInt f = at(r, c);
      for (int k = c + 1; k < cols; ++k) at(r, k) = (p * at(r, k) - f * at(rank, k)) / prev;
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (auto r = bareiss_rank_i64(m.data, m.rows, m.cols)) return *r;
  return bareiss_rank_big(m);
}

}  // namespace borelkit
