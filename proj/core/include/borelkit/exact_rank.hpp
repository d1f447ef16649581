#pragma once

#include <cstdint>
#include <vector>

namespace borelkit {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

// Rank over Q by fraction-free (Bareiss) elimination. Runs on 64-bit integers
// and restarts in arbitrary precision if an intermediate would overflow.
int exact_rank(const IntMatrix& m);

}  // namespace borelkit
