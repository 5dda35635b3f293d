#include "exact_rank.hpp"

#include <utility>

namespace aperykit::detail {

std::size_t exact_rank(BigMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const BigInt& p = m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        // Exact by Sylvester's identity.
        m[r][cc] = (p * m[r][cc] - m[r][c] * m[rank][cc]) / prev_pivot;
      }
      m[r][c] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& m) {
  BigMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace aperykit::detail
