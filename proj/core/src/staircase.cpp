#include "staircase.hpp"

#include <string>
#include <utility>

#include "aperykit/errors.hpp"

namespace aperykit::detail {

std::int64_t pure_power_bound(const GroebnerBasis& basis, std::size_t var) {
  std::int64_t best = -1;
  for (const auto& q : basis.corners()) {
    bool pure = q[var] > 0;
    for (std::size_t c = 0; pure && c < q.size(); ++c) {
      if (c != var && q[c] != 0) pure = false;
    }
    if (pure && (best < 0 || q[var] < best)) best = q[var];
  }
  return best;
}

// Coordinates are raised in index order so each point is visited once. The
// complement of E is closed under division, so pruning on E loses nothing.
std::vector<ExponentVector> enumerate_face(const GroebnerBasis& basis,
                                           const std::vector<std::size_t>& free_vars) {
  for (std::size_t v : free_vars) {
    if (pure_power_bound(basis, v) < 0) {
      throw InvariantViolation("no pure power of variable " + std::to_string(v) +
                               " among the corners; the face is not finite");
    }
  }
  std::vector<ExponentVector> out;
  std::vector<std::pair<ExponentVector, std::size_t>> stack;
  stack.emplace_back(ExponentVector(basis.num_vars()), 0);
  while (!stack.empty()) {
    auto [point, from] = std::move(stack.back());
    stack.pop_back();
    for (std::size_t f = from; f < free_vars.size(); ++f) {
      ExponentVector next = point;
      next[free_vars[f]] += 1;
      if (in_staircase_complement(next, basis)) stack.emplace_back(std::move(next), f);
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace aperykit::detail
