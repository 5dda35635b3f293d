#ifndef APERYKIT_STAIRCASE_HPP
#define APERYKIT_STAIRCASE_HPP

#include <cstdint>
#include <vector>

#include "aperykit/binomial_groebner.hpp"

namespace aperykit::detail {

/// Smallest u with x_var^u a corner of the basis, or -1 if there is none.
std::int64_t pure_power_bound(const GroebnerBasis& basis, std::size_t var);

/// Every point outside E(I) whose support lies in `free_vars`. Throws
/// InvariantViolation if some free variable has no pure-power corner.
std::vector<ExponentVector> enumerate_face(const GroebnerBasis& basis,
                                           const std::vector<std::size_t>& free_vars);

}  // namespace aperykit::detail

#endif  // APERYKIT_STAIRCASE_HPP
