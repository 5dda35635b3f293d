#ifndef APERYKIT_EXACT_RANK_HPP
#define APERYKIT_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aperykit::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Rows may be ragged
/// only if empty; otherwise all rows must have `cols` entries.
std::size_t exact_rank(BigMatrix m, std::size_t cols);

BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace aperykit::detail

#endif  // APERYKIT_EXACT_RANK_HPP
