#ifndef APERYKIT_CORPUS_HPP
#define APERYKIT_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "aperykit/semigroup.hpp"

namespace aperykit {

/// A random numerical semigroup with exactly `k` minimal generators in
/// [2, max_generator] (gcd 1). Rejection sampling; deterministic for a
/// given engine state.
NumericalSemigroup random_semigroup(std::mt19937_64& rng, std::size_t k,
                                    std::int64_t max_generator);

/// `count` semigroups with k drawn uniformly from [min_k, max_k].
std::vector<NumericalSemigroup> random_corpus(std::uint64_t seed, std::size_t count,
                                              std::size_t min_k, std::size_t max_k,
                                              std::int64_t max_generator);

}  // namespace aperykit

#endif  // APERYKIT_CORPUS_HPP
