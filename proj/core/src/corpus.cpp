#include "aperykit/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "aperykit/errors.hpp"

namespace aperykit {

NumericalSemigroup random_semigroup(std::mt19937_64& rng, std::size_t k,
                                    std::int64_t max_generator) {
  if (k == 0 || (k > 1 && max_generator < 2) ||
      static_cast<std::int64_t>(k) > max_generator - 1) {
    throw InvalidArgument("cannot draw " + std::to_string(k) +
                          " generators from [2, " + std::to_string(max_generator) + "]");
  }
  if (k == 1) return NumericalSemigroup({1});
  std::uniform_int_distribution<std::int64_t> pick(2, max_generator);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<std::int64_t> gens;
    while (gens.size() < k) {
      const std::int64_t g = pick(rng);
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    std::int64_t g = 0;
    for (std::int64_t a : gens) g = std::gcd(g, a);
    if (g != 1) continue;
    try {
      return NumericalSemigroup(std::move(gens));
    } catch (const NonMinimalGenerators&) {
    }
  }
  throw InvalidArgument("no minimal generating set found for k=" + std::to_string(k));
}

std::vector<NumericalSemigroup> random_corpus(std::uint64_t seed, std::size_t count,
                                              std::size_t min_k, std::size_t max_k,
                                              std::int64_t max_generator) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_k(min_k, max_k);
  std::vector<NumericalSemigroup> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_semigroup(rng, pick_k(rng), max_generator));
  }
  return out;
}

}  // namespace aperykit
