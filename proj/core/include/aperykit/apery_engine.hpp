#ifndef APERYKIT_APERY_ENGINE_HPP
#define APERYKIT_APERY_ENGINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aperykit/binomial_groebner.hpp"
#include "aperykit/monomial_order.hpp"
#include "aperykit/semigroup.hpp"

namespace aperykit {

enum class Membership { InS, Gap };

struct Classification {
  Membership kind;
  /// exp(N_B(x^l)); its x-coordinate is positive exactly for gaps.
  ExponentVector exponent;
};

/// Gap/member test through the normal form of x^l. Throws
/// OrderNotElimination unless B's ordering eliminates x.
Classification classify(const NumericalSemigroup& s, std::int64_t l,
                        const GroebnerBasis& basis);

/// All gaps, read off normal forms for l = 1 .. f(S). f(S) comes from the
/// Delta-set of the multiplicity.
std::vector<std::int64_t> gaps_via_groebner(const NumericalSemigroup& s,
                                            const GroebnerBasis& basis);

struct AperyReport {
  std::int64_t wrt = 0;
  std::size_t wrt_index = 0;
  std::vector<std::int64_t> elements;
  /// Normal-form exponent (x, y_1, ..., y_k) of each element; x- and
  /// y_j-coordinates are zero.
  std::map<std::int64_t, ExponentVector> representations;
  std::string order_used;
};

enum class DeltaStrategy {
  /// Walk l = 0, 1, 2, ... with N(x^{l+1}) = N(x * N(x^l)) until every
  /// residue class mod a_j has been hit.
  Scan,
  /// Enumerate the standard monomials in the face {x = y_j = 0}, bounded by
  /// the pure powers of each y_i among the corners.
  Staircase,
};

struct AperyComputation {
  GroebnerBasis basis;
  AperyReport report;
};

/// Delta_{<_j}(S, a_j) under the Apery ordering with the given step-3
/// choice, together with the basis it was read from.
AperyComputation compute_apery(const NumericalSemigroup& s, std::size_t j,
                               const InnerOrder& inner,
                               DeltaStrategy strategy = DeltaStrategy::Scan);

AperyReport apery_delta(const NumericalSemigroup& s, std::size_t j,
                        const InnerOrder& inner,
                        DeltaStrategy strategy = DeltaStrategy::Scan);
AperyReport apery_delta(const NumericalSemigroup& s, std::size_t j);

/// Extremal elements of Ap(S, a_k) for the ordering of `basis`: those N whose
/// representation gamma has gamma + e_i in E(I_S) for every i = 1..k-1.
/// Only corner divisibility is used.
std::vector<std::int64_t> extremal_set(const NumericalSemigroup& s,
                                       const AperyReport& report,
                                       const GroebnerBasis& basis);

/// The step-3 ordering that makes a larger y_i exponent lose first:
/// revlex over (y_1, .., y_{i-1}, y_{i+1}, .., y_{k-1}, y_i). `i` is
/// 0-based and must be < k - 1.
InnerOrder type_rotation(std::size_t k, std::size_t i);

struct TypeReport {
  std::vector<std::int64_t> type_set;
  std::vector<std::int64_t> pf;
  std::size_t type = 0;
  bool gorenstein = false;
  /// One entry per ordering used, in the order they were intersected.
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> extremal_sets;
};

struct TypeSetOptions {
  /// Run the k-1 per-ordering pipelines on separate threads.
  bool parallel = false;
  /// Further step-3 orderings to intersect with (never fewer than the k-1
  /// rotations).
  std::vector<InnerOrder> extra_orders;
};

/// T(S) as the intersection of the extremal sets of the k-1 rotations.
/// Requires k >= 2.
TypeReport type_set(const NumericalSemigroup& s, const TypeSetOptions& options = {});

}  // namespace aperykit

#endif  // APERYKIT_APERY_ENGINE_HPP
