#ifndef APERYKIT_BINOMIAL_GROEBNER_HPP
#define APERYKIT_BINOMIAL_GROEBNER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "aperykit/exponent.hpp"
#include "aperykit/monomial_order.hpp"
#include "aperykit/semigroup.hpp"

namespace aperykit {

/// x^lead - x^trail with lead > trail under the ambient ordering.
struct Binomial {
  ExponentVector lead;
  ExponentVector trail;

  /// Orients {u, v} under `order`. Throws InvalidArgument if u == v.
  static Binomial oriented(ExponentVector u, ExponentVector v,
                           const OrderSpec& order);

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

enum class PairSelection {
  /// Smallest lcm under the ordering first (the "normal" strategy).
  Normal,
  /// First in, first out.
  Fifo,
  /// Smallest degree of the lcm under a positive grading making every
  /// generator homogeneous, ties by the ordering. The grading comes from
  /// BuchbergerOptions::grading or is inferred; without one this falls back
  /// to Normal.
  Graded,
};

struct BuchbergerOptions {
  PairSelection selection = PairSelection::Graded;
  /// Skip pairs whose leading terms are coprime (Buchberger's first
  /// criterion).
  bool coprime_criterion = true;
  /// Gebauer-Moller update: drop pairs made redundant by a chain through
  /// another element, and retire elements whose lead became divisible by a
  /// newer lead.
  bool chain_criterion = true;
  /// Positive weights, one per variable. Empty means infer.
  std::vector<std::int64_t> grading;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

/// A reduced Groebner basis of a pure-difference binomial ideal.
///
/// Elements are kept sorted by leading term (ascending under the ordering)
/// so two reduced bases of the same ideal compare equal element-wise.
class GroebnerBasis {
 public:
  GroebnerBasis(OrderSpec order, std::vector<Binomial> elements);

  const OrderSpec& order() const { return order_; }
  std::span<const Binomial> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t num_vars() const { return order_.num_vars(); }

  /// Leading exponents q_i; E(I) is the union of the orthants q_i + N^m.
  const std::vector<ExponentVector>& corners() const { return corners_; }

  /// Index of the first element whose lead divides v, or size().
  std::size_t find_divisor(const ExponentVector& v) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  OrderSpec order_;
  std::vector<Binomial> elements_;
  std::vector<ExponentVector> corners_;
  std::vector<std::uint64_t> support_;
};

/// {y_i - x^{a_i}} on variables (x, y_1, ..., y_k), oriented by `order`.
std::vector<Binomial> ideal_generators(const NumericalSemigroup& s,
                                       const OrderSpec& order);

/// A positive integer grading for which every binomial is homogeneous,
/// found by propagating weights through the generators (a free variable
/// gets weight 1). Empty if the propagation fails.
std::vector<std::int64_t> infer_grading(std::span<const Binomial> gens, std::size_t num_vars);

/// Reduced Groebner basis of the ideal generated by `gens`. Every
/// intermediate S-polynomial is again a binomial; pairs reducing to zero are
/// dropped. Deterministic for given inputs and options.
GroebnerBasis buchberger(std::vector<Binomial> gens, const OrderSpec& order,
                         const BuchbergerOptions& options = {},
                         BuchbergerStats* stats = nullptr);

/// Normal form of the monomial x^v: repeatedly replace v by v - lead + trail
/// while some lead divides it.
ExponentVector normal_form(ExponentVector v, std::span<const Binomial> basis);
ExponentVector normal_form(ExponentVector v, const GroebnerBasis& basis);

/// True iff v lies outside E(I), i.e. no corner divides it.
bool in_staircase_complement(const ExponentVector& v, const GroebnerBasis& basis);

/// sigma_0 + sum sigma_i a_i for v = (sigma_0, ..., sigma_k).
std::int64_t phi_degree(const ExponentVector& v, std::span<const std::int64_t> weights);

/// Z^d degree of v = (x_1..x_d, y_1..y_k): x-part plus sum y_j a_j.
std::vector<std::int64_t> phi_degree(const ExponentVector& v, std::size_t dim,
                                     std::span<const std::vector<std::int64_t>> generators);

}  // namespace aperykit

#endif  // APERYKIT_BINOMIAL_GROEBNER_HPP
