#ifndef APERYKIT_MONOMIAL_ORDER_HPP
#define APERYKIT_MONOMIAL_ORDER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aperykit/exponent.hpp"

namespace aperykit {

using WeightRow = std::vector<std::int64_t>;

/// A monomial ordering given by integer weight rows. u and v are compared
/// by row . u against row . v, row by row; the first difference decides.
///
/// Construction checks that the rows define a total order (their rational
/// rank is num_vars) and a monomial ordering (the first nonzero entry of
/// each column is positive, which also makes it a well-ordering).
class OrderSpec {
 public:
  OrderSpec(std::size_t num_vars, std::vector<WeightRow> rows,
            std::string label = "custom");

  /// x_0 > x_1 > ... > x_{m-1}.
  static OrderSpec lex(std::size_t num_vars);
  /// Total degree, ties broken reverse-lexicographically.
  static OrderSpec grevlex(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<WeightRow>& rows() const { return rows_; }
  const std::string& label() const { return label_; }
  OrderSpec with_label(std::string label) const;

  /// Throws LengthMismatch if either vector is not num_vars long.
  std::strong_ordering compare(const ExponentVector& u,
                               const ExponentVector& v) const;

  bool less(const ExponentVector& u, const ExponentVector& v) const {
    return compare(u, v) == std::strong_ordering::less;
  }

 private:
  std::size_t num_vars_;
  std::vector<WeightRow> rows_;
  std::string label_;
};

enum class InnerFlavor { Lex, Revlex };

/// The free tie-breaking ordering of step (3) of an Apery ordering, over the
/// generator indices other than the eliminated one (0-based).
///
/// Lex over (v_1, ..., v_m): a larger exponent on v_1 wins, then v_2, ...
/// Revlex over (v_1, ..., v_m): a larger exponent on v_m loses, then
/// v_{m-1}, ... Revlex is only a monomial ordering because of the grading
/// row placed in front of it.
struct InnerOrder {
  std::vector<std::size_t> sequence;
  InnerFlavor flavor = InnerFlavor::Lex;

  /// Lex on the remaining indices in ascending order.
  static InnerOrder default_for(std::size_t k, std::size_t eliminated);
  friend bool operator==(const InnerOrder&, const InnerOrder&) = default;
};

/// Apery ordering w.r.t. generator `j` (0-based) on variables
/// (x, y_1, ..., y_k):
///   1. exponent of x;
///   2. sum_{i != j} alpha_i a_i;
///   3. the inner ordering on {y_i}_{i != j};
///   4. exponent of y_j.
/// Throws InvalidPermutation if `inner` is not a permutation of the
/// indices other than j.
OrderSpec apery_order(std::span<const std::int64_t> weights, std::size_t j,
                      const InnerOrder& inner);

/// Block ordering for the affine case on (x_1..x_d, y_1..y_k), with the
/// n generators of Lambda in the last n positions. The x-block uses
/// `x_order` (lex if omitted); the y-block is graded by the d coordinate
/// rows (a_{i1} ... a_{ik}) in coordinate order and then broken
/// reverse-lexicographically with y_k smallest, so monomials involving the
/// Lambda variables lose ties.
OrderSpec block_lambda_order(std::size_t dim,
                             std::span<const std::vector<std::int64_t>> generators,
                             std::size_t lambda_size,
                             const std::optional<OrderSpec>& x_order = std::nullopt);

/// True iff every monomial involving one of the first `x_vars` variables
/// exceeds every monomial free of them. Decided from the leading rows: they
/// must be supported on the x-columns with nonnegative entries until every
/// x-column has received positive weight.
bool is_elimination_for_x(const OrderSpec& order, std::size_t x_vars = 1);

}  // namespace aperykit

#endif  // APERYKIT_MONOMIAL_ORDER_HPP
