#ifndef APERYKIT_AFFINE_HPP
#define APERYKIT_AFFINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "aperykit/binomial_groebner.hpp"
#include "aperykit/monomial_order.hpp"

namespace aperykit {

using Point = std::vector<std::int64_t>;

/// A submonoid of Z^d_{>=0} generated by k distinct nonzero points.
/// Nonnegative coordinates make it pointed automatically.
class AffineMonoid {
 public:
  AffineMonoid(std::size_t dim, std::vector<Point> generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return generators_.size(); }
  std::span<const Point> generators() const { return generators_; }
  const Point& generator(std::size_t i) const { return generators_.at(i); }

 private:
  std::size_t dim_;
  std::vector<Point> generators_;
};

/// u * a_j = sum_i v_i * lambda_i with u >= 1 and v >= 0, lambda_i the
/// Lambda generators in the order of LambdaChoice::indices.
struct ConeCertificate {
  std::size_t generator;
  std::int64_t u;
  std::vector<std::int64_t> v;
};

struct LambdaChoice {
  /// Lambda as 0-based generator positions, ascending.
  std::vector<std::size_t> indices;
  /// Generator positions in variable order: the others first, Lambda last.
  std::vector<std::size_t> layout;
  std::vector<ConeCertificate> certificates;
};

/// Certifies pos(S) = pos(Lambda): every generator outside Lambda is a
/// nonnegative rational combination of Lambda, found by exact
/// Fourier-Motzkin elimination. Throws InvalidLambda for an empty or
/// malformed index set and ConeMismatch naming the first generator outside
/// the cone.
LambdaChoice validate_lambda(const AffineMonoid& m, std::span<const std::size_t> lambda);

struct AffineApery {
  LambdaChoice lambda;
  OrderSpec order;
  GroebnerBasis basis;
  /// Ap(S, Lambda), sorted.
  std::vector<Point> elements;
  /// y-exponents of each element's normal form, indexed by original
  /// generator position (Lambda entries are zero).
  std::map<Point, std::vector<std::int64_t>> representations;
};

/// Ap(S, Lambda) as the standard monomials of the {x = z = 0} face under
/// the block ordering. `x_order` defaults to lex on the d x-variables.
AffineApery apery_affine(const AffineMonoid& m, std::span<const std::size_t> lambda,
                         const std::optional<OrderSpec>& x_order = std::nullopt);

/// All Z>=0-combinations of the generators with coordinate sum <= bound.
std::set<Point> affine_members_bruteforce(const AffineMonoid& m, std::int64_t bound);

/// {a in S | a - b not in S for all b in Lambda}, restricted to coordinate
/// sum <= bound, from the breadth-first member set.
std::set<Point> affine_apery_bruteforce(const AffineMonoid& m,
                                        std::span<const std::size_t> lambda,
                                        std::int64_t bound);

}  // namespace aperykit

#endif  // APERYKIT_AFFINE_HPP
