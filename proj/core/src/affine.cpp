#include "aperykit/affine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "aperykit/errors.hpp"
#include "staircase.hpp"

namespace aperykit {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::string format_point(const Point& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ')';
  return out.str();
}

// coeffs . v <= rhs, kept primitive so duplicates can be dropped.
struct Inequality {
  std::vector<cpp_int> coeffs;
  cpp_int rhs;
  friend bool operator<(const Inequality& a, const Inequality& b) {
    return std::tie(a.coeffs, a.rhs) < std::tie(b.coeffs, b.rhs);
  }
};

void make_primitive(Inequality& q) {
  cpp_int g = boost::multiprecision::abs(q.rhs);
  for (const auto& c : q.coeffs) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    for (auto& c : q.coeffs) c /= g;
    q.rhs /= g;
  }
}

using System = std::set<Inequality>;

// Eliminates variable `var` from `sys` (Fourier-Motzkin).
System eliminate(const System& sys, std::size_t var) {
  std::vector<const Inequality*> upper, lower;
  System out;
  for (const auto& q : sys) {
    if (q.coeffs[var] > 0) {
      upper.push_back(&q);
    } else if (q.coeffs[var] < 0) {
      lower.push_back(&q);
    } else {
      out.insert(q);
    }
  }
  for (const auto* p : upper) {
    for (const auto* n : lower) {
      const cpp_int scale_p = -n->coeffs[var];
      const cpp_int scale_n = p->coeffs[var];
      Inequality c;
      c.coeffs.resize(p->coeffs.size());
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        c.coeffs[i] = scale_p * p->coeffs[i] + scale_n * n->coeffs[i];
      }
      c.rhs = scale_p * p->rhs + scale_n * n->rhs;
      make_primitive(c);
      out.insert(std::move(c));
    }
  }
  return out;
}

// Some v >= 0 with sum_i v_i lambda_i = target, or nullopt.
std::optional<std::vector<cpp_rational>> cone_solve(const std::vector<Point>& lambda,
                                                    const Point& target) {
  const std::size_t n = lambda.size();
  const std::size_t d = target.size();
  System sys;
  for (std::size_t r = 0; r < d; ++r) {
    Inequality le, ge;
    le.coeffs.resize(n);
    ge.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      le.coeffs[i] = lambda[i][r];
      ge.coeffs[i] = -lambda[i][r];
    }
    le.rhs = target[r];
    ge.rhs = -target[r];
    make_primitive(le);
    make_primitive(ge);
    sys.insert(std::move(le));
    sys.insert(std::move(ge));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Inequality nonneg;
    nonneg.coeffs.assign(n, 0);
    nonneg.coeffs[i] = -1;
    nonneg.rhs = 0;
    sys.insert(std::move(nonneg));
  }

  // levels[s] only involves variables 0..s-1.
  std::vector<System> levels(n + 1);
  levels[n] = std::move(sys);
  for (std::size_t s = n; s-- > 0;) levels[s] = eliminate(levels[s + 1], s);
  for (const auto& q : levels[0]) {
    if (q.rhs < 0) return std::nullopt;
  }

  std::vector<cpp_rational> v(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::optional<cpp_rational> lo;
    for (const auto& q : levels[t + 1]) {
      if (q.coeffs[t] >= 0) continue;
      cpp_rational rest = q.rhs;
      for (std::size_t i = 0; i < t; ++i) rest -= cpp_rational(q.coeffs[i]) * v[i];
      const cpp_rational bound = rest / cpp_rational(q.coeffs[t]);
      if (!lo || bound > *lo) lo = bound;
    }
    // -v_t <= 0 is always present, so lo exists; any value up to the upper
    // bounds works and the smallest keeps certificates small.
    v[t] = lo.value_or(0);
  }
  return v;
}

std::int64_t to_int64(const cpp_int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("cone certificate does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

ConeCertificate certify(const AffineMonoid& m, const std::vector<std::size_t>& lambda,
                        std::size_t j) {
  std::vector<Point> rays;
  for (std::size_t i : lambda) rays.push_back(m.generator(i));
  const auto v = cone_solve(rays, m.generator(j));
  if (!v) {
    throw ConeMismatch(j, "generator " + std::to_string(j + 1) + " " +
                              format_point(m.generator(j)) + " is outside pos(Lambda)");
  }
  cpp_int u = 1;
  for (const auto& q : *v) {
    const cpp_int den = boost::multiprecision::denominator(q);
    u = u / boost::multiprecision::gcd(u, den) * den;
  }
  ConeCertificate cert{j, to_int64(u), {}};
  for (const auto& q : *v) {
    const cpp_rational scaled = q * cpp_rational(u);
    cert.v.push_back(to_int64(boost::multiprecision::numerator(scaled)));
  }
  for (std::size_t c = 0; c < m.dim(); ++c) {
    cpp_int lhs = cpp_int(cert.u) * m.generator(j)[c];
    cpp_int rhs = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) rhs += cpp_int(cert.v[i]) * rays[i][c];
    if (lhs != rhs) throw InvariantViolation("cone certificate does not verify");
  }
  return cert;
}

std::vector<std::size_t> normalize_lambda(const AffineMonoid& m,
                                          std::span<const std::size_t> lambda) {
  if (lambda.empty()) throw InvalidLambda("Lambda must not be empty");
  std::vector<std::size_t> idx(lambda.begin(), lambda.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw InvalidLambda("Lambda lists a generator twice");
  }
  if (idx.back() >= m.rank()) {
    throw InvalidLambda("Lambda index " + std::to_string(idx.back() + 1) +
                        " out of range 1.." + std::to_string(m.rank()));
  }
  return idx;
}

std::string lambda_label(const std::vector<std::size_t>& idx) {
  std::string s = "block:lambda=";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    s += (i ? "," : "") + std::to_string(idx[i] + 1);
  }
  return s;
}

}  // namespace

AffineMonoid::AffineMonoid(std::size_t dim, std::vector<Point> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ == 0) throw InvalidArgument("dimension must be at least 1");
  if (generators_.empty()) throw InvalidArgument("an affine monoid needs generators");
  for (const auto& g : generators_) {
    if (g.size() != dim_) {
      throw LengthMismatch("generator " + format_point(g) + " is not in Z^" +
                           std::to_string(dim_));
    }
    if (std::any_of(g.begin(), g.end(), [](std::int64_t c) { return c < 0; })) {
      throw InvalidArgument("generator " + format_point(g) +
                            " has a negative coordinate");
    }
    if (std::all_of(g.begin(), g.end(), [](std::int64_t c) { return c == 0; })) {
      throw InvalidArgument("the zero vector cannot be a generator");
    }
  }
  std::vector<Point> sorted = generators_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("generators must be distinct");
  }
}

LambdaChoice validate_lambda(const AffineMonoid& m, std::span<const std::size_t> lambda) {
  LambdaChoice choice;
  choice.indices = normalize_lambda(m, lambda);
  for (std::size_t j = 0; j < m.rank(); ++j) {
    if (!std::binary_search(choice.indices.begin(), choice.indices.end(), j)) {
      choice.layout.push_back(j);
      choice.certificates.push_back(certify(m, choice.indices, j));
    }
  }
  choice.layout.insert(choice.layout.end(), choice.indices.begin(), choice.indices.end());
  return choice;
}

AffineApery apery_affine(const AffineMonoid& m, std::span<const std::size_t> lambda,
                         const std::optional<OrderSpec>& x_order) {
  LambdaChoice choice = validate_lambda(m, lambda);
  const std::size_t d = m.dim();
  const std::size_t k = m.rank();
  const std::size_t others = k - choice.indices.size();

  std::vector<Point> ordered;
  for (std::size_t p : choice.layout) ordered.push_back(m.generator(p));

  std::string label = lambda_label(choice.indices);
  if (x_order) label += ",x=" + x_order->label();
  OrderSpec order =
      block_lambda_order(d, ordered, choice.indices.size(), x_order).with_label(label);

  std::vector<Binomial> gens;
  for (std::size_t p = 0; p < k; ++p) {
    ExponentVector y = ExponentVector::unit(d + k, d + p);
    ExponentVector xa(d + k);
    for (std::size_t c = 0; c < d; ++c) xa[c] = ordered[p][c];
    gens.push_back(Binomial::oriented(std::move(y), std::move(xa), order));
  }
  GroebnerBasis basis = buchberger(std::move(gens), order);

  // y_j^{u_j} - z^{v_j} lies in I_S with y_j^{u_j} leading, so some pure
  // power of y_j at most u_j is a corner.
  std::vector<std::size_t> free_vars;
  for (std::size_t p = 0; p < others; ++p) {
    const std::int64_t bound = detail::pure_power_bound(basis, d + p);
    if (bound < 0 || bound > choice.certificates[p].u) {
      throw InvariantViolation("missing pure-power basis element for generator " +
                               std::to_string(choice.layout[p] + 1));
    }
    free_vars.push_back(d + p);
  }

  AffineApery out{std::move(choice), order, basis, {}, {}};
  for (const auto& pt : detail::enumerate_face(basis, free_vars)) {
    Point a = phi_degree(pt, d, ordered);
    std::vector<std::int64_t> rep(k, 0);
    for (std::size_t p = 0; p < k; ++p) rep[out.lambda.layout[p]] = pt[d + p];
    if (!out.representations.emplace(a, std::move(rep)).second) {
      throw InvariantViolation("two standard monomials of degree " + format_point(a));
    }
    out.elements.push_back(std::move(a));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::set<Point> affine_members_bruteforce(const AffineMonoid& m, std::int64_t bound) {
  if (bound < 0) throw InvalidArgument("bound must be nonnegative");
  auto weight = [](const Point& p) {
    return std::accumulate(p.begin(), p.end(), std::int64_t{0});
  };
  std::set<Point> seen{Point(m.dim(), 0)};
  std::deque<Point> frontier{Point(m.dim(), 0)};
  while (!frontier.empty()) {
    const Point p = frontier.front();
    frontier.pop_front();
    for (const auto& g : m.generators()) {
      Point q = p;
      for (std::size_t c = 0; c < q.size(); ++c) q[c] += g[c];
      if (weight(q) <= bound && seen.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  return seen;
}

std::set<Point> affine_apery_bruteforce(const AffineMonoid& m,
                                        std::span<const std::size_t> lambda,
                                        std::int64_t bound) {
  const auto idx = normalize_lambda(m, lambda);
  const auto members = affine_members_bruteforce(m, bound);
  std::set<Point> out;
  for (const auto& a : members) {
    bool apery = true;
    for (std::size_t i : idx) {
      Point diff = a;
      bool nonneg = true;
      for (std::size_t c = 0; c < diff.size(); ++c) {
        diff[c] -= m.generator(i)[c];
        if (diff[c] < 0) nonneg = false;
      }
      // diff has smaller coordinate sum than a, so it is within the bound.
      if (nonneg && members.count(diff)) {
        apery = false;
        break;
      }
    }
    if (apery) out.insert(a);
  }
  return out;
}

}  // namespace aperykit
