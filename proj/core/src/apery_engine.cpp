#include "aperykit/apery_engine.hpp"

#include <algorithm>
#include <future>
#include <iterator>
#include <string>

#include "aperykit/errors.hpp"
#include "staircase.hpp"

namespace aperykit {
namespace {

void require_elimination(const NumericalSemigroup& s, const GroebnerBasis& basis) {
  if (basis.num_vars() != s.rank() + 1) {
    throw LengthMismatch("basis on " + std::to_string(basis.num_vars()) +
                         " variables for a semigroup with " +
                         std::to_string(s.rank()) + " generators");
  }
  if (!is_elimination_for_x(basis.order())) {
    throw OrderNotElimination("ordering " + basis.order().label() +
                              " is not an elimination ordering for x");
  }
}

// N(x^{l+1}) from N(x^l): multiply by x and reduce again.
ExponentVector step_x(ExponentVector current, const GroebnerBasis& basis) {
  current[0] = checked_add(current[0], 1);
  return normal_form(std::move(current), basis);
}

void check_scan_bound(std::int64_t l) {
  if (l > scan_limit()) {
    throw ScanLimitExceeded("normal-form scan exceeds APERYKIT_MAX_SCAN=" +
                            std::to_string(scan_limit()));
  }
}

AperyReport scan_delta(const NumericalSemigroup& s, std::size_t j,
                       const GroebnerBasis& basis) {
  const std::int64_t aj = s.generator(j);
  AperyReport r;
  std::vector<bool> seen(static_cast<std::size_t>(aj), false);
  std::int64_t filled = 0;
  ExponentVector cur(s.rank() + 1);
  for (std::int64_t l = 0;; ++l) {
    check_scan_bound(l);
    if (cur[0] == 0 && cur[j + 1] == 0) {
      const auto residue = static_cast<std::size_t>(l % aj);
      if (seen[residue]) {
        throw InvariantViolation("two Delta elements share residue " +
                                 std::to_string(residue) + " mod " + std::to_string(aj));
      }
      if (phi_degree(cur, s.generators()) != l) {
        throw InvariantViolation("normal form changed the degree of x^" +
                                 std::to_string(l));
      }
      seen[residue] = true;
      r.elements.push_back(l);
      r.representations.emplace(l, cur);
      if (++filled == aj) break;
    }
    cur = step_x(std::move(cur), basis);
  }
  return r;
}

AperyReport staircase_delta(const NumericalSemigroup& s, std::size_t j,
                            const GroebnerBasis& basis) {
  std::vector<std::size_t> free_vars;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (i != j) free_vars.push_back(i + 1);
  }
  AperyReport r;
  for (auto& p : detail::enumerate_face(basis, free_vars)) {
    const std::int64_t n = phi_degree(p, s.generators());
    if (!r.representations.emplace(n, std::move(p)).second) {
      throw InvariantViolation("two standard monomials of degree " + std::to_string(n));
    }
  }
  for (const auto& [n, rep] : r.representations) r.elements.push_back(n);

  const std::int64_t aj = s.generator(j);
  std::vector<bool> seen(static_cast<std::size_t>(aj), false);
  for (std::int64_t n : r.elements) {
    const auto residue = static_cast<std::size_t>(n % aj);
    if (seen[residue]) {
      throw InvariantViolation("staircase face repeats a residue mod " + std::to_string(aj));
    }
    seen[residue] = true;
  }
  if (static_cast<std::int64_t>(r.elements.size()) != aj) {
    throw InvariantViolation("staircase face has " + std::to_string(r.elements.size()) +
                             " points, expected " + std::to_string(aj));
  }
  return r;
}

std::vector<std::int64_t> intersect(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Classification classify(const NumericalSemigroup& s, std::int64_t l,
                        const GroebnerBasis& basis) {
  require_elimination(s, basis);
  if (l < 0) throw InvalidArgument("classify expects a nonnegative integer");
  ExponentVector x_l(s.rank() + 1);
  x_l[0] = l;
  ExponentVector e = normal_form(std::move(x_l), basis);
  if (phi_degree(e, s.generators()) != l) {
    throw InvariantViolation("normal form changed the degree of x^" + std::to_string(l));
  }
  const Membership kind = e[0] > 0 ? Membership::Gap : Membership::InS;
  return {kind, std::move(e)};
}

std::vector<std::int64_t> gaps_via_groebner(const NumericalSemigroup& s,
                                            const GroebnerBasis& basis) {
  require_elimination(s, basis);
  const auto ap = apery_delta(s, 0);
  const std::int64_t frobenius = ap.elements.back() - s.multiplicity();
  std::vector<std::int64_t> out;
  ExponentVector cur(s.rank() + 1);
  for (std::int64_t l = 1; l <= frobenius; ++l) {
    cur = step_x(std::move(cur), basis);
    if (cur[0] > 0) out.push_back(l);
  }
  return out;
}

AperyComputation compute_apery(const NumericalSemigroup& s, std::size_t j,
                               const InnerOrder& inner, DeltaStrategy strategy) {
  if (j >= s.rank()) {
    throw InvalidArgument("generator index " + std::to_string(j + 1) + " out of range");
  }
  OrderSpec order = apery_order(s.generators(), j, inner);
  GroebnerBasis basis = buchberger(ideal_generators(s, order), order);
  AperyReport report = strategy == DeltaStrategy::Scan ? scan_delta(s, j, basis)
                                                       : staircase_delta(s, j, basis);
  report.wrt = s.generator(j);
  report.wrt_index = j;
  report.order_used = order.label();
  return {std::move(basis), std::move(report)};
}

AperyReport apery_delta(const NumericalSemigroup& s, std::size_t j,
                        const InnerOrder& inner, DeltaStrategy strategy) {
  return compute_apery(s, j, inner, strategy).report;
}

AperyReport apery_delta(const NumericalSemigroup& s, std::size_t j) {
  return apery_delta(s, j, InnerOrder::default_for(s.rank(), j));
}

std::vector<std::int64_t> extremal_set(const NumericalSemigroup& s,
                                       const AperyReport& report,
                                       const GroebnerBasis& basis) {
  const std::size_t k = s.rank();
  if (report.wrt_index != k - 1 || report.wrt != s.largest()) {
    throw InvalidArgument("extremal elements are defined for Ap(S, a_k)");
  }
  if (report.order_used != basis.order().label()) {
    throw InvalidArgument("report (" + report.order_used + ") and basis (" +
                          basis.order().label() + ") use different orderings");
  }
  std::vector<std::int64_t> out;
  for (const auto& [n, gamma] : report.representations) {
    bool extremal = true;
    for (std::size_t i = 1; extremal && i < k; ++i) {
      ExponentVector up = gamma;
      up[i] = checked_add(up[i], 1);
      if (in_staircase_complement(up, basis)) extremal = false;
    }
    if (extremal) out.push_back(n);
  }
  return out;
}

InnerOrder type_rotation(std::size_t k, std::size_t i) {
  if (k < 2 || i + 1 >= k) {
    throw InvalidArgument("rotation index must lie in 1..k-1");
  }
  InnerOrder o;
  o.flavor = InnerFlavor::Revlex;
  for (std::size_t v = 0; v + 1 < k; ++v) {
    if (v != i) o.sequence.push_back(v);
  }
  o.sequence.push_back(i);
  return o;
}

TypeReport type_set(const NumericalSemigroup& s, const TypeSetOptions& options) {
  const std::size_t k = s.rank();
  if (k < 2) throw InvalidArgument("the type set needs at least two generators");

  std::vector<InnerOrder> orders;
  for (std::size_t i = 0; i + 1 < k; ++i) orders.push_back(type_rotation(k, i));
  for (const auto& extra : options.extra_orders) orders.push_back(extra);

  struct Outcome {
    std::string label;
    std::vector<std::int64_t> apery;
    std::vector<std::int64_t> extremal;
  };
  auto pipeline = [&s, k](const InnerOrder& inner) {
    auto comp = compute_apery(s, k - 1, inner);
    auto boundary = extremal_set(s, comp.report, comp.basis);
    return Outcome{comp.report.order_used, std::move(comp.report.elements),
                   std::move(boundary)};
  };

  std::vector<Outcome> outcomes;
  if (options.parallel) {
    std::vector<std::future<Outcome>> futures;
    for (const auto& o : orders) {
      futures.push_back(std::async(std::launch::async, pipeline, std::cref(o)));
    }
    for (auto& f : futures) outcomes.push_back(f.get());
  } else {
    for (const auto& o : orders) outcomes.push_back(pipeline(o));
  }

  TypeReport r;
  r.type_set = outcomes.front().extremal;
  for (const auto& o : outcomes) {
    if (o.apery != outcomes.front().apery) {
      throw InvariantViolation("Delta set depends on the Apery ordering (" + o.label + ")");
    }
    r.type_set = intersect(r.type_set, o.extremal);
    r.extremal_sets.emplace_back(o.label, o.extremal);
  }
  for (std::int64_t m : r.type_set) r.pf.push_back(m - s.largest());
  r.type = r.type_set.size();
  r.gorenstein = r.type == 1;
  return r;
}

}  // namespace aperykit
