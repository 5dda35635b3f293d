#include "aperykit/binomial_groebner.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <span>
#include <string>

#include "aperykit/errors.hpp"

namespace aperykit {
namespace {

// Support bitmask with variable i folded onto bit i % 64. A lead can only
// divide v if its mask is a subset of v's mask.
std::uint64_t support_mask(const ExponentVector& v) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) m |= std::uint64_t{1} << (i % 64);
  }
  return m;
}

// Working set used while the basis is still growing. Retired elements stay
// addressable by index but no longer take part in reduction.
class Reducer {
 public:
  void add(Binomial b) {
    masks_.push_back(support_mask(b.lead));
    active_.push_back(true);
    elements_.push_back(std::move(b));
  }

  const std::vector<Binomial>& elements() const { return elements_; }
  bool active(std::size_t i) const { return active_[i]; }
  void retire(std::size_t i) { active_[i] = false; }

  std::size_t find_divisor(const ExponentVector& v) const {
    const std::uint64_t vm = support_mask(v);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (active_[i] && (masks_[i] & ~vm) == 0 && elements_[i].lead.divides(v)) return i;
    }
    return elements_.size();
  }

  ExponentVector normal_form(ExponentVector v) const {
    for (;;) {
      const std::size_t i = find_divisor(v);
      if (i == elements_.size()) return v;
      v = reduce_by(std::move(v), elements_[i]);
    }
  }

  // Applies the rewrite lead -> trail as many times as lead divides v.
  static ExponentVector reduce_by(ExponentVector v, const Binomial& b) {
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (b.lead[c] > 0) times = std::min(times, v[c] / b.lead[c]);
    }
    for (std::size_t c = 0; c < v.size(); ++c) {
      const std::int64_t delta = b.trail[c] - b.lead[c];
      if (delta != 0) v[c] = checked_add(v[c], checked_mul(times, delta));
    }
    return v;
  }

 private:
  std::vector<Binomial> elements_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> active_;
};

struct Pair {
  std::size_t first;
  std::size_t second;
  ExponentVector lcm;
  std::int64_t degree = 0;
  bool alive = true;
};

// Pending pairs. Pairs are stored once and referred to by id; the selection
// structure may hold ids of pairs killed later, which pop() skips.
class PairQueue {
 public:
  PairQueue(const OrderSpec& order, PairSelection selection,
            std::span<const std::int64_t> grading)
      : selection_(selection), heap_(HeapCompare{&order, &pairs_}) {
    if (selection == PairSelection::Graded) grading_.assign(grading.begin(), grading.end());
  }

  void push(Pair p) {
    if (!grading_.empty()) {
      std::int64_t d = 0;
      for (std::size_t c = 0; c < p.lcm.size(); ++c) {
        d = checked_add(d, checked_mul(p.lcm[c], grading_[c]));
      }
      p.degree = d;
    }
    const std::size_t id = pairs_.size();
    pairs_.push_back(std::move(p));
    pending_.push_back(id);
    if (selection_ == PairSelection::Fifo) {
      fifo_.push_back(id);
    } else {
      heap_.push(id);
    }
  }

  /// Next live pair, or nullptr when none is left.
  const Pair* pop() {
    for (;;) {
      if (selection_ == PairSelection::Fifo) {
        if (fifo_.empty()) return nullptr;
        const std::size_t id = fifo_.front();
        fifo_.pop_front();
        if (pairs_[id].alive) return take(id);
      } else {
        if (heap_.empty()) return nullptr;
        const std::size_t id = heap_.top();
        heap_.pop();
        if (pairs_[id].alive) return take(id);
      }
    }
  }

  /// Kills every pending pair for which `dead` holds; returns how many.
  template <class Pred>
  std::size_t kill_if(Pred dead) {
    std::size_t killed = 0;
    std::vector<std::size_t> keep;
    keep.reserve(pending_.size());
    for (std::size_t id : pending_) {
      Pair& p = pairs_[id];
      if (!p.alive) continue;
      if (dead(p)) {
        p.alive = false;
        ++killed;
      } else {
        keep.push_back(id);
      }
    }
    pending_ = std::move(keep);
    return killed;
  }

 private:
  const Pair* take(std::size_t id) {
    pairs_[id].alive = false;
    return &pairs_[id];
  }

  // std::priority_queue pops the greatest element; invert so the smallest
  // lcm (then the oldest pair) comes out first.
  struct HeapCompare {
    const OrderSpec* order;
    const std::deque<Pair>* pairs;
    bool operator()(std::size_t a, std::size_t b) const {
      const Pair& pa = (*pairs)[a];
      const Pair& pb = (*pairs)[b];
      if (pa.degree != pb.degree) return pa.degree > pb.degree;
      const auto c = order->compare((*pairs)[a].lcm, (*pairs)[b].lcm);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
      return a > b;
    }
  };

  PairSelection selection_;
  std::vector<std::int64_t> grading_;
  std::deque<Pair> pairs_;
  std::vector<std::size_t> pending_;
  std::deque<std::size_t> fifo_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, HeapCompare> heap_;
};

void check_binomial(const Binomial& b, const OrderSpec& order) {
  if (order.compare(b.lead, b.trail) != std::strong_ordering::greater) {
    throw InvariantViolation("binomial is not oriented lead > trail");
  }
}

std::int64_t graded_difference(const Binomial& g, std::span<const std::int64_t> w) {
  std::int64_t d = 0;
  for (std::size_t c = 0; c < w.size(); ++c) {
    d = checked_add(d, checked_mul(checked_add(g.lead[c], -g.trail[c]), w[c]));
  }
  return d;
}

bool homogeneous(std::span<const Binomial> gens, std::span<const std::int64_t> w) {
  return std::all_of(gens.begin(), gens.end(), [w](const Binomial& g) {
    return g.lead.size() == w.size() && g.trail.size() == w.size() &&
           graded_difference(g, w) == 0;
  });
}

}  // namespace

std::vector<std::int64_t> infer_grading(std::span<const Binomial> gens, std::size_t num_vars) {
  std::vector<std::int64_t> w(num_vars, 0);
  for (const auto& g : gens) {
    if (g.lead.size() != num_vars || g.trail.size() != num_vars) return {};
  }
  for (;;) {
    bool progress = false;
    for (const auto& g : gens) {
      // Solve for the single unweighted variable of a generator, if any.
      std::size_t unknown = num_vars;
      std::size_t count = 0;
      std::int64_t known = 0;
      for (std::size_t c = 0; c < num_vars; ++c) {
        const std::int64_t delta = g.lead[c] - g.trail[c];
        if (delta == 0) continue;
        if (w[c] == 0) {
          unknown = c;
          ++count;
        } else {
          known = checked_add(known, checked_mul(delta, w[c]));
        }
      }
      if (count != 1) continue;
      const std::int64_t delta = g.lead[unknown] - g.trail[unknown];
      if (known % delta != 0 || -known / delta <= 0) return {};
      w[unknown] = -known / delta;
      progress = true;
    }
    if (progress) continue;
    const auto free = std::find(w.begin(), w.end(), 0);
    if (free == w.end()) break;
    *free = 1;
  }
  if (!homogeneous(gens, w)) return {};
  return w;
}

Binomial Binomial::oriented(ExponentVector u, ExponentVector v,
                            const OrderSpec& order) {
  const auto c = order.compare(u, v);
  if (c == std::strong_ordering::equal) {
    throw InvalidArgument("a binomial needs two distinct monomials");
  }
  if (c == std::strong_ordering::greater) return {std::move(u), std::move(v)};
  return {std::move(v), std::move(u)};
}

GroebnerBasis::GroebnerBasis(OrderSpec order, std::vector<Binomial> elements)
    : order_(std::move(order)), elements_(std::move(elements)) {
  for (const auto& b : elements_) {
    if (b.lead.size() != order_.num_vars() || b.trail.size() != order_.num_vars()) {
      throw LengthMismatch("basis element does not match the ordering's variables");
    }
    check_binomial(b, order_);
  }
  std::sort(elements_.begin(), elements_.end(),
            [this](const Binomial& a, const Binomial& b) {
              return order_.less(a.lead, b.lead);
            });
  corners_.reserve(elements_.size());
  for (const auto& b : elements_) {
    corners_.push_back(b.lead);
    support_.push_back(support_mask(b.lead));
  }
}

std::size_t GroebnerBasis::find_divisor(const ExponentVector& v) const {
  const std::uint64_t vm = support_mask(v);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((support_[i] & ~vm) == 0 && corners_[i].divides(v)) return i;
  }
  return elements_.size();
}

std::vector<Binomial> ideal_generators(const NumericalSemigroup& s,
                                       const OrderSpec& order) {
  const std::size_t k = s.rank();
  if (order.num_vars() != k + 1) {
    throw LengthMismatch("ordering on " + std::to_string(order.num_vars()) +
                         " variables for a semigroup with " + std::to_string(k) +
                         " generators");
  }
  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    ExponentVector y = ExponentVector::unit(k + 1, i + 1);
    ExponentVector xa(k + 1);
    xa[0] = s.generator(i);
    gens.push_back(Binomial::oriented(std::move(y), std::move(xa), order));
  }
  return gens;
}

GroebnerBasis buchberger(std::vector<Binomial> gens, const OrderSpec& order,
                         const BuchbergerOptions& options,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  st = {};

  PairSelection selection = options.selection;
  std::vector<std::int64_t> grading;
  if (selection == PairSelection::Graded) {
    grading = options.grading.empty() ? infer_grading(gens, order.num_vars()) : options.grading;
    if (grading.empty()) {
      selection = PairSelection::Normal;
    } else if (grading.size() != order.num_vars() ||
               std::any_of(grading.begin(), grading.end(),
                           [](std::int64_t x) { return x <= 0; }) ||
               !homogeneous(gens, grading)) {
      throw InvalidArgument("grading must be positive and make every generator homogeneous");
    }
  }

  Reducer work;
  PairQueue pairs(order, selection, grading);

  // Gebauer-Moller update for a new element h.
  auto insert = [&](Binomial b) {
    check_binomial(b, order);
    const std::size_t h = work.elements().size();
    const ExponentVector& t = b.lead;

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < h; ++i) {
      if (work.active(i)) fresh.push_back({i, h, lcm(work.elements()[i].lead, t)});
    }
    if (options.chain_criterion) {
      // Keep (i, h) unless another new pair's lcm divides its lcm; coprime
      // pairs are kept here so they can still kill others.
      std::vector<bool> kept(fresh.size(), true);
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (coprime(work.elements()[fresh[a].first].lead, t)) continue;
        for (std::size_t c = 0; c < fresh.size(); ++c) {
          if (c == a || !kept[c]) continue;
          if (fresh[c].lcm.divides(fresh[a].lcm)) {
            kept[a] = false;
            ++st.pairs_skipped_chain;
            break;
          }
        }
      }
      std::vector<Pair> survivors;
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (kept[a]) survivors.push_back(std::move(fresh[a]));
      }
      fresh = std::move(survivors);

      st.pairs_skipped_chain += pairs.kill_if([&](const Pair& p) {
        if (!t.divides(p.lcm)) return false;
        return lcm(work.elements()[p.first].lead, t) != p.lcm &&
               lcm(work.elements()[p.second].lead, t) != p.lcm;
      });
      for (std::size_t i = 0; i < h; ++i) {
        if (work.active(i) && t.divides(work.elements()[i].lead)) work.retire(i);
      }
    }
    for (auto& p : fresh) {
      if (options.coprime_criterion && coprime(work.elements()[p.first].lead, t)) {
        ++st.pairs_skipped_coprime;
        continue;
      }
      pairs.push(std::move(p));
    }
    work.add(std::move(b));
    st.max_basis_size = std::max(st.max_basis_size, work.elements().size());
  };

  for (auto& g : gens) {
    if (g.lead.size() != order.num_vars() || g.trail.size() != order.num_vars()) {
      throw LengthMismatch("generator does not match the ordering's variables");
    }
    // Re-orient: callers may hand us binomials built for another ordering.
    insert(Binomial::oriented(std::move(g.lead), std::move(g.trail), order));
  }

  while (const Pair* p = pairs.pop()) {
    ++st.pairs_considered;
    const Binomial& f = work.elements()[p->first];
    const Binomial& g = work.elements()[p->second];
    // S(f, g) = x^{L-lead_f} f - x^{L-lead_g} g = x^{m2} - x^{m1}: again a
    // binomial, and each monomial reduces to a monomial.
    ExponentVector m1 = work.normal_form(p->lcm - f.lead + f.trail);
    ExponentVector m2 = work.normal_form(p->lcm - g.lead + g.trail);
    if (m1 == m2) {
      ++st.zero_reductions;
      continue;
    }
    insert(Binomial::oriented(std::move(m1), std::move(m2), order));
  }

  // Minimalize: a divisor's lead is never larger, so scanning ascending keeps
  // exactly one element per minimal lead.
  std::vector<Binomial> all = work.elements();
  std::stable_sort(all.begin(), all.end(), [&](const Binomial& a, const Binomial& b) {
    return order.less(a.lead, b.lead);
  });
  Reducer minimal;
  for (auto& b : all) {
    if (minimal.find_divisor(b.lead) == minimal.elements().size()) {
      minimal.add(std::move(b));
    }
  }
  std::vector<Binomial> reduced;
  reduced.reserve(minimal.elements().size());
  for (const auto& b : minimal.elements()) {
    reduced.push_back({b.lead, minimal.normal_form(b.trail)});
  }
  return GroebnerBasis(order, std::move(reduced));
}

ExponentVector normal_form(ExponentVector v, std::span<const Binomial> basis) {
  for (;;) {
    const auto it = std::find_if(basis.begin(), basis.end(),
                                 [&](const Binomial& b) { return b.lead.divides(v); });
    if (it == basis.end()) return v;
    v = Reducer::reduce_by(std::move(v), *it);
  }
}

ExponentVector normal_form(ExponentVector v, const GroebnerBasis& basis) {
  if (v.size() != basis.num_vars()) {
    throw LengthMismatch("vector of length " + std::to_string(v.size()) +
                         " for a basis on " + std::to_string(basis.num_vars()) +
                         " variables");
  }
  for (;;) {
    const std::size_t i = basis.find_divisor(v);
    if (i == basis.size()) return v;
    v = Reducer::reduce_by(std::move(v), basis.elements()[i]);
  }
}

bool in_staircase_complement(const ExponentVector& v, const GroebnerBasis& basis) {
  if (v.size() != basis.num_vars()) {
    throw LengthMismatch("vector length does not match the basis");
  }
  return basis.find_divisor(v) == basis.size();
}

std::int64_t phi_degree(const ExponentVector& v, std::span<const std::int64_t> weights) {
  if (v.size() != weights.size() + 1) {
    throw LengthMismatch("phi_degree: vector of length " + std::to_string(v.size()) +
                         " for " + std::to_string(weights.size()) + " generators");
  }
  std::int64_t d = v[0];
  for (std::size_t i = 0; i < weights.size(); ++i) {
    d = checked_add(d, checked_mul(v[i + 1], weights[i]));
  }
  return d;
}

std::vector<std::int64_t> phi_degree(const ExponentVector& v, std::size_t dim,
                                     std::span<const std::vector<std::int64_t>> generators) {
  if (v.size() != dim + generators.size()) {
    throw LengthMismatch("phi_degree: vector length does not match d + k");
  }
  std::vector<std::int64_t> d(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != dim) throw LengthMismatch("generator of wrong dimension");
    for (std::size_t c = 0; c < dim; ++c) {
      d[c] = checked_add(d[c], checked_mul(v[dim + j], generators[j][c]));
    }
  }
  return d;
}

}  // namespace aperykit
