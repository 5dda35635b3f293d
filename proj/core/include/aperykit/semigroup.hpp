#ifndef APERYKIT_SEMIGROUP_HPP
#define APERYKIT_SEMIGROUP_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace aperykit {

/// Upper bound on membership scans. Read once from APERYKIT_MAX_SCAN,
/// default 10^7.
std::int64_t scan_limit();
void set_scan_limit(std::int64_t limit);

/// A numerical monoid <a_1, ..., a_k> given by its minimal generators.
///
/// Generators are stored sorted ascending. Construction rejects lists with
/// gcd != 1, nonpositive entries, duplicates, or a generator that is a
/// combination of the others (NonMinimalGenerators).
///
/// Values are cheap to copy: copies share the membership cache, which only
/// grows and is safe to query from several threads.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  std::span<const std::int64_t> generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  std::int64_t generator(std::size_t i) const { return generators_.at(i); }
  std::int64_t multiplicity() const { return generators_.front(); }
  std::int64_t largest() const { return generators_.back(); }

  /// Index of generator value `a`, or throws InvalidArgument.
  std::size_t index_of(std::int64_t a) const;

  /// True iff n is a Z>=0-combination of the generators.
  bool contains(std::int64_t n) const;

  /// Smallest c with [c, inf) inside S.
  std::int64_t conductor() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  struct MembershipCache;

  std::vector<std::int64_t> generators_;
  std::shared_ptr<MembershipCache> cache_;
};

struct InvariantReport {
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
  std::vector<std::int64_t> gaps;
  bool symmetric = true;
};

/// Edge x -> y of the Hasse diagram of <=_S restricted to an Apery set.
struct HasseEdge {
  std::int64_t from;
  std::int64_t to;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

// Definitions-based computations. None of these touch Groebner bases; they
// are the reference the algebraic engine is checked against.
namespace oracle {

bool contains(const NumericalSemigroup& s, std::int64_t n);

std::vector<std::int64_t> gaps(const NumericalSemigroup& s);

/// Ap(S, s): for each residue mod s, the least member of S in that class.
std::vector<std::int64_t> apery_bruteforce(const NumericalSemigroup& s,
                                           std::int64_t wrt);

/// Frobenius number and genus from Ap(S, s) (Selmer). Cross-checked
/// against the gap scan; throws InvariantViolation on disagreement.
InvariantReport selmer_invariants(const NumericalSemigroup& s,
                                  std::int64_t wrt);

/// Same, with respect to the multiplicity.
InvariantReport invariants(const NumericalSemigroup& s);

/// x <=_S y  iff  y - x in S.
bool leq_S(const NumericalSemigroup& s, std::int64_t x, std::int64_t y);

std::vector<std::int64_t> pf_bruteforce(const NumericalSemigroup& s);

/// {m in Ap(S, a_k) | m + a_i not in Ap(S, a_k) for all i}. Requires k >= 2.
std::vector<std::int64_t> typeset_bruteforce(const NumericalSemigroup& s);

/// Covering pairs of <=_S on Ap(S, wrt), sorted.
std::vector<HasseEdge> hasse_diagram(const NumericalSemigroup& s,
                                     std::int64_t wrt);

/// Elements of `nodes` with no outgoing edge.
std::vector<std::int64_t> hasse_sinks(std::span<const std::int64_t> nodes,
                                      std::span<const HasseEdge> edges);

}  // namespace oracle
}  // namespace aperykit

#endif  // APERYKIT_SEMIGROUP_HPP
