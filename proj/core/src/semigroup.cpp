#include "aperykit/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <string>

#include "aperykit/errors.hpp"

namespace aperykit {
namespace {

std::int64_t limit_from_env() {
  if (const char* env = std::getenv("APERYKIT_MAX_SCAN")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

std::atomic<std::int64_t>& limit_storage() {
  static std::atomic<std::int64_t> limit{limit_from_env()};
  return limit;
}

std::string join(std::span<const std::int64_t> xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

// Membership of `target` in the monoid generated by `gens`, by a plain DP.
bool representable(std::int64_t target, std::span<const std::int64_t> gens) {
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (std::int64_t n = 1; n <= target; ++n) {
    for (std::int64_t g : gens) {
      if (g <= n && reach[static_cast<std::size_t>(n - g)]) {
        reach[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

std::int64_t scan_limit() { return limit_storage().load(); }

void set_scan_limit(std::int64_t limit) {
  if (limit <= 0) throw InvalidArgument("scan limit must be positive");
  limit_storage().store(limit);
}

// Grow-only DP table. Once `multiplicity` consecutive members have been seen
// everything beyond is a member and the table stops growing.
struct NumericalSemigroup::MembershipCache {
  mutable std::shared_mutex mutex;
  std::vector<char> table{1};
  std::int64_t run = 1;
  std::int64_t conductor = -1;
};

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)),
      cache_(std::make_shared<MembershipCache>()) {
  if (generators_.empty()) {
    throw InvalidArgument("a numerical semigroup needs at least one generator");
  }
  std::sort(generators_.begin(), generators_.end());
  for (std::int64_t g : generators_) {
    if (g < 1) throw InvalidArgument("generators must be positive integers");
  }
  if (std::adjacent_find(generators_.begin(), generators_.end()) !=
      generators_.end()) {
    throw NonMinimalGenerators("duplicate generator in {" + join(generators_) +
                               "}");
  }
  std::int64_t g = 0;
  for (std::int64_t a : generators_) g = std::gcd(g, a);
  if (g != 1) {
    throw InvalidArgument("generators {" + join(generators_) +
                          "} have gcd " + std::to_string(g) + ", expected 1");
  }
  for (std::size_t i = 1; i < generators_.size(); ++i) {
    const std::span<const std::int64_t> smaller(generators_.data(), i);
    if (representable(generators_[i], smaller)) {
      throw NonMinimalGenerators("generator " + std::to_string(generators_[i]) +
                                 " is a combination of the others in {" +
                                 join(generators_) + "}");
    }
  }
}

std::size_t NumericalSemigroup::index_of(std::int64_t a) const {
  const auto it = std::find(generators_.begin(), generators_.end(), a);
  if (it == generators_.end()) {
    throw InvalidArgument(std::to_string(a) + " is not a generator of <" +
                          join(generators_) + ">");
  }
  return static_cast<std::size_t>(it - generators_.begin());
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n == 0) return true;
  auto& c = *cache_;
  {
    std::shared_lock lock(c.mutex);
    if (c.conductor >= 0 && n >= c.conductor) return true;
    if (n < static_cast<std::int64_t>(c.table.size())) {
      return c.table[static_cast<std::size_t>(n)] != 0;
    }
  }
  std::unique_lock lock(c.mutex);
  while (c.conductor < 0 && static_cast<std::int64_t>(c.table.size()) <= n) {
    const auto next = static_cast<std::int64_t>(c.table.size());
    if (next > scan_limit()) {
      throw ScanLimitExceeded("membership scan for <" + join(generators_) +
                              "> exceeds APERYKIT_MAX_SCAN=" +
                              std::to_string(scan_limit()));
    }
    char member = 0;
    for (std::int64_t a : generators_) {
      if (a > next) break;
      if (c.table[static_cast<std::size_t>(next - a)]) {
        member = 1;
        break;
      }
    }
    c.table.push_back(member);
    c.run = member ? c.run + 1 : 0;
    if (c.run >= generators_.front()) c.conductor = next - c.run + 1;
  }
  if (c.conductor >= 0 && n >= c.conductor) return true;
  return c.table[static_cast<std::size_t>(n)] != 0;
}

std::int64_t NumericalSemigroup::conductor() const {
  auto& c = *cache_;
  for (std::int64_t probe = 1;; probe *= 2) {
    contains(probe);
    std::shared_lock lock(c.mutex);
    if (c.conductor >= 0) return c.conductor;
  }
}

namespace oracle {

bool contains(const NumericalSemigroup& s, std::int64_t n) {
  return s.contains(n);
}

std::vector<std::int64_t> gaps(const NumericalSemigroup& s) {
  std::vector<std::int64_t> out;
  std::int64_t run = 0;
  for (std::int64_t n = 1; run < s.multiplicity(); ++n) {
    if (s.contains(n)) {
      ++run;
    } else {
      run = 0;
      out.push_back(n);
    }
  }
  return out;
}

std::vector<std::int64_t> apery_bruteforce(const NumericalSemigroup& s,
                                           std::int64_t wrt) {
  if (wrt <= 0 || !s.contains(wrt)) {
    throw NotAMember(std::to_string(wrt) +
                     " is not a nonzero element of the semigroup");
  }
  std::vector<std::int64_t> least(static_cast<std::size_t>(wrt), -1);
  std::int64_t filled = 0;
  for (std::int64_t n = 0; filled < wrt; ++n) {
    auto& slot = least[static_cast<std::size_t>(n % wrt)];
    if (slot < 0 && s.contains(n)) {
      slot = n;
      ++filled;
    }
  }
  std::vector<std::int64_t> out(least.begin(), least.end());
  std::sort(out.begin(), out.end());

  // Second characterization: Ap(S, s) = {x in S | x - s not in S}.
  std::vector<std::int64_t> by_difference;
  for (std::int64_t x = 0; x <= out.back(); ++x) {
    if (s.contains(x) && !s.contains(x - wrt)) by_difference.push_back(x);
  }
  if (by_difference != out) {
    throw InvariantViolation("Apery set disagrees with {x in S | x-s not in S}");
  }
  return out;
}

InvariantReport selmer_invariants(const NumericalSemigroup& s,
                                  std::int64_t wrt) {
  const auto ap = apery_bruteforce(s, wrt);
  InvariantReport r;
  r.frobenius = ap.back() - wrt;
  // g = (1/s) * sum(w) - (s - 1)/2, kept in integers.
  const std::int64_t sum = std::accumulate(ap.begin(), ap.end(), std::int64_t{0});
  const std::int64_t twice = 2 * sum - wrt * (wrt - 1);
  if (twice % (2 * wrt) != 0) {
    throw InvariantViolation("Selmer genus is not an integer");
  }
  r.genus = twice / (2 * wrt);
  r.gaps = gaps(s);
  const std::int64_t scan_f = r.gaps.empty() ? -1 : r.gaps.back();
  if (r.genus != static_cast<std::int64_t>(r.gaps.size()) ||
      r.frobenius != scan_f) {
    throw InvariantViolation("Selmer formulas disagree with the gap scan");
  }
  r.symmetric = 2 * r.genus == r.frobenius + 1;
  return r;
}

InvariantReport invariants(const NumericalSemigroup& s) {
  return selmer_invariants(s, s.multiplicity());
}

bool leq_S(const NumericalSemigroup& s, std::int64_t x, std::int64_t y) {
  return s.contains(y - x);
}

std::vector<std::int64_t> pf_bruteforce(const NumericalSemigroup& s) {
  const auto g = gaps(s);
  if (g.empty()) return {-1};
  std::vector<std::int64_t> out;
  for (std::int64_t x : g) {
    const bool pseudo = std::all_of(
        s.generators().begin(), s.generators().end(),
        [&](std::int64_t a) { return s.contains(x + a); });
    if (pseudo) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> typeset_bruteforce(const NumericalSemigroup& s) {
  if (s.rank() < 2) {
    throw InvalidArgument("the type set needs at least two generators");
  }
  const auto ap = apery_bruteforce(s, s.largest());
  const std::set<std::int64_t> in_ap(ap.begin(), ap.end());
  std::vector<std::int64_t> out;
  for (std::int64_t m : ap) {
    const bool maximal = std::none_of(
        s.generators().begin(), s.generators().end(),
        [&](std::int64_t a) { return in_ap.count(m + a) != 0; });
    if (maximal) out.push_back(m);
  }
  return out;
}

std::vector<HasseEdge> hasse_diagram(const NumericalSemigroup& s,
                                     std::int64_t wrt) {
  // Anything <=_S-below an Apery element is in the Apery set, so y covers x
  // exactly when y - x is a minimal generator.
  const auto ap = apery_bruteforce(s, wrt);
  const std::set<std::int64_t> in_ap(ap.begin(), ap.end());
  std::vector<HasseEdge> edges;
  for (std::int64_t x : ap) {
    for (std::int64_t a : s.generators()) {
      if (in_ap.count(x + a)) edges.push_back({x, x + a});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const HasseEdge& l, const HasseEdge& r) {
    return std::pair(l.from, l.to) < std::pair(r.from, r.to);
  });
  return edges;
}

std::vector<std::int64_t> hasse_sinks(std::span<const std::int64_t> nodes,
                                      std::span<const HasseEdge> edges) {
  std::set<std::int64_t> sources;
  for (const auto& e : edges) sources.insert(e.from);
  std::vector<std::int64_t> out;
  for (std::int64_t n : nodes) {
    if (!sources.count(n)) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
}  // namespace aperykit
