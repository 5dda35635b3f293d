#include "aperykit/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "aperykit/errors.hpp"
#include "exact_rank.hpp"

namespace aperykit {
namespace {

constexpr std::size_t kMaxVertices = 24;

std::size_t face_size(std::uint32_t f) { return static_cast<std::size_t>(std::popcount(f)); }

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count,
                                     std::vector<std::uint32_t> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
  if (vertex_count_ > kMaxVertices) {
    throw InvalidArgument("simplicial complexes are limited to " +
                          std::to_string(kMaxVertices) + " vertices");
  }
  const std::uint32_t all = (std::uint32_t{1} << vertex_count_) - 1;
  for (std::uint32_t f : faces_) {
    if ((f & ~all) != 0) throw InvalidArgument("face uses a vertex out of range");
  }
  std::sort(faces_.begin(), faces_.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::pair(face_size(a), a) < std::pair(face_size(b), b);
  });
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face,
                            [](std::uint32_t a, std::uint32_t b) {
                              return std::pair(face_size(a), a) < std::pair(face_size(b), b);
                            });
}

bool SimplicialComplex::downward_closed() const {
  for (std::uint32_t f : faces_) {
    for (std::uint32_t rest = f; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (!contains(f & ~bit)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(vertex_count_ + 1, 0);
  for (std::uint32_t face : faces_) ++f[face_size(face)];
  return f;
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t k) {
  std::vector<std::uint32_t> faces(std::size_t{1} << k);
  std::iota(faces.begin(), faces.end(), std::uint32_t{0});
  return SimplicialComplex(k, std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::size_t k) {
  std::vector<std::uint32_t> faces(std::size_t{1} << k);
  std::iota(faces.begin(), faces.end(), std::uint32_t{0});
  faces.pop_back();
  return SimplicialComplex(k, std::move(faces));
}

SimplicialComplex build_delta(const NumericalSemigroup& s, std::int64_t a) {
  const std::size_t k = s.rank();
  if (k > kMaxVertices) throw InvalidArgument("too many generators for Delta_a");
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << k); ++f) {
    std::int64_t rest = a;
    for (std::size_t i = 0; i < k; ++i) {
      if (f & (std::uint32_t{1} << i)) rest -= s.generator(i);
    }
    if (s.contains(rest)) faces.push_back(f);
  }
  SimplicialComplex c(k, std::move(faces));
  // a - sum_G = (a - sum_F) + sum_{F \ G}, so closure holds for every a.
  if (!c.downward_closed()) {
    throw InvariantViolation("Delta_" + std::to_string(a) + " is not a simplicial complex");
  }
  return c;
}

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& c) {
  const std::size_t k = c.vertex_count();
  // by_size[s]: faces with s vertices (chain degree s - 1), and their
  // column positions.
  std::vector<std::vector<std::uint32_t>> by_size(k + 1);
  for (std::uint32_t f : c.faces()) by_size[face_size(f)].push_back(f);

  // rank of d_s : C_{s-1} -> C_{s-2}, for s = 1..k.
  std::vector<std::size_t> boundary_rank(k + 2, 0);
  for (std::size_t s = 1; s <= k; ++s) {
    const auto& src = by_size[s];
    const auto& dst = by_size[s - 1];
    if (src.empty() || dst.empty()) continue;
    std::unordered_map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], r);
    detail::BigMatrix m(dst.size(), std::vector<detail::BigInt>(src.size(), 0));
    for (std::size_t col = 0; col < src.size(); ++col) {
      int sign = 1;
      for (std::size_t v = 0; v < k; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        if (!(src[col] & bit)) continue;
        const auto it = row_of.find(src[col] & ~bit);
        if (it != row_of.end()) m[it->second][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[s] = detail::exact_rank(std::move(m), src.size());
  }

  std::vector<std::int64_t> ranks(k + 1, 0);
  for (std::size_t s = 0; s <= k; ++s) {
    const auto cycles = static_cast<std::int64_t>(by_size[s].size()) -
                        static_cast<std::int64_t>(s >= 1 ? boundary_rank[s] : 0);
    ranks[s] = cycles - static_cast<std::int64_t>(boundary_rank[s + 1]);
  }
  return ranks;
}

bool has_sphere_homology(const std::vector<std::int64_t>& ranks, std::int64_t dim) {
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::int64_t degree = static_cast<std::int64_t>(i) - 1;
    if (ranks[i] != (degree == dim ? 1 : 0)) return false;
  }
  return dim + 1 < static_cast<std::int64_t>(ranks.size());
}

std::vector<std::int64_t> pf_via_homology(const NumericalSemigroup& s) {
  const std::size_t k = s.rank();
  if (k < 2) throw InvalidArgument("pf_via_homology needs at least two generators");
  const std::int64_t total =
      std::accumulate(s.generators().begin(), s.generators().end(), std::int64_t{0});
  std::vector<std::int64_t> out;
  for (std::int64_t g : oracle::gaps(s)) {
    const auto ranks = reduced_homology_ranks(build_delta(s, g + total));
    if (has_sphere_homology(ranks, static_cast<std::int64_t>(k) - 2)) out.push_back(g);
  }
  return out;
}

}  // namespace aperykit
