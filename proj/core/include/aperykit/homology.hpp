#ifndef APERYKIT_HOMOLOGY_HPP
#define APERYKIT_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "aperykit/semigroup.hpp"

namespace aperykit {

/// A family of faces on vertices {0, .., k-1}, each face a bitmask. The
/// empty face (mask 0) is included when present, giving the augmented
/// complex.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t vertex_count, std::vector<std::uint32_t> faces);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool contains(std::uint32_t face) const;
  bool downward_closed() const;

  /// Number of faces with p+1 vertices, for p = -1 .. k-1 (index p+1).
  std::vector<std::size_t> f_vector() const;

  static SimplicialComplex full_simplex(std::size_t k);
  static SimplicialComplex simplex_boundary(std::size_t k);

 private:
  std::size_t vertex_count_;
  std::vector<std::uint32_t> faces_;
};

/// Delta_a: faces F with a - sum_{i in F} a_i in S.
SimplicialComplex build_delta(const NumericalSemigroup& s, std::int64_t a);

/// Ranks of reduced homology over Q in degrees -1 .. k-1 (index p+1),
/// from exact ranks of the boundary maps.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& c);

/// True iff the ranks are those of a (dim)-sphere: 1 in degree dim, else 0.
bool has_sphere_homology(const std::vector<std::int64_t>& ranks, std::int64_t dim);

/// PF(S) read off the complexes Delta_{g + sum a_i} for the gaps g that
/// have the reduced homology of a (k-2)-sphere. Requires k >= 2.
std::vector<std::int64_t> pf_via_homology(const NumericalSemigroup& s);

}  // namespace aperykit

#endif  // APERYKIT_HOMOLOGY_HPP
