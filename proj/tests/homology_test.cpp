#include <gtest/gtest.h>

#include "aperykit/corpus.hpp"
#include "aperykit/homology.hpp"

using namespace aperykit;
using V = std::vector<std::int64_t>;

TEST(Homology, SimplexBoundaryIsSphere) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto b = SimplicialComplex::simplex_boundary(k);
    EXPECT_TRUE(b.downward_closed());
    EXPECT_TRUE(has_sphere_homology(reduced_homology_ranks(b), static_cast<std::int64_t>(k) - 2));
  }
}

TEST(Homology, FullSimplexIsAcyclic) {
  const auto c = SimplicialComplex::full_simplex(4);
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
  EXPECT_EQ(reduced_homology_ranks(c), (V{0, 0, 0, 0, 0}));
}

TEST(Homology, SmallComplexes) {
  SimplicialComplex two_points(2, {0b00, 0b01, 0b10});
  EXPECT_EQ(reduced_homology_ranks(two_points), (V{0, 1, 0}));
  SimplicialComplex empty_face(3, {0});
  EXPECT_EQ(reduced_homology_ranks(empty_face), (V{1, 0, 0, 0}));
  SimplicialComplex void_complex(2, {});
  EXPECT_EQ(reduced_homology_ranks(void_complex), (V{0, 0, 0}));
  SimplicialComplex not_closed(2, {0b11});
  EXPECT_FALSE(not_closed.downward_closed());
  EXPECT_THROW(SimplicialComplex(2, {0b100}), std::exception);
}

TEST(Homology, DeltaExamples) {
  NumericalSemigroup s({3, 7, 11});
  // 4 + 21 = 25: every proper subset of generators, the boundary of a triangle.
  const auto d = build_delta(s, 25);
  EXPECT_EQ(d.f_vector(), (std::vector<std::size_t>{1, 3, 3, 0}));
  EXPECT_EQ(reduced_homology_ranks(d), (V{0, 0, 1, 0}));
  const auto zero = build_delta(s, 0);
  EXPECT_EQ(zero.faces(), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(pf_via_homology(s), (V{4, 8}));
  EXPECT_EQ(pf_via_homology(NumericalSemigroup({7, 8, 9, 13})), (V{19}));
  EXPECT_EQ(pf_via_homology(NumericalSemigroup({2, 3})), (V{1}));
}

TEST(HomologyProperty, EulerCharacteristic) {
  for (const auto& s : random_corpus(503, 20, 2, 5, 30)) {
    const std::int64_t top = s.conductor() + 40;
    for (std::int64_t a = 0; a <= top; a += 3) {
      const auto d = build_delta(s, a);
      EXPECT_TRUE(d.downward_closed());
      const auto f = d.f_vector();
      const auto h = reduced_homology_ranks(d);
      std::int64_t chi_f = 0, chi_h = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::int64_t sign = i % 2 == 0 ? -1 : 1;
        chi_f += sign * static_cast<std::int64_t>(f[i]);
        chi_h += sign * h[i];
      }
      EXPECT_EQ(chi_f, chi_h);
    }
  }
}

TEST(HomologyProperty, MatchesPseudoFrobenius) {
  for (const auto& s : random_corpus(509, 60, 2, 5, 60)) {
    EXPECT_EQ(pf_via_homology(s), oracle::pf_bruteforce(s));
  }
}
