#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "aperykit/binomial_groebner.hpp"
#include "aperykit/corpus.hpp"
#include "aperykit/errors.hpp"

using namespace aperykit;
using V = std::vector<std::int64_t>;
using EV = ExponentVector;

namespace {

GroebnerBasis lex_basis(const NumericalSemigroup& s) {
  const auto o = OrderSpec::lex(s.rank() + 1);
  return buchberger(ideal_generators(s, o), o);
}

std::set<Binomial> as_set(const GroebnerBasis& b) {
  return {b.elements().begin(), b.elements().end()};
}

// The 17-element basis of I_<7,9,11> under lex x > y1 > y2 > y3,
// in (x, y1, y2, y3) coordinates.
std::set<Binomial> known_lex_basis() {
  return {
      {{0, 0, 11, 0}, {0, 0, 0, 9}}, {{0, 1, 0, 1}, {0, 0, 2, 0}},
      {{0, 1, 9, 0}, {0, 0, 0, 8}},  {{0, 2, 7, 0}, {0, 0, 0, 7}},
      {{0, 3, 5, 0}, {0, 0, 0, 6}},  {{0, 4, 3, 0}, {0, 0, 0, 5}},
      {{0, 5, 1, 0}, {0, 0, 0, 4}},  {{0, 6, 0, 0}, {0, 0, 1, 3}},
      {{1, 0, 0, 2}, {0, 2, 1, 0}},  {{1, 0, 1, 1}, {0, 3, 0, 0}},
      {{1, 0, 3, 0}, {0, 4, 0, 0}},  {{1, 2, 2, 0}, {0, 0, 0, 3}},
      {{1, 3, 0, 0}, {0, 0, 0, 2}},  {{2, 0, 1, 0}, {0, 0, 0, 1}},
      {{2, 1, 0, 0}, {0, 0, 1, 0}},  {{3, 0, 0, 1}, {0, 2, 0, 0}},
      {{7, 0, 0, 0}, {0, 1, 0, 0}},
  };
}

EV x_power(std::size_t m, std::int64_t l) {
  EV v(m);
  v[0] = l;
  return v;
}

EV random_vector(std::mt19937_64& rng, std::size_t m, std::int64_t max) {
  std::uniform_int_distribution<std::int64_t> d(0, max);
  EV v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

TEST(IdealGenerators, OrientedByOrder) {
  NumericalSemigroup s({7, 9, 11});
  const auto gens = ideal_generators(s, OrderSpec::lex(4));
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(gens[0], (Binomial{{7, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(gens[1], (Binomial{{9, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(gens[2], (Binomial{{11, 0, 0, 0}, {0, 0, 0, 1}}));

  const auto one = ideal_generators(NumericalSemigroup({1}), OrderSpec::lex(2));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Binomial{{1, 0}, {0, 1}}));
  EXPECT_THROW(ideal_generators(s, OrderSpec::lex(3)), LengthMismatch);
}

TEST(Binomial, Orientation) {
  const auto lex = OrderSpec::lex(2);
  EXPECT_EQ(Binomial::oriented({0, 3}, {1, 0}, lex), (Binomial{{1, 0}, {0, 3}}));
  EXPECT_THROW(Binomial::oriented({1, 1}, {1, 1}, lex), InvalidArgument);
  EXPECT_THROW(GroebnerBasis(lex, {{{0, 3}, {1, 0}}}), InvariantViolation);
}

TEST(Buchberger, LexBasisOf7_9_11) {
  const auto b = lex_basis(NumericalSemigroup({7, 9, 11}));
  EXPECT_EQ(b.size(), 17u);
  EXPECT_EQ(as_set(b), known_lex_basis());
  std::set<EV> corners(b.corners().begin(), b.corners().end());
  const std::set<EV> known{{0, 0, 11, 0}, {0, 1, 0, 1}, {0, 1, 9, 0}, {0, 2, 7, 0},
                             {0, 3, 5, 0},  {0, 4, 3, 0}, {0, 5, 1, 0}, {0, 6, 0, 0},
                             {1, 0, 0, 2},  {1, 0, 1, 1}, {1, 0, 3, 0}, {1, 2, 2, 0},
                             {1, 3, 0, 0},  {2, 0, 1, 0}, {2, 1, 0, 0}, {3, 0, 0, 1},
                             {7, 0, 0, 0}};
  EXPECT_EQ(corners, known);
}

TEST(Buchberger, TwoGeneratorXFreePart) {
  // Kernel of (y1, y2) -> (t^2, t^3) by brute force: the least degree with
  // two distinct x-free monomials gives the only minimal relation.
  std::map<std::int64_t, std::vector<EV>> by_degree;
  for (std::int64_t a = 0; a <= 6; ++a) {
    for (std::int64_t b = 0; b <= 4; ++b) {
      if (2 * a + 3 * b <= 12) by_degree[2 * a + 3 * b].push_back({0, a, b});
    }
  }
  std::int64_t first = -1;
  for (const auto& [deg, monos] : by_degree) {
    if (monos.size() > 1) {
      first = deg;
      break;
    }
  }
  ASSERT_EQ(first, 6);
  const auto& pair = by_degree[6];
  const auto lex = OrderSpec::lex(3);
  const auto expected = Binomial::oriented(pair[0], pair[1], lex);

  const auto b = lex_basis(NumericalSemigroup({2, 3}));
  std::vector<Binomial> x_free;
  for (const auto& e : b.elements()) {
    if (e.lead[0] == 0 && e.trail[0] == 0) x_free.push_back(e);
  }
  ASSERT_EQ(x_free.size(), 1u);
  EXPECT_EQ(x_free[0], expected);
  EXPECT_EQ(expected, (Binomial{{0, 3, 0}, {0, 0, 2}}));
}

TEST(Buchberger, Apery13BasesOf7_8_9_13) {
  NumericalSemigroup s({7, 8, 9, 13});
  const std::set<Binomial> b2{
      {{7, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}, {{4, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
      {{2, 0, 0, 2, 0}, {0, 1, 0, 0, 1}}, {{1, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
      {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}, {{1, 0, 0, 0, 1}, {0, 2, 0, 0, 0}},
      {{0, 0, 0, 3, 0}, {0, 2, 0, 0, 1}}, {{0, 0, 1, 2, 0}, {0, 0, 0, 0, 2}},
      {{0, 2, 1, 0, 0}, {0, 0, 0, 1, 1}}, {{0, 3, 0, 0, 0}, {0, 0, 1, 0, 1}},
      {{0, 0, 2, 0, 0}, {0, 1, 0, 1, 0}}};
  const auto revlex = apery_order(s.generators(), 3, {{0, 1, 2}, InnerFlavor::Revlex});
  const auto basis2 = buchberger(ideal_generators(s, revlex), revlex);
  EXPECT_EQ(basis2.size(), 11u);
  EXPECT_EQ(as_set(basis2), b2);

  std::set<Binomial> b1{
      {{7, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}, {{4, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
      {{2, 0, 0, 2, 0}, {0, 1, 0, 0, 1}}, {{1, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
      {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}, {{1, 0, 0, 0, 1}, {0, 2, 0, 0, 0}},
      {{0, 0, 5, 0, 0}, {0, 2, 0, 0, 2}}, {{0, 0, 3, 1, 0}, {0, 1, 0, 0, 2}},
      {{0, 1, 3, 0, 0}, {0, 0, 0, 2, 1}}, {{0, 0, 0, 3, 0}, {0, 2, 0, 0, 1}},
      {{0, 0, 1, 2, 0}, {0, 0, 0, 0, 2}}, {{0, 2, 1, 0, 0}, {0, 0, 0, 1, 1}},
      {{0, 3, 0, 0, 0}, {0, 0, 1, 0, 1}}, {{0, 1, 0, 1, 0}, {0, 0, 2, 0, 0}}};
  const auto lex = apery_order(s.generators(), 3, InnerOrder::default_for(4, 3));
  const auto basis1 = buchberger(ideal_generators(s, lex), lex);
  EXPECT_EQ(basis1.size(), 14u);
  EXPECT_EQ(as_set(basis1), b1);
}

TEST(NormalForm, GapTableFor7_9_11) {
  NumericalSemigroup s({7, 9, 11});
  const auto b = lex_basis(s);
  const std::map<std::int64_t, EV> table{
      {1, {1, 0, 0, 0}},  {2, {2, 0, 0, 0}},  {3, {3, 0, 0, 0}},  {4, {4, 0, 0, 0}},
      {5, {5, 0, 0, 0}},  {6, {6, 0, 0, 0}},  {8, {1, 1, 0, 0}},  {10, {1, 0, 1, 0}},
      {12, {1, 0, 0, 1}}, {13, {2, 0, 0, 1}}, {15, {1, 2, 0, 0}}, {17, {1, 1, 1, 0}},
      {19, {1, 0, 2, 0}}, {24, {1, 2, 1, 0}}, {26, {1, 1, 2, 0}}};
  for (const auto& [l, expected] : table) {
    EXPECT_EQ(normal_form(x_power(4, l), b), expected) << "x^" << l;
  }
  const auto nf = normal_form(x_power(4, 26), b);
  EXPECT_EQ(normal_form(nf, b), nf);
  EXPECT_EQ(normal_form(x_power(4, 26), b.elements()), nf);
  EXPECT_THROW(normal_form(EV{1, 2}, b), LengthMismatch);
}

TEST(Staircase, CornerMembership) {
  const auto b = lex_basis(NumericalSemigroup({7, 9, 11}));
  EXPECT_FALSE(in_staircase_complement({1, 1, 0, 1}, b));
  EXPECT_TRUE(in_staircase_complement({0, 0, 0, 0}, b));
  EXPECT_FALSE(in_staircase_complement({7, 0, 0, 0}, b));
  EXPECT_TRUE(in_staircase_complement({6, 0, 0, 0}, b));
  for (const auto& e : b.elements()) EXPECT_TRUE(in_staircase_complement(e.trail, b));
}

TEST(PhiDegree, Values) {
  const V w{7, 9, 11};
  EXPECT_EQ(phi_degree(EV{1, 1, 2, 0}, w), 26);
  EXPECT_EQ(phi_degree(EV{0, 0, 0, 0}, w), 0);
  EXPECT_THROW(phi_degree(EV{0, 0}, w), LengthMismatch);
  const std::vector<std::vector<std::int64_t>> gens{{2, 0}, {1, 1}};
  EXPECT_EQ(phi_degree(EV{1, 0, 1, 2}, 2, gens), (V{5, 2}));
}

TEST(GroebnerProperty, ReducedAndClosedUnderSPairs) {
  for (const auto& s : random_corpus(101, 40, 2, 5, 40)) {
    const auto o = apery_order(s.generators(), s.rank() - 1,
                               InnerOrder::default_for(s.rank(), s.rank() - 1));
    const auto b = buchberger(ideal_generators(s, o), o);
    const auto elems = b.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      EXPECT_EQ(phi_degree(elems[i].lead, s.generators()),
                phi_degree(elems[i].trail, s.generators()));
      EXPECT_TRUE(in_staircase_complement(elems[i].trail, b));
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (i != j) EXPECT_FALSE(elems[j].lead.divides(elems[i].lead));
      }
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const auto l = lcm(elems[i].lead, elems[j].lead);
        EXPECT_EQ(normal_form(l - elems[i].lead + elems[i].trail, b),
                  normal_form(l - elems[j].lead + elems[j].trail, b));
      }
    }
  }
}

TEST(GroebnerProperty, NormalFormSeparatesDegrees) {
  std::mt19937_64 rng(77);
  for (const auto& s : random_corpus(103, 30, 2, 4, 30)) {
    const auto b = lex_basis(s);
    const std::size_t m = s.rank() + 1;
    for (int t = 0; t < 40; ++t) {
      const auto u = random_vector(rng, m, 6);
      auto v = random_vector(rng, m, 6);
      if (t % 2 == 0) {
        // Same degree: shift u's degree onto the x coordinate.
        v = EV(m);
        v[0] = phi_degree(u, s.generators());
      }
      const auto nu = normal_form(u, b), nv = normal_form(v, b);
      EXPECT_EQ(phi_degree(nu, s.generators()), phi_degree(u, s.generators()));
      EXPECT_EQ(nu == nv, phi_degree(u, s.generators()) == phi_degree(v, s.generators()));
    }
  }
}

TEST(GroebnerProperty, SelectionStrategiesAgree) {
  for (const auto& s : random_corpus(107, 30, 2, 5, 30)) {
    for (const auto& o : {OrderSpec::lex(s.rank() + 1),
                          apery_order(s.generators(), 0, InnerOrder::default_for(s.rank(), 0))}) {
      const auto gens = ideal_generators(s, o);
      BuchbergerStats graded_stats;
      const auto graded = buchberger(gens, o, {}, &graded_stats);
      BuchbergerOptions fifo, normal, bare;
      fifo.selection = PairSelection::Fifo;
      normal.selection = PairSelection::Normal;
      bare.coprime_criterion = false;
      bare.chain_criterion = false;
      EXPECT_EQ(buchberger(gens, o, fifo), graded);
      EXPECT_EQ(buchberger(gens, o, normal), graded);
      EXPECT_EQ(buchberger(gens, o, bare), graded);
      EXPECT_GT(graded_stats.pairs_considered, 0u);
    }
  }
}

TEST(Grading, Inference) {
  NumericalSemigroup s({7, 9, 11});
  const auto lex = OrderSpec::lex(4);
  EXPECT_EQ(infer_grading(ideal_generators(s, lex), 4), (V{1, 7, 9, 11}));
  // x - y, y^2 - x: no positive grading.
  const std::vector<Binomial> skew{{{1, 0}, {0, 1}}, {{2, 0}, {0, 1}}};
  EXPECT_TRUE(infer_grading(skew, 2).empty());
  BuchbergerOptions bad;
  bad.grading = {1, 1, 1, 1};
  EXPECT_THROW(buchberger(ideal_generators(s, lex), lex, bad), InvalidArgument);
  bad.grading = {1, 7, 9, 11};
  EXPECT_NO_THROW(buchberger(ideal_generators(s, lex), lex, bad));
}
