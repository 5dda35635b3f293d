#include <gtest/gtest.h>

#include <random>

#include "aperykit/errors.hpp"
#include "aperykit/monomial_order.hpp"

using namespace aperykit;
using V = std::vector<std::int64_t>;

namespace {

ExponentVector random_vector(std::mt19937_64& rng, std::size_t m, std::int64_t max) {
  std::uniform_int_distribution<std::int64_t> d(0, max);
  ExponentVector v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = d(rng);
  return v;
}

std::vector<OrderSpec> sample_orders() {
  const V w{7, 8, 9, 13};
  return {
      OrderSpec::lex(5),
      OrderSpec::grevlex(5),
      apery_order(w, 3, InnerOrder::default_for(4, 3)),
      apery_order(w, 3, {{0, 1, 2}, InnerFlavor::Revlex}),
      apery_order(w, 1, {{3, 0, 2}, InnerFlavor::Revlex}),
      block_lambda_order(2, std::vector<std::vector<std::int64_t>>{{1, 1}, {2, 0}, {0, 2}}, 2),
  };
}

}  // namespace

TEST(OrderSpec, LexComparison) {
  const auto lex = OrderSpec::lex(2);
  EXPECT_EQ(lex.compare({1, 0}, {0, 5}), std::strong_ordering::greater);
  EXPECT_EQ(lex.compare({0, 5}, {1, 0}), std::strong_ordering::less);
  EXPECT_EQ(lex.compare({3, 4}, {3, 4}), std::strong_ordering::equal);
  EXPECT_THROW(lex.compare({1, 0, 0}, {0, 1}), LengthMismatch);
}

TEST(OrderSpec, RejectsNonTotalOrNonMonomialRows) {
  EXPECT_THROW(OrderSpec(2, {{1, 1}}), InvalidOrder);                // not total
  EXPECT_THROW(OrderSpec(2, {{1, -1}, {0, 1}}), InvalidOrder);       // y < 1
  EXPECT_THROW(OrderSpec(2, {{1, 0}, {0, 1, 0}}), LengthMismatch);
  EXPECT_NO_THROW(OrderSpec(2, {{1, 1}, {0, -1}}));                   // grevlex
}

TEST(AperyOrder, MatchesDisplayedMatrix) {
  const V w{7, 8, 9, 13};
  const auto o = apery_order(w, 3, InnerOrder::default_for(4, 3));
  const std::vector<WeightRow> expected{
      {1, 0, 0, 0, 0}, {0, 7, 8, 9, 0}, {0, 1, 0, 0, 0},
      {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  EXPECT_EQ(o.rows(), expected);
  EXPECT_EQ(o.label(), "apery:j=4,inner=1,2,3,lex");

  // Column j+1 is zero in the grading and tie rows for j in the middle too.
  const auto mid = apery_order(w, 1, InnerOrder::default_for(4, 1));
  for (std::size_t r = 1; r + 1 < mid.rows().size(); ++r) EXPECT_EQ(mid.rows()[r][2], 0);
  EXPECT_EQ(mid.rows().back(), (WeightRow{0, 0, 1, 0, 0}));
}

TEST(AperyOrder, ComparesXThenGrade) {
  const V w{7, 9, 11};
  const auto o = apery_order(w, 2, InnerOrder::default_for(3, 2));
  // x dominates everything.
  EXPECT_EQ(o.compare({1, 0, 0, 0}, {0, 9, 9, 9}), std::strong_ordering::greater);
  // Then 7 a1 + 9 a2: y2 (9) beats y1 (7); y3 is ignored by the grade.
  EXPECT_EQ(o.compare({0, 0, 1, 0}, {0, 1, 0, 5}), std::strong_ordering::greater);
  // Equal grade (63): inner lex prefers the larger y1 exponent.
  EXPECT_EQ(o.compare({0, 9, 0, 0}, {0, 0, 7, 0}), std::strong_ordering::greater);
  // Same grade and inner part: the y3 exponent decides last.
  EXPECT_EQ(o.compare({0, 1, 0, 1}, {0, 1, 0, 0}), std::strong_ordering::greater);
}

TEST(AperyOrder, RejectsBadPermutations) {
  const V w{7, 8, 9, 13};
  EXPECT_THROW(apery_order(w, 3, {{0, 1}, InnerFlavor::Lex}), InvalidPermutation);
  EXPECT_THROW(apery_order(w, 3, {{0, 1, 3}, InnerFlavor::Lex}), InvalidPermutation);
  EXPECT_THROW(apery_order(w, 3, {{0, 1, 1}, InnerFlavor::Lex}), InvalidPermutation);
  EXPECT_THROW(apery_order(w, 4, InnerOrder::default_for(4, 3)), InvalidArgument);
  EXPECT_THROW(apery_order(V{7, -8}, 0, InnerOrder::default_for(2, 0)), InvalidArgument);
}

TEST(AperyOrder, RevlexTieRule) {
  // Among x-free, y_j-free vectors of equal grade, a larger exponent on the
  // last listed variable loses.
  const V w{7, 8, 9, 13};
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::size_t> seq;
    for (std::size_t v = 0; v < 3; ++v) {
      if (v != i) seq.push_back(v);
    }
    seq.push_back(i);
    const auto o = apery_order(w, 3, {seq, InnerFlavor::Revlex});
    int checked = 0;
    for (int t = 0; t < 20000 && checked < 50; ++t) {
      auto u = random_vector(rng, 5, 6), v = random_vector(rng, 5, 6);
      u[0] = v[0] = u[4] = v[4] = 0;
      const auto grade = [&](const ExponentVector& e) { return 7 * e[1] + 8 * e[2] + 9 * e[3]; };
      if (grade(u) != grade(v) || u[i + 1] == v[i + 1]) continue;
      ++checked;
      const bool u_bigger_yi = u[i + 1] > v[i + 1];
      EXPECT_EQ(o.less(u, v), u_bigger_yi);
    }
    EXPECT_GT(checked, 10);
  }
}

TEST(BlockLambdaOrder, OneDimensionalMatrix) {
  std::vector<std::vector<std::int64_t>> gens{{7}, {9}, {11}, {15}};
  const auto o = block_lambda_order(1, gens, 1);
  const std::vector<WeightRow> expected{
      {1, 0, 0, 0, 0}, {0, 7, 9, 11, 15}, {0, 0, 0, 0, -1}, {0, 0, 0, -1, 0}, {0, 0, -1, 0, 0}};
  EXPECT_EQ(o.rows(), expected);
  EXPECT_THROW(block_lambda_order(1, gens, 0), InvalidLambda);
  EXPECT_THROW(block_lambda_order(1, gens, 5), InvalidLambda);
}

TEST(BlockLambdaOrder, AllLambdaIsGradedRevlexOnY) {
  std::vector<std::vector<std::int64_t>> gens{{1}, {2}, {3}};
  const auto o = block_lambda_order(1, gens, 3);
  // Equal grade 3: y1^3 vs y1 y2 vs y3. Larger y3 loses, then larger y2.
  EXPECT_TRUE(o.less({0, 0, 0, 1}, {0, 1, 1, 0}));
  EXPECT_TRUE(o.less({0, 1, 1, 0}, {0, 3, 0, 0}));
}

// Direct definition of the d = 2 block ordering: lex on x, then the Z^2
// degree coordinate by coordinate, then larger exponents on y_k, y_{k-1}, ..
// lose.
TEST(BlockLambdaOrder, TwoDimensionalAgainstDefinition) {
  std::vector<std::vector<std::int64_t>> gens{{1, 1}, {2, 0}, {0, 2}};
  const auto o = block_lambda_order(2, gens, 2);
  auto definition = [&](const ExponentVector& u, const ExponentVector& v) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (u[c] != v[c]) return u[c] < v[c];
    }
    for (std::size_t c = 0; c < 2; ++c) {
      std::int64_t du = 0, dv = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        du += u[2 + j] * gens[j][c];
        dv += v[2 + j] * gens[j][c];
      }
      if (du != dv) return du < dv;
    }
    for (std::size_t j = 3; j-- > 0;) {
      if (u[2 + j] != v[2 + j]) return u[2 + j] > v[2 + j];
    }
    return false;
  };
  std::mt19937_64 rng(8);
  int equal_grade = 0;
  for (int t = 0; t < 2000; ++t) {
    auto u = random_vector(rng, 5, 3), v = random_vector(rng, 5, 3);
    if (t % 2 == 0) {
      // y1^2 and y2 y3 both have degree (2,2): force ties in the x-block
      // and the grading to exercise the revlex rows.
      v = u;
      u[2] += 2;
      v[3] += 1;
      v[4] += 1;
      ++equal_grade;
    }
    EXPECT_EQ(o.less(u, v), definition(u, v)) << t;
  }
  EXPECT_GT(equal_grade, 0);
}

TEST(EliminationCheck, Cases) {
  EXPECT_TRUE(is_elimination_for_x(apery_order(V{7, 9, 11}, 0, InnerOrder::default_for(3, 0))));
  EXPECT_FALSE(is_elimination_for_x(OrderSpec::grevlex(4)));
  EXPECT_TRUE(is_elimination_for_x(OrderSpec::lex(4)));
  EXPECT_TRUE(is_elimination_for_x(
      block_lambda_order(2, std::vector<std::vector<std::int64_t>>{{1, 1}, {2, 0}}, 1), 2));
  EXPECT_FALSE(is_elimination_for_x(OrderSpec(2, {{1, 1}, {1, 0}}), 1));
}

TEST(OrderProperty, TotalAndMonotone) {
  std::mt19937_64 rng(42);
  for (const auto& o : sample_orders()) {
    const std::size_t m = o.num_vars();
    const ExponentVector zero(m);
    for (int t = 0; t < 300; ++t) {
      const auto u = random_vector(rng, m, 5);
      const auto v = random_vector(rng, m, 5);
      const auto w = random_vector(rng, m, 5);
      EXPECT_EQ(o.compare(u, v) == std::strong_ordering::equal, u == v);
      EXPECT_EQ(o.less(u, v), o.compare(v, u) == std::strong_ordering::greater) << o.label();
      if (o.less(u, v) && o.less(v, w)) EXPECT_TRUE(o.less(u, w));
      if (o.less(u, v)) EXPECT_TRUE(o.less(u + w, v + w));
      if (!u.is_zero()) EXPECT_TRUE(o.less(zero, u)) << o.label();
    }
  }
}

TEST(OrderProperty, AperyOrdersEliminateX) {
  const V w{7, 8, 9, 13, 17};
  for (std::size_t j = 0; j < w.size(); ++j) {
    EXPECT_TRUE(is_elimination_for_x(apery_order(w, j, InnerOrder::default_for(5, j))));
  }
}
