#include <gtest/gtest.h>

#include "skewenergy/charpoly.hpp"
#include "support/oracles.hpp"

namespace se = skewenergy;
using se::BigInt;

namespace {

se::SkewCharPoly poly(int n, std::vector<long long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return se::SkewCharPoly(n, std::move(v));
}

se::errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const se::error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected skewenergy::error";
  return se::errc::internal;
}

}  // namespace

TEST(Charpoly, SmallExamples) {
  EXPECT_EQ(se::charpoly(se::build(2, {{0, 1}})), poly(2, {1, 1}));
  EXPECT_EQ(se::charpoly(se::construct_even_cycle(4, true)), poly(4, {1, 4, 4}));
  EXPECT_EQ(se::charpoly(se::construct_even_cycle(4, false)), poly(4, {1, 4, 0}));
  EXPECT_EQ(se::charpoly(se::construct_path(3)), poly(3, {1, 2}));
  EXPECT_EQ(se::charpoly(se::build(3, {{0, 1}, {1, 2}, {2, 0}})), poly(3, {1, 3}));
  EXPECT_EQ(se::charpoly(se::build(1, {})), poly(1, {1}));
  EXPECT_EQ(se::to_string(se::charpoly(se::construct_o_plus(6, 7))), "6: 1 7 4 0");
}

TEST(Charpoly, ConstructionClosedForms) {
  for (int n = 5; n <= 10; ++n) {
    for (int m = n; m <= 2 * n - 3; ++m) {
      std::vector<long long> c(static_cast<std::size_t>(n / 2 + 1), 0);
      c[0] = 1;
      c[1] = m;
      c[2] = static_cast<long long>(m - n + 1) * (2 * n - m - 3);
      EXPECT_EQ(se::charpoly(se::construct_o_plus(n, m)), poly(n, c)) << "O+ n=" << n << " m=" << m;
    }
    for (int m = n; m <= 2 * n - 4; ++m) {
      std::vector<long long> c(static_cast<std::size_t>(n / 2 + 1), 0);
      c[0] = 1;
      c[1] = m;
      c[2] = static_cast<long long>(m - n + 2) * (2 * n - m - 4);
      EXPECT_EQ(se::charpoly(se::construct_b_plus(n, m)), poly(n, c)) << "B+ n=" << n << " m=" << m;
    }
  }
  EXPECT_EQ(se::charpoly(se::construct_b_plus(6, 7)), poly(6, {1, 7, 3, 0}));
}

TEST(Charpoly, MatchesLeibnizDeterminant) {
  se::testing::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const auto g = se::testing::random_oriented(rng, n, 0.6);
    const auto full = se::testing::leibniz_charpoly(se::skew_adjacency(g));
    const auto fl = se::faddeev_leverrier<long long>(se::skew_adjacency(g));
    EXPECT_EQ(fl, full);
    const auto p = se::charpoly(g);
    for (int k = 0; k <= n; ++k) {
      if (k % 2) EXPECT_EQ(full[k], 0) << "odd coefficient a" << k;
      else EXPECT_EQ(p.even(k / 2), full[k]);
    }
  }
}

TEST(Charpoly, LeadingCoefficientsAndSign) {
  se::testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = se::testing::random_oriented(rng, 1 + trial % 12, 0.5);
    const auto p = se::charpoly(g);
    EXPECT_EQ(p.even(0), 1);
    if (g.n() >= 2) {
      EXPECT_EQ(p.even(1), g.m());
    }
    for (const auto& c : p.coeffs()) EXPECT_GE(c, 0);
  }
}

TEST(Charpoly, InvariantUnderRelabeling) {
  se::testing::Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 10;
    const auto g = se::testing::random_oriented(rng, n, 0.5);
    EXPECT_EQ(se::charpoly(g.relabeled(se::testing::random_permutation(rng, n))), se::charpoly(g));
  }
}

TEST(DeleteArc, Examples) {
  const auto k2 = se::build(2, {{0, 1}});
  EXPECT_EQ(se::charpoly_delete_arc(k2, {0, 1}), poly(2, {1, 1}));

  const auto p3 = se::construct_path(3);
  EXPECT_EQ(se::charpoly(p3.without_arc({0, 1})), poly(3, {1, 1}));
  EXPECT_EQ(se::charpoly_delete_arc(p3, {0, 1}), poly(3, {1, 2}));

  const auto tri = se::build(3, {{0, 1}, {1, 2}, {2, 0}});
  for (const auto& a : tri.arcs()) EXPECT_EQ(se::charpoly_delete_arc(tri, a), poly(3, {1, 3}));
}

TEST(DeleteArc, Rejections) {
  const auto c4 = se::construct_even_cycle(4, true);
  EXPECT_EQ(error_code([&] { se::charpoly_delete_arc(c4, {1, 0}); }), se::errc::precondition);
  EXPECT_EQ(error_code([&] { se::charpoly_delete_arc(c4, {0, 1}); }), se::errc::precondition);
}

TEST(DeleteArc, FailsOnEvenCycleWhenForced) {
  // The identity genuinely breaks on an even cycle: phi(C4) != phi(P4) + phi(K2).
  const auto c4 = se::construct_even_cycle(4, false);
  const auto lhs = se::charpoly(c4);
  const auto forced = se::detail::add_shifted(4, se::charpoly(c4.without_arc({0, 1})),
                                              se::charpoly(c4.without_vertices({0, 1})), 1);
  EXPECT_NE(lhs, forced);
}

TEST(Pendant, Examples) {
  const auto star = se::construct_star(4);
  for (int leaf = 1; leaf < 4; ++leaf) {
    const auto p = se::pendant_coefficients(star, 0, leaf);
    EXPECT_EQ(p, se::charpoly(star));
    EXPECT_EQ(p.even(1), 3);
    EXPECT_EQ(se::charpoly(star.without_vertices({leaf})).even(1), 2);
  }
  EXPECT_EQ(se::pendant_coefficients(se::build(2, {{0, 1}}), 0, 1), poly(2, {1, 1}));

  // B+(5,5): vertex 4 hangs off the hub 0.
  const auto b = se::construct_b_plus(5, 5);
  ASSERT_EQ(b.degree(4), 1);
  const auto p = se::pendant_coefficients(b, 0, 4);
  EXPECT_EQ(p, se::charpoly(b));
  EXPECT_EQ(p.even(2), se::charpoly(b.without_vertices({4})).even(2) + se::charpoly(b.without_vertices({4, 0})).even(1));
}

TEST(Pendant, Rejections) {
  const auto c4 = se::construct_even_cycle(4, true);
  EXPECT_EQ(error_code([&] { se::pendant_coefficients(c4, 0, 1); }), se::errc::precondition);
  const auto star = se::construct_star(4);
  EXPECT_EQ(error_code([&] { se::pendant_coefficients(star, 1, 2); }), se::errc::precondition);
}

TEST(QuasiCompare, Examples) {
  EXPECT_EQ(se::quasi_compare(poly(6, {1, 7, 3, 0}), poly(6, {1, 7, 4, 0})), se::QuasiOrder::StrictlyLess);
  EXPECT_EQ(se::quasi_compare(poly(6, {1, 7, 4, 0}), poly(6, {1, 7, 3, 0})), se::QuasiOrder::StrictlyGreater);
  EXPECT_EQ(se::quasi_compare(poly(6, {1, 7, 4, 0}), poly(6, {1, 7, 4, 0})), se::QuasiOrder::Equivalent);
  EXPECT_EQ(se::quasi_compare(poly(5, {1, 5, 2}), poly(5, {1, 6, 1})), se::QuasiOrder::Incomparable);
  EXPECT_EQ(se::quasi_compare(se::charpoly(se::construct_b_plus(6, 7)), se::charpoly(se::construct_o_plus(6, 7))),
            se::QuasiOrder::StrictlyLess);
}

TEST(QuasiCompare, RejectsDifferentOrders) {
  EXPECT_EQ(error_code([] { se::quasi_compare(poly(4, {1, 4, 4}), poly(5, {1, 4, 4})); }), se::errc::precondition);
}

TEST(Format, CoefficientLine) {
  EXPECT_EQ(se::to_string(poly(4, {1, 4, 4})), "4: 1 4 4");
  EXPECT_EQ(se::to_string(se::SkewCharPoly(0, {1})), "0: 1");
}
