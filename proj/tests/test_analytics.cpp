#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "kfreq/analytics.hpp"

using namespace kfreq;

namespace {

// Independent scan in long double.
int id_scan(int n) {
  const long double b = static_cast<long double>(n - 2) * (n - 3);
  for (int i = 4; i <= n; ++i) {
    const long double lhs = (b - static_cast<long double>(i - 2) * (i - 3)) /
                            (b - static_cast<long double>(i - 1) * (i - 2));
    if (lhs >= std::sqrt(1.0L + 2.0L / (static_cast<long double>(i) * (i + 1)))) return i;
  }
  return -1;
}

long double log_binom(int n, int k) {
  return std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
}

}  // namespace

TEST(Bounds, TableValues) {
  const auto b9 = bounds(20, 9);
  EXPECT_DOUBLE_EQ(b9.f_lb, 18);
  EXPECT_DOUBLE_EQ(b9.f_oavg, 26);
  EXPECT_DOUBLE_EQ(b9.f_lb_worst, 14);
  EXPECT_DOUBLE_EQ(bounds(14, 14).f_lb, 45.5);
  EXPECT_DOUBLE_EQ(bounds(10, 4).f_oavg, 3.5);
  EXPECT_EQ(bounds(13, 5).P0, 8);
  EXPECT_EQ(bounds(14, 5).P0, 9);
  for (int i = 5; i < 40; ++i) EXPECT_LT(bounds(40, i).f_lb, bounds(40, i).f_oavg);
  EXPECT_THROW(bounds(10, 3), std::invalid_argument);
}

TEST(Bounds, RAndEpsilon) {
  const auto b = bounds(50, 17);
  const BigRational one(1);
  EXPECT_EQ(one - b.r, (one - b.epsilon) * (one - b.epsilon));
}

TEST(Bounds, PartitionIdentity) {
  for (int n = 8; n <= 3000; n += 97)
    for (int i = 4; i <= n; i += std::max(1, n / 23)) {
      const auto b = bounds(n, i);
      ASSERT_GE(b.J, 0);
      ASSERT_GE(b.K, 0);
      ASSERT_GE(b.L, 0);
      ASSERT_EQ(b.J + b.K + b.L, binomial(n - 2, i - 2));
    }
}

TEST(Bounds, CoverageMatchesSubsetCount) {
  // other vertices 0..n-3; 0,1 neighbour one endpoint, 2,3 the other
  for (int n : {8, 9, 11}) {
    for (int i = 4; i <= n; ++i) {
      const int m = n - 2, k = i - 2;
      long J = 0, K = 0, L = 0;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        const bool a = (mask & 3u) == 3u, b = (mask & 12u) == 12u;
        if ((mask & 15u) == 0) ++J;
        else if (a || b) ++K;
        else ++L;
      }
      const auto bd = bounds(n, i);
      EXPECT_EQ(bd.J, J) << n << " " << i;
      EXPECT_EQ(bd.K, K) << n << " " << i;
      EXPECT_EQ(bd.L, L) << n << " " << i;
    }
  }
}

TEST(SolveId, Anchors) {
  EXPECT_EQ(solve_id(100), 18);
  EXPECT_EQ(solve_id(1000), 80);
  EXPECT_EQ(solve_id(10000), 369);
  EXPECT_THROW(solve_id(7), std::invalid_argument);
}

TEST(SolveId, MatchesLongDoubleScan) {
  for (int n : {8, 9, 12, 20, 57, 100, 333, 1000, 2500, 10000}) EXPECT_EQ(solve_id(n), id_scan(n)) << n;
}

TEST(SolveId, MonotoneAndBelowGrowthBound) {
  int prev = 0;
  for (double e = 2.0; e <= 5.0; e += 0.25) {
    const int n = static_cast<int>(std::lround(std::pow(10.0, e)));
    const int id = solve_id(n);
    EXPECT_GE(id, prev) << n;
    EXPECT_LT(id, 4.0 * std::pow(n, 4.0 / 7.0)) << n;
    prev = id;
  }
}

TEST(SolveId, ResidualVariantIsLower) {
  EXPECT_LE(solve_id_residual(1000), solve_id(1000));
  EXPECT_EQ(solve_id_residual(1000), 74);
}

TEST(PdModel, CurveAgainstLogGamma) {
  const int n = 300;
  const auto curve = pd_model(n);
  ASSERT_EQ(curve.size(), static_cast<std::size_t>(n - 3));
  for (const auto& pt : curve) {
    const int i = pt.i;
    long double K = 2 * std::exp(log_binom(n - 4, i - 4) - log_binom(n - 2, i - 2));
    if (i >= 6) K -= std::exp(log_binom(n - 6, i - 6) - log_binom(n - 2, i - 2));
    const long double ii = static_cast<long double>(i) * (i - 1);
    const long double p = 1 - (1 - (i + 4) / ii) * K - 2 / ii;
    ASSERT_NEAR(pt.r, static_cast<double>(K), 1e-12) << i;
    ASSERT_NEAR(pt.p, static_cast<double>(p), 1e-12) << i;
  }
  EXPECT_EQ(curve.back().pd, 0.0);
}

TEST(PdModel, N1000Summary) {
  const auto s = summarize_pd(1000);
  EXPECT_EQ(s.p_peak, 33);
  EXPECT_NEAR(s.mean_pd(33, 589), 0.001022, 1e-6);
  EXPECT_NEAR(s.mean_pd(590, 1000), 0.001039, 1e-6);
  for (const auto& pt : s.curve)
    if (pt.i > 545) EXPECT_LE(pt.p, 0.5) << pt.i;
  for (const auto& pt : s.curve)
    if (pt.i >= 33 && pt.i < 1000) EXPECT_GT(pt.pd, 0.0) << pt.i;
  // the model's own decrement peak, reported next to the printed 589
  EXPECT_EQ(s.pd_peak, 578);
  EXPECT_EQ(s.first_half, 543);
}

TEST(Coverage, Crossings) {
  const auto c = coverage_fractions(1000);
  EXPECT_EQ(c.k_exceeds_j_printed, 328);
  EXPECT_EQ(c.l_reaches_j_printed, 174);
  ASSERT_TRUE(c.k_exceeds_j && c.l_reaches_j);
  EXPECT_EQ(*c.k_exceeds_j, 330);
  EXPECT_EQ(*c.l_reaches_j, 173);
  for (const auto& row : c.rows) EXPECT_NEAR(row.J + row.K + row.L, 100.0, 1e-9);
}

TEST(Decrement, Arithmetic) {
  const auto flat = decrement_law(0.4, 0.4, 7);
  EXPECT_DOUBLE_EQ(flat.pd, 0);
  EXPECT_DOUBLE_EQ(flat.err, -0.8 / 42);
  const auto d = decrement_law(0.6, 0.5, 6);
  EXPECT_NEAR(d.err, 0.06, 1e-15);
  EXPECT_NEAR(*d.ratio, 0.5 / 0.6, 1e-15);
  EXPECT_TRUE(d.below_ratio);  // 0.5 * 7 < 0.6 * 6
  EXPECT_FALSE(decrement_law(0.6, 0.52, 6).below_ratio);  // 3.64 > 3.6
  EXPECT_FALSE(decrement_law(0.0, 0.0, 5).ratio.has_value());
  EXPECT_THROW(decrement_law(0.5, 0.5, 3), std::invalid_argument);
}

TEST(Sparsify, Threshold) {
  EXPECT_EQ(sparsify_threshold(1000).printed, 546);
  EXPECT_EQ(sparsify_threshold(100).printed, 59);
  EXPECT_EQ(sparsify_threshold(1000).recomputed, 546);
}

TEST(Constants, RecomputedFromClosedForms) {
  int flagged = 0;
  for (const auto& c : check_constants()) {
    EXPECT_EQ(c.agrees, std::abs(c.printed - c.recomputed) <= 1e-4) << c.name;
    if (!c.agrees) ++flagged;
  }
  // only the K > J slope disagrees (0.3281 against the printed 0.3236)
  EXPECT_EQ(flagged, 1);
}

TEST(Rounding, HalfUp) {
  EXPECT_EQ(round_half_up(2.5), 3);
  EXPECT_EQ(round_half_up(2.49), 2);
  EXPECT_EQ(round_half_up(-0.5), 0);
}
