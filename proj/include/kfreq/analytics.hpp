#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfreq/combinatorics.hpp"

namespace kfreq {

struct AnalyticParams {
  int n = 0;
  int i = 0;
  double f_lb = 0;        // C(i,2)/2
  double f_lb_worst = 0;  // 7 C(i,2)/18
  double f_oavg = 0;      // (i^2 - 4i + 7)/2
  double ord_ub = 0;      // 2(i-3)
  double ord_avg_ub = 0;  // (i+2)/2
  double pair_lb = 0;     // 4(i-1)^2/5
  double pair_lb_3_4 = 0;
  double pair_lb_7_10 = 0;
  int P0 = 0;
  BigRational epsilon;
  BigRational r;
  BigInt J, K, L;
};

// Peak index of an edge's total frequency: n/2+2 (even n), (n+1)/2+1 (odd n).
int peak_index(int n);

// Closed-form bounds for 4 <= i <= n.
AnalyticParams bounds(int n, int i);

// Round-half-up, used for the bracketed integer expressions.
long round_half_up(double x);

// Smallest i >= 4 meeting the square-root inequality for i_d, in exact
// integer arithmetic. Throws std::domain_error when no i <= n qualifies.
int solve_id(int n);

// Coefficients of p1(i) = (a i^2 + b i + c) / C(i,2).
struct ProbabilityModel {
  BigRational a{1, 2};
  BigRational b{-5, 4};
  BigRational c{0};
};

// Same search, but keeping the residual the square-root form drops: the
// ratio of coverage terms squared against (p1(i+1) / p1(i)) (i-1)/(i+1).
int solve_id_residual(int n, const ProbabilityModel& model = {});

struct PdPoint {
  int i = 0;
  double r = 0;
  double p = 0;
  double pd = 0;  // p_i - p_{i+1}; zero at i = n
};

// Extreme-case probability p_i = 1 - [1 - (i+4)/(i(i-1))] r - 2/(i(i-1)) with
// r = K / C(n-2, i-2), for i in [4, n]. Evaluated exactly, then rounded.
std::vector<PdPoint> pd_model(int n);

struct PdSummary {
  int n = 0;
  int p_peak = 0;        // argmax p_i
  int pd_peak = 0;       // argmax pd_i on [p_peak, n)
  int first_half = 0;    // first i past p_peak with p_i <= 1/2
  // Mean of pd over [lo, hi], skipping i = n where pd is undefined.
  double mean_pd(int lo, int hi) const;
  std::vector<PdPoint> curve;
};

PdSummary summarize_pd(int n);

struct CoverageRow {
  int i = 0;
  double J = 0, K = 0, L = 0, JL = 0;  // percent of C(n-2, i-2)
  double epsilon = 0, r = 0;
};

struct Coverage {
  std::vector<CoverageRow> rows;
  std::optional<int> k_exceeds_j;  // first i with K > J
  std::optional<int> l_reaches_j;  // first i with L >= J
  long k_exceeds_j_printed = 0;    // [0.3236 n + 4]
  long l_reaches_j_printed = 0;    // [0.1716 n + 2.0711]
};

Coverage coverage_fractions(int n);

struct DecrementRecord {
  double pd = 0;
  double err = 0;
  std::optional<double> ratio;  // p_next / p_i, absent when p_i = 0
  bool below_ratio = false;     // p_next (i+1) < p_i i
};

DecrementRecord decrement_law(double p_i, double p_next, int i);

struct SparsifyThreshold {
  long printed = 0;     // [0.5412 n + 5.1470]
  long recomputed = 0;  // [sqrt(1 - sqrt(1/2)) (n - 2.5) + 2.5 + 4]
};

SparsifyThreshold sparsify_threshold(int n);

// Printed constants next to values recomputed from their closed forms.
struct ConstantCheck {
  std::string name;
  double printed = 0;
  double recomputed = 0;
  bool agrees = false;  // |printed - recomputed| <= 1e-4
};

std::vector<ConstantCheck> check_constants();

}  // namespace kfreq
