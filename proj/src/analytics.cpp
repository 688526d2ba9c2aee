#include "kfreq/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kfreq {

namespace {

void require_n(int n, int min_n) {
  if (n < min_n)
    throw std::invalid_argument("model requires n >= " + std::to_string(min_n) + ", got " +
                                std::to_string(n));
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

BigRational ratio(const BigInt& num, const BigInt& den) {
  return den == 0 ? BigRational(0) : BigRational(num, den);
}

BigInt coverage_k(int n, int i) { return 2 * binomial(n - 4, i - 4) - binomial(n - 6, i - 6); }

// K / C(n-2, i-2) written out as a rational in i and n.
BigRational exact_r(int n, int i) {
  const BigInt a = BigInt(i - 2) * (i - 3);
  const BigInt b = BigInt(n - 2) * (n - 3);
  const BigInt c = a * (i - 4) * (i - 5);
  const BigInt d = b * (n - 4) * (n - 5);
  return BigRational(2 * a, b) - BigRational(c, d);
}

// Bisection for the root of a function increasing on [lo, hi].
template <class Fn>
double bisect(Fn f, double lo, double hi) {
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int peak_index(int n) { return n % 2 == 0 ? n / 2 + 2 : (n + 1) / 2 + 1; }

long round_half_up(double x) { return static_cast<long>(std::floor(x + 0.5)); }

AnalyticParams bounds(int n, int i) {
  if (i < 4) throw std::invalid_argument("bounds: i must be at least 4");
  if (i > n) throw std::invalid_argument("bounds: i must not exceed n");
  AnalyticParams a;
  a.n = n;
  a.i = i;
  const double c2 = i * (i - 1) / 2.0;
  const double sq = static_cast<double>(i - 1) * (i - 1);
  a.f_lb = c2 / 2.0;
  a.f_lb_worst = 7.0 * c2 / 18.0;
  a.f_oavg = (static_cast<double>(i) * i - 4.0 * i + 7.0) / 2.0;
  a.ord_ub = 2.0 * (i - 3);
  a.ord_avg_ub = (i + 2) / 2.0;
  a.pair_lb = 4.0 * sq / 5.0;
  a.pair_lb_3_4 = 3.0 * sq / 4.0;
  a.pair_lb_7_10 = 7.0 * sq / 10.0;
  a.P0 = peak_index(n);
  if (n > 3) {
    a.epsilon = BigRational(BigInt(i - 2) * (i - 3), BigInt(n - 2) * (n - 3));
    a.r = 2 * a.epsilon - a.epsilon * a.epsilon;
  }
  a.J = binomial(n - 6, i - 2);
  a.K = coverage_k(n, i);
  a.L = binomial(n - 2, i - 2) - a.J - a.K;
  return a;
}

int solve_id(int n) {
  require_n(n, 8);
  const BigInt base = BigInt(n - 2) * (n - 3);
  for (int i = 4; i <= n; ++i) {
    const BigInt A = base - BigInt(i - 2) * (i - 3);
    const BigInt B = base - BigInt(i - 1) * (i - 2);
    if (B <= 0) break;
    const BigInt ii = BigInt(i) * (i + 1);
    // A/B >= sqrt(1 + 2/(i(i+1)))  <=>  A^2 i(i+1) >= B^2 (i(i+1) + 2)
    if (A * A * ii >= B * B * (ii + 2)) return i;
  }
  throw std::domain_error("no i <= n satisfies the i_d inequality for n=" + std::to_string(n));
}

int solve_id_residual(int n, const ProbabilityModel& m) {
  require_n(n, 8);
  const BigInt base = BigInt(n - 2) * (n - 3);
  for (int i = 4; i <= n; ++i) {
    const BigInt A = base - BigInt(i - 2) * (i - 3);
    const BigInt B = base - BigInt(i - 1) * (i - 2);
    if (B <= 0) break;
    const BigRational q0 = m.a * i * i + m.b * i + m.c;
    const BigRational q1 = m.a * (i + 1) * (i + 1) + m.b * (i + 1) + m.c;
    if (q0 <= 0) continue;
    const BigRational lhs(A * A, B * B);
    const BigRational rhs = q1 / q0 * BigRational(i - 1, i + 1);
    if (lhs >= rhs) return i;
  }
  throw std::domain_error("no i <= n satisfies the residual i_d inequality for n=" +
                          std::to_string(n));
}

std::vector<PdPoint> pd_model(int n) {
  require_n(n, 8);
  std::vector<BigRational> p;
  std::vector<PdPoint> out;
  p.reserve(static_cast<std::size_t>(n - 3));
  out.reserve(static_cast<std::size_t>(n - 3));
  for (int i = 4; i <= n; ++i) {
    const BigRational r = exact_r(n, i);
    const BigRational ii = BigRational(i) * (i - 1);
    p.push_back(1 - (1 - BigRational(i + 4) / ii) * r - BigRational(2) / ii);
    PdPoint pt;
    pt.i = i;
    pt.r = to_double(r);
    pt.p = to_double(p.back());
    out.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < p.size(); ++k) out[k].pd = to_double(p[k] - p[k + 1]);
  return out;
}

double PdSummary::mean_pd(int lo, int hi) const {
  double sum = 0;
  int count = 0;
  for (const auto& pt : curve)
    if (pt.i >= lo && pt.i <= hi && pt.i < n) {
      sum += pt.pd;
      ++count;
    }
  return count ? sum / count : 0.0;
}

PdSummary summarize_pd(int n) {
  PdSummary s;
  s.n = n;
  s.curve = pd_model(n);
  const auto peak = std::max_element(s.curve.begin(), s.curve.end(),
                                     [](const PdPoint& a, const PdPoint& b) { return a.p < b.p; });
  s.p_peak = peak->i;
  auto last = s.curve.end() - 1;  // pd undefined at i = n
  const auto pd_top = std::max_element(peak, last, [](const PdPoint& a, const PdPoint& b) {
    return a.pd < b.pd;
  });
  s.pd_peak = pd_top == last ? s.p_peak : pd_top->i;
  const auto half = std::find_if(peak, s.curve.end(), [](const PdPoint& pt) { return pt.p <= 0.5; });
  s.first_half = half == s.curve.end() ? 0 : half->i;
  return s;
}

Coverage coverage_fractions(int n) {
  require_n(n, 8);
  Coverage c;
  c.k_exceeds_j_printed = round_half_up(0.3236 * n + 4);
  c.l_reaches_j_printed = round_half_up(0.1716 * n + 2.0711);
  for (int i = 4; i <= n; ++i) {
    const AnalyticParams a = bounds(n, i);
    const BigInt total = binomial(n - 2, i - 2);
    CoverageRow row;
    row.i = i;
    row.J = 100.0 * to_double(ratio(a.J, total));
    row.K = 100.0 * to_double(ratio(a.K, total));
    row.L = 100.0 * to_double(ratio(a.L, total));
    row.JL = 100.0 * to_double(ratio(a.J + a.L, total));
    row.epsilon = to_double(a.epsilon);
    row.r = to_double(a.r);
    c.rows.push_back(row);
    if (!c.k_exceeds_j && a.K > a.J) c.k_exceeds_j = i;
    if (!c.l_reaches_j && a.L >= a.J) c.l_reaches_j = i;
  }
  return c;
}

DecrementRecord decrement_law(double p_i, double p_next, int i) {
  if (i < 4) throw std::invalid_argument("decrement_law: i must be at least 4");
  DecrementRecord d;
  d.pd = p_i - p_next;
  d.err = d.pd - 2.0 * p_i / (static_cast<double>(i) * (i - 1));
  if (p_i != 0.0) d.ratio = p_next / p_i;
  d.below_ratio = p_next * (i + 1) < p_i * i;
  return d;
}

SparsifyThreshold sparsify_threshold(int n) {
  require_n(n, 8);
  SparsifyThreshold t;
  t.printed = round_half_up(0.5412 * n + 5.1470);
  const double s = std::sqrt(1.0 - std::sqrt(0.5));
  t.recomputed = round_half_up(s * (n - 2.5) + 2.5 + 4.0);
  return t;
}

std::vector<ConstantCheck> check_constants() {
  const double half_root = std::sqrt(0.5);
  const double s = std::sqrt(1.0 - half_root);
  const double balance = 3.0 - 2.0 * std::sqrt(2.0);
  // Large-n limit of K = J with t = (i-2)/(n-2): 1 - (1 - t^2)^2 = (1 - t)^4.
  const double kj = bisect(
      [](double t) { return 1.0 - std::pow(1.0 - t * t, 2) - std::pow(1.0 - t, 4); }, 0.0, 0.9);
  std::vector<ConstantCheck> out = {
      {"epsilon at r=1/2", 0.2929, 1.0 - half_root, false},
      {"sparsify slope", 0.5412, s, false},
      {"sparsify offset", 1.1470, 2.5 * (1.0 - s), false},
      {"J=L slope", 0.1716, balance, false},
      {"J=L offset", 2.0711, 2.5 * (1.0 - balance), false},
      {"K>J slope", 0.3236, kj, false},
  };
  for (auto& c : out) c.agrees = std::abs(c.printed - c.recomputed) <= 1e-4;
  return out;
}

}  // namespace kfreq
