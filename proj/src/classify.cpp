#include "kfreq/classify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kfreq/analytics.hpp"

namespace kfreq {

namespace {

std::vector<char> tour_mask(const Tour& tour, int n) {
  if (static_cast<int>(tour.order.size()) != n)
    throw std::invalid_argument("tour has " + std::to_string(tour.order.size()) +
                                " vertices but the instance has " + std::to_string(n));
  std::vector<char> m(edge_count(n), 0);
  for (const auto& e : tour.edges()) {
    if (e.v >= n) throw std::invalid_argument("tour vertex out of range");
    m[edge_index(e, n)] = 1;
  }
  return m;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Keep ? "KEEP" : "DROP"; }

std::string_view to_string(DropReason r) {
  switch (r) {
    case DropReason::None: return "";
    case DropReason::ErrPositive: return "ERR_POSITIVE";
    case DropReason::RatioBelow: return "RATIO_BELOW";
    case DropReason::BelowThreshold: return "BELOW_THRESHOLD";
    case DropReason::ZeroFreq: return "ZERO_FREQ";
  }
  return "";
}

std::vector<EdgeStats> edge_stats_at(const Instance& inst, int i, const StatsConfig& cfg) {
  if (cfg.exhaustive) return all_edge_stats_exhaustive(inst, i, cfg.budget, cfg.workers);
  auto total = binomial_u64(inst.size() - 2, i - 2);
  const std::uint64_t N = total ? std::min(cfg.N, *total) : cfg.N;
  return all_edge_stats_sampled(inst, i, N, cfg.seed, cfg.workers);
}

std::vector<EdgeTrajectory> trajectories(const Instance& inst, int i_lo, int i_hi,
                                         const StatsConfig& cfg) {
  if (i_lo < 4 || i_hi > inst.size() || i_lo > i_hi)
    throw std::invalid_argument("i range must satisfy 4 <= lo <= hi <= n");
  const auto edges = all_edges(inst.size());
  std::vector<EdgeTrajectory> out(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) out[k].edge = edges[k];
  for (int i = i_lo; i <= i_hi; ++i) {
    const auto stats = edge_stats_at(inst, i, cfg);
    for (std::size_t k = 0; k < stats.size(); ++k) out[k].stats_by_i.push_back(stats[k]);
  }
  return out;
}

void apply_decrement_rule(std::vector<EdgeTrajectory>& traj, const DecrementRule& rule) {
  const int need = std::max(1, rule.consecutive);
  for (auto& t : traj) {
    t.verdict = Verdict::Keep;
    t.drop_reason = DropReason::None;
    t.drop_at = 0;
    int run = 0;
    const auto& s = t.stats_by_i;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k].F == 0) {
        t.verdict = Verdict::Drop;
        t.drop_reason = DropReason::ZeroFreq;
        t.drop_at = s[k].i;
        break;
      }
      if (k + 1 == s.size()) break;
      const auto d = decrement_law(s[k].p, s[k + 1].p, s[k].i);
      const bool err_hit = d.err > rule.slack;
      const bool ratio_hit = rule.ratio_rule && d.below_ratio;
      run = (err_hit || ratio_hit) ? run + 1 : 0;
      if (run >= need) {
        t.verdict = Verdict::Drop;
        t.drop_reason = err_hit ? DropReason::ErrPositive : DropReason::RatioBelow;
        t.drop_at = s[k].i;
        break;
      }
    }
  }
}

std::vector<EdgeTrajectory> classify_by_decrement(const Instance& inst, int i_lo, int i_hi,
                                                  const StatsConfig& cfg,
                                                  const DecrementRule& rule) {
  auto traj = trajectories(inst, i_lo, i_hi, cfg);
  apply_decrement_rule(traj, rule);
  return traj;
}

std::vector<int> SparsifiedGraph::low_degree_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] < 2) out.push_back(v);
  return out;
}

std::vector<char> SparsifiedGraph::mask() const {
  std::vector<char> m(edge_count(n), 0);
  for (const auto& e : kept) m[edge_index(e, n)] = 1;
  return m;
}

bool SparsifiedGraph::contains(const Edge& e) const {
  return std::binary_search(kept.begin(), kept.end(), e);
}

SparsifiedGraph make_sparsified(int n, std::vector<Edge> kept, std::string provenance) {
  SparsifiedGraph g;
  g.n = n;
  std::sort(kept.begin(), kept.end());
  g.kept = std::move(kept);
  g.degree.assign(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.kept) {
    ++g.degree[static_cast<std::size_t>(e.u)];
    ++g.degree[static_cast<std::size_t>(e.v)];
  }
  g.provenance = std::move(provenance);
  return g;
}

SparsifiedGraph from_trajectories(int n, const std::vector<EdgeTrajectory>& traj,
                                  std::string provenance) {
  std::vector<Edge> kept;
  for (const auto& t : traj)
    if (t.verdict == Verdict::Keep) kept.push_back(t.edge);
  return make_sparsified(n, std::move(kept), std::move(provenance));
}

ThresholdResult classify_by_threshold(const std::vector<EdgeStats>& stats, int n, int i,
                                      const ThresholdSpec& spec, const Tour* tour) {
  ThresholdResult res;
  std::vector<char> ohc;
  if (tour) ohc = tour_mask(*tour, n);
  switch (spec.rule) {
    case ThresholdRule::FLb: res.threshold = bounds(n, i).f_lb; break;
    case ThresholdRule::Fixed: res.threshold = spec.value; break;
    case ThresholdRule::KthOhc: {
      if (!tour) throw std::invalid_argument("k-th smallest OHC threshold needs a tour");
      std::vector<double> f;
      for (const auto& s : stats)
        if (ohc[edge_index(s.edge, n)]) f.push_back(s.f);
      if (spec.k < 1 || spec.k > static_cast<int>(f.size()))
        throw std::invalid_argument("k must be in [1, number of OHC edges]");
      std::sort(f.begin(), f.end());
      res.threshold = f[static_cast<std::size_t>(spec.k - 1)];
      break;
    }
  }
  std::vector<Edge> kept;
  int kept_ohc = 0, kept_ord = 0;
  for (const auto& s : stats) {
    if (s.F <= 0 || s.f < res.threshold) continue;
    kept.push_back(s.edge);
    if (tour) (ohc[edge_index(s.edge, n)] ? kept_ohc : kept_ord)++;
  }
  std::ostringstream prov;
  prov << "{\"rule\": \"threshold\", \"i\": " << i << ", \"threshold\": " << res.threshold << "}";
  res.graph = make_sparsified(n, std::move(kept), prov.str());
  if (tour) {
    res.kept_ohc = kept_ohc;
    res.kept_ordinary = kept_ord;
    res.preserved_ordinary_pct = 100.0 * kept_ord / (n * (n - 3) / 2.0);
  }
  return res;
}

ThresholdResult classify_by_threshold(const Instance& inst, int i, const StatsConfig& cfg,
                                      const ThresholdSpec& spec, const Tour* tour) {
  return classify_by_threshold(edge_stats_at(inst, i, cfg), inst.size(), i, spec, tour);
}

int default_i_eval(int n) { return n < 8 ? n : std::min(2 * solve_id(n), n); }

RecoverResult recover_ohc(const Instance& inst, const RecoverConfig& cfg) {
  const int n = inst.size();
  if (n > cfg.cap)
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the exact-solve cap of " +
                                std::to_string(cfg.cap) + " (raise it with --cap)");
  RecoverResult res;
  res.i_eval = cfg.i_eval ? *cfg.i_eval : default_i_eval(n);
  if (res.i_eval < 4 || res.i_eval > n) throw std::invalid_argument("i_eval must be in [4, n]");
  const auto total = binomial_u64(n - 2, res.i_eval - 2);
  res.N = total ? std::min(cfg.N, *total) : cfg.N;
  res.threshold = bounds(n, res.i_eval).f_lb;
  const auto stats = all_edge_stats_sampled(inst, res.i_eval, res.N, cfg.seed, cfg.workers);
  std::vector<Edge> kept;
  for (const auto& s : stats)
    if (s.f >= res.threshold) kept.push_back(s.edge);
  std::ostringstream prov;
  prov << "{\"rule\": \"f_lb\", \"i\": " << res.i_eval << ", \"N\": " << res.N
       << ", \"seed\": " << cfg.seed << "}";
  res.graph = make_sparsified(n, std::move(kept), prov.str());
  const auto low = res.graph.low_degree_vertices();
  if (!low.empty())
    throw NotHamiltonian("survivor graph has " + std::to_string(low.size()) +
                             " vertices of degree < 2",
                         res.graph, low);
  auto tour = ohc_restricted(inst, res.graph.mask(), cfg.cap);
  if (!tour) throw NotHamiltonian("survivor graph has no Hamiltonian cycle", res.graph, low);
  res.tour = std::move(*tour);
  return res;
}

TourReport evaluate_against_tour(const std::vector<EdgeTrajectory>& traj, const Tour& tour,
                                 int n) {
  const auto ohc = tour_mask(tour, n);
  if (traj.size() != edge_count(n))
    throw std::invalid_argument("trajectories do not cover every edge of the instance");
  TourReport rep;
  if (traj.empty()) return rep;
  const std::size_t steps = traj.front().stats_by_i.size();
  for (const auto& t : traj)
    if (t.stats_by_i.size() != steps)
      throw std::invalid_argument("trajectories have different i ranges");

  for (std::size_t k = 0; k < steps; ++k) {
    ClassSummary cs;
    cs.i = traj.front().stats_by_i[k].i;
    double sum_e = 0, sum_g = 0;
    int cnt_e = 0, cnt_g = 0;
    cs.p_min_e = 1.0;
    cs.p_max_g = 0.0;
    for (const auto& t : traj) {
      const auto& s = t.stats_by_i[k];
      cs.F_tot += s.F;
      if (ohc[edge_index(t.edge, n)]) {
        cs.F_ohc += s.F;
        sum_e += s.p;
        ++cnt_e;
        cs.p_min_e = std::min(cs.p_min_e, s.p);
      } else {
        sum_g += s.p;
        ++cnt_g;
        cs.p_max_g = std::max(cs.p_max_g, s.p);
      }
    }
    cs.p_ohc_pct = cs.F_tot ? 100.0 * static_cast<double>(cs.F_ohc) / cs.F_tot : 0.0;
    cs.p_e = cnt_e ? sum_e / cnt_e : 0.0;
    cs.p_g = cnt_g ? sum_g / cnt_g : 0.0;
    rep.by_i.push_back(cs);
  }

  for (std::size_t k = 0; k + 1 < steps; ++k) {
    StepErr se;
    se.i = traj.front().stats_by_i[k].i;
    bool first_e = true, first_g = true;
    int neg_e = 0, neg_g = 0, cnt_e = 0, cnt_g = 0;
    for (const auto& t : traj) {
      const auto& s = t.stats_by_i;
      const double err = decrement_law(s[k].p, s[k + 1].p, s[k].i).err;
      if (ohc[edge_index(t.edge, n)]) {
        se.max_err_ohc = first_e ? err : std::max(se.max_err_ohc, err);
        se.min_err_ohc = first_e ? err : std::min(se.min_err_ohc, err);
        first_e = false;
        ++cnt_e;
        if (err < 0) ++neg_e;
        if (err > 0) ++se.ohc_err_positive;
      } else {
        se.max_err_ord = first_g ? err : std::max(se.max_err_ord, err);
        se.min_err_ord = first_g ? err : std::min(se.min_err_ord, err);
        first_g = false;
        ++cnt_g;
        if (err < 0) ++neg_g;
      }
    }
    se.pct_ohc_err_negative = cnt_e ? 100.0 * neg_e / cnt_e : 0.0;
    se.pct_ord_err_negative = cnt_g ? 100.0 * neg_g / cnt_g : 0.0;
    rep.steps.push_back(se);
  }
  return rep;
}

void write_sparsified(std::ostream& out, const SparsifiedGraph& g) {
  out << "# provenance: " << g.provenance << '\n';
  out << "# n: " << g.n << ", kept: " << g.kept.size() << ", vertices are 0-based\n";
  const auto low = g.low_degree_vertices();
  if (!low.empty()) {
    out << "# degree < 2 at:";
    for (int v : low) out << ' ' << v;
    out << '\n';
  }
  for (const auto& e : g.kept) out << e.u << ' ' << e.v << '\n';
}

void write_candidates(std::ostream& out, const SparsifiedGraph& g,
                      const std::vector<EdgeStats>& stats) {
  std::vector<double> f(edge_count(g.n), 0.0);
  for (const auto& s : stats) f[edge_index(s.edge, g.n)] = s.f;
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(g.n));
  for (const auto& e : g.kept) {
    nbr[static_cast<std::size_t>(e.u)].push_back(e.v);
    nbr[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (int v = 0; v < g.n; ++v) {
    auto& list = nbr[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      const double fa = f[edge_index(Edge(v, a), g.n)], fb = f[edge_index(Edge(v, b), g.n)];
      return fa != fb ? fa > fb : a < b;
    });
    out << v << ':';
    for (int w : list) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace kfreq
