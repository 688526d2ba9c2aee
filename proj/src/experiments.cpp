#include "kfreq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "kfreq/analytics.hpp"
#include "kfreq/parallel.hpp"

namespace kfreq {

namespace {

namespace fs = std::filesystem;

class Output {
 public:
  Output(const RunConfig& cfg, RunResult& res, const std::string& name, bool csv = true) {
    const fs::path dir(cfg.out_dir);
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
      throw OutputError("output directory '" + cfg.out_dir + "' does not exist");
    path_ = (dir / name).string();
    out_.open(path_);
    if (!out_) throw OutputError("cannot write " + path_);
    out_ << std::setprecision(10);
    if (csv) out_ << provenance_line(cfg) << '\n';
    res.files.push_back(path_);
  }
  ~Output() = default;

  std::ostream& stream() { return out_; }
  template <class T>
  Output& operator<<(const T& v) {
    out_ << v;
    return *this;
  }

 private:
  std::string path_;
  std::ofstream out_;
};

void require_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  if (!fs::is_directory(fs::path(cfg.out_dir), ec))
    throw OutputError("output directory '" + cfg.out_dir + "' does not exist");
}

std::optional<Tour> reference_tour(const RunConfig& cfg, const Instance& inst) {
  if (!cfg.tour_path) return std::nullopt;
  return load_tour(*cfg.tour_path, inst);
}

std::vector<char> ohc_mask(const Tour& t, int n) {
  std::vector<char> m(edge_count(n), 0);
  for (const auto& e : t.edges()) m[edge_index(e, n)] = 1;
  return m;
}

std::pair<int, int> i_range_or(const RunConfig& cfg, int lo, int hi) {
  auto r = cfg.i_range ? *cfg.i_range : std::make_pair(lo, hi);
  if (r.first > r.second) throw std::invalid_argument("empty i range");
  return r;
}

StatsConfig stats_config(const RunConfig& cfg, std::uint64_t default_n) {
  StatsConfig sc;
  sc.exhaustive = cfg.exhaustive;
  sc.N = cfg.samples ? *cfg.samples : default_n;
  if (!sc.exhaustive && sc.N < 1) throw std::invalid_argument("--samples must be at least 1");
  sc.seed = cfg.seed;
  sc.workers = cfg.workers;
  return sc;
}

void write_tour(std::ostream& out, const Tour& t, const std::string& name) {
  out << "NAME : " << name << "\nTYPE : TOUR\nDIMENSION : " << t.order.size()
      << "\nTOUR_SECTION\n";
  for (int v : t.order) out << v + 1 << '\n';
  out << "-1\nEOF\n";
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

}  // namespace

namespace {

// Whole-string integer; throws on trailing junk.
template <class T, class Fn>
T whole(const std::string& s, Fn conv) {
  std::size_t used = 0;
  const T v = conv(s, &used);
  if (used != s.size() || s.empty()) throw std::invalid_argument(s);
  return v;
}

int to_int(const std::string& s) {
  return whole<int>(s, [](const std::string& x, std::size_t* u) { return std::stoi(x, u); });
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::pair<int, int> r;
  try {
    r = dots == std::string::npos
            ? std::pair{to_int(text), to_int(text)}
            : std::pair{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + text + "', expected a..b");
  }
  if (r.first > r.second) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::pair<int, std::uint64_t> parse_random_spec(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    const auto seed = text.substr(comma + 1);
    if (seed.empty() || seed.front() == '-') throw std::invalid_argument(text);
    return {to_int(text.substr(0, comma)),
            whole<std::uint64_t>(seed, [](const std::string& x, std::size_t* u) {
              return std::stoull(x, u);
            })};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed --random '" + text + "', expected n,seed");
  }
}

Instance load_instance(const RunConfig& cfg) {
  if (cfg.instance_path.has_value() == cfg.random.has_value())
    throw std::invalid_argument("give exactly one of --instance or --random");
  Instance inst = cfg.instance_path ? load_tsplib(*cfg.instance_path)
                                    : gen_random(cfg.random->first, cfg.random->second);
  if (cfg.perturb) {
    double mag = 0;
    if (*cfg.perturb == "auto") {
      mag = default_perturbation_magnitude(inst);
    } else {
      try {
        mag = std::stod(*cfg.perturb);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed --perturb '" + *cfg.perturb + "'");
      }
    }
    inst = perturb(inst, cfg.seed, mag);
  }
  return inst;
}

std::string provenance_line(const RunConfig& cfg) {
  std::string flags;
  for (const auto& a : cfg.argv) flags += (flags.empty() ? "" : " ") + a;
  return "# kfreq " + std::string(kVersion) + ", seed=" + std::to_string(cfg.seed) +
         ", flags=" + flags;
}

RunResult cmd_freqgraph(const RunConfig& cfg) {
  require_out_dir(cfg);
  const Instance inst = load_instance(cfg);
  const int n = inst.size();
  if (n > cfg.cap)
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the exact-solve cap of " +
                        std::to_string(cfg.cap) + " (raise it with --cap)");
  const auto sel = full_selection(inst);
  const auto fg = frequency_graph(inst, sel, cfg.cap);
  const Tour tour = cfg.tour_path ? *reference_tour(cfg, inst) : ohc(inst, sel, cfg.cap);
  const auto on = ohc_mask(tour, n);

  struct Row {
    std::int64_t f;
    Edge e;
  };
  std::vector<Row> rows;
  std::int64_t min_ohc = -1, F_ohc = 0;
  for (const auto& e : all_edges(n)) {
    const auto f = fg.local_at(e.u, e.v);
    if (on[edge_index(e, n)]) {
      F_ohc += f;
      min_ohc = min_ohc < 0 ? f : std::min(min_ohc, f);
    }
    if (f > 0) rows.push_back({f, e});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.f != b.f ? a.f < b.f : a.e < b.e;
  });

  RunResult res;
  {
    Output out(cfg, res, "freqgraph.csv");
    out << "rank,freq,is_ohc,is_min_ohc,u,v\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const bool is_ohc = on[edge_index(rows[k].e, n)];
      out << k + 1 << ',' << rows[k].f << ',' << int(is_ohc) << ','
          << int(is_ohc && rows[k].f == min_ohc) << ',' << rows[k].e.u << ',' << rows[k].e.v
          << '\n';
    }
  }
  {
    Output out(cfg, res, "vertex_split.csv");
    out << "vertex,ohc_sum,ord_sum\n";
    for (int v = 0; v < n; ++v) {
      std::int64_t o = 0, g = 0;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        const Edge e(v, w);
        (on[edge_index(e, n)] ? o : g) += fg.local_at(e.u, e.v);
      }
      out << v << ',' << o << ',' << g << '\n';
    }
  }
  const auto b = bounds(n, n);
  const std::int64_t F_tot = fg.total();
  std::ostringstream s;
  s << "n=" << n << " tour_length=" << fmt(tour.length) << " f_lb=" << fmt(b.f_lb)
    << " N_f=" << rows.size() << " min_ohc_freq=" << min_ohc << " F_tot=" << F_tot
    << " F_ohc=" << F_ohc << " f_ohc=" << fmt(static_cast<double>(F_ohc) / n)
    << " f_ord=" << fmt(static_cast<double>(F_tot - F_ohc) / (n * (n - 3) / 2.0))
    << " f_oavg=" << fmt(b.f_oavg);
  res.summary = s.str();
  return res;
}

RunResult cmd_trajectory(const RunConfig& cfg) {
  require_out_dir(cfg);
  const Instance inst = load_instance(cfg);
  const auto [lo, hi] = i_range_or(cfg, 4, inst.size());
  const auto tour = reference_tour(cfg, inst);
  const auto traj = trajectories(inst, lo, hi, stats_config(cfg, 1000));
  RunResult res;
  {
    Output out(cfg, res, "trajectory.csv");
    out << "u,v,i,F,f,p\n";
    for (const auto& t : traj)
      for (const auto& s : t.stats_by_i)
        out << t.edge.u << ',' << t.edge.v << ',' << s.i << ',' << s.F << ',' << s.f << ','
            << s.p << '\n';
  }
  std::ostringstream sum;
  sum << "n=" << inst.size() << " i=" << lo << ".." << hi << " edges=" << traj.size();
  if (tour) {
    const auto rep = evaluate_against_tour(traj, *tour, inst.size());
    {
      Output out(cfg, res, "class_summary.csv");
      out << "i,F_tot,F_ohc,p_ohc,p_e,p_g,p_min_e,p_max_g\n";
      for (const auto& c : rep.by_i)
        out << c.i << ',' << c.F_tot << ',' << c.F_ohc << ',' << c.p_ohc_pct << ',' << c.p_e
            << ',' << c.p_g << ',' << c.p_min_e << ',' << c.p_max_g << '\n';
    }
    {
      Output out(cfg, res, "err.csv");
      out << "i,max_err_ohc,min_err_ohc,ohc_err_positive,max_err_ord,min_err_ord,"
             "pct_ohc_err_negative,pct_ord_err_negative\n";
      for (const auto& e : rep.steps)
        out << e.i << ',' << e.max_err_ohc << ',' << e.min_err_ohc << ',' << e.ohc_err_positive
            << ',' << e.max_err_ord << ',' << e.min_err_ord << ',' << e.pct_ohc_err_negative
            << ',' << e.pct_ord_err_negative << '\n';
    }
    if (!rep.by_i.empty()) sum << " p_ohc_last=" << fmt(rep.by_i.back().p_ohc_pct);
  }
  res.summary = sum.str();
  return res;
}

RunResult cmd_sample(const RunConfig& cfg) {
  require_out_dir(cfg);
  if (!cfg.tour_path) throw std::invalid_argument("sample needs --tour for class labels");
  if (cfg.samples && *cfg.samples == 0) throw std::invalid_argument("--samples must be >= 1");
  if (cfg.repeats < 1) throw std::invalid_argument("--repeats must be >= 1");
  const Instance inst = load_instance(cfg);
  const int n = inst.size();
  const Tour tour = *reference_tour(cfg, inst);
  const auto on = ohc_mask(tour, n);
  const auto [lo, hi] = i_range_or(cfg, 4, std::min(8, n));
  if (lo < 4 || hi > n) throw std::invalid_argument("i range must lie in [4, n]");
  const std::uint64_t N = cfg.samples ? *cfg.samples : 1000;

  RunResult res;
  Output summary(cfg, res, "sample_summary.csv");
  summary << "repeat,seed,i,N,s1,s2,s3,s4,s5,s6,s7,s8,f_avg,f_lb,f_oavg\n";
  std::optional<Output> err;
  if (!cfg.ohc_only) {
    err.emplace(cfg, res, "err.csv");
    *err << "repeat,seed,i,max_err_ohc,min_err_ohc,ohc_err_positive,max_err_ord,min_err_ord,"
            "pct_ohc_err_negative,pct_ord_err_negative\n";
  }
  Output stats_out(cfg, res, "sample_stats.csv");
  stats_out << "repeat,u,v,i,N,F,f_avg,p\n";

  std::ostringstream sum;
  for (int r = 0; r < cfg.repeats; ++r) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(r);
    std::vector<EdgeTrajectory> traj;
    const auto edges = cfg.ohc_only ? tour.edges() : all_edges(n);
    traj.resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) traj[k].edge = edges[k];
    for (int i = lo; i <= hi; ++i) {
      const auto total = binomial_u64(n - 2, i - 2);
      const std::uint64_t Ni = total ? std::min(N, *total) : N;
      std::vector<EdgeStats> st(edges.size());
      parallel_for(edges.size(), cfg.workers, [&](std::size_t k) {
        st[k] = sample_edge_stats(inst, edges[k], i, Ni, seed, 1);
      });
      std::vector<double> fo;
      for (std::size_t k = 0; k < st.size(); ++k) {
        traj[k].stats_by_i.push_back(st[k]);
        if (on[edge_index(st[k].edge, n)]) fo.push_back(st[k].f);
        stats_out << r << ',' << st[k].edge.u << ',' << st[k].edge.v << ',' << i << ',' << Ni
                  << ',' << st[k].F << ',' << st[k].f << ',' << st[k].p << '\n';
      }
      std::sort(fo.begin(), fo.end());
      const auto b = bounds(n, i);
      const double f_avg = std::accumulate(fo.begin(), fo.end(), 0.0) / fo.size();
      summary << r << ',' << seed << ',' << i << ',' << Ni;
      for (std::size_t k = 0; k < 8; ++k) {
        summary << ',';
        if (k < fo.size()) summary << fo[k];
      }
      summary << ',' << f_avg << ',' << b.f_lb << ',' << b.f_oavg << '\n';
      sum << "repeat=" << r << " i=" << i << " s1=" << fmt(fo.front())
          << " f_avg=" << fmt(f_avg) << '\n';
    }
    if (err) {
      const auto rep = evaluate_against_tour(traj, tour, n);
      for (const auto& e : rep.steps)
        *err << r << ',' << seed << ',' << e.i << ',' << e.max_err_ohc << ',' << e.min_err_ohc
             << ',' << e.ohc_err_positive << ',' << e.max_err_ord << ',' << e.min_err_ord << ','
             << e.pct_ohc_err_negative << ',' << e.pct_ord_err_negative << '\n';
    }
  }
  res.summary = sum.str();
  if (!res.summary.empty() && res.summary.back() == '\n') res.summary.pop_back();
  return res;
}

RunResult cmd_analytics(const RunConfig& cfg) {
  require_out_dir(cfg);
  const int n = cfg.n ? *cfg.n : 1000;
  if (n < 8) throw std::invalid_argument("analytics requires n >= 8, got " + std::to_string(n));
  RunResult res;
  const auto pd = summarize_pd(n);
  const auto cov = coverage_fractions(n);

  auto curve = [&](const std::string& name, auto value) {
    Output out(cfg, res, "curve_" + name + ".csv");
    out << "n,i,value\n";
    value(out);
  };
  curve("p", [&](Output& o) {
    for (const auto& pt : pd.curve) o << n << ',' << pt.i << ',' << pt.p << '\n';
  });
  curve("pd", [&](Output& o) {
    for (const auto& pt : pd.curve)
      if (pt.i < n) o << n << ',' << pt.i << ',' << pt.pd << '\n';
  });
  curve("r", [&](Output& o) {
    for (const auto& row : cov.rows) o << n << ',' << row.i << ',' << row.r << '\n';
  });
  curve("epsilon", [&](Output& o) {
    for (const auto& row : cov.rows) o << n << ',' << row.i << ',' << row.epsilon << '\n';
  });
  curve("J", [&](Output& o) {
    for (const auto& row : cov.rows) o << n << ',' << row.i << ',' << row.J << '\n';
  });
  curve("K", [&](Output& o) {
    for (const auto& row : cov.rows) o << n << ',' << row.i << ',' << row.K << '\n';
  });
  curve("L", [&](Output& o) {
    for (const auto& row : cov.rows) o << n << ',' << row.i << ',' << row.L << '\n';
  });
  curve("JL", [&](Output& o) {
    for (const auto& row : cov.rows) o << n << ',' << row.i << ',' << row.JL << '\n';
  });

  {
    Output out(cfg, res, "minid.csv");
    out << (cfg.residual_corrected ? "n,i_d,i_d_residual,bound\n" : "n,i_d,bound\n");
    for (int k = 0; k <= 20; ++k) {
      const int m = static_cast<int>(std::lround(std::pow(10.0, 3.0 + k / 5.0)));
      out << m << ',' << solve_id(m);
      if (cfg.residual_corrected) out << ',' << solve_id_residual(m);
      out << ',' << 4.0 * std::pow(static_cast<double>(m), 4.0 / 7.0) << '\n';
    }
  }

  const int id = solve_id(n);
  const auto th = sparsify_threshold(n);
  std::ostringstream sum;
  {
    Output out(cfg, res, "summary.csv");
    out << "key,value\n";
    auto kv = [&](const std::string& k, const std::string& v) {
      out << k << ',' << v << '\n';
      sum << k << '=' << v << ' ';
    };
    kv("n", std::to_string(n));
    kv("i_d", std::to_string(id));
    if (cfg.residual_corrected) kv("i_d_residual", std::to_string(solve_id_residual(n)));
    kv("two_i_d", std::to_string(2 * id));
    kv("P0", std::to_string(peak_index(n)));
    kv("p_peak", std::to_string(pd.p_peak));
    kv("pd_peak", std::to_string(pd.pd_peak));
    kv("p_first_half", std::to_string(pd.first_half));
    kv("mean_pd_rising", fmt(pd.mean_pd(pd.p_peak, pd.pd_peak)));
    kv("mean_pd_falling", fmt(pd.mean_pd(pd.pd_peak + 1, n)));
    kv("k_exceeds_j", cov.k_exceeds_j ? std::to_string(*cov.k_exceeds_j) : "none");
    kv("k_exceeds_j_printed", std::to_string(cov.k_exceeds_j_printed));
    kv("l_reaches_j", cov.l_reaches_j ? std::to_string(*cov.l_reaches_j) : "none");
    kv("l_reaches_j_printed", std::to_string(cov.l_reaches_j_printed));
    kv("sparsify_threshold", std::to_string(th.printed));
    kv("sparsify_threshold_recomputed", std::to_string(th.recomputed));
  }
  {
    Output out(cfg, res, "constants.csv");
    out << "name,printed,recomputed,agrees\n";
    for (const auto& c : check_constants()) {
      out << c.name << ',' << c.printed << ',' << c.recomputed << ',' << int(c.agrees) << '\n';
      if (!c.agrees)
        sum << "\nwarning: constant '" << c.name << "' printed " << c.printed
            << " but recomputes to " << fmt(c.recomputed);
    }
  }
  res.summary = sum.str();
  return res;
}

RunResult cmd_sparsify(const RunConfig& cfg) {
  require_out_dir(cfg);
  const Instance inst = load_instance(cfg);
  const int n = inst.size();
  const auto tour = reference_tour(cfg, inst);
  RunResult res;
  std::ostringstream sum;
  SparsifiedGraph g;
  std::vector<EdgeStats> last_stats;

  if (cfg.mode == "decrement") {
    const auto [lo, hi] = i_range_or(cfg, 4, std::min(8, n));
    const auto traj = classify_by_decrement(inst, lo, hi, stats_config(cfg, 1000));
    std::ostringstream prov;
    prov << "{\"rule\": \"decrement\", \"i_range\": \"" << lo << ".." << hi
         << "\", \"exhaustive\": " << (cfg.exhaustive ? "true" : "false")
         << ", \"seed\": " << cfg.seed << "}";
    g = from_trajectories(n, traj, prov.str());
    for (const auto& t : traj) last_stats.push_back(t.stats_by_i.back());
    const auto on = tour ? ohc_mask(*tour, n) : std::vector<char>{};
    Output out(cfg, res, "verdicts.csv");
    out << "u,v,verdict,reason,drop_at,is_ohc\n";
    for (const auto& t : traj) {
      out << t.edge.u << ',' << t.edge.v << ',' << to_string(t.verdict) << ','
          << to_string(t.drop_reason) << ',' << t.drop_at << ',';
      if (tour) out << int(on[edge_index(t.edge, n)]);
      out << '\n';
    }
  } else if (cfg.mode == "threshold") {
    if (!cfg.i) throw std::invalid_argument("threshold mode needs --i");
    ThresholdSpec spec;
    if (cfg.rule == "f_lb") spec.rule = ThresholdRule::FLb;
    else if (cfg.rule == "fixed") spec.rule = ThresholdRule::Fixed;
    else if (cfg.rule == "kth") spec.rule = ThresholdRule::KthOhc;
    else throw std::invalid_argument("unknown --rule '" + cfg.rule + "'");
    spec.value = cfg.value;
    spec.k = cfg.k;
    last_stats = edge_stats_at(inst, *cfg.i, stats_config(cfg, 1000));
    auto tr = classify_by_threshold(last_stats, n, *cfg.i, spec, tour ? &*tour : nullptr);
    g = tr.graph;
    sum << "threshold=" << fmt(tr.threshold) << ' ';
    if (tr.preserved_ordinary_pct)
      sum << "preserved_ordinary_pct=" << fmt(*tr.preserved_ordinary_pct) << ' ';
  } else {
    throw std::invalid_argument("unknown --mode '" + cfg.mode + "'");
  }

  {
    Output out(cfg, res, "sparse.txt", false);
    write_sparsified(out.stream(), g);
  }
  {
    Output out(cfg, res, "candidates.txt", false);
    write_candidates(out.stream(), g, last_stats);
  }
  sum << "kept=" << g.kept.size();
  if (tour) {
    const auto on = ohc_mask(*tour, n);
    int ko = 0, kg = 0;
    for (const auto& e : g.kept) (on[edge_index(e, n)] ? ko : kg)++;
    sum << " kept_ohc=" << ko << "/" << n << " kept_ordinary=" << kg << "/" << n * (n - 3) / 2;
  }
  const auto low = g.low_degree_vertices();
  if (!low.empty()) sum << " degree_below_2=" << low.size();
  res.summary = sum.str();
  return res;
}

RunResult cmd_solve(const RunConfig& cfg) {
  require_out_dir(cfg);
  const Instance inst = load_instance(cfg);
  RecoverConfig rc;
  rc.i_eval = cfg.i;
  rc.N = cfg.samples ? *cfg.samples : 32;
  if (rc.N < 1) throw std::invalid_argument("--samples must be at least 1");
  rc.seed = cfg.seed;
  rc.workers = cfg.workers;
  rc.cap = cfg.cap;
  RunResult res;
  RecoverResult rr;
  try {
    rr = recover_ohc(inst, rc);
  } catch (const NotHamiltonian& e) {
    Output out(cfg, res, "sparse.txt", false);
    write_sparsified(out.stream(), e.graph());
    throw;
  }
  {
    Output out(cfg, res, "sparse.txt", false);
    write_sparsified(out.stream(), rr.graph);
  }
  {
    Output out(cfg, res, "tour.tour", false);
    write_tour(out.stream(), rr.tour, inst.name().empty() ? "recovered" : inst.name());
  }
  const Tour ref = cfg.tour_path ? *reference_tour(cfg, inst) : ohc(inst, full_selection(inst), cfg.cap);
  auto a = rr.tour.edges(), b = ref.edges();
  std::sort(a.begin(), a.end());  // rotation and direction don't matter
  std::sort(b.begin(), b.end());
  const bool match = a == b;
  std::ostringstream sum;
  sum << "i_eval=" << rr.i_eval << " N=" << rr.N << " kept=" << rr.graph.kept.size()
      << " length=" << fmt(rr.tour.length) << " reference=" << fmt(ref.length)
      << " verdict=" << (match ? "match" : "mismatch");
  res.summary = sum.str();
  return res;
}

RunResult cmd_idsolve(const RunConfig& cfg) {
  if (!cfg.n) throw std::invalid_argument("idsolve needs --n");
  RunResult res;
  res.summary = "n=" + std::to_string(*cfg.n) + " i_d=" + std::to_string(solve_id(*cfg.n));
  if (cfg.residual_corrected)
    res.summary += " i_d_residual=" + std::to_string(solve_id_residual(*cfg.n));
  return res;
}

RunResult run_command(const RunConfig& cfg) {
  if (cfg.command == "freqgraph") return cmd_freqgraph(cfg);
  if (cfg.command == "trajectory") return cmd_trajectory(cfg);
  if (cfg.command == "sample") return cmd_sample(cfg);
  if (cfg.command == "analytics") return cmd_analytics(cfg);
  if (cfg.command == "sparsify") return cmd_sparsify(cfg);
  if (cfg.command == "solve") return cmd_solve(cfg);
  if (cfg.command == "idsolve") return cmd_idsolve(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

ExitCode classify_error(const std::exception& e) {
  if (dynamic_cast<const NotHamiltonian*>(&e)) return ExitCode::NotHamiltonian;
  if (dynamic_cast<const LimitExceeded*>(&e)) return ExitCode::Limit;
  if (dynamic_cast<const ParseError*>(&e)) return ExitCode::Input;
  if (dynamic_cast<const OutputError*>(&e)) return ExitCode::Output;
  if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e))
    return ExitCode::Usage;
  return ExitCode::Internal;
}

}  // namespace kfreq
