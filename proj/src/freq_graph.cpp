#include "kfreq/freq_graph.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "kfreq/parallel.hpp"

namespace kfreq {

namespace {

std::int64_t pairs(int i) { return static_cast<std::int64_t>(i) * (i - 1) / 2; }

// Vertices of K_n other than the edge endpoints, ascending.
std::vector<int> others(int n, const Edge& e) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 2));
  for (int w = 0; w < n; ++w)
    if (w != e.u && w != e.v) out.push_back(w);
  return out;
}

SubsetSelection with_edge(const std::vector<int>& pool, const std::vector<int>& picks,
                          const Edge& e) {
  SubsetSelection sel;
  sel.vertices.reserve(picks.size() + 2);
  for (int k : picks) sel.vertices.push_back(pool[static_cast<std::size_t>(k)]);
  sel.vertices.push_back(e.u);
  sel.vertices.push_back(e.v);
  std::sort(sel.vertices.begin(), sel.vertices.end());
  return sel;
}

void check_edge(const Instance& inst, const Edge& e, int i) {
  if (e.u < 0 || e.v >= inst.size() || e.u == e.v)
    throw std::invalid_argument("edge out of range");
  if (i < 4 || i > inst.size())
    throw std::invalid_argument("subset size i must be in [4, n], got " + std::to_string(i));
}

std::uint64_t containing_subsets(int n, int i) {
  auto total = binomial_u64(n - 2, i - 2);
  if (!total) throw std::invalid_argument("C(n-2, i-2) does not fit in 64 bits");
  return *total;
}

void check_budget(std::uint64_t subsets, int i, double budget) {
  const double units = static_cast<double>(subsets) * std::ldexp(1.0, i);
  if (units > budget)
    throw LimitExceeded("exhaustive work " + std::to_string(units) +
                                " exceeds the budget " + std::to_string(budget));
}

// Sums fn(k) over k in [0, count) in fixed chunks so the reduction order
// does not depend on the worker count.
template <class Fn>
std::int64_t chunked_sum(std::uint64_t count, int workers, Fn&& fn) {
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, (count + kChunks - 1) / kChunks);
  const std::uint64_t nchunks = (count + chunk - 1) / chunk;
  std::vector<std::int64_t> partial(static_cast<std::size_t>(nchunks), 0);
  parallel_for(static_cast<std::size_t>(nchunks), workers, [&](std::size_t c) {
    const std::uint64_t lo = c * chunk, hi = std::min(count, lo + chunk);
    std::int64_t acc = 0;
    for (std::uint64_t k = lo; k < hi; ++k) acc += fn(k);
    partial[c] = acc;
  });
  std::int64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace

std::int64_t FrequencyGraph::at(const Edge& e) const {
  const int a = sel.local(e.u), b = sel.local(e.v);
  if (a < 0 || b < 0) throw std::invalid_argument("edge not inside the frequency graph");
  return local_at(a, b);
}

std::int64_t FrequencyGraph::total() const {
  std::int64_t t = 0;
  for (auto f : freq) t += f;
  return t;
}

std::int64_t FrequencyGraph::incident_sum(int a) const {
  std::int64_t t = 0;
  for (int b = 0; b < size(); ++b)
    if (b != a) t += local_at(a, b);
  return t;
}

std::int64_t FrequencyGraph::max() const {
  return freq.empty() ? 0 : *std::max_element(freq.begin(), freq.end());
}

FrequencyGraph freq_k4_closed(const Instance& inst, const SubsetSelection& sel) {
  if (sel.size() != 4) throw std::invalid_argument("freq_k4_closed needs a 4-subset");
  const auto& v = sel.vertices;
  // Pairing k splits {0,1,2,3} into two vertex-disjoint local edges.
  constexpr int kPairing[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  double sums[3];
  for (int k = 0; k < 3; ++k)
    sums[k] = inst(v[kPairing[k][0][0]], v[kPairing[k][0][1]]) +
              inst(v[kPairing[k][1][0]], v[kPairing[k][1][1]]);
  if (sums[0] == sums[1] || sums[0] == sums[2] || sums[1] == sums[2])
    throw std::invalid_argument("K4 has tied pairing sums; perturb the instance first");
  int rank[3] = {0, 1, 2};
  std::sort(rank, rank + 3, [&](int a, int b) { return sums[a] < sums[b]; });
  constexpr std::int64_t kByRank[3] = {5, 3, 1};
  FrequencyGraph fg{sel, std::vector<std::int64_t>(6, 0)};
  for (int r = 0; r < 3; ++r)
    for (const auto& pr : kPairing[rank[r]]) fg.freq[edge_index(Edge(pr[0], pr[1]), 4)] = kByRank[r];
  return fg;
}

FrequencyGraph freq_from_paths(const std::vector<OptimalPath>& paths,
                               const SubsetSelection& sel) {
  const int i = sel.size();
  if (static_cast<std::int64_t>(paths.size()) != pairs(i))
    throw std::invalid_argument("expected " + std::to_string(pairs(i)) + " paths, got " +
                                std::to_string(paths.size()));
  FrequencyGraph fg{sel, std::vector<std::int64_t>(edge_count(i), 0)};
  for (const auto& p : paths) {
    for (std::size_t k = 0; k + 1 < p.order.size(); ++k) {
      const int a = sel.local(p.order[k]), b = sel.local(p.order[k + 1]);
      if (a < 0 || b < 0) throw std::invalid_argument("path leaves the selection");
      ++fg.freq[edge_index(Edge(a, b), i)];
    }
  }
  return fg;
}

FrequencyGraph frequency_graph(const Instance& inst, const SubsetSelection& sel, int cap) {
  return freq_from_paths(all_op_paths(inst, sel, cap), sel);
}

SupportGraph support_graph(const FrequencyGraph& fg) {
  const int i = fg.size();
  SupportGraph sg;
  sg.degree.assign(static_cast<std::size_t>(i), 0);
  for (int a = 0; a < i; ++a)
    for (int b = a + 1; b < i; ++b)
      if (fg.local_at(a, b) > 0) {
        sg.edges.emplace_back(fg.sel.vertices[static_cast<std::size_t>(a)],
                              fg.sel.vertices[static_cast<std::size_t>(b)]);
        ++sg.degree[static_cast<std::size_t>(a)];
        ++sg.degree[static_cast<std::size_t>(b)];
      }
  if (i > 0) {
    sg.min_degree = *std::min_element(sg.degree.begin(), sg.degree.end());
    sg.max_degree = *std::max_element(sg.degree.begin(), sg.degree.end());
  }
  return sg;
}

EdgeStats make_edge_stats(const Edge& e, int i, std::uint64_t N, std::int64_t F) {
  EdgeStats s;
  s.edge = e;
  s.i = i;
  s.N = N;
  s.F = F;
  s.f = N ? static_cast<double>(F) / static_cast<double>(N) : 0.0;
  s.p = s.f / static_cast<double>(pairs(i));
  return s;
}

EdgeStats sample_edge_stats(const Instance& inst, const Edge& e, int i, std::uint64_t N,
                            std::uint64_t seed, int workers) {
  check_edge(inst, e, i);
  const int n = inst.size();
  const auto total = binomial_u64(n - 2, i - 2);
  if (N < 1) throw std::invalid_argument("sample count N must be at least 1");
  if (total && N > *total)
    throw std::invalid_argument("sample count N=" + std::to_string(N) +
                                " exceeds C(n-2, i-2)=" + std::to_string(*total));
  const auto pool = others(n, e);
  Rng rng(stream_seed(seed, e, i));
  std::vector<std::vector<int>> picks(static_cast<std::size_t>(N));
  if (total) {
    // Distinct subsets: draw distinct ranks and unrank them.
    const auto ranks = sample_distinct(rng, *total, N);
    for (std::size_t k = 0; k < ranks.size(); ++k)
      picks[k] = unrank_combination(ranks[k], n - 2, i - 2);
  } else {
    // Too many subsets to rank; independent uniform subsets instead.
    for (auto& p : picks) {
      const auto r = sample_distinct(rng, static_cast<std::uint64_t>(n - 2),
                                     static_cast<std::uint64_t>(i - 2));
      p.assign(r.begin(), r.end());
    }
  }
  const std::int64_t F = chunked_sum(N, workers, [&](std::uint64_t k) {
    const auto sel = with_edge(pool, picks[static_cast<std::size_t>(k)], e);
    return frequency_graph(inst, sel).at(e);
  });
  return make_edge_stats(e, i, N, F);
}

EdgeStats exhaustive_edge_stats(const Instance& inst, const Edge& e, int i, double budget,
                                int workers) {
  check_edge(inst, e, i);
  const int n = inst.size();
  const std::uint64_t total = containing_subsets(n, i);
  check_budget(total, i, budget);
  const auto pool = others(n, e);
  const std::int64_t F = chunked_sum(total, workers, [&](std::uint64_t rank) {
    const auto sel = with_edge(pool, unrank_combination(rank, n - 2, i - 2), e);
    return frequency_graph(inst, sel).at(e);
  });
  return make_edge_stats(e, i, total, F);
}

std::vector<EdgeStats> all_edge_stats_exhaustive(const Instance& inst, int i, double budget,
                                                 int workers) {
  const int n = inst.size();
  if (i < 4 || i > n)
    throw std::invalid_argument("subset size i must be in [4, n], got " + std::to_string(i));
  const auto count = binomial_u64(n, i);
  if (!count) throw std::invalid_argument("C(n, i) does not fit in 64 bits");
  check_budget(*count, i, budget);
  const std::size_t m = edge_count(n);

  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, (*count + kChunks - 1) / kChunks);
  const std::uint64_t nchunks = (*count + chunk - 1) / chunk;
  std::vector<std::vector<std::int64_t>> partial(static_cast<std::size_t>(nchunks));
  parallel_for(static_cast<std::size_t>(nchunks), workers, [&](std::size_t c) {
    auto& acc = partial[c];
    acc.assign(m, 0);
    const std::uint64_t lo = c * chunk, hi = std::min(*count, lo + chunk);
    SubsetSelection sel{unrank_combination(lo, n, i)};
    for (std::uint64_t k = lo; k < hi; ++k) {
      if (k > lo) sel.vertices = unrank_combination(k, n, i);
      const auto fg = frequency_graph(inst, sel);
      for (int a = 0; a < i; ++a)
        for (int b = a + 1; b < i; ++b)
          acc[edge_index(Edge(sel.vertices[static_cast<std::size_t>(a)],
                              sel.vertices[static_cast<std::size_t>(b)]),
                         n)] += fg.local_at(a, b);
    }
  });
  std::vector<std::int64_t> F(m, 0);
  for (const auto& acc : partial)
    for (std::size_t k = 0; k < m; ++k) F[k] += acc[k];
  const std::uint64_t N = containing_subsets(n, i);
  std::vector<EdgeStats> out;
  out.reserve(m);
  for (const auto& e : all_edges(n)) out.push_back(make_edge_stats(e, i, N, F[edge_index(e, n)]));
  return out;
}

std::vector<EdgeStats> all_edge_stats_sampled(const Instance& inst, int i, std::uint64_t N,
                                              std::uint64_t seed, int workers) {
  const auto edges = all_edges(inst.size());
  std::vector<EdgeStats> out(edges.size());
  parallel_for(edges.size(), workers, [&](std::size_t k) {
    out[k] = sample_edge_stats(inst, edges[k], i, N, seed, 1);
  });
  return out;
}

void write_edge_stats_csv(std::ostream& out, const std::vector<EdgeStats>& rows, bool header) {
  if (header) out << "u,v,i,N,F,f_avg,p\n";
  out << std::setprecision(10);
  for (const auto& s : rows)
    out << s.edge.u << ',' << s.edge.v << ',' << s.i << ',' << s.N << ',' << s.F << ','
        << s.f << ',' << s.p << '\n';
}

}  // namespace kfreq
