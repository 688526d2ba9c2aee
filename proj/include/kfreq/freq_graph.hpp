#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kfreq/subset_dp.hpp"

namespace kfreq {

// Edge labels of a frequency K_i: how many of the C(i,2) optimal paths use
// each edge. Storage is indexed by local edge_index within the selection.
struct FrequencyGraph {
  SubsetSelection sel;
  std::vector<std::int64_t> freq;

  int size() const { return sel.size(); }
  std::int64_t local_at(int a, int b) const { return freq[edge_index(Edge(a, b), size())]; }
  // Frequency of a global edge; throws if an endpoint is outside the selection.
  std::int64_t at(const Edge& e) const;
  std::int64_t total() const;
  // Sum over the i-1 edges incident to local vertex a.
  std::int64_t incident_sum(int a) const;
  std::int64_t max() const;
};

// Closed-form frequency K_4 from the ordering of the three pairing sums.
// Throws std::invalid_argument when two pairing sums tie.
FrequencyGraph freq_k4_closed(const Instance& inst, const SubsetSelection& sel);

// Counts containing paths per edge. Requires the complete C(i,2) path set.
FrequencyGraph freq_from_paths(const std::vector<OptimalPath>& paths,
                               const SubsetSelection& sel);

// DP-backed construction for any i.
FrequencyGraph frequency_graph(const Instance& inst, const SubsetSelection& sel,
                               int cap = kDefaultExactCap);

struct SupportGraph {
  std::vector<Edge> edges;   // global ids, freq > 0
  std::vector<int> degree;   // per local vertex
  int min_degree = 0;
  int max_degree = 0;
};

SupportGraph support_graph(const FrequencyGraph& fg);

struct EdgeStats {
  Edge edge;
  int i = 0;
  std::uint64_t N = 0;
  std::int64_t F = 0;
  double f = 0.0;
  double p = 0.0;
};

EdgeStats make_edge_stats(const Edge& e, int i, std::uint64_t N, std::int64_t F);

// C(n-2, i-2) * 2^i must not exceed this many units for exhaustive work.
inline constexpr double kDefaultWorkBudget = 1e12;

// N distinct uniformly random K_i's containing `e`. Deterministic in
// (seed, e, i) and independent of `workers`.
EdgeStats sample_edge_stats(const Instance& inst, const Edge& e, int i, std::uint64_t N,
                            std::uint64_t seed, int workers = 1);

// Exact aggregation over every K_i containing `e`.
EdgeStats exhaustive_edge_stats(const Instance& inst, const Edge& e, int i,
                                double budget = kDefaultWorkBudget, int workers = 1);

// Exhaustive statistics for every edge at once, visiting each K_i of K_n a
// single time. Result is in edge_index order.
std::vector<EdgeStats> all_edge_stats_exhaustive(const Instance& inst, int i,
                                                 double budget = kDefaultWorkBudget,
                                                 int workers = 1);

// Sampled statistics for every edge, in edge_index order.
std::vector<EdgeStats> all_edge_stats_sampled(const Instance& inst, int i, std::uint64_t N,
                                              std::uint64_t seed, int workers = 1);

// `u,v,i,N,F,f_avg,p` rows.
void write_edge_stats_csv(std::ostream& out, const std::vector<EdgeStats>& rows,
                          bool header = true);

}  // namespace kfreq
