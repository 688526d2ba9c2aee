#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kfreq/freq_graph.hpp"

namespace kfreq {

enum class Verdict { Keep, Drop };
enum class DropReason { None, ErrPositive, RatioBelow, BelowThreshold, ZeroFreq };

std::string_view to_string(Verdict v);
std::string_view to_string(DropReason r);

struct EdgeTrajectory {
  Edge edge;
  std::vector<EdgeStats> stats_by_i;  // strictly increasing i
  Verdict verdict = Verdict::Keep;
  DropReason drop_reason = DropReason::None;
  int drop_at = 0;  // i at which the rule fired (step i -> i+1 for decrement rules)
};

// How statistics are gathered at each i.
struct StatsConfig {
  bool exhaustive = true;
  std::uint64_t N = 1000;  // ignored when exhaustive
  std::uint64_t seed = 0;
  int workers = 1;
  double budget = kDefaultWorkBudget;
};

std::vector<EdgeStats> edge_stats_at(const Instance& inst, int i, const StatsConfig& cfg);

// Statistics for every edge at each i in [i_lo, i_hi], verdicts unset.
std::vector<EdgeTrajectory> trajectories(const Instance& inst, int i_lo, int i_hi,
                                         const StatsConfig& cfg);

struct DecrementRule {
  double slack = 1e-9;    // err must exceed this to count
  int consecutive = 1;    // violations in a row needed to drop
  bool ratio_rule = false;  // also drop when p_{i+1}(i+1) < p_i i
};

// Sets verdicts in place from the stored statistics.
void apply_decrement_rule(std::vector<EdgeTrajectory>& traj, const DecrementRule& rule = {});

std::vector<EdgeTrajectory> classify_by_decrement(const Instance& inst, int i_lo, int i_hi,
                                                  const StatsConfig& cfg,
                                                  const DecrementRule& rule = {});

struct SparsifiedGraph {
  int n = 0;
  std::vector<Edge> kept;
  std::vector<int> degree;
  std::string provenance;

  std::vector<int> low_degree_vertices() const;  // degree < 2
  std::vector<char> mask() const;                // by edge_index
  bool contains(const Edge& e) const;
};

SparsifiedGraph make_sparsified(int n, std::vector<Edge> kept, std::string provenance);
SparsifiedGraph from_trajectories(int n, const std::vector<EdgeTrajectory>& traj,
                                  std::string provenance);

enum class ThresholdRule { FLb, Fixed, KthOhc };

struct ThresholdSpec {
  ThresholdRule rule = ThresholdRule::FLb;
  double value = 0;  // Fixed
  int k = 1;         // KthOhc
};

struct ThresholdResult {
  SparsifiedGraph graph;
  double threshold = 0;
  // Present when a reference tour is supplied.
  std::optional<int> kept_ohc;
  std::optional<int> kept_ordinary;
  std::optional<double> preserved_ordinary_pct;  // kept ordinary / (n(n-3)/2) * 100
};

// Keeps edges with f > 0 and f >= threshold.
ThresholdResult classify_by_threshold(const std::vector<EdgeStats>& stats, int n, int i,
                                      const ThresholdSpec& spec, const Tour* tour);
ThresholdResult classify_by_threshold(const Instance& inst, int i, const StatsConfig& cfg,
                                      const ThresholdSpec& spec, const Tour* tour);

struct RecoverConfig {
  std::optional<int> i_eval;  // default min(2 i_d, n), or n when n < 8
  std::uint64_t N = 32;       // per edge, capped at C(n-2, i-2)
  std::uint64_t seed = 0;
  int workers = 1;
  int cap = kDefaultExactCap;
};

struct RecoverResult {
  Tour tour;
  SparsifiedGraph graph;
  int i_eval = 0;
  std::uint64_t N = 0;
  double threshold = 0;
};

// Thrown when the survivor graph admits no Hamiltonian cycle.
class NotHamiltonian : public std::runtime_error {
 public:
  NotHamiltonian(const std::string& what, SparsifiedGraph graph, std::vector<int> low)
      : std::runtime_error(what), graph_(std::move(graph)), low_(std::move(low)) {}
  const SparsifiedGraph& graph() const { return graph_; }
  const std::vector<int>& low_degree_vertices() const { return low_; }

 private:
  SparsifiedGraph graph_;
  std::vector<int> low_;
};

int default_i_eval(int n);

RecoverResult recover_ohc(const Instance& inst, const RecoverConfig& cfg = {});

struct StepErr {
  int i = 0;  // step i -> i+1
  double max_err_ohc = 0, min_err_ohc = 0;
  double max_err_ord = 0, min_err_ord = 0;
  int ohc_err_positive = 0;
  double pct_ohc_err_negative = 0, pct_ord_err_negative = 0;
};

struct ClassSummary {
  int i = 0;
  std::int64_t F_tot = 0, F_ohc = 0;
  double p_ohc_pct = 0;  // F_ohc / F_tot * 100
  double p_e = 0;        // mean p over OHC edges
  double p_g = 0;        // mean p over ordinary edges
  double p_min_e = 0, p_max_g = 0;
};

struct TourReport {
  std::vector<ClassSummary> by_i;
  std::vector<StepErr> steps;
};

TourReport evaluate_against_tour(const std::vector<EdgeTrajectory>& traj, const Tour& tour, int n);

// One `u v` pair per line after comment lines carrying the provenance.
void write_sparsified(std::ostream& out, const SparsifiedGraph& g);

// For each vertex, kept neighbours sorted by frequency descending.
void write_candidates(std::ostream& out, const SparsifiedGraph& g,
                      const std::vector<EdgeStats>& stats);

}  // namespace kfreq
