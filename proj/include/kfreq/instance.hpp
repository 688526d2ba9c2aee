#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kfreq/combinatorics.hpp"

namespace kfreq {

enum class WeightModel { Euc2D, Att, Geo, ExplicitMatrix, RandomUniform };

std::string_view to_string(WeightModel m);

// Malformed or unreadable TSPLIB/tour input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Perturbation {
  std::uint64_t seed = 0;
  double magnitude = 0.0;
};

// Complete symmetric graph with a dense distance table. Immutable once built.
class Instance {
 public:
  // Builds an instance from a full symmetric matrix (row-major, n*n). The
  // diagonal is ignored.
  static Instance from_matrix(std::vector<double> matrix, int n,
                              WeightModel model, std::string name = {});
  static Instance from_points(std::vector<Point> points, WeightModel model,
                              std::string name = {});

  int size() const { return n_; }
  WeightModel model() const { return model_; }
  const std::string& name() const { return name_; }
  const std::vector<Point>& points() const { return points_; }
  const std::optional<Perturbation>& perturbation() const { return perturbation_; }

  // True when every distance is an exact integer (TSPLIB models, unperturbed).
  bool integral() const { return integral_; }

  // Checked lookup; throws std::invalid_argument for u == v or out of range.
  double distance(int u, int v) const;

  // Unchecked lookup for inner loops.
  double operator()(int u, int v) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)];
  }

  double min_positive_distance() const;

  Instance with_perturbation(std::vector<double> matrix, Perturbation p) const;

 private:
  Instance() = default;

  int n_ = 0;
  WeightModel model_ = WeightModel::ExplicitMatrix;
  std::string name_;
  std::vector<Point> points_;
  std::vector<double> dist_;
  std::optional<Perturbation> perturbation_;
  bool integral_ = false;
};

struct Tour {
  std::vector<int> order;
  double length = 0.0;

  std::vector<Edge> edges() const;
};

// Sum of the cycle edges along `order`, accumulated in order.
double cycle_length(const Instance& inst, const std::vector<int>& order);

// Canonical TSPLIB rounding rules.
int tsplib_euc2d(const Point& a, const Point& b);
int tsplib_att(const Point& a, const Point& b);
int tsplib_geo(const Point& a, const Point& b);

// Parses a TSPLIB .tsp file (EUC_2D, ATT, GEO or EXPLICIT). Throws
// ParseError describing the offending section.
Instance parse_tsplib(std::istream& in);
Instance parse_tsplib(std::string_view text);
Instance load_tsplib(const std::string& path);

// Parses a TSPLIB .tour file against `inst`.
Tour parse_tour(std::istream& in, const Instance& inst);
Tour parse_tour(std::string_view text, const Instance& inst);
Tour load_tour(const std::string& path, const Instance& inst);

// Tour from an explicit vertex order (0-based), validating the permutation.
Tour make_tour(const Instance& inst, std::vector<int> order);

// Symmetric distances uniform in (0, 10], deterministic in `seed`.
Instance gen_random(int n, std::uint64_t seed);

// Adds independent noise in (0, magnitude] to every edge.
Instance perturb(const Instance& inst, std::uint64_t seed, double magnitude);

// 1e-6 times the smallest positive distance.
double default_perturbation_magnitude(const Instance& inst);

// True when the three pairing sums of every 4-subset are pairwise distinct.
bool pairing_sums_distinct(const Instance& inst);

// EXPLICIT / FULL_MATRIX TSPLIB text with round-trip precision.
void write_tsplib_explicit(std::ostream& out, const Instance& inst);

// Canonical dump `u,v,dist` with u < v.
void write_distance_csv(std::ostream& out, const Instance& inst);

}  // namespace kfreq
