#pragma once

#include <optional>
#include <vector>

#include "kfreq/instance.hpp"

namespace kfreq {

inline constexpr int kDefaultExactCap = 22;
inline constexpr int kOracleCap = 10;

// Sorted, distinct vertex ids of a K_i inside the parent instance.
struct SubsetSelection {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  // Position of `v` in `vertices`, or -1.
  int local(int v) const;
  bool contains(int v) const { return local(v) >= 0; }
};

// Sorts and validates: distinct, in range, 4 <= i <= n.
SubsetSelection make_selection(const Instance& inst, std::vector<int> vertices);
SubsetSelection full_selection(const Instance& inst);

struct OptimalPath {
  Edge endpoints;
  std::vector<int> order;  // starts at the requested first endpoint
  double length = 0.0;

  std::vector<Edge> edges() const;
};

// Sum of consecutive distances along an open path.
double path_length(const Instance& inst, const std::vector<int>& order);

// Shortest Hamiltonian path on `sel` from u to v. Among equal lengths the
// lexicographically smallest sequence read from min(u,v) is chosen, so
// op_path(u,v) and op_path(v,u) are reverses of each other.
OptimalPath op_path(const Instance& inst, const SubsetSelection& sel, int u, int v,
                    int cap = kDefaultExactCap);

// All C(i,2) optimal paths, one per endpoint pair (a < b), ordered by (a, b).
// Each path starts at a.
std::vector<OptimalPath> all_op_paths(const Instance& inst, const SubsetSelection& sel,
                                      int cap = kDefaultExactCap);

// Optimal Hamiltonian cycle on `sel`. The order starts at the smallest vertex
// and is the lexicographically smallest among optimal cycles.
Tour ohc(const Instance& inst, const SubsetSelection& sel, int cap = kDefaultExactCap);

// Optimal Hamiltonian cycle on all of `inst` using only edges flagged in
// `allowed` (indexed by edge_index). nullopt when no such cycle exists.
std::optional<Tour> ohc_restricted(const Instance& inst, const std::vector<char>& allowed,
                                   int cap = kDefaultExactCap);

// Brute-force enumeration with the same tie-break. i <= 10.
OptimalPath oracle_path(const Instance& inst, const SubsetSelection& sel, int u, int v);
Tour oracle_cycle(const Instance& inst, const SubsetSelection& sel);

}  // namespace kfreq
