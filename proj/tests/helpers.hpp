#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "kfreq/instance.hpp"

namespace kfreq::test {

// Random (0,10] instance with the default tie-breaking noise.
inline Instance perturbed_random(int n, std::uint64_t seed) {
  const auto base = gen_random(n, seed);
  return perturb(base, seed, default_perturbation_magnitude(base));
}

inline Instance from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> m;
  for (const auto& r : rows) m.insert(m.end(), r.begin(), r.end());
  return Instance::from_matrix(std::move(m), n, WeightModel::ExplicitMatrix);
}

// Unit square 0-1-2-3 with diagonals sqrt(2).
inline Instance unit_square() {
  const double d = std::sqrt(2.0);
  return from_rows({{0, 1, d, 1}, {1, 0, 1, d}, {d, 1, 0, 1}, {1, d, 1, 0}});
}

}  // namespace kfreq::test
