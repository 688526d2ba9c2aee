#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kfreq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Rng = std::mt19937_64;

// A size cap or work budget was exceeded.
class LimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Row-major index of u < v in the strict upper triangle of an n x n matrix.
inline std::size_t edge_index(const Edge& e, int n) {
  const auto u = static_cast<std::size_t>(e.u);
  const auto nn = static_cast<std::size_t>(n);
  return u * (2 * nn - u - 1) / 2 + static_cast<std::size_t>(e.v - e.u - 1);
}

inline std::size_t edge_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// All edges of K_n in edge_index order.
std::vector<Edge> all_edges(int n);

// C(n, k) in 64 bits; nullopt on overflow, 0 when k < 0 or k > n.
std::optional<std::uint64_t> binomial_u64(std::int64_t n, std::int64_t k);

// C(n, k) exactly; 0 when k < 0 or k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// Combination of rank `rank` (colexicographic order) among the k-subsets of
// {0, ..., n-1}, returned sorted ascending. Requires C(n, k) to fit in 64 bits.
std::vector<int> unrank_combination(std::uint64_t rank, int n, int k);

// Advances `comb` (sorted k-subset of {0..n-1}) to the next in lexicographic
// order. Returns false after the last one.
bool next_combination(std::span<int> comb, int n);

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream seed for (master seed, edge, subset size).
std::uint64_t stream_seed(std::uint64_t master, const Edge& e, int i);

// Uniform integer in [0, bound) without modulo bias; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform real in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

// `count` distinct uniform ranks from [0, total) (Floyd's algorithm), sorted.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t total,
                                           std::uint64_t count);

}  // namespace kfreq
