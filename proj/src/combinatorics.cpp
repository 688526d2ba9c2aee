#include "kfreq/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace kfreq {

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  out.reserve(edge_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

std::optional<std::uint64_t> binomial_u64(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    // acc * (n - k + j) / j stays integral at every step.
    acc = acc * static_cast<unsigned __int128>(n - k + j);
    acc /= static_cast<unsigned __int128>(j);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    acc *= (n - k + j);
    acc /= j;
  }
  return acc;
}

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  int hi = n;
  for (int slot = k; slot >= 1; --slot) {
    // Largest c < hi with C(c, slot) <= rank.
    int c = slot - 1;
    int lo_c = slot - 1, hi_c = hi - 1;
    while (lo_c < hi_c) {
      int mid = lo_c + (hi_c - lo_c + 1) / 2;
      auto b = binomial_u64(mid, slot);
      if (b && *b <= rank)
        lo_c = mid;
      else
        hi_c = mid - 1;
    }
    c = lo_c;
    rank -= *binomial_u64(c, slot);
    out[static_cast<std::size_t>(slot - 1)] = c;
    hi = c;
  }
  return out;
}

bool next_combination(std::span<int> comb, int n) {
  const int k = static_cast<int>(comb.size());
  int j = k - 1;
  while (j >= 0 && comb[static_cast<std::size_t>(j)] == n - k + j) --j;
  if (j < 0) return false;
  ++comb[static_cast<std::size_t>(j)];
  for (int t = j + 1; t < k; ++t)
    comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, const Edge& e, int i) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(e.u));
  h = splitmix64(h ^ static_cast<std::uint64_t>(e.v));
  return splitmix64(h ^ static_cast<std::uint64_t>(i));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t total,
                                           std::uint64_t count) {
  if (count > total)
    throw std::invalid_argument("sample_distinct: count exceeds population");
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(count) * 2);
  for (std::uint64_t j = total - count; j < total; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kfreq
