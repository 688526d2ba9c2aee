#include "kfreq/subset_dp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kfreq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_cap(int i, int cap) {
  if (i > cap)
    throw LimitExceeded("subset of size " + std::to_string(i) +
                                " exceeds the exact-solve cap of " + std::to_string(cap) +
                                " (raise it with --cap)");
}

// Local distance table of a subset, i x i row-major.
std::vector<double> local_matrix(const Instance& inst, const std::vector<int>& verts) {
  const std::size_t i = verts.size();
  std::vector<double> d(i * i, 0.0);
  for (std::size_t a = 0; a < i; ++a)
    for (std::size_t b = 0; b < i; ++b)
      if (a != b) d[a * i + b] = inst(verts[a], verts[b]);
  return d;
}

// g[mask][w]: shortest path that starts at slot w, visits every slot in mask,
// then ends at the anchor. Slots are the local vertices other than the anchor,
// kept in ascending order. The table lives in a per-thread buffer, so only one
// sweep may be alive per thread.
class AnchoredSweep {
 public:
  AnchoredSweep(const std::vector<double>& d, int i, int anchor)
      : i_(i), m_(i - 1), anchor_(anchor) {
    slot_to_local_.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < i; ++v)
      if (v != anchor) slot_to_local_.push_back(v);
    ds_.assign(static_cast<std::size_t>(m_ * m_), 0.0);
    to_anchor_.assign(static_cast<std::size_t>(m_), 0.0);
    for (int s = 0; s < m_; ++s) {
      const int ls = slot_to_local_[static_cast<std::size_t>(s)];
      to_anchor_[static_cast<std::size_t>(s)] = d[static_cast<std::size_t>(ls * i + anchor)];
      for (int t = 0; t < m_; ++t)
        ds_[static_cast<std::size_t>(s * m_ + t)] =
            d[static_cast<std::size_t>(ls * i + slot_to_local_[static_cast<std::size_t>(t)])];
    }
    run();
  }

  int slot_of(int local) const { return local < anchor_ ? local : local - 1; }
  int local_of(int slot) const { return slot_to_local_[static_cast<std::size_t>(slot)]; }
  std::uint32_t full() const { return (std::uint32_t{1} << m_) - 1; }
  int slots() const { return m_; }

  double g(std::uint32_t mask, int w) const {
    return table()[static_cast<std::size_t>(mask) * static_cast<std::size_t>(m_) +
                   static_cast<std::size_t>(w)];
  }
  double dist(int s, int t) const { return ds_[static_cast<std::size_t>(s * m_ + t)]; }

  // Local vertex sequence from slot `start` through `mask` to the anchor,
  // lexicographically smallest among the optimal ones.
  std::vector<int> walk(int start, std::uint32_t mask) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(i_));
    int cur = start;
    out.push_back(local_of(cur));
    for (;;) {
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << cur);
      if (rest == 0) break;
      const double target = g(mask, cur);
      int next = -1;
      for (std::uint32_t bits = rest; bits; bits &= bits - 1) {
        const int x = std::countr_zero(bits);
        if (dist(cur, x) + g(rest, x) == target) {
          next = x;
          break;
        }
      }
      if (next < 0) throw std::logic_error("subset DP reconstruction failed");
      out.push_back(local_of(next));
      mask = rest;
      cur = next;
    }
    out.push_back(anchor_);
    return out;
  }

 private:
  static std::vector<double>& scratch() {
    thread_local std::vector<double> buf;
    return buf;
  }
  const std::vector<double>& table() const { return scratch(); }

  void run() {
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<double>& g = scratch();
    g.resize((std::size_t{1} << m) * m);
    for (std::uint32_t mask = 1; mask <= full(); ++mask) {
      double* row = g.data() + static_cast<std::size_t>(mask) * m;
      for (std::uint32_t wb = mask; wb; wb &= wb - 1) {
        const int w = std::countr_zero(wb);
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << w);
        if (rest == 0) {
          row[w] = to_anchor_[static_cast<std::size_t>(w)];
          continue;
        }
        const double* dw = ds_.data() + static_cast<std::size_t>(w) * m;
        const double* prev = g.data() + static_cast<std::size_t>(rest) * m;
        double best = kInf;
        for (std::uint32_t xb = rest; xb; xb &= xb - 1) {
          const int x = std::countr_zero(xb);
          const double val = dw[x] + prev[x];
          if (val < best) best = val;
        }
        row[w] = best;
      }
    }
  }

  int i_, m_, anchor_;
  std::vector<int> slot_to_local_;
  std::vector<double> ds_;
  std::vector<double> to_anchor_;
};

std::vector<int> to_global(const SubsetSelection& sel, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int l : local) out.push_back(sel.vertices[static_cast<std::size_t>(l)]);
  return out;
}

// Smallest-first cycle through the sweep anchored at local 0.
std::optional<std::vector<int>> best_cycle(const AnchoredSweep& sw,
                                           const std::vector<double>& d) {
  double best = kInf;
  int first = -1;
  for (int w = 0; w < sw.slots(); ++w) {
    const double val = d[static_cast<std::size_t>(sw.local_of(w))] + sw.g(sw.full(), w);
    if (val < best) {
      best = val;
      first = w;
    }
  }
  if (first < 0) return std::nullopt;
  std::vector<int> walk = sw.walk(first, sw.full());
  walk.pop_back();  // anchor closes the cycle
  walk.insert(walk.begin(), 0);
  return walk;
}

}  // namespace

int SubsetSelection::local(int v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

SubsetSelection make_selection(const Instance& inst, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("selection has repeated vertices");
  if (!vertices.empty() && (vertices.front() < 0 || vertices.back() >= inst.size()))
    throw std::invalid_argument("selection vertex out of range");
  if (vertices.size() < 4 || static_cast<int>(vertices.size()) > inst.size())
    throw std::invalid_argument("selection size must be in [4, n]");
  return SubsetSelection{std::move(vertices)};
}

SubsetSelection full_selection(const Instance& inst) {
  std::vector<int> v(static_cast<std::size_t>(inst.size()));
  for (int k = 0; k < inst.size(); ++k) v[static_cast<std::size_t>(k)] = k;
  return SubsetSelection{std::move(v)};
}

std::vector<Edge> OptimalPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) out.emplace_back(order[k], order[k + 1]);
  return out;
}

double path_length(const Instance& inst, const std::vector<int>& order) {
  double len = 0.0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) len += inst(order[k], order[k + 1]);
  return len;
}

OptimalPath op_path(const Instance& inst, const SubsetSelection& sel, int u, int v, int cap) {
  if (u == v) throw std::invalid_argument("op_path: endpoints must differ");
  const int lu = sel.local(u), lv = sel.local(v);
  if (lu < 0 || lv < 0) throw std::invalid_argument("op_path: endpoint not in selection");
  const int i = sel.size();
  check_cap(i, cap);
  const auto d = local_matrix(inst, sel.vertices);
  const int a = std::min(lu, lv), b = std::max(lu, lv);
  AnchoredSweep sw(d, i, b);
  OptimalPath p;
  p.endpoints = Edge(u, v);
  p.order = to_global(sel, sw.walk(sw.slot_of(a), sw.full()));
  if (u > v) std::reverse(p.order.begin(), p.order.end());
  p.length = path_length(inst, p.order);
  return p;
}

std::vector<OptimalPath> all_op_paths(const Instance& inst, const SubsetSelection& sel, int cap) {
  const int i = sel.size();
  check_cap(i, cap);
  const auto d = local_matrix(inst, sel.vertices);
  std::vector<OptimalPath> out(edge_count(i));
  for (int b = 1; b < i; ++b) {
    AnchoredSweep sw(d, i, b);
    for (int a = 0; a < b; ++a) {
      OptimalPath& p = out[edge_index(Edge(a, b), i)];
      p.endpoints = Edge(sel.vertices[static_cast<std::size_t>(a)],
                         sel.vertices[static_cast<std::size_t>(b)]);
      p.order = to_global(sel, sw.walk(sw.slot_of(a), sw.full()));
      p.length = path_length(inst, p.order);
    }
  }
  return out;
}

Tour ohc(const Instance& inst, const SubsetSelection& sel, int cap) {
  const int i = sel.size();
  if (i < 3) throw std::invalid_argument("ohc: need at least 3 vertices");
  check_cap(i, cap);
  const auto d = local_matrix(inst, sel.vertices);
  AnchoredSweep sw(d, i, 0);
  auto cyc = best_cycle(sw, d);
  Tour t;
  t.order = to_global(sel, *cyc);
  t.length = cycle_length(inst, t.order);
  return t;
}

std::optional<Tour> ohc_restricted(const Instance& inst, const std::vector<char>& allowed,
                                   int cap) {
  const int n = inst.size();
  check_cap(n, cap);
  if (allowed.size() != edge_count(n))
    throw std::invalid_argument("ohc_restricted: mask has wrong size");
  std::vector<double> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInf);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (allowed[edge_index(Edge(u, v), n)]) {
        d[static_cast<std::size_t>(u * n + v)] = inst(u, v);
        d[static_cast<std::size_t>(v * n + u)] = inst(u, v);
      }
  AnchoredSweep sw(d, n, 0);
  auto cyc = best_cycle(sw, d);
  if (!cyc) return std::nullopt;
  Tour t;
  t.order = std::move(*cyc);
  t.length = cycle_length(inst, t.order);
  return t;
}

OptimalPath oracle_path(const Instance& inst, const SubsetSelection& sel, int u, int v) {
  if (u == v) throw std::invalid_argument("oracle_path: endpoints must differ");
  if (!sel.contains(u) || !sel.contains(v))
    throw std::invalid_argument("oracle_path: endpoint not in selection");
  if (sel.size() > kOracleCap)
    throw LimitExceeded("oracle_path: subset exceeds the oracle cap of 10");
  const int a = std::min(u, v), b = std::max(u, v);
  std::vector<int> mid;
  for (int w : sel.vertices)
    if (w != a && w != b) mid.push_back(w);
  double best = kInf;
  std::vector<int> best_mid;
  do {
    // Summed from the far end, matching how the DP accumulates.
    double acc = inst(mid.back(), b);
    for (std::size_t k = mid.size() - 1; k-- > 0;) acc = inst(mid[k], mid[k + 1]) + acc;
    acc = inst(a, mid.front()) + acc;
    if (acc < best) {
      best = acc;
      best_mid = mid;
    }
  } while (std::next_permutation(mid.begin(), mid.end()));
  OptimalPath p;
  p.endpoints = Edge(u, v);
  p.order.push_back(a);
  p.order.insert(p.order.end(), best_mid.begin(), best_mid.end());
  p.order.push_back(b);
  if (u > v) std::reverse(p.order.begin(), p.order.end());
  p.length = path_length(inst, p.order);
  return p;
}

Tour oracle_cycle(const Instance& inst, const SubsetSelection& sel) {
  const int i = sel.size();
  if (i > kOracleCap)
    throw LimitExceeded("oracle_cycle: subset exceeds the oracle cap of 10");
  const int s = sel.vertices.front();
  std::vector<int> rest(sel.vertices.begin() + 1, sel.vertices.end());
  double best = kInf;
  std::vector<int> best_rest;
  do {
    double acc = inst(rest.back(), s);
    for (std::size_t k = rest.size() - 1; k-- > 0;) acc = inst(rest[k], rest[k + 1]) + acc;
    acc = inst(s, rest.front()) + acc;
    if (acc < best) {
      best = acc;
      best_rest = rest;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  Tour t;
  t.order.push_back(s);
  t.order.insert(t.order.end(), best_rest.begin(), best_rest.end());
  t.length = cycle_length(inst, t.order);
  return t;
}

}  // namespace kfreq
