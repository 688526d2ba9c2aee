#include "kfreq/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kfreq {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

bool all_integral(const std::vector<double>& m, int n) {
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && m[static_cast<std::size_t>(u * n + v)] !=
                        std::floor(m[static_cast<std::size_t>(u * n + v)]))
        return false;
  return true;
}

[[noreturn]] void fail(const std::string& what) {
  throw ParseError("tsplib: " + what);
}

// Splits "KEY : VALUE" (colon optional for section keywords).
std::pair<std::string, std::string> split_key(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) return {upper(trim(line)), {}};
  return {upper(trim(line.substr(0, colon))), trim(line.substr(colon + 1))};
}

}  // namespace

std::string_view to_string(WeightModel m) {
  switch (m) {
    case WeightModel::Euc2D: return "EUC_2D";
    case WeightModel::Att: return "ATT";
    case WeightModel::Geo: return "GEO";
    case WeightModel::ExplicitMatrix: return "EXPLICIT";
    case WeightModel::RandomUniform: return "RANDOM_UNIFORM";
  }
  return "?";
}

int tsplib_euc2d(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return static_cast<int>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

int tsplib_att(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
  const int t = static_cast<int>(r + 0.5);
  return t < r ? t + 1 : t;
}

namespace {

double geo_radians(double coord) {
  constexpr double kPi = 3.141592;
  // Degrees are truncated toward zero, as in the reference implementations.
  const double deg = static_cast<double>(static_cast<int>(coord));
  const double min = coord - deg;
  return kPi * (deg + 5.0 * min / 3.0) / 180.0;
}

}  // namespace

int tsplib_geo(const Point& a, const Point& b) {
  constexpr double kRadius = 6378.388;
  const double lat_a = geo_radians(a.x), lon_a = geo_radians(a.y);
  const double lat_b = geo_radians(b.x), lon_b = geo_radians(b.y);
  const double q1 = std::cos(lon_a - lon_b);
  const double q2 = std::cos(lat_a - lat_b);
  const double q3 = std::cos(lat_a + lat_b);
  return static_cast<int>(
      kRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
}

Instance Instance::from_matrix(std::vector<double> matrix, int n, WeightModel model,
                               std::string name) {
  if (n < 4) throw std::invalid_argument("instance needs at least 4 vertices");
  if (matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("distance matrix has wrong size");
  for (int u = 0; u < n; ++u) {
    matrix[static_cast<std::size_t>(u * n + u)] = 0.0;
    for (int v = u + 1; v < n; ++v) {
      const double a = matrix[static_cast<std::size_t>(u * n + v)];
      const double b = matrix[static_cast<std::size_t>(v * n + u)];
      if (a != b) throw std::invalid_argument("distance matrix is not symmetric");
      if (!(a >= 0.0) || !std::isfinite(a))
        throw std::invalid_argument("distances must be finite and non-negative");
    }
  }
  Instance inst;
  inst.n_ = n;
  inst.model_ = model;
  inst.name_ = std::move(name);
  inst.integral_ = all_integral(matrix, n);
  inst.dist_ = std::move(matrix);
  return inst;
}

Instance Instance::from_points(std::vector<Point> points, WeightModel model,
                               std::string name) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw std::invalid_argument("instance needs at least 4 vertices");
  int (*metric)(const Point&, const Point&) = nullptr;
  switch (model) {
    case WeightModel::Euc2D: metric = &tsplib_euc2d; break;
    case WeightModel::Att: metric = &tsplib_att; break;
    case WeightModel::Geo: metric = &tsplib_geo; break;
    default: throw std::invalid_argument("from_points needs a coordinate model");
  }
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double d = metric(points[static_cast<std::size_t>(u)],
                              points[static_cast<std::size_t>(v)]);
      m[static_cast<std::size_t>(u * n + v)] = d;
      m[static_cast<std::size_t>(v * n + u)] = d;
    }
  Instance inst = from_matrix(std::move(m), n, model, std::move(name));
  inst.points_ = std::move(points);
  return inst;
}

double Instance::distance(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("distance(u, u) is undefined");
  return (*this)(u, v);
}

double Instance::min_positive_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      const double d = (*this)(u, v);
      if (d > 0.0) best = std::min(best, d);
    }
  return best;
}

Instance Instance::with_perturbation(std::vector<double> matrix, Perturbation p) const {
  Instance out = from_matrix(std::move(matrix), n_, model_, name_);
  out.points_ = points_;
  out.perturbation_ = p;
  return out;
}

std::vector<Edge> Tour::edges() const {
  std::vector<Edge> out;
  const std::size_t n = order.size();
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(order[k], order[(k + 1) % n]);
  std::sort(out.begin(), out.end());
  return out;
}

double cycle_length(const Instance& inst, const std::vector<int>& order) {
  double len = 0.0;
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) len += inst(order[k], order[(k + 1) % n]);
  return len;
}

Tour make_tour(const Instance& inst, std::vector<int> order) {
  const int n = inst.size();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("tour does not visit every vertex exactly once");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n) throw std::invalid_argument("tour vertex out of range");
    if (seen[static_cast<std::size_t>(v)]++)
      throw std::invalid_argument("tour repeats vertex " + std::to_string(v + 1));
  }
  Tour t;
  t.length = cycle_length(inst, order);
  t.order = std::move(order);
  return t;
}

Instance parse_tsplib(std::istream& in) {
  std::string name, type, weight_type, weight_format;
  long dimension = -1;
  std::vector<Point> points;
  std::vector<double> weights;
  bool have_coords = false, have_weights = false;

  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    auto [key, value] = split_key(t);
    if (key == "EOF") break;
    if (key == "NAME") {
      name = value;
    } else if (key == "TYPE") {
      type = upper(value);
      if (type != "TSP") fail("unsupported TYPE " + value);
    } else if (key == "DIMENSION") {
      try {
        dimension = std::stol(value);
      } catch (const std::exception&) {
        fail("malformed DIMENSION '" + value + "'");
      }
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = upper(value);
      if (weight_type != "EUC_2D" && weight_type != "ATT" && weight_type != "GEO" &&
          weight_type != "EXPLICIT")
        fail("unsupported EDGE_WEIGHT_TYPE " + value);
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = upper(value);
    } else if (key == "NODE_COORD_SECTION") {
      if (dimension < 0) fail("NODE_COORD_SECTION before DIMENSION");
      points.assign(static_cast<std::size_t>(dimension), Point{});
      std::vector<char> seen(static_cast<std::size_t>(dimension), 0);
      long read = 0;
      while (read < dimension && std::getline(in, line)) {
        const std::string row = trim(line);
        if (row.empty()) continue;
        if (upper(row) == "EOF") break;
        std::istringstream rs(row);
        long id;
        double x, y;
        if (!(rs >> id >> x >> y)) fail("malformed NODE_COORD_SECTION row '" + row + "'");
        if (id < 1 || id > dimension)
          fail("DIMENSION mismatch: node id " + std::to_string(id) + " out of range");
        if (seen[static_cast<std::size_t>(id - 1)]++)
          fail("duplicate node id " + std::to_string(id));
        points[static_cast<std::size_t>(id - 1)] = {x, y};
        ++read;
      }
      if (read != dimension)
        fail("DIMENSION mismatch: expected " + std::to_string(dimension) +
             " coordinates, found " + std::to_string(read));
      have_coords = true;
    } else if (key == "EDGE_WEIGHT_SECTION") {
      if (dimension < 0) fail("EDGE_WEIGHT_SECTION before DIMENSION");
      const long n = dimension;
      long expected = 0;
      if (weight_format == "FULL_MATRIX") expected = n * n;
      else if (weight_format == "UPPER_ROW" || weight_format == "LOWER_ROW")
        expected = n * (n - 1) / 2;
      else if (weight_format == "UPPER_DIAG_ROW" || weight_format == "LOWER_DIAG_ROW")
        expected = n * (n + 1) / 2;
      else
        fail("unsupported EDGE_WEIGHT_FORMAT '" + weight_format + "'");
      weights.clear();
      weights.reserve(static_cast<std::size_t>(expected));
      std::string tok;
      while (static_cast<long>(weights.size()) < expected && in >> tok) {
        try {
          std::size_t used = 0;
          weights.push_back(std::stod(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          fail("malformed EDGE_WEIGHT_SECTION token '" + tok + "'");
        }
      }
      if (static_cast<long>(weights.size()) != expected)
        fail("EDGE_WEIGHT_SECTION ended after " + std::to_string(weights.size()) +
             " of " + std::to_string(expected) + " weights");
      have_weights = true;
    } else if (key == "DISPLAY_DATA_SECTION") {
      if (dimension < 0) fail("DISPLAY_DATA_SECTION before DIMENSION");
      for (long k = 0; k < dimension && std::getline(in, line);)
        if (!trim(line).empty()) ++k;
    }
  }

  if (dimension < 0) fail("missing DIMENSION");
  if (dimension < 4) fail("DIMENSION must be at least 4");
  if (weight_type.empty()) fail("missing EDGE_WEIGHT_TYPE");
  const int n = static_cast<int>(dimension);

  if (weight_type == "EXPLICIT") {
    if (!have_weights) fail("missing EDGE_WEIGHT_SECTION");
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    auto set = [&](int u, int v, double d) {
      m[static_cast<std::size_t>(u * n + v)] = d;
      m[static_cast<std::size_t>(v * n + u)] = d;
    };
    std::size_t k = 0;
    if (weight_format == "FULL_MATRIX") {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v, ++k) {
          if (v > u) set(u, v, weights[k]);
          if (v < u && weights[k] != m[static_cast<std::size_t>(u * n + v)])
            fail("FULL_MATRIX is not symmetric");
        }
    } else if (weight_format == "UPPER_ROW") {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) set(u, v, weights[k++]);
    } else if (weight_format == "LOWER_ROW") {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < u; ++v) set(u, v, weights[k++]);
    } else if (weight_format == "UPPER_DIAG_ROW") {
      for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v, ++k)
          if (v != u) set(u, v, weights[k]);
    } else {  // LOWER_DIAG_ROW
      for (int u = 0; u < n; ++u)
        for (int v = 0; v <= u; ++v, ++k)
          if (v != u) set(u, v, weights[k]);
    }
    return Instance::from_matrix(std::move(m), n, WeightModel::ExplicitMatrix, name);
  }

  if (!have_coords) fail("missing NODE_COORD_SECTION");
  const WeightModel model = weight_type == "EUC_2D" ? WeightModel::Euc2D
                            : weight_type == "ATT"  ? WeightModel::Att
                                                    : WeightModel::Geo;
  return Instance::from_points(std::move(points), model, name);
}

Instance parse_tsplib(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tsplib(in);
}

Instance load_tsplib(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_tsplib(in);
}

Tour parse_tour(std::istream& in, const Instance& inst) {
  std::string line;
  std::vector<int> order;
  bool in_section = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!in_section) {
      auto [key, value] = split_key(t);
      if (key == "EOF") break;
      if (key == "TYPE" && upper(value) != "TOUR")
        throw ParseError("tour: unsupported TYPE " + value);
      if (key == "DIMENSION" && std::stol(value) != inst.size())
        throw ParseError("tour: DIMENSION " + value + " does not match instance");
      if (key == "TOUR_SECTION") in_section = true;
      continue;
    }
    std::istringstream rs(t);
    std::string tok;
    bool done = false;
    while (rs >> tok) {
      if (upper(tok) == "EOF") { done = true; break; }
      long id;
      try {
        id = std::stol(tok);
      } catch (const std::exception&) {
        throw ParseError("tour: malformed entry '" + tok + "'");
      }
      if (id == -1) { done = true; break; }
      if (id < 1 || id > inst.size())
        throw ParseError("tour: vertex " + tok + " out of range");
      order.push_back(static_cast<int>(id - 1));
    }
    if (done) break;
  }
  if (!in_section) throw ParseError("tour: missing TOUR_SECTION");
  try {
    return make_tour(inst, std::move(order));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("tour: ") + e.what());
  }
}

Tour parse_tour(std::string_view text, const Instance& inst) {
  std::istringstream in{std::string(text)};
  return parse_tour(in, inst);
}

Tour load_tour(const std::string& path, const Instance& inst) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_tour(in, inst);
}

Instance gen_random(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_random: n must be at least 4");
  Rng rng(seed);
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double d = 10.0 * (1.0 - uniform_unit(rng));
      m[static_cast<std::size_t>(u * n + v)] = d;
      m[static_cast<std::size_t>(v * n + u)] = d;
    }
  return Instance::from_matrix(std::move(m), n, WeightModel::RandomUniform,
                               "random-" + std::to_string(n) + "-" + std::to_string(seed));
}

Instance perturb(const Instance& inst, std::uint64_t seed, double magnitude) {
  if (!(magnitude > 0.0)) throw std::invalid_argument("perturb: magnitude must be > 0");
  const int n = inst.size();
  Rng rng(seed);
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double d = inst(u, v) + magnitude * (1.0 - uniform_unit(rng));
      m[static_cast<std::size_t>(u * n + v)] = d;
      m[static_cast<std::size_t>(v * n + u)] = d;
    }
  return inst.with_perturbation(std::move(m), Perturbation{seed, magnitude});
}

double default_perturbation_magnitude(const Instance& inst) {
  const double m = inst.min_positive_distance();
  return 1e-6 * (std::isfinite(m) ? m : 1.0);
}

bool pairing_sums_distinct(const Instance& inst) {
  const int n = inst.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const double s1 = inst(a, b) + inst(c, d);
          const double s2 = inst(a, c) + inst(b, d);
          const double s3 = inst(a, d) + inst(b, c);
          if (s1 == s2 || s1 == s3 || s2 == s3) return false;
        }
  return true;
}

void write_tsplib_explicit(std::ostream& out, const Instance& inst) {
  const int n = inst.size();
  out << "NAME : " << (inst.name().empty() ? "instance" : inst.name()) << '\n'
      << "TYPE : TSP\n"
      << "DIMENSION : " << n << '\n'
      << "EDGE_WEIGHT_TYPE : EXPLICIT\n"
      << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n"
      << "EDGE_WEIGHT_SECTION\n";
  out << std::setprecision(17);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) out << (v ? " " : "") << (u == v ? 0.0 : inst(u, v));
    out << '\n';
  }
  out << "EOF\n";
}

void write_distance_csv(std::ostream& out, const Instance& inst) {
  out << "u,v,dist\n" << std::setprecision(17);
  for (int u = 0; u < inst.size(); ++u)
    for (int v = u + 1; v < inst.size(); ++v) out << u << ',' << v << ',' << inst(u, v) << '\n';
}

}  // namespace kfreq
