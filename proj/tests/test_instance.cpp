#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "kfreq/instance.hpp"

using namespace kfreq;

namespace {

const char* kEuc =
    "NAME : tiny\n"
    "TYPE : TSP\n"
    "DIMENSION : 4\n"
    "EDGE_WEIGHT_TYPE : EUC_2D\n"
    "NODE_COORD_SECTION\n"
    "1 0 0\n2 3 0\n3 3 4\n4 0 4\n"
    "EOF\n";

std::string explicit_text(const std::string& format, const std::string& body) {
  return "NAME : m\nTYPE : TSP\nDIMENSION : 4\nEDGE_WEIGHT_TYPE : EXPLICIT\n"
         "EDGE_WEIGHT_FORMAT : " + format + "\nEDGE_WEIGHT_SECTION\n" + body + "\nEOF\n";
}

Instance parse(const std::string& s) { return parse_tsplib(std::string_view(s)); }

}  // namespace

TEST(Tsplib, Euc2dCoordinates) {
  const auto inst = parse(kEuc);
  EXPECT_EQ(inst.size(), 4);
  EXPECT_EQ(inst.name(), "tiny");
  EXPECT_EQ(inst.model(), WeightModel::Euc2D);
  EXPECT_TRUE(inst.integral());
  EXPECT_EQ(inst.distance(0, 2), 5);
  EXPECT_EQ(inst.distance(2, 0), 5);
  EXPECT_EQ(inst.distance(0, 1), 3);
}

TEST(Tsplib, RoundingAgainstIndependentFormulas) {
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Point a{1000 * uniform_unit(rng), 1000 * uniform_unit(rng)};
    const Point b{1000 * uniform_unit(rng), 1000 * uniform_unit(rng)};
    const double dx = a.x - b.x, dy = a.y - b.y;
    ASSERT_EQ(tsplib_euc2d(a, b), std::lround(std::hypot(dx, dy)));
    // nint, bumped when it lands below: a ceiling
    ASSERT_EQ(tsplib_att(a, b), static_cast<int>(std::ceil(std::sqrt((dx * dx + dy * dy) / 10.0))));
  }
}

TEST(Tsplib, GeoUsesDegreesAndMinutes) {
  // one degree of longitude on the equator
  EXPECT_EQ(tsplib_geo({0, 0}, {0, 1}), 112);
  // 0.30 reads as 30 minutes
  EXPECT_EQ(tsplib_geo({0, 0}, {0.30, 0}), 56);
  EXPECT_EQ(tsplib_geo({-0.30, 0}, {0, 0}), 56);
}

TEST(Tsplib, ExplicitFormatsAgree) {
  const auto full = parse(explicit_text("FULL_MATRIX", "0 1 2 3\n1 0 4 5\n2 4 0 6\n3 5 6 0"));
  const auto upper = parse(explicit_text("UPPER_ROW", "1 2 3\n4 5\n6"));
  const auto lower = parse(explicit_text("LOWER_ROW", "1\n2 4\n3 5 6"));
  const auto upper_d = parse(explicit_text("UPPER_DIAG_ROW", "0 1 2 3\n0 4 5\n0 6\n0"));
  const auto lower_d = parse(explicit_text("LOWER_DIAG_ROW", "0\n1 0\n2 4 0\n3 5 6 0"));
  for (const auto* other : {&upper, &lower, &upper_d, &lower_d})
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v)
        if (u != v) EXPECT_EQ(full(u, v), (*other)(u, v)) << u << "," << v;
  EXPECT_EQ(full.distance(2, 3), 6);
}

TEST(Tsplib, ExplicitRoundTrip) {
  const auto inst = test::perturbed_random(7, 3);
  std::stringstream ss;
  write_tsplib_explicit(ss, inst);
  const auto back = parse_tsplib(ss);
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v)
      if (u != v) ASSERT_EQ(inst(u, v), back(u, v));
}

TEST(Tsplib, Errors) {
  EXPECT_THROW(parse("TYPE : TSP\nDIMENSION : 4\nEDGE_WEIGHT_TYPE : EUC_3D\n"), ParseError);
  EXPECT_THROW(parse("TYPE : ATSP\nDIMENSION : 4\n"), ParseError);
  // fewer rows than DIMENSION
  EXPECT_THROW(parse("DIMENSION : 5\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 1 1\n"),
               ParseError);
  EXPECT_THROW(parse("DIMENSION : 4\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
                     "1 0 0\n1 1 1\n3 2 2\n4 3 3\n"),
               ParseError);
  EXPECT_THROW(parse("DIMENSION : 4\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 x 1\n"),
               ParseError);
  EXPECT_THROW(parse("DIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
                     "1 0 0\n2 1 1\n3 2 2\n"),
               ParseError);
  EXPECT_THROW(parse(explicit_text("UPPER_ROW", "1 2 3\n4 5")), ParseError);
  EXPECT_THROW(parse(explicit_text("UPPER_ROW", "1 2 3\n4 5 z")), ParseError);
  EXPECT_THROW(parse(explicit_text("FULL_MATRIX", "0 1 2 3\n9 0 4 5\n2 4 0 6\n3 5 6 0")),
               ParseError);
  EXPECT_THROW(parse(explicit_text("FUNCTION", "1")), ParseError);
  EXPECT_THROW(load_tsplib("/nonexistent/file.tsp"), ParseError);
}

TEST(Tsplib, LoadsFileAndTour) {
  const auto inst = load_tsplib(KFREQ_TEST_DATA "/square5.tsp");
  EXPECT_EQ(inst.size(), 5);
  EXPECT_EQ(inst.distance(0, 4), 7);
  const auto tour = load_tour(KFREQ_TEST_DATA "/square5.tour", inst);
  EXPECT_EQ(tour.order, (std::vector<int>{0, 1, 4, 2, 3}));
  EXPECT_EQ(tour.length, 10 + 7 + 7 + 10 + 10);
}

TEST(Tour, Errors) {
  const auto inst = parse(kEuc);
  EXPECT_NO_THROW(parse_tour(std::string_view("TOUR_SECTION\n1 2 3 4\n-1\n"), inst));
  EXPECT_NO_THROW(parse_tour(std::string_view("TOUR_SECTION\n4\n3\n2\n1\n"), inst));
  EXPECT_THROW(parse_tour(std::string_view("TOUR_SECTION\n1 2 3\n-1\n"), inst), ParseError);
  EXPECT_THROW(parse_tour(std::string_view("TOUR_SECTION\n1 2 2 4\n-1\n"), inst), ParseError);
  EXPECT_THROW(parse_tour(std::string_view("TOUR_SECTION\n1 2 3 5\n-1\n"), inst), ParseError);
  EXPECT_THROW(parse_tour(std::string_view("DIMENSION : 5\nTOUR_SECTION\n1 2 3 4\n-1\n"), inst),
               ParseError);
  EXPECT_THROW(parse_tour(std::string_view("1 2 3 4\n"), inst), ParseError);
  EXPECT_THROW(make_tour(inst, {0, 1, 2}), std::invalid_argument);
}

TEST(Tour, LengthAndEdges) {
  const auto inst = parse(kEuc);
  const auto t = make_tour(inst, {0, 1, 2, 3});
  EXPECT_EQ(t.length, 14);
  EXPECT_EQ(t.edges().size(), 4u);
  EXPECT_EQ(cycle_length(inst, {0, 2, 1, 3}), 5 + 4 + 5 + 4);
}

TEST(Instance, MatrixValidation) {
  EXPECT_THROW(test::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(test::from_rows({{0, 1, 1, 1}, {2, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}),
               std::invalid_argument);
  EXPECT_THROW(test::from_rows({{0, -1, 1, 1}, {-1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}),
               std::invalid_argument);
  const auto sq = test::unit_square();
  EXPECT_THROW(sq.distance(1, 1), std::invalid_argument);
  EXPECT_THROW(sq.distance(0, 4), std::invalid_argument);
}

TEST(Random, DeterministicAndInRange) {
  const auto a = gen_random(10, 5), b = gen_random(10, 5), c = gen_random(10, 6);
  bool differs = false;
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      EXPECT_EQ(a(u, v), b(u, v));
      EXPECT_GT(a(u, v), 0.0);
      EXPECT_LE(a(u, v), 10.0);
      EXPECT_EQ(a(u, v), a(v, u));
      differs |= a(u, v) != c(u, v);
    }
  EXPECT_TRUE(differs);
}

TEST(Perturb, SmallDeterministicNoise) {
  const auto base = gen_random(8, 1);
  const double mag = default_perturbation_magnitude(base);
  EXPECT_DOUBLE_EQ(mag, 1e-6 * base.min_positive_distance());
  const auto p = perturb(base, 9, mag), q = perturb(base, 9, mag);
  ASSERT_TRUE(p.perturbation().has_value());
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) {
      EXPECT_EQ(p(u, v), q(u, v));
      EXPECT_EQ(p(u, v), p(v, u));
      EXPECT_GT(p(u, v), base(u, v));
      EXPECT_LE(p(u, v) - base(u, v), mag * (1 + 1e-9));
    }
  EXPECT_THROW(perturb(base, 1, 0.0), std::invalid_argument);
}

TEST(Perturb, BreaksPairingTies) {
  // every side and diagonal rounds to 1
  const auto flat = parse("DIMENSION : 4\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
                          "1 0 0\n2 1 0\n3 1 1\n4 0 1\n");
  EXPECT_FALSE(pairing_sums_distinct(flat));
  EXPECT_TRUE(pairing_sums_distinct(perturb(flat, 4, default_perturbation_magnitude(flat))));
}

TEST(Output, DistanceCsv) {
  std::stringstream ss;
  write_distance_csv(ss, parse(kEuc));
  std::string header, first;
  std::getline(ss, header);
  std::getline(ss, first);
  EXPECT_EQ(header, "u,v,dist");
  EXPECT_EQ(first, "0,1,3");
}
