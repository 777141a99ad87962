#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "io.hpp"
#include "test_support.hpp"

using namespace sublorentz;

TEST(JsonIo, MatrixRoundTrip) {
  testsupport::Random rng(61);
  for (int n = 0; n < 50; ++n) {
    const Mat2C m = rng.matrix(10.0);
    const auto text = slio::to_json(m).dump();
    EXPECT_EQ(slio::matrix_from_json(nlohmann::json::parse(text)), m);
  }
}

TEST(JsonIo, MatrixLayout) {
  const auto j = slio::to_json(basis_matrix(2));
  EXPECT_EQ(j["m"][0][1][1].get<double>(), 0.5);
  EXPECT_EQ(j["m"][1][0][1].get<double>(), -0.5);
}

TEST(JsonIo, MalformedMatrixRejected) {
  EXPECT_ANY_THROW(slio::matrix_from_json(nlohmann::json::parse(R"({"m": [[1, 2], [3]]})")));
  EXPECT_ANY_THROW(slio::matrix_from_json(nlohmann::json::parse(R"({"x": 1})")));
}

TEST(JsonIo, CoordsRoundTrip) {
  AlgCoords c;
  for (int i = 0; i < 8; ++i) c[i] = 0.1 * i - 0.35;
  EXPECT_EQ(slio::coords_from_json(nlohmann::json::parse(slio::to_json(c).dump())), c);
}

TEST(JsonIo, InfiniteNumbersAsStrings) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(slio::number(inf), "inf");
  EXPECT_EQ(slio::number(-inf), "-inf");
  EXPECT_EQ(slio::to_number(slio::number(-inf)), -inf);
  EXPECT_EQ(slio::to_number(slio::number(1.25)), 1.25);
}

TEST(JsonIo, BracketRoundTrip) {
  DistanceBracket b;
  b.lower = 0.75;
  b.upper = std::numeric_limits<double>::infinity();
  b.solves = 17;
  b.witness = {{0.6, 0.8, 0.0}, {0.1, -0.2, 0.3}, 1.5};
  b.near_optimal = {1.5, 1.5000001};
  const DistanceBracket back = slio::bracket_from_json(nlohmann::json::parse(slio::to_json(b).dump()));
  EXPECT_EQ(back.lower, b.lower);
  EXPECT_EQ(back.upper, b.upper);
  EXPECT_EQ(back.feasible, b.feasible);
  EXPECT_EQ(back.converged, b.converged);
  EXPECT_EQ(back.witness.alpha, b.witness.alpha);
  EXPECT_EQ(back.witness.beta, b.witness.beta);
  EXPECT_EQ(back.witness.T, b.witness.T);
  EXPECT_EQ(back.near_optimal, b.near_optimal);
}

TEST(JsonIo, ReportRoundTrip) {
  for (const Mat2C& g : {std::exp(1.0) * exp_series(basis_matrix(1)), exp_series(basis_matrix(1)), Mat2C::identity()}) {
    const CausalReport r = causal_classify(g);
    const auto j = slio::to_json(r);
    const CausalReport back = slio::report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.cls, r.cls);
    EXPECT_EQ(back.xi, r.xi);
    EXPECT_EQ(back.distance.kind, r.distance.kind);
    EXPECT_EQ(back.distance.value, r.distance.value);
    EXPECT_EQ(back.eta.upper, r.eta.upper);
    EXPECT_EQ(back.c_param, r.c_param);
    EXPECT_EQ(slio::to_json(back), j);
  }
  EXPECT_EQ(slio::to_json(causal_classify(exp_series(basis_matrix(1))))["distance"], "-inf");
}

TEST(CsvIo, PathRoundTripWithCovectors) {
  const PontryaginResult r =
      pontryagin_integrate(CovectorState{{std::sqrt(2.0), -1, 0, 0, 0.3, 0, 0}}, Regime::kTimelike, 1.0, 20);
  std::stringstream ss;
  slio::write_path_csv(ss, r.path, {"note: test"});
  const PathSample back = slio::read_path_csv(ss);
  ASSERT_EQ(back.size(), r.path.size());
  ASSERT_EQ(back.covectors.size(), r.path.covectors.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back.times[i], r.path.times[i]);
    EXPECT_EQ(back.points[i], r.path.points[i]);
    EXPECT_EQ(back.controls[i], r.path.controls[i]);
    EXPECT_EQ(back.covectors[i].psi, r.path.covectors[i].psi);
  }
}

TEST(CsvIo, PathWithoutCovectorsAndExtras) {
  PathSample p;
  for (int i = 0; i < 4; ++i) {
    p.times.push_back(0.1 * i);
    p.points.push_back(exp_series(0.1 * i * basis_matrix(3)));
    p.controls.push_back(unit_coords(3));
  }
  slio::ExtraColumns extra;
  extra.det = true;
  extra.norm_residual = {0, 0, 0, 0};
  std::stringstream ss;
  slio::write_path_csv(ss, p, {}, extra);
  const std::string text = ss.str();
  EXPECT_NE(text.find("det_re"), std::string::npos);
  const PathSample back = slio::read_path_csv(ss);
  EXPECT_TRUE(back.covectors.empty());
  ASSERT_EQ(back.size(), 4u);
  EXPECT_EQ(back.points[3], p.points[3]);
}

TEST(CsvIo, HeaderOnly) {
  std::stringstream ss;
  slio::write_path_csv(ss, PathSample{}, {"empty"});
  EXPECT_EQ(slio::read_path_csv(ss).size(), 0u);
}

TEST(CsvIo, BadRowNamesLine) {
  PathSample p;
  for (int i = 0; i < 2; ++i) {
    p.times.push_back(i);
    p.points.push_back(Mat2C::identity());
    p.controls.push_back(unit_coords(0));
  }
  std::stringstream out;
  slio::write_path_csv(out, p, {"one", "two"});
  std::string text = out.str();
  const std::size_t last = text.rfind('\n', text.size() - 2) + 1;
  text.replace(last, 1, "x");
  const long lines = std::count(text.begin(), text.end(), '\n');
  std::stringstream in(text);
  try {
    slio::read_path_csv(in);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(lines)), std::string::npos) << e.what();
  }
}

TEST(Format, SeventeenDigitsRoundTrip) {
  testsupport::Random rng(62);
  for (int n = 0; n < 200; ++n) {
    const double v = rng.uniform(-1e3, 1e3) * std::pow(10.0, rng.uniform(-20, 20));
    EXPECT_EQ(std::stod(slio::format_double(v)), v);
  }
}

TEST(ParseList, ValuesAndErrors) {
  EXPECT_EQ(slio::parse_list("1, -2.5,3e1", "x"), (std::vector<double>{1.0, -2.5, 30.0}));
  try {
    slio::parse_list("1,abc,3", "coeffs");
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    const std::string what = e.what();
    EXPECT_NE(what.find("coeffs"), std::string::npos);
    EXPECT_NE(what.find("2"), std::string::npos);
  }
  try {
    slio::parse_list("1,inf", "coeffs");
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFinite);
  }
}
