#include <limits>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "macexp/curve.hpp"
#include "macexp/figures.hpp"

using namespace macexp;

namespace {

figure_data sample_figure() {
  figure_data f;
  f.name = "sample";
  f.x_name = "rate";
  f.y_name = "exponent";
  f.params["snr"] = 10.0;
  f.params["offset"] = 1.0 / 3.0;
  curve c1;
  c1.label = "curve-one";
  c1.params["marker"] = 0.125;
  c1.points = {{0.0, 0.25}, {0.1, 0.2}, {0.2, 1.0 / 7.0}};
  curve c2;
  c2.label = "curve_two";
  c2.points = {{0.0, 1e-30}, {0.5, 123456.789}};
  f.curves = {c1, c2};
  round_figure(f);
  return f;
}

}  // namespace

TEST_CASE("rounding to 12 significant digits is idempotent") {
  for (double v : {1.0 / 3.0, 123456.789, 1e-30, 0.0, -2.5e17, 0.69314718055994531}) {
    double once = round_sig12(v);
    CHECK(round_sig12(once) == once);
    // Parsing the formatted text recovers exactly the rounded double.
    CHECK(std::stod(format_sig12(once)) == once);
  }
  CHECK(format_sig12(0.0) == "0");
}

TEST_CASE("identifier charset") {
  CHECK(identifier_ok("rate_markers"));
  CHECK(identifier_ok("fig4a"));
  CHECK(identifier_ok("snr1_db"));
  CHECK(identifier_ok("a-b.c"));
  CHECK_FALSE(identifier_ok(""));
  CHECK_FALSE(identifier_ok("has space"));
  CHECK_FALSE(identifier_ok("comma,bad"));
  CHECK_FALSE(identifier_ok("uni\xc3\xa9"));
}

TEST_CASE("csv and json round trips preserve the figure exactly") {
  figure_data f = sample_figure();
  validate_figure(f, true);

  std::string csv = figure_to_csv(f);
  figure_data from_csv = figure_from_csv(csv);
  CHECK(figures_equal(f, from_csv));

  std::string json = figure_to_json(f);
  figure_data from_json = figure_from_json(json);
  CHECK(figures_equal(f, from_json));

  CHECK(figures_equal(from_csv, from_json));

  // Serialization is byte stable across a round trip.
  CHECK(figure_to_csv(from_csv) == csv);
  CHECK(figure_to_json(from_json) == json);
}

TEST_CASE("figure validation rejects malformed data") {
  figure_data f = sample_figure();
  validate_figure(f, true);

  figure_data bad_label = f;
  bad_label.curves[0].label = "has space";
  CHECK_THROWS_AS(validate_figure(bad_label, true), std::invalid_argument);

  figure_data dup = f;
  dup.curves[1].label = dup.curves[0].label;
  CHECK_THROWS_AS(validate_figure(dup, true), std::invalid_argument);

  figure_data empty = f;
  empty.curves.clear();
  CHECK_THROWS_AS(validate_figure(empty, true), std::invalid_argument);

  figure_data nonfinite = f;
  nonfinite.curves[0].points[1].y = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate_figure(nonfinite, true), std::invalid_argument);

  figure_data unsorted = f;
  unsorted.curves[0].points[1].x = -1.0;
  CHECK_THROWS_AS(validate_figure(unsorted, true), std::invalid_argument);
  // ... but relaxed monotonicity admits it.
  validate_figure(unsorted, false);
}

TEST_CASE("csv parser rejects garbage") {
  CHECK_THROWS_AS(figure_from_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(figure_from_csv("not,a,figure\n1,2,3\n"), std::invalid_argument);
  figure_data f = sample_figure();
  std::string csv = figure_to_csv(f);
  // A data row naming an undeclared curve is an error.
  CHECK_THROWS_AS(figure_from_csv(csv + "mystery,1,2\n"), std::invalid_argument);
}

TEST_CASE("figure registry") {
  auto names = figure_names();
  REQUIRE(names.size() == 7);
  CHECK(names[0] == "fig1");
  CHECK(figure_requires_increasing_x("fig1"));
  CHECK_FALSE(figure_requires_increasing_x("region"));
  CHECK_THROWS_AS(make_figure("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_figure("fig1", 1), std::invalid_argument);
}

TEST_CASE("built figures serialize and round trip") {
  figure_data f = make_figure("fig1", 12);
  CHECK(f.name == "fig1");
  CHECK(f.curves.size() == 3);
  validate_figure(f, figure_requires_increasing_x(f.name));
  figure_data back = figure_from_csv(figure_to_csv(f));
  CHECK(figures_equal(f, back));
  figure_data jback = figure_from_json(figure_to_json(f));
  CHECK(figures_equal(f, jback));
}
