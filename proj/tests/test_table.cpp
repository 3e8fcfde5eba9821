#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "rtdist/table.hpp"

using namespace rtdist;
using Catch::Matchers::WithinAbs;

namespace {

TableSpec chord_spec() {
  TableSpec spec;
  spec.function = TableFunction::ChordCdf;
  spec.a = 3;
  spec.b = 4;
  spec.t_min = 0;
  spec.t_max = 5;
  spec.n_points = 6;
  return spec;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const auto next = csv.find('\n', pos);
    const auto line = csv.substr(pos, next - pos);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("table function ids round-trip", "[table]") {
  for (const char* name : {"chord_cdf", "chord_pdf", "distance_pdf", "distance_cdf", "rect_pdf",
                           "rect_cdf", "cross_pdf", "cross_cdf"}) {
    const auto fn = parse_table_function(name);
    REQUIRE(fn.has_value());
    CHECK(std::string(to_string(*fn)) == name);
  }
  CHECK_FALSE(parse_table_function("nope").has_value());
}

TEST_CASE("table spec validation", "[table]") {
  TableSpec spec = chord_spec();
  CHECK_NOTHROW(validate(spec));
  spec.a = -1;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = chord_spec();
  spec.n_points = 1;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = chord_spec();
  spec.t_min = 5;
  spec.t_max = 0;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  // an explicit grid bypasses the linear-grid checks
  spec.explicit_grid = {1.0, 2.0};
  CHECK_NOTHROW(validate(spec));
}

TEST_CASE("csv table has the requested rows and reaches 1", "[table]") {
  const auto csv = render_csv(chord_spec());
  const auto rows = data_lines(csv);
  REQUIRE(rows.size() == 6);
  CHECK(rows.back() == "5,1,Above");
  CHECK(csv.rfind("# function=chord_cdf a=3 b=4 c=5", 0) == 0);
}

TEST_CASE("csv output is byte-stable", "[table]") {
  const auto spec = chord_spec();
  CHECK(render_csv(spec) == render_csv(spec));
}

TEST_CASE("normalize_c rescales densities", "[table]") {
  TableSpec spec = chord_spec();
  spec.function = TableFunction::DistancePdf;
  spec.a = 1;
  spec.b = 5;
  spec.t_min = 0;
  spec.t_max = RightTriangle(1, 5).c();
  spec.n_points = 20;
  spec.normalize_c = true;
  const auto data = evaluate_table(spec);
  REQUIRE(data.rows.size() == 20);
  const RightTriangle tri(1, 5);
  const DistanceDistribution dist(tri);
  CHECK_THAT(data.rows.front().t, WithinAbs(0.0, 1e-15));
  CHECK_THAT(data.rows.back().t, WithinAbs(1.0, 1e-12));
  // c * g at t = c/2 against the unscaled evaluation
  const auto& mid_row = data.rows[10];
  CHECK_THAT(mid_row.value, WithinAbs(tri.c() * dist.pdf(mid_row.t * tri.c()).value, 1e-9));
}

TEST_CASE("cdf columns are unscaled under normalize_c", "[table]") {
  TableSpec spec = chord_spec();
  spec.function = TableFunction::CrossCdf;
  spec.a = 1;
  spec.b = 5;
  spec.t_min = 0;
  spec.t_max = RightTriangle(1, 5).c();
  spec.n_points = 20;
  spec.normalize_c = true;
  const auto data = evaluate_table(spec);
  // monotone in [0,1], last value 1
  double prev = 0;
  for (const auto& row : data.rows) {
    CHECK(row.value >= prev - 1e-15);
    CHECK(row.branch == "-");
    prev = row.value;
  }
  CHECK_THAT(data.rows.back().value, WithinAbs(1.0, 1e-12));
}

TEST_CASE("json output parses and re-dumps identically", "[table]") {
  TableSpec spec = chord_spec();
  spec.format = TableFormat::Json;
  spec.seed = 42;
  const auto text = render_json(spec);
  const auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  CHECK(parsed["meta"]["function"] == "chord_cdf");
  CHECK(parsed["meta"]["seed"] == 42);
  CHECK(parsed["t"].size() == 6);
  CHECK(parsed["value"].back() == 1.0);
}

TEST_CASE("explicit grids are honored", "[table]") {
  TableSpec spec = chord_spec();
  spec.explicit_grid = {2.4, 5.0};
  const auto data = evaluate_table(spec);
  REQUIRE(data.rows.size() == 2);
  CHECK_THAT(data.rows[0].value, WithinAbs(0.79915118030864809, 1e-6));
  CHECK(data.rows[0].branch == "Seg2");
}
