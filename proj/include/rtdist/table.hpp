#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rtdist/chord.hpp"
#include "rtdist/distance.hpp"
#include "rtdist/geometry.hpp"
#include "rtdist/rectangle.hpp"

namespace rtdist {

enum class TableFunction {
  ChordCdf,
  ChordPdf,
  DistancePdf,
  DistanceCdf,
  RectPdf,
  RectCdf,
  CrossPdf,
  CrossCdf,
};

constexpr const char* to_string(TableFunction fn) {
  switch (fn) {
    case TableFunction::ChordCdf: return "chord_cdf";
    case TableFunction::ChordPdf: return "chord_pdf";
    case TableFunction::DistancePdf: return "distance_pdf";
    case TableFunction::DistanceCdf: return "distance_cdf";
    case TableFunction::RectPdf: return "rect_pdf";
    case TableFunction::RectCdf: return "rect_cdf";
    case TableFunction::CrossPdf: return "cross_pdf";
    case TableFunction::CrossCdf: return "cross_cdf";
  }
  return "?";
}

inline std::optional<TableFunction> parse_table_function(std::string_view name) {
  using TF = TableFunction;
  for (TF fn : {TF::ChordCdf, TF::ChordPdf, TF::DistancePdf, TF::DistanceCdf, TF::RectPdf,
                TF::RectCdf, TF::CrossPdf, TF::CrossCdf})
    if (name == to_string(fn)) return fn;
  return std::nullopt;
}

constexpr bool is_density(TableFunction fn) {
  return fn == TableFunction::ChordPdf || fn == TableFunction::DistancePdf ||
         fn == TableFunction::RectPdf || fn == TableFunction::CrossPdf;
}

enum class TableFormat { Csv, Json };

// Grid evaluation request. The grid is either linear (t_min, t_max,
// n_points) or an explicit abscissa list; with normalize_c set, rows are
// emitted as (t/c, c*value) for densities and (t/c, value) for CDFs.
struct TableSpec {
  TableFunction function = TableFunction::ChordCdf;
  double a = 1;
  double b = 1;
  double t_min = 0;
  double t_max = 1;
  int n_points = 2;
  std::vector<double> explicit_grid;  // overrides the linear grid when non-empty
  bool normalize_c = false;
  TableFormat format = TableFormat::Csv;
  std::optional<std::uint64_t> seed;  // recorded in headers only
};

inline void validate(const TableSpec& spec) {
  if (!(spec.a > 0) || !(spec.b > 0))
    throw std::invalid_argument("table: sides must be positive");
  if (spec.explicit_grid.empty()) {
    if (spec.n_points < 2) throw std::invalid_argument("table: need at least 2 grid points");
    if (!(spec.t_min < spec.t_max)) throw std::invalid_argument("table: t_min must be < t_max");
  }
}

inline std::vector<double> make_grid(const TableSpec& spec) {
  if (!spec.explicit_grid.empty()) return spec.explicit_grid;
  std::vector<double> g(static_cast<std::size_t>(spec.n_points));
  for (int i = 0; i < spec.n_points; ++i)
    g[static_cast<std::size_t>(i)] =
        spec.t_min + (spec.t_max - spec.t_min) * i / (spec.n_points - 1);
  return g;
}

struct TableRow {
  double t = 0;
  double value = 0;
  std::string branch;  // "-" for the cross functions, which carry no branch
};

struct TableData {
  TableSpec spec;
  double c = 0, h = 0, alpha = 0;
  std::vector<TableRow> rows;
};

inline TableData evaluate_table(const TableSpec& spec) {
  validate(spec);
  TableData data;
  data.spec = spec;

  const RightTriangle tri(spec.a, spec.b);
  data.c = tri.c();
  data.h = tri.h();
  data.alpha = tri.alpha();

  const double scale_t = spec.normalize_c ? 1 / tri.c() : 1;
  const double scale_v = spec.normalize_c && is_density(spec.function) ? tri.c() : 1;

  const auto push = [&](double t, double value, std::string branch) {
    data.rows.push_back({t * scale_t, value * scale_v, std::move(branch)});
  };

  const auto grid = make_grid(spec);
  switch (spec.function) {
    case TableFunction::ChordCdf:
      for (double t : grid) {
        const auto e = chord_cdf(tri, t);
        push(t, e.value, to_string(e.branch));
      }
      break;
    case TableFunction::ChordPdf:
      for (double t : grid) {
        const auto e = chord_pdf(tri, t);
        push(t, e.value, to_string(e.branch));
      }
      break;
    case TableFunction::DistancePdf: {
      const DistanceDistribution dist(tri);
      for (double t : grid) {
        const auto e = dist.pdf(t);
        push(t, e.value, to_string(e.branch));
      }
      break;
    }
    case TableFunction::DistanceCdf: {
      const DistanceDistribution dist(tri);
      for (double t : grid) {
        const auto e = dist.cdf(t);
        push(t, e.value, to_string(e.branch));
      }
      break;
    }
    case TableFunction::RectPdf: {
      const RectDistance dist{RectangleBox(spec.a, spec.b)};
      for (double t : grid) {
        const auto e = dist.pdf(t);
        push(t, e.value, to_string(e.branch));
      }
      break;
    }
    case TableFunction::RectCdf: {
      const RectDistance dist{RectangleBox(spec.a, spec.b)};
      for (double t : grid) {
        const auto e = dist.cdf(t);
        push(t, e.value, to_string(e.branch));
      }
      break;
    }
    case TableFunction::CrossPdf: {
      const CrossDistance dist(tri);
      for (double t : grid) push(t, dist.pdf(t), "-");
      break;
    }
    case TableFunction::CrossCdf: {
      const CrossDistance dist(tri);
      for (double t : grid) push(t, dist.cdf(t), "-");
      break;
    }
  }
  return data;
}

namespace detail {

// Shortest round-trip decimal form.
inline std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace detail

// CSV with '#' header lines; byte-stable for a fixed spec.
inline std::string render_csv(const TableSpec& spec) {
  const TableData data = evaluate_table(spec);
  std::string out;
  out += "# function=";
  out += to_string(spec.function);
  out += " a=" + detail::format_double(spec.a);
  out += " b=" + detail::format_double(spec.b);
  out += " c=" + detail::format_double(data.c);
  out += " h=" + detail::format_double(data.h);
  out += " alpha=" + detail::format_double(data.alpha);
  out += std::string(" normalize_c=") + (spec.normalize_c ? "1" : "0");
  out += " seed=";
  out += spec.seed ? std::to_string(*spec.seed) : "-";
  out += "\n# t,value,branch\n";
  for (const auto& row : data.rows) {
    out += detail::format_double(row.t);
    out += ',';
    out += detail::format_double(row.value);
    out += ',';
    out += row.branch;
    out += '\n';
  }
  return out;
}

// One JSON object {meta, t, value, branch}; parsing and re-dumping the
// output reproduces it byte for byte.
inline std::string render_json(const TableSpec& spec) {
  const TableData data = evaluate_table(spec);
  nlohmann::ordered_json j;
  auto& meta = j["meta"];
  meta["function"] = to_string(spec.function);
  meta["a"] = spec.a;
  meta["b"] = spec.b;
  meta["c"] = data.c;
  meta["h"] = data.h;
  meta["alpha"] = data.alpha;
  meta["normalize_c"] = spec.normalize_c;
  if (spec.seed)
    meta["seed"] = *spec.seed;
  else
    meta["seed"] = nullptr;
  auto& t = j["t"] = nlohmann::ordered_json::array();
  auto& value = j["value"] = nlohmann::ordered_json::array();
  auto& branch = j["branch"] = nlohmann::ordered_json::array();
  for (const auto& row : data.rows) {
    t.push_back(row.t);
    value.push_back(row.value);
    branch.push_back(row.branch);
  }
  return j.dump(2) + "\n";
}

inline std::string render_table(const TableSpec& spec) {
  return spec.format == TableFormat::Csv ? render_csv(spec) : render_json(spec);
}

}  // namespace rtdist
