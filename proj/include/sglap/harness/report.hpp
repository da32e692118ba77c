#pragma once

// Comparison tables: one row per graph and matrix variant, the exact spectral
// radius followed by every signed-graph bound in catalog order.

#include <array>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sglap/bounds.hpp"
#include "sglap/signed_graph.hpp"

namespace sglap::harness {

enum class Format { Markdown, Csv };

struct NamedGraph {
  std::string name;
  SignedGraph graph;
};

inline constexpr std::string_view kInapplicableCell = "—";

struct NumberStyle {
  bool full_precision = false;
};

inline std::string format_value(double v, NumberStyle style) {
  char buf[64];
  std::snprintf(buf, sizeof buf, style.full_precision ? "%.17g" : "%.3f", v);
  return buf;
}

inline std::string format_cell(const BoundResult& b, NumberStyle style) {
  return b.applicable() ? format_value(*b.value, style) : std::string(kInapplicableCell);
}

// RFC 4180 quoting when the field needs it.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_row(std::ostream& out, const std::vector<std::string>& cells, Format fmt) {
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  } else {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
    out << '\n';
  }
}

inline void write_header(std::ostream& out, const std::vector<std::string>& cells, Format fmt) {
  write_row(out, cells, fmt);
  if (fmt == Format::Markdown) {
    out << '|';
    for (std::size_t i = 0; i < cells.size(); ++i) out << "---|";
    out << '\n';
  }
}

inline std::vector<std::string> report_columns() {
  std::vector<std::string> cols{"graph", "variant", "lambda_max"};
  for (std::size_t i = 0; i < kSignedBoundCount; ++i) cols.emplace_back(kBoundCatalog[i].id);
  return cols;
}

struct Variant {
  std::string_view label;
  std::optional<Sign> resign;  // empty: the graph as given
};

inline constexpr std::array<Variant, 3> kReportVariants{{
    {"Σ", std::nullopt},
    {"(Γ,+1)", Sign::Positive},
    {"(Γ,-1)", Sign::Negative},
}};

inline void write_report(std::ostream& out, const std::vector<NamedGraph>& graphs, Format fmt,
                         NumberStyle style = {}) {
  write_header(out, report_columns(), fmt);
  for (const auto& ng : graphs) {
    for (const auto& variant : kReportVariants) {
      SignedGraph g = variant.resign ? sign_all(ng.graph, *variant.resign) : ng.graph;
      std::vector<std::string> row{ng.name, std::string(variant.label),
                                   format_value(spectral_radius_laplacian(g), style)};
      for (const auto& b : signed_bounds(GraphFacts(std::move(g)))) {
        row.push_back(format_cell(b, style));
      }
      write_row(out, row, fmt);
    }
  }
}

inline std::string report(const std::vector<NamedGraph>& graphs, Format fmt, NumberStyle style = {}) {
  std::ostringstream out;
  write_report(out, graphs, fmt, style);
  return out.str();
}

// Single-graph listing of the whole catalog: the three exact spectral radii,
// then one line per bound.
inline void write_bounds(std::ostream& out, const Evaluation& ev, Format fmt, NumberStyle style = {}) {
  write_header(out, {"bound", "direction", "target", "value", "guard"}, fmt);
  const std::array<std::pair<Target, double>, 3> exact{{
      {Target::Signed, ev.lambda_max},
      {Target::Laplacian, ev.lambda_max_laplacian},
      {Target::Signless, ev.lambda_max_signless},
  }};
  for (const auto& [t, v] : exact) {
    write_row(out, {"lambda_max", "exact", std::string(to_string(t)), format_value(v, style), ""}, fmt);
  }
  for (const auto& b : ev.bounds) {
    write_row(out,
              {b.id, std::string(to_string(b.direction)), std::string(to_string(b.target)),
               format_cell(b, style), b.guard_reason},
              fmt);
  }
}

}  // namespace sglap::harness
