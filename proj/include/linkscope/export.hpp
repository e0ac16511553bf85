#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkscope/components.hpp"
#include "linkscope/graph.hpp"
#include "linkscope/histogram.hpp"
#include "linkscope/layout.hpp"
#include "linkscope/ntriples.hpp"
#include "linkscope/powerlaw.hpp"
#include "linkscope/roster.hpp"
#include "linkscope/temporal.hpp"

namespace linkscope {

struct IngestStats {
  ParseTally parse;
  std::uint64_t predicate_matches = 0;
};

// Temporal analyses recomputed over the reference (authority) edge set.
struct ReferenceStats {
  std::uint64_t edge_count = 0;
  std::uint64_t skipped_rows = 0;  // unresolvable reference rows
  Histogram span_histogram;
  DirectionShares direction;
  ReciprocityStats reciprocity;
  RetentionStats retention;
};

// Everything the pipeline measures. Absent analyses serialize as explicit
// JSON nulls, never omitted keys; field names are part of the contract and
// documented in the README.
struct StatsReport {
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  IngestStats ingest;
  BuildTally build_tally;
  ComponentSummary wcc;
  ComponentSummary scc;
  Histogram degree_hist_linear;
  Histogram degree_hist_log;
  std::optional<PowerLawFit> power_law;  // absent when the fit is impossible
  Histogram span_histogram;
  DirectionShares direction;
  ReciprocityStats reciprocity;
  RetentionStats retention;
  double bin_width = 37.5;
  double max_span_years = 75.0;
  std::optional<ReferenceStats> reference;  // absent without a reference file
};

struct NodeStyles {
  std::vector<double> radius;
  std::vector<Rgb> color;
};

// Rounds to 6 significant digits ("%.6g" then reparse) so canonical output
// is byte-stable; fmt_real is the matching textual form used in XML/CSV.
double round_sig6(double v);
std::string fmt_real(double v);

std::string xml_escape(std::string_view s);

// Segment after the last '/' or '#'; the whole IRI when neither occurs.
std::string iri_tail(const std::string& iri);

// Canonical JSON form of the report: sorted keys, reals pre-rounded to 6
// significant digits.
nlohmann::json report_to_json(const StatsReport& report);

// Writes report_to_json with 2-space indent + trailing newline; returns
// bytes written. Byte-identical for identical reports. Throws ExportError
// on I/O failure.
std::size_t write_report(const StatsReport& report, std::ostream& out);

// GEXF 1.2 document; node attributes ulan_id, birth_year, nationality,
// role, total_degree; viz position/size/color when layout/styles given.
void write_gexf(const LinkGraph& g, const Roster& roster, std::ostream& out,
                const Layout* layout = nullptr, const NodeStyles* styles = nullptr);

// DOT digraph with quoted IRI-tail node names (collisions disambiguated by
// appending "~<node id>").
void write_dot(const LinkGraph& g, const Roster& roster, std::ostream& out);

// Header bin_start,bin_end,count,share; one row per bin; the zero bucket,
// when populated, leads as a [0,1) row.
void write_csv_histogram(const Histogram& h, std::ostream& out);

// SVG 1.1: one grey 0.15-opacity line per edge in (source,target) order,
// then one circle per node in id order; viewBox equals the layout frame.
void write_svg(const LinkGraph& g, const Layout& layout, const NodeStyles& styles,
               std::ostream& out);

}  // namespace linkscope
