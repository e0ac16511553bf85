#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkscope/export.hpp"
#include "linkscope/layout.hpp"
#include "linkscope/ntriples.hpp"

namespace linkscope {

struct PipelineConfig {
  std::vector<std::filesystem::path> link_files;
  std::string link_predicate = "http://dbpedia.org/ontology/wikiPageWikiLink";

  // Exactly one roster source: a prepared CSV, or the triple-join inputs.
  std::optional<std::filesystem::path> roster_csv;
  std::optional<std::filesystem::path> mappings;
  std::optional<std::filesystem::path> attributes;
  std::optional<std::filesystem::path> predicate_map_file;

  std::optional<std::filesystem::path> ulan_edges;

  double bin_width = 37.5;
  double max_span_years = 75.0;
  LayoutParams layout;
  std::filesystem::path out_dir = ".";
};

// Throws ConfigError on an invalid combination or out-of-range parameter.
void validate(const PipelineConfig& config);

// How much of the pipeline a subcommand exercises and which artifacts it
// writes. Analyses always run; writes are gated:
//   Report -> report.json + histogram CSVs
//   Filter -> filtered.gexf (no positions)
//   Layout -> filtered.gexf (positions + styles)
//   Render -> filtered.svg
//   All    -> report.json, CSVs, full.gexf, filtered.gexf, filtered.svg
enum class PipelineMode { Report, Filter, Layout, Render, All };

struct PipelineResult {
  StatsReport report;
  std::vector<std::filesystem::path> written;
};

// Executes roster -> ingest -> graph -> degrees -> components -> powerlaw
// -> temporal -> reference -> report -> layout -> styles -> render, writing
// each artifact as soon as it is available so later failures leave earlier
// outputs intact. Failures surface as StageError naming the stage.
PipelineResult run_pipeline(const PipelineConfig& config, PipelineMode mode = PipelineMode::All);

// Parses each file, returning its tally; used by the ingest-check command.
std::vector<std::pair<std::filesystem::path, ParseTally>> ingest_check(
    const std::vector<std::filesystem::path>& files);

}  // namespace linkscope
