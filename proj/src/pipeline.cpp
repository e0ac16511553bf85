#include "linkscope/pipeline.hpp"

#include <fstream>
#include <iostream>

#include "linkscope/components.hpp"
#include "linkscope/error.hpp"
#include "linkscope/powerlaw.hpp"
#include "linkscope/roster.hpp"
#include "linkscope/temporal.hpp"

namespace linkscope {

namespace {

namespace fs = std::filesystem;

template <typename F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

void log_stage(const char* name, const std::string& msg) {
  std::cerr << '[' << name << "] " << msg << '\n';
}

std::ifstream open_input(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file: " + p.string());
  return in;
}

std::ofstream open_output(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ExportError("cannot open output file: " + p.string());
  return out;
}

bool join_source(const PipelineConfig& c) {
  return c.mappings && c.attributes && c.predicate_map_file;
}

Roster load_roster(const PipelineConfig& cfg) {
  if (cfg.roster_csv) {
    std::ifstream in = open_input(*cfg.roster_csv);
    Roster roster = load_roster_csv(in);
    log_stage("roster", std::to_string(roster.size()) + " records from CSV");
    return roster;
  }
  std::ifstream pm = open_input(*cfg.predicate_map_file);
  PredicateMap predicates = load_predicate_map(pm);
  std::ifstream min = open_input(*cfg.mappings);
  auto [mapping_triples, mtally] = parse_ntriples(min);
  std::ifstream ain = open_input(*cfg.attributes);
  auto [attribute_triples, atally] = parse_ntriples(ain);
  auto [roster, join] = build_roster(mapping_triples, attribute_triples, predicates);
  log_stage("roster", std::to_string(roster.size()) + " records joined from " +
                          std::to_string(join.subjects_seen) + " subjects");
  return roster;
}

struct IngestOutcome {
  IngestStats stats;
  EdgeExtraction extraction;
};

IngestOutcome ingest_links(const PipelineConfig& cfg, const Roster& roster) {
  IngestOutcome out;
  EdgeExtractor extractor(Iri{cfg.link_predicate}, roster.iri_index());
  for (const fs::path& p : cfg.link_files) {
    std::ifstream in = open_input(p);
    NTriplesReader reader(in);
    while (auto t = reader.next()) extractor.add(*t);
    out.stats.parse += reader.tally();
  }
  out.extraction = extractor.take();
  out.stats.predicate_matches = out.extraction.predicate_matches;
  log_stage("ingest", std::to_string(out.stats.parse.triples_ok) + " triples, " +
                          std::to_string(out.extraction.edges.size()) + " link statements");
  return out;
}

ReferenceStats reference_stats(const PipelineConfig& cfg, const Roster& roster) {
  std::ifstream in = open_input(*cfg.ulan_edges);
  ReferenceEdges ref = load_reference_edges_csv(in, roster);
  auto [graph, tally] = build_graph(roster.size(), ref.edges);
  (void)tally;
  ReferenceStats out;
  out.edge_count = graph.edge_count();
  out.skipped_rows = ref.skipped;
  SpanSet spans = link_spans(graph, roster);
  out.span_histogram = span_histogram(spans, cfg.bin_width);
  out.direction = direction_shares(spans);
  out.reciprocity = reciprocity_stats(graph);
  out.retention = filter_by_span(graph, spans, cfg.max_span_years).second;
  return out;
}

}  // namespace

void validate(const PipelineConfig& config) {
  if (config.link_files.empty()) throw ConfigError("no link dump files given");
  if (config.link_predicate.empty() || !valid_iri(config.link_predicate))
    throw ConfigError("link predicate is not a valid IRI: " + config.link_predicate);
  bool csv = config.roster_csv.has_value();
  bool join_complete = join_source(config);
  bool join_partial = (config.mappings || config.attributes || config.predicate_map_file) &&
                      !join_complete;
  if (join_partial)
    throw ConfigError("triple-join roster source needs --mappings, --attributes and "
                      "--predicate-map together");
  if (csv == join_complete)
    throw ConfigError("exactly one roster source required: --roster-csv or the "
                      "mapping/attribute dumps");
  if (!(config.bin_width > 0.0)) throw ConfigError("bin_width must be positive");
  if (config.max_span_years < 0.0) throw ConfigError("max_span_years must be non-negative");
  if (config.layout.iterations < 1) throw ConfigError("iterations must be >= 1");
  if (!(config.layout.frame_width > 0.0) || !(config.layout.frame_height > 0.0))
    throw ConfigError("frame dimensions must be positive");
  if (!(config.layout.theta >= 0.0)) throw ConfigError("theta must be non-negative");
  if (config.out_dir.empty()) throw ConfigError("output directory required");
}

PipelineResult run_pipeline(const PipelineConfig& cfg, PipelineMode mode) {
  stage("config", [&] {
    validate(cfg);
    fs::create_directories(cfg.out_dir);
  });

  PipelineResult result;
  auto wrote = [&](const fs::path& p) {
    result.written.push_back(p);
    log_stage("write", p.string());
  };

  Roster roster = stage("roster", [&] { return load_roster(cfg); });
  IngestOutcome ingest = stage("ingest", [&] { return ingest_links(cfg, roster); });

  auto [graph, build_tally] = stage("graph", [&] {
    return build_graph(roster.size(), ingest.extraction.edges, ingest.extraction.off_roster);
  });
  log_stage("graph", std::to_string(graph.node_count()) + " nodes, " +
                         std::to_string(graph.edge_count()) + " edges");

  StatsReport& report = result.report;
  report.node_count = graph.node_count();
  report.edge_count = graph.edge_count();
  report.ingest = ingest.stats;
  report.build_tally = build_tally;
  report.bin_width = cfg.bin_width;
  report.max_span_years = cfg.max_span_years;

  DegreeVector deg = stage("degrees", [&] {
    DegreeVector d = degrees(graph);
    report.degree_hist_linear = degree_histogram_linear(d.total);
    report.degree_hist_log = degree_histogram_log(d.total, 2.0);
    return d;
  });

  stage("components", [&] {
    report.wcc = component_summary(weakly_connected_components(graph));
    report.scc = component_summary(strongly_connected_components(graph));
    return 0;
  });
  log_stage("components",
            "wcc " + std::to_string(report.wcc.k) + ", scc " + std::to_string(report.scc.k));

  stage("powerlaw", [&] {
    try {
      report.power_law = fit_power_law(deg.total, 1);
    } catch (const PowerLawError& e) {
      log_stage("powerlaw", std::string("fit unavailable: ") + e.what());
      report.power_law.reset();
    }
    return 0;
  });

  auto [filtered, spans] = stage("temporal", [&] {
    SpanSet s = link_spans(graph, roster);
    report.span_histogram = span_histogram(s, cfg.bin_width);
    report.direction = direction_shares(s);
    report.reciprocity = reciprocity_stats(graph);
    auto [fg, retention] = filter_by_span(graph, s, cfg.max_span_years);
    report.retention = retention;
    return std::make_pair(std::move(fg), std::move(s));
  });
  log_stage("temporal", std::to_string(spans.records.size()) + " spans, filtered graph keeps " +
                            std::to_string(filtered.edge_count()) + " edges");

  if (cfg.ulan_edges)
    report.reference = stage("reference", [&] { return reference_stats(cfg, roster); });

  bool want_report = mode == PipelineMode::Report || mode == PipelineMode::All;
  if (want_report) {
    stage("report", [&] {
      {
        fs::path p = cfg.out_dir / "report.json";
        std::ofstream out = open_output(p);
        write_report(report, out);
        wrote(p);
      }
      auto csv = [&](const char* name, const Histogram& h) {
        fs::path p = cfg.out_dir / name;
        std::ofstream out = open_output(p);
        write_csv_histogram(h, out);
        wrote(p);
      };
      csv("degree_hist_linear.csv", report.degree_hist_linear);
      csv("degree_hist_log.csv", report.degree_hist_log);
      csv("span_hist.csv", report.span_histogram);
      if (report.reference) csv("span_hist_ulan.csv", report.reference->span_histogram);
      return 0;
    });
  }

  ColorAssignment colors = stage("styles", [&] { return assign_colors(roster); });

  if (mode == PipelineMode::All) {
    stage("export-full", [&] {
      NodeStyles styles{node_sizes(deg), colors.node_color};
      fs::path p = cfg.out_dir / "full.gexf";
      std::ofstream out = open_output(p);
      write_gexf(graph, roster, out, nullptr, &styles);
      wrote(p);
      return 0;
    });
  }

  NodeStyles filtered_styles = stage("styles", [&] {
    return NodeStyles{node_sizes(degrees(filtered)), colors.node_color};
  });

  if (mode == PipelineMode::Filter) {
    stage("export-filtered", [&] {
      fs::path p = cfg.out_dir / "filtered.gexf";
      std::ofstream out = open_output(p);
      write_gexf(filtered, roster, out, nullptr, &filtered_styles);
      wrote(p);
      return 0;
    });
    return result;
  }
  if (mode == PipelineMode::Report) return result;

  Layout layout = stage("layout", [&] {
    Layout l = fruchterman_reingold(filtered, cfg.layout);
    log_stage("layout", std::to_string(cfg.layout.iterations) + " iterations over " +
                            std::to_string(filtered.node_count()) + " nodes");
    return l;
  });

  if (mode == PipelineMode::Layout || mode == PipelineMode::All) {
    stage("export-filtered", [&] {
      fs::path p = cfg.out_dir / "filtered.gexf";
      std::ofstream out = open_output(p);
      write_gexf(filtered, roster, out, &layout, &filtered_styles);
      wrote(p);
      return 0;
    });
  }

  if (mode == PipelineMode::Render || mode == PipelineMode::All) {
    stage("render", [&] {
      fs::path p = cfg.out_dir / "filtered.svg";
      std::ofstream out = open_output(p);
      write_svg(filtered, layout, filtered_styles, out);
      wrote(p);
      return 0;
    });
  }
  return result;
}

std::vector<std::pair<std::filesystem::path, ParseTally>> ingest_check(
    const std::vector<std::filesystem::path>& files) {
  std::vector<std::pair<fs::path, ParseTally>> out;
  for (const fs::path& p : files) {
    std::ifstream in = open_input(p);
    ParseTally tally;
    NTriplesReader reader(in);
    while (reader.next()) {
    }
    tally = reader.tally();
    out.emplace_back(p, tally);
  }
  return out;
}

}  // namespace linkscope
