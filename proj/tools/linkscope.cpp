#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkscope/error.hpp"
#include "linkscope/pipeline.hpp"

namespace {

struct CliArgs {
  std::vector<std::string> links;
  std::string predicate = "http://dbpedia.org/ontology/wikiPageWikiLink";
  std::string roster_csv, mappings, attributes, predicate_map, ulan_edges;
  double bin_width = 37.5;
  double max_span = 75.0;
  std::uint32_t iterations = 500;
  std::uint64_t seed = 0;
  double frame_width = 10000.0, frame_height = 10000.0, theta = 1.2;
  std::string out = ".";
};

void add_pipeline_options(CLI::App* sub, CliArgs& a) {
  sub->set_config("--config", "", "key=value config file; command-line flags override it");
  sub->add_option("--links", a.links, "link dump .nt files")->required()->expected(-1);
  sub->add_option("--predicate", a.predicate, "link predicate IRI");
  sub->add_option("--roster-csv", a.roster_csv, "prepared roster CSV");
  sub->add_option("--mappings", a.mappings, "authority mapping dump (.nt)");
  sub->add_option("--attributes", a.attributes, "authority attribute dump (.nt)");
  sub->add_option("--predicate-map", a.predicate_map, "key=value predicate map file");
  sub->add_option("--ulan-edges", a.ulan_edges, "reference edge CSV");
  sub->add_option("--bin-width", a.bin_width, "span histogram bin width (years)");
  sub->add_option("--max-span", a.max_span, "span filter threshold (years, inclusive)");
  sub->add_option("--iterations", a.iterations, "layout iterations");
  sub->add_option("--seed", a.seed, "layout seed");
  sub->add_option("--frame-width", a.frame_width, "layout frame width");
  sub->add_option("--frame-height", a.frame_height, "layout frame height");
  sub->add_option("--theta", a.theta, "Barnes-Hut opening angle (0 = exact)");
  sub->add_option("--out", a.out, "output directory");
}

linkscope::PipelineConfig to_config(const CliArgs& a) {
  linkscope::PipelineConfig cfg;
  for (const std::string& p : a.links) cfg.link_files.emplace_back(p);
  cfg.link_predicate = a.predicate;
  if (!a.roster_csv.empty()) cfg.roster_csv = a.roster_csv;
  if (!a.mappings.empty()) cfg.mappings = a.mappings;
  if (!a.attributes.empty()) cfg.attributes = a.attributes;
  if (!a.predicate_map.empty()) cfg.predicate_map_file = a.predicate_map;
  if (!a.ulan_edges.empty()) cfg.ulan_edges = a.ulan_edges;
  cfg.bin_width = a.bin_width;
  cfg.max_span_years = a.max_span;
  cfg.layout.iterations = a.iterations;
  cfg.layout.seed = a.seed;
  cfg.layout.frame_width = a.frame_width;
  cfg.layout.frame_height = a.frame_height;
  cfg.layout.theta = a.theta;
  cfg.out_dir = a.out;
  return cfg;
}

nlohmann::json tally_json(const linkscope::ParseTally& t) {
  return {{"lines_total", t.lines_total},
          {"triples_ok", t.triples_ok},
          {"lines_skipped", t.lines_skipped},
          {"lines_malformed", t.lines_malformed}};
}

int run_ingest_check(const CliArgs& a) {
  std::vector<std::filesystem::path> files(a.links.begin(), a.links.end());
  auto tallies = linkscope::ingest_check(files);
  linkscope::ParseTally total;
  nlohmann::json per_file = nlohmann::json::array();
  for (const auto& [path, tally] : tallies) {
    nlohmann::json j = tally_json(tally);
    j["path"] = path.string();
    per_file.push_back(std::move(j));
    total += tally;
  }
  nlohmann::json out{{"files", std::move(per_file)}, {"total", tally_json(total)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkscope: domain-scoped link subgraph extraction and analysis"};
  app.require_subcommand(1);

  CliArgs args;
  CLI::App* ingest = app.add_subcommand("ingest-check", "parse dumps and print tallies");
  ingest->add_option("--links", args.links, "link dump .nt files")->required()->expected(-1);

  struct SubSpec {
    const char* name;
    const char* help;
    linkscope::PipelineMode mode;
  };
  const SubSpec specs[] = {
      {"report", "compute statistics and write report.json + histogram CSVs",
       linkscope::PipelineMode::Report},
      {"filter", "write the span-filtered graph as filtered.gexf (no positions)",
       linkscope::PipelineMode::Filter},
      {"layout", "compute the layout and write filtered.gexf with positions",
       linkscope::PipelineMode::Layout},
      {"render", "render the filtered layout to filtered.svg",
       linkscope::PipelineMode::Render},
      {"all", "full pipeline: report, CSVs, full.gexf, filtered.gexf, filtered.svg",
       linkscope::PipelineMode::All},
  };
  std::vector<std::pair<CLI::App*, linkscope::PipelineMode>> subs;
  for (const SubSpec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_pipeline_options(sub, args);
    subs.emplace_back(sub, s.mode);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return run_ingest_check(args);
    for (auto [sub, mode] : subs) {
      if (sub->parsed()) {
        linkscope::run_pipeline(to_config(args), mode);
        return 0;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
