#include <iostream>

#include <CLI11.hpp>

#include "linkscope/synthgen.hpp"

int main(int argc, char** argv) {
  CLI::App app{"linkscope-synth: write a deterministic synthetic corpus"};

  linkscope::SynthSpec spec;
  std::string out;
  bool no_noise = false;
  app.add_option("--entities", spec.entities, "roster size");
  app.add_option("--edges", spec.edges, "link statements before noise/dedup");
  app.add_option("--seed", spec.seed, "generator seed");
  app.add_flag("--no-noise", no_noise, "omit comments, malformed lines and off-roster triples");
  app.add_option("--out", out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);
  spec.noise = !no_noise;

  try {
    linkscope::write_synth_corpus(spec, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "wrote roster.csv links.nt ulan_edges.csv mappings.nt attributes.nt "
               "predicate_map.txt to "
            << out << '\n';
  return 0;
}
