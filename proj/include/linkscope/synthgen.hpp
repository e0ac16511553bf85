#pragma once

// Deterministic synthetic corpus generator: a roster plus link/mapping/
// attribute dumps with controlled noise, used by the test suite and the
// bundled fixture tool.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "linkscope/roster.hpp"

namespace linkscope {

inline constexpr char kSynthLinkPredicate[] = "http://example.org/prop/link";

struct SynthSpec {
  std::uint32_t entities = 500;
  std::uint64_t edges = 2000;  // link statements before noise/dedup
  std::uint64_t seed = 42;
  bool noise = true;  // comments, malformed lines, off-roster/other-predicate triples
};

struct SynthCorpus {
  std::vector<EntityRecord> records;        // sorted by entity_iri
  std::vector<std::pair<std::uint32_t, std::uint32_t>> link_edges;  // as emitted, with dups
};

// The in-memory corpus; file writers below serialize it.
SynthCorpus make_synth_corpus(const SynthSpec& spec);

// Writes roster.csv, links.nt, ulan_edges.csv, mappings.nt, attributes.nt,
// predicate_map.txt into dir (created if needed). Identical spec -> byte
// identical files. Throws ExportError on I/O failure.
void write_synth_corpus(const SynthSpec& spec, const std::filesystem::path& dir);

}  // namespace linkscope
