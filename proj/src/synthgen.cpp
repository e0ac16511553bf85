#include "linkscope/synthgen.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

namespace fs = std::filesystem;

const char* const kNationalities[] = {
    "Italian", "French",  "Dutch",    "German", "Flemish, Southern",
    "British", "Spanish", "American", "Belgian", "Austrian",
    "Swiss",   "Danish",  "Russian",  "Czech"};
const char* const kRoles[] = {"painter",   "sculptor", "architect",   "printmaker",
                              "draftsman", "engraver", "illustrator", "ceramicist"};
const char* const kRelTypes[] = {"teacher_of", "student_of", "collaborated_with"};

constexpr char kSameAs[] = "http://example.org/prop/sameAs";
constexpr char kUlanId[] = "http://example.org/prop/ulanId";
constexpr char kViafId[] = "http://example.org/prop/viafId";
constexpr char kBirth[] = "http://example.org/prop/birthYear";
constexpr char kDeath[] = "http://example.org/prop/deathYear";
constexpr char kNat[] = "http://example.org/prop/nationality";
constexpr char kRole[] = "http://example.org/prop/role";

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string entity_iri(std::uint32_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05u", i);
  return std::string("http://example.org/entity/Person_") + buf;
}

std::string auth_iri(const std::string& ulan) {
  return "http://example.org/auth/ulan/" + ulan;
}

struct SynthData {
  std::vector<EntityRecord> records;
  std::vector<std::string> link_lines;
  std::vector<Edge> link_edges;
  std::vector<std::array<std::string, 3>> ulan_rows;
};

std::string link_line(const std::string& s, const std::string& o) {
  return "<" + s + "> <" + kSynthLinkPredicate + "> <" + o + "> .";
}

SynthData generate(const SynthSpec& spec) {
  SynthData d;
  std::mt19937_64 rng(spec.seed);

  // Roster: entity IRIs are zero-padded so record order == sort order, and
  // node ids from a CSV load match ids from the triple join.
  d.records.reserve(spec.entities);
  for (std::uint32_t i = 0; i < spec.entities; ++i) {
    EntityRecord r;
    r.entity_iri.value = entity_iri(i);
    r.ulan_id = std::to_string(500000000 + i);
    if (i % 7 != 3) r.viaf_id = std::to_string(10000000 + 13 * i);
    if (u01(rng) >= 0.08) r.birth_year = 1200 + static_cast<int>(u01(rng) * 700.0);
    if (r.birth_year && u01(rng) < 0.85)
      r.death_year = *r.birth_year + 20 + static_cast<int>(u01(rng) * 70.0);
    if (u01(rng) >= 0.05)
      r.nationality = kNationalities[static_cast<int>(std::pow(u01(rng), 2.0) * 14.0)];
    if (u01(rng) >= 0.04)
      r.role = kRoles[static_cast<int>(std::pow(u01(rng), 1.5) * 8.0)];
    d.records.push_back(std::move(r));
  }
  if (spec.entities > 7) {
    // One BCE lifespan to exercise negative years end to end.
    d.records[7].birth_year = -50;
    d.records[7].death_year = 10;
  }
  if (spec.entities > 0) d.records[0].nationality = kNationalities[0];

  if (spec.noise) {
    d.link_lines.push_back("# synthetic link dump");
    d.link_lines.push_back("");
  }

  auto emit_edge = [&](std::uint32_t u, std::uint32_t v) {
    d.link_edges.emplace_back(u, v);
    d.link_lines.push_back(link_line(entity_iri(u), entity_iri(v)));
  };

  std::uint32_t n = spec.entities;
  for (std::uint64_t e = 0; n > 0 && e < spec.edges; ++e) {
    auto u = static_cast<std::uint32_t>(u01(rng) * n);
    auto v = static_cast<std::uint32_t>(std::pow(u01(rng), 2.5) * n);  // hub bias
    emit_edge(u, v);
    if (e % 10 == 0) emit_edge(u, v);        // exact duplicate statement
    if (e % 4 == 0 && u != v) emit_edge(v, u);  // mirrored link
    if (e % 97 == 0) emit_edge(u, u);        // self-loop statement

    if (e % 3 == 0) {
      d.ulan_rows.push_back({d.records[u].ulan_id, d.records[v].ulan_id,
                             kRelTypes[e / 3 % 3]});
      if (e % 6 == 0)
        d.ulan_rows.push_back({d.records[v].ulan_id, d.records[u].ulan_id,
                               kRelTypes[e / 3 % 3]});
    }

    if (spec.noise) {
      if (e % 53 == 0)
        d.link_lines.push_back(link_line(
            entity_iri(u), "http://example.org/other/Thing_" + std::to_string(e % 10)));
      if (e % 41 == 0)
        d.link_lines.push_back("<" + entity_iri(u) +
                               "> <http://example.org/prop/seeAlso> <" + entity_iri(v) +
                               "> .");
      if (e % 97 == 0) d.link_lines.push_back("# batch " + std::to_string(e));
    }
  }

  if (spec.noise) {
    if (n > 3)
      d.link_lines.push_back("<" + entity_iri(3) + "> <" + kSynthLinkPredicate +
                             "> \"not an iri\" .");
    d.link_lines.push_back(
        "<http://example.org/x> <http://example.org/prop/link> <http://example.org/y>");
    d.link_lines.push_back("this is not a triple .");
    d.link_lines.push_back("<http://example.org/x> <bad iri> <http://example.org/y> .");
    d.link_lines.push_back("<http://example.org/x> <http://example.org/p> \"unterminated .");
    d.link_lines.push_back("<http://example.org/x> <http://example.org/p> \"bad\\q\" .");
    d.ulan_rows.push_back({"599999901", d.records.empty() ? "599999902" : d.records[0].ulan_id,
                           kRelTypes[0]});
    d.ulan_rows.push_back({d.records.empty() ? "599999903" : d.records[0].ulan_id, "599999904",
                           kRelTypes[1]});
  }
  return d;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ExportError("synth: cannot open " + p.string());
  return f;
}

void finish(std::ofstream& f, const fs::path& p) {
  f.flush();
  if (!f) throw ExportError("synth: write failed for " + p.string());
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q.push_back(c);
  }
  q.push_back('"');
  return q;
}

void write_roster_csv(const SynthData& d, const fs::path& p) {
  std::ofstream f = open_out(p);
  f << "entity_iri,ulan_id,viaf_id,birth_year,death_year,nationality,role\n";
  for (const EntityRecord& r : d.records) {
    f << csv_cell(r.entity_iri.value) << ',' << csv_cell(r.ulan_id) << ','
      << (r.viaf_id ? csv_cell(*r.viaf_id) : "") << ','
      << (r.birth_year ? std::to_string(*r.birth_year) : "") << ','
      << (r.death_year ? std::to_string(*r.death_year) : "") << ','
      << (r.nationality ? csv_cell(*r.nationality) : "") << ','
      << (r.role ? csv_cell(*r.role) : "") << '\n';
  }
  finish(f, p);
}

void write_links_nt(const SynthData& d, const fs::path& p) {
  std::ofstream f = open_out(p);
  for (const std::string& line : d.link_lines) f << line << '\n';
  finish(f, p);
}

void write_ulan_csv(const SynthData& d, const fs::path& p) {
  std::ofstream f = open_out(p);
  f << "from_ulan_id,to_ulan_id,rel_type\n";
  for (const auto& row : d.ulan_rows) f << row[0] << ',' << row[1] << ',' << row[2] << '\n';
  finish(f, p);
}

void write_mappings_nt(const SynthData& d, const SynthSpec& spec, const fs::path& p) {
  std::ofstream f = open_out(p);
  f << "# synthetic authority mappings\n";
  for (const EntityRecord& r : d.records) {
    std::string a = auth_iri(r.ulan_id);
    f << '<' << a << "> <" << kSameAs << "> <" << r.entity_iri.value << "> .\n";
    f << '<' << a << "> <" << kUlanId << "> \"" << r.ulan_id << "\" .\n";
  }
  if (spec.noise) {
    f << "<http://example.org/auth/ulan/599000001> <" << kSameAs
      << "> <http://example.org/entity/Ghost_1> .\n";
    f << "<http://example.org/auth/ulan/599000002> <" << kUlanId << "> \"599000002\" .\n";
  }
  finish(f, p);
}

void write_attributes_nt(const SynthData& d, const SynthSpec& spec, const fs::path& p) {
  std::ofstream f = open_out(p);
  f << "# synthetic authority attributes\n";
  for (std::size_t i = 0; i < d.records.size(); ++i) {
    const EntityRecord& r = d.records[i];
    std::string a = auth_iri(r.ulan_id);
    if (r.viaf_id) f << '<' << a << "> <" << kViafId << "> \"" << *r.viaf_id << "\" .\n";
    if (r.birth_year) {
      if (i % 3 == 0)
        f << '<' << a << "> <" << kBirth << "> \"" << *r.birth_year
          << "-04-15\"^^<http://www.w3.org/2001/XMLSchema#date> .\n";
      else
        f << '<' << a << "> <" << kBirth << "> \"" << *r.birth_year << "\" .\n";
    }
    if (r.death_year) f << '<' << a << "> <" << kDeath << "> \"" << *r.death_year << "\" .\n";
    if (r.nationality) {
      std::string lex = *r.nationality;
      f << '<' << a << "> <" << kNat << "> \"" << lex << "\"@en .\n";
    }
    if (r.role) f << '<' << a << "> <" << kRole << "> \"" << *r.role << "\" .\n";
  }
  if (spec.noise && !d.records.empty()) {
    // Second nationality for record 0, lexicographically larger, so the
    // join's smallest-value rule keeps the roster value and tallies it.
    f << '<' << auth_iri(d.records[0].ulan_id) << "> <" << kNat << "> \"Zz-other\"@en .\n";
  }
  finish(f, p);
}

void write_predicate_map(const fs::path& p) {
  std::ofstream f = open_out(p);
  f << "# predicates used by the synthetic corpus\n"
    << "same_as=" << kSameAs << '\n'
    << "ulan_id=" << kUlanId << '\n'
    << "viaf_id=" << kViafId << '\n'
    << "birth_year=" << kBirth << '\n'
    << "death_year=" << kDeath << '\n'
    << "nationality=" << kNat << '\n'
    << "role=" << kRole << '\n';
  finish(f, p);
}

}  // namespace

SynthCorpus make_synth_corpus(const SynthSpec& spec) {
  SynthData d = generate(spec);
  return {std::move(d.records), std::move(d.link_edges)};
}

void write_synth_corpus(const SynthSpec& spec, const std::filesystem::path& dir) {
  fs::create_directories(dir);
  SynthData d = generate(spec);
  write_roster_csv(d, dir / "roster.csv");
  write_links_nt(d, dir / "links.nt");
  write_ulan_csv(d, dir / "ulan_edges.csv");
  write_mappings_nt(d, spec, dir / "mappings.nt");
  write_attributes_nt(d, spec, dir / "attributes.nt");
  write_predicate_map(dir / "predicate_map.txt");
}

}  // namespace linkscope
