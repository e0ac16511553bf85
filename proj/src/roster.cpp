#include "linkscope/roster.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>

#include "linkscope/csv.hpp"
#include "linkscope/error.hpp"

namespace linkscope {

namespace {

const char* kRosterHeader[] = {"entity_iri", "ulan_id",     "viaf_id", "birth_year",
                               "death_year", "nationality", "role"};

std::string row_msg(std::size_t row, const std::string& what) {
  return "roster CSV row " + std::to_string(row) + ": " + what;
}

// Whole-cell signed integer; stricter than parse_leading_year.
std::optional<int> parse_year_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  std::size_t i = 0;
  if (cell[i] == '+' || cell[i] == '-') ++i;
  if (i == cell.size()) return std::nullopt;
  long long v = 0;
  for (; i < cell.size(); ++i) {
    if (cell[i] < '0' || cell[i] > '9') return std::nullopt;
    v = v * 10 + (cell[i] - '0');
    if (v > 100000000) return std::nullopt;
  }
  return cell[0] == '-' ? static_cast<int>(-v) : static_cast<int>(v);
}

}  // namespace

std::optional<int> parse_leading_year(std::string_view lexical) {
  std::size_t i = 0;
  if (i < lexical.size() && (lexical[i] == '+' || lexical[i] == '-')) ++i;
  std::size_t digits_start = i;
  long long v = 0;
  while (i < lexical.size() && lexical[i] >= '0' && lexical[i] <= '9') {
    v = v * 10 + (lexical[i] - '0');
    if (v > 100000000) return std::nullopt;
    ++i;
  }
  if (i == digits_start) return std::nullopt;
  return lexical[0] == '-' ? static_cast<int>(-v) : static_cast<int>(v);
}

Roster::Roster(std::vector<EntityRecord> records) : records_(std::move(records)) {
  by_iri_.reserve(records_.size());
  by_ulan_.reserve(records_.size());
  for (std::uint32_t id = 0; id < records_.size(); ++id) {
    const auto& r = records_[id];
    if (r.ulan_id.empty()) throw RosterError("empty ulan_id for " + r.entity_iri.value);
    if (!valid_iri(r.entity_iri.value))
      throw RosterError("invalid entity IRI: '" + r.entity_iri.value + "'");
    if (r.birth_year && r.death_year && *r.birth_year > *r.death_year)
      throw RosterError("birth year after death year for " + r.entity_iri.value);
    if (!by_iri_.emplace(r.entity_iri.value, id).second)
      throw RosterError("duplicate entity_iri: " + r.entity_iri.value);
    if (!by_ulan_.emplace(r.ulan_id, id).second)
      throw RosterError("duplicate ulan_id: " + r.ulan_id);
  }
}

std::optional<std::uint32_t> Roster::find_iri(const std::string& iri) const {
  auto it = by_iri_.find(iri);
  if (it == by_iri_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Roster::find_ulan(const std::string& ulan_id) const {
  auto it = by_ulan_.find(ulan_id);
  if (it == by_ulan_.end()) return std::nullopt;
  return it->second;
}

Roster load_roster_csv(std::istream& in) {
  CsvReader csv(in);
  auto header = csv.next();
  if (!header) throw RosterError("empty roster CSV (missing header)");
  if (header->size() != 7 ||
      !std::equal(header->begin(), header->end(), std::begin(kRosterHeader))) {
    throw RosterError(
        "bad roster CSV header, expected "
        "entity_iri,ulan_id,viaf_id,birth_year,death_year,nationality,role");
  }

  std::vector<EntityRecord> records;
  std::set<std::string> seen_iri, seen_ulan;
  while (auto row = csv.next()) {
    std::size_t line = csv.record_line();
    if (row->size() == 1 && (*row)[0].empty()) continue;  // trailing blank line
    if (row->size() != 7)
      throw RosterError(row_msg(line, "expected 7 cells, got " + std::to_string(row->size())));

    EntityRecord rec;
    rec.entity_iri = Iri{(*row)[0]};
    rec.ulan_id = (*row)[1];
    if (rec.entity_iri.value.empty()) throw RosterError(row_msg(line, "empty entity_iri"));
    if (!valid_iri(rec.entity_iri.value))
      throw RosterError(row_msg(line, "invalid entity_iri '" + rec.entity_iri.value + "'"));
    if (rec.ulan_id.empty()) throw RosterError(row_msg(line, "empty ulan_id"));
    if (!seen_iri.insert(rec.entity_iri.value).second)
      throw RosterError(row_msg(line, "duplicate entity_iri '" + rec.entity_iri.value + "'"));
    if (!seen_ulan.insert(rec.ulan_id).second)
      throw RosterError(row_msg(line, "duplicate ulan_id '" + rec.ulan_id + "'"));

    if (!(*row)[2].empty()) rec.viaf_id = (*row)[2];
    for (int f : {3, 4}) {
      const std::string& cell = (*row)[static_cast<std::size_t>(f)];
      if (cell.empty()) continue;
      auto year = parse_year_cell(cell);
      if (!year) throw RosterError(row_msg(line, "non-integer year cell '" + cell + "'"));
      (f == 3 ? rec.birth_year : rec.death_year) = *year;
    }
    if (rec.birth_year && rec.death_year && *rec.birth_year > *rec.death_year)
      throw RosterError(row_msg(line, "birth_year after death_year"));
    if (!(*row)[5].empty()) rec.nationality = (*row)[5];
    if (!(*row)[6].empty()) rec.role = (*row)[6];
    records.push_back(std::move(rec));
  }
  return Roster(std::move(records));
}

PredicateMap load_predicate_map(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=', start);
    if (eq == std::string::npos)
      throw ConfigError("predicate map line " + std::to_string(n) + ": expected key=value");
    std::string key = line.substr(start, eq - start);
    std::string value = line.substr(eq + 1);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::size_t vs = value.find_first_not_of(" \t");
    value = vs == std::string::npos ? "" : value.substr(vs);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
    if (!kv.emplace(key, value).second)
      throw ConfigError("predicate map: duplicate key '" + key + "'");
  }

  PredicateMap map;
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(std::string("predicate map: missing key '") + key + "'");
    if (!valid_iri(it->second))
      throw ConfigError(std::string("predicate map: key '") + key + "' is not an IRI");
    return Iri{it->second};
  };
  map.same_as = get("same_as");
  map.ulan_id = get("ulan_id");
  map.viaf_id = get("viaf_id");
  map.birth_year = get("birth_year");
  map.death_year = get("death_year");
  map.nationality = get("nationality");
  map.role = get("role");
  return map;
}

namespace {

struct SubjectFields {
  std::set<std::string> entity_iri;  // same-as objects (IRIs only)
  std::set<std::string> ulan_id, viaf_id, nationality, role;
  std::set<std::string> birth_year, death_year;  // raw lexical forms
};

void collect(const Triple& t, const PredicateMap& p,
             std::map<std::string, SubjectFields>& subjects) {
  auto subject_key = [&] {
    // Distinguish IRI subjects from blank-node labels.
    if (const auto* iri = std::get_if<Iri>(&t.subject)) return "I" + iri->value;
    return "B" + std::get<BlankNode>(t.subject).label;
  };

  if (t.predicate == p.same_as) {
    if (const auto* obj = std::get_if<Iri>(&t.object))
      subjects[subject_key()].entity_iri.insert(obj->value);
    return;
  }

  std::set<std::string> SubjectFields::* slot = nullptr;
  if (t.predicate == p.ulan_id) slot = &SubjectFields::ulan_id;
  else if (t.predicate == p.viaf_id) slot = &SubjectFields::viaf_id;
  else if (t.predicate == p.birth_year) slot = &SubjectFields::birth_year;
  else if (t.predicate == p.death_year) slot = &SubjectFields::death_year;
  else if (t.predicate == p.nationality) slot = &SubjectFields::nationality;
  else if (t.predicate == p.role) slot = &SubjectFields::role;
  if (!slot) return;

  if (const auto* lit = std::get_if<Literal>(&t.object))
    (subjects[subject_key()].*slot).insert(lit->lexical);
}

// Lexicographically smallest value of a single-valued field.
std::optional<std::string> pick(const std::set<std::string>& values, JoinTally& tally) {
  if (values.empty()) return std::nullopt;
  if (values.size() > 1) ++tally.multivalued;
  return *values.begin();
}

}  // namespace

std::pair<Roster, JoinTally> build_roster(const std::vector<Triple>& mapping_triples,
                                          const std::vector<Triple>& attribute_triples,
                                          const PredicateMap& predicates) {
  std::map<std::string, SubjectFields> subjects;
  for (const auto& t : mapping_triples) collect(t, predicates, subjects);
  for (const auto& t : attribute_triples) collect(t, predicates, subjects);

  JoinTally tally;
  tally.subjects_seen = subjects.size();

  std::vector<EntityRecord> records;
  for (auto& [key, f] : subjects) {
    auto entity = pick(f.entity_iri, tally);
    if (!entity || !valid_iri(*entity)) {
      ++tally.missing_entity_iri;
      continue;
    }
    auto ulan = pick(f.ulan_id, tally);
    if (!ulan || ulan->empty()) {
      ++tally.missing_ulan;
      continue;
    }
    EntityRecord rec;
    rec.entity_iri = Iri{std::move(*entity)};
    rec.ulan_id = std::move(*ulan);
    rec.viaf_id = pick(f.viaf_id, tally);
    rec.nationality = pick(f.nationality, tally);
    rec.role = pick(f.role, tally);
    for (bool birth : {true, false}) {
      auto raw = pick(birth ? f.birth_year : f.death_year, tally);
      if (!raw) continue;
      auto year = parse_leading_year(*raw);
      if (!year) {
        ++tally.unparsed_year;
        continue;
      }
      (birth ? rec.birth_year : rec.death_year) = *year;
    }
    if (rec.birth_year && rec.death_year && *rec.birth_year > *rec.death_year) {
      rec.death_year.reset();
      ++tally.year_order_dropped;
    }
    records.push_back(std::move(rec));
  }

  std::sort(records.begin(), records.end(), [](const EntityRecord& a, const EntityRecord& b) {
    return a.entity_iri.value < b.entity_iri.value;
  });
  // Two authority subjects can map to one entity (or reuse a ULAN id); keep
  // the first in sorted order so the result stays order-insensitive.
  std::vector<EntityRecord> unique;
  std::set<std::string> seen_iri, seen_ulan;
  for (auto& rec : records) {
    if (!seen_iri.insert(rec.entity_iri.value).second || !seen_ulan.insert(rec.ulan_id).second) {
      ++tally.duplicate_dropped;
      continue;
    }
    unique.push_back(std::move(rec));
  }
  tally.records_built = unique.size();
  return {Roster(std::move(unique)), tally};
}

ReferenceEdges load_reference_edges_csv(std::istream& in, const Roster& roster) {
  CsvReader csv(in);
  auto header = csv.next();
  if (!header) throw RosterError("empty reference-edge CSV (missing header)");
  if (header->size() != 3 || (*header)[0] != "from_ulan_id" || (*header)[1] != "to_ulan_id" ||
      (*header)[2] != "rel_type") {
    throw RosterError("bad reference-edge CSV header, expected from_ulan_id,to_ulan_id,rel_type");
  }

  ReferenceEdges out;
  while (auto row = csv.next()) {
    std::size_t line = csv.record_line();
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != 3)
      throw RosterError("reference-edge CSV row " + std::to_string(line) + ": expected 3 cells");
    auto from = roster.find_ulan((*row)[0]);
    auto to = roster.find_ulan((*row)[1]);
    if (!from || !to) {
      ++out.skipped;
      continue;
    }
    out.edges.emplace_back(*from, *to);
  }
  return out;
}

}  // namespace linkscope
