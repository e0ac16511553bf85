#pragma once

// The authority roster: the set of in-domain entities with biographical
// attributes, loaded from a prepared CSV or joined from mapping/attribute
// dumps. Immutable after construction; safe for concurrent reads.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkscope/ntriples.hpp"

namespace linkscope {

struct EntityRecord {
  Iri entity_iri;
  std::string ulan_id;
  std::optional<std::string> viaf_id;
  std::optional<int> birth_year;  // calendar year, negative = BCE
  std::optional<int> death_year;
  std::optional<std::string> nationality;
  std::optional<std::string> role;
};

class Roster {
 public:
  Roster() = default;
  // Records must satisfy their invariants; throws RosterError on duplicate
  // entity_iri or ulan_id.
  explicit Roster(std::vector<EntityRecord> records);

  std::uint32_t size() const { return static_cast<std::uint32_t>(records_.size()); }
  const EntityRecord& record(std::uint32_t id) const { return records_[id]; }
  const std::vector<EntityRecord>& records() const { return records_; }

  std::optional<std::uint32_t> find_iri(const std::string& iri) const;
  std::optional<std::uint32_t> find_ulan(const std::string& ulan_id) const;

  const IriIndex& iri_index() const { return by_iri_; }

 private:
  std::vector<EntityRecord> records_;
  IriIndex by_iri_;
  std::unordered_map<std::string, std::uint32_t> by_ulan_;
};

// Header must be exactly:
//   entity_iri,ulan_id,viaf_id,birth_year,death_year,nationality,role
// Empty cell = missing value. Node ids follow row order.
// Throws RosterError naming the offending row on any violation.
Roster load_roster_csv(std::istream& in);

// Predicate IRIs carrying each roster field in the mapping/attribute dumps.
struct PredicateMap {
  Iri same_as;      // authority node -> entity IRI
  Iri ulan_id;
  Iri viaf_id;
  Iri birth_year;
  Iri death_year;
  Iri nationality;
  Iri role;
};

// Key=value file with keys same_as, ulan_id, viaf_id, birth_year, death_year,
// nationality, role. '#' comments and blank lines allowed.
PredicateMap load_predicate_map(std::istream& in);

struct JoinTally {
  std::uint64_t subjects_seen = 0;
  std::uint64_t records_built = 0;
  std::uint64_t missing_entity_iri = 0;  // subject had no same-as IRI object
  std::uint64_t missing_ulan = 0;        // subject had no ulan-id literal
  std::uint64_t multivalued = 0;         // fields with more than one distinct value
  std::uint64_t unparsed_year = 0;       // year literal without a leading integer
  std::uint64_t year_order_dropped = 0;  // death year dropped (before birth)
  std::uint64_t duplicate_dropped = 0;   // candidate records sharing a key
};

// Groups triples by subject and joins mapping + attribute statements into
// EntityRecords. Deterministic and order-insensitive: records are sorted by
// entity_iri, multivalued fields keep the lexicographically smallest value.
std::pair<Roster, JoinTally> build_roster(const std::vector<Triple>& mapping_triples,
                                          const std::vector<Triple>& attribute_triples,
                                          const PredicateMap& predicates);

struct ReferenceEdges {
  std::vector<Edge> edges;
  std::uint64_t skipped = 0;  // rows with an unresolvable ULAN id
};

// Header must be exactly: from_ulan_id,to_ulan_id,rel_type
ReferenceEdges load_reference_edges_csv(std::istream& in, const Roster& roster);

// Leading signed integer of a lexical form, so "1452-04-15" and "1452" both
// yield 1452. nullopt when the form does not start with a sign or digit.
std::optional<int> parse_leading_year(std::string_view lexical);

}  // namespace linkscope
