#pragma once

// Streaming N-Triples subset parser and predicate-filtered edge extraction.
//
// Grammar subset, one statement per line:
//   <iri> <iri> (<iri> | _:label | "literal"(@lang | ^^<iri>)?) .
// Comment lines (first non-blank char '#') and blank lines are skipped.
// Malformed lines are tallied, never fatal; only stream-level I/O failures
// raise IngestError.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace linkscope {

struct Iri {
  std::string value;
  bool operator==(const Iri&) const = default;
};

// Non-empty, no whitespace, no '<' or '>'.
bool valid_iri(std::string_view s);

struct BlankNode {
  std::string label;
  bool operator==(const BlankNode&) const = default;
};

struct Literal {
  std::string lexical;
  std::optional<std::string> lang_tag;  // never set together with datatype
  std::optional<Iri> datatype;
  bool operator==(const Literal&) const = default;
};

using SubjectTerm = std::variant<Iri, BlankNode>;
using ObjectTerm = std::variant<Iri, BlankNode, Literal>;

struct Triple {
  SubjectTerm subject;
  Iri predicate;
  ObjectTerm object;
  bool operator==(const Triple&) const = default;
};

struct ParseTally {
  std::uint64_t lines_total = 0;
  std::uint64_t triples_ok = 0;
  std::uint64_t lines_skipped = 0;  // comments and blank lines
  std::uint64_t lines_malformed = 0;

  ParseTally& operator+=(const ParseTally& o) {
    lines_total += o.lines_total;
    triples_ok += o.triples_ok;
    lines_skipped += o.lines_skipped;
    lines_malformed += o.lines_malformed;
    return *this;
  }
};

// Pull parser; memory use is bounded by the longest line.
class NTriplesReader {
 public:
  explicit NTriplesReader(std::istream& in) : in_(&in) {}

  // Next well-formed triple, or nullopt at end of stream.
  // Throws IngestError if the underlying stream fails mid-read.
  std::optional<Triple> next();

  const ParseTally& tally() const { return tally_; }

 private:
  std::istream* in_;
  ParseTally tally_;
};

std::pair<std::vector<Triple>, ParseTally> parse_ntriples(std::istream& in);

// Parses a single statement line (no trailing newline). Used by the reader;
// exposed for tests. nullopt = malformed. Does not touch any tally.
std::optional<Triple> parse_ntriples_line(std::string_view line);

// True if the line is blank or a comment.
bool ntriples_line_skippable(std::string_view line);

// Canonical one-line serialization including the terminal " .".
// Escapes ", \, LF, TAB, CR in literals; other bytes pass through as UTF-8.
std::string serialize_triple(const Triple& t);

using IriIndex = std::unordered_map<std::string, std::uint32_t>;
using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct EdgeExtraction {
  std::vector<Edge> edges;             // duplicates preserved
  std::uint64_t off_roster = 0;        // matching predicate, unresolvable endpoint
  std::uint64_t predicate_matches = 0; // edges.size() + off_roster
};

// Streaming edge extraction: feed triples, read the result afterwards.
// Blank-node endpoints never resolve, so they count as off-roster.
class EdgeExtractor {
 public:
  EdgeExtractor(Iri link_predicate, const IriIndex& index)
      : predicate_(std::move(link_predicate)), index_(&index) {}

  void add(const Triple& t);
  const EdgeExtraction& result() const { return out_; }
  EdgeExtraction take() { return std::move(out_); }

 private:
  Iri predicate_;
  const IriIndex* index_;
  EdgeExtraction out_;
};

EdgeExtraction extract_edges(const std::vector<Triple>& triples,
                             const Iri& link_predicate, const IriIndex& index);

}  // namespace linkscope
