#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "linkscope/error.hpp"
#include "linkscope/ntriples.hpp"
#include "test_util.hpp"

using namespace linkscope;

namespace {

Triple parse_one(const std::string& line) {
  auto t = parse_ntriples_line(line);
  REQUIRE(t.has_value());
  return *t;
}

const Literal& lit(const Triple& t) { return std::get<Literal>(t.object); }

}  // namespace

TEST_CASE("iri triple parses into its three terms") {
  Triple t = parse_one("<http://ex/A> <http://ex/link> <http://ex/B> .");
  CHECK(std::get<Iri>(t.subject).value == "http://ex/A");
  CHECK(t.predicate.value == "http://ex/link");
  CHECK(std::get<Iri>(t.object).value == "http://ex/B");
}

TEST_CASE("literal objects: plain, lang-tagged, datatyped") {
  CHECK(lit(parse_one(R"(<http://ex/A> <http://ex/p> "Alice" .)")).lexical == "Alice");

  Triple lt = parse_one(R"(<http://ex/A> <http://ex/p> "Alicia"@en-GB .)");
  CHECK(lit(lt).lang_tag == "en-GB");
  CHECK_FALSE(lit(lt).datatype.has_value());

  Triple dt = parse_one(
      R"(<http://ex/A> <http://ex/p> "1452"^^<http://www.w3.org/2001/XMLSchema#integer> .)");
  CHECK(lit(dt).datatype->value == "http://www.w3.org/2001/XMLSchema#integer");
  CHECK_FALSE(lit(dt).lang_tag.has_value());
}

TEST_CASE("string escapes decode") {
  Triple t = parse_one(R"(<http://ex/A> <http://ex/p> "a\"b\\c\nd\te\rf" .)");
  CHECK(lit(t).lexical == "a\"b\\c\nd\te\rf");

  Triple u = parse_one(R"(<http://ex/A> <http://ex/p> "é \U0001F600" .)");
  CHECK(lit(u).lexical == "\xC3\xA9 \xF0\x9F\x98\x80");
}

TEST_CASE("surrogate and out-of-range code points are malformed") {
  CHECK_FALSE(parse_ntriples_line(R"(<http://ex/A> <http://ex/p> "\uD800" .)").has_value());
  CHECK_FALSE(parse_ntriples_line(R"(<http://ex/A> <http://ex/p> "\U00110000" .)").has_value());
}

TEST_CASE("blank nodes accepted in subject and object position") {
  Triple s = parse_one("_:b1 <http://ex/p> <http://ex/A> .");
  CHECK(std::get<BlankNode>(s.subject).label == "b1");
  Triple o = parse_one("<http://ex/A> <http://ex/p> _:tail-2 .");
  CHECK(std::get<BlankNode>(o.object).label == "tail-2");
}

TEST_CASE("whitespace tolerance and terminal-dot rules") {
  CHECK(parse_ntriples_line("  <http://ex/A>\t<http://ex/p> <http://ex/B>   .  ").has_value());
  CHECK(parse_ntriples_line("<http://ex/A> <http://ex/p> <http://ex/B>.").has_value());
  // missing dot, junk after dot, missing separator ws
  CHECK_FALSE(parse_ntriples_line("<http://ex/A> <http://ex/p> <http://ex/B>").has_value());
  CHECK_FALSE(parse_ntriples_line("<http://ex/A> <http://ex/p> <http://ex/B> . x").has_value());
  CHECK_FALSE(parse_ntriples_line("<http://ex/A><http://ex/p> <http://ex/B> .").has_value());
}

TEST_CASE("malformed terms rejected") {
  CHECK_FALSE(parse_ntriples_line("<http://ex/a b> <http://ex/p> <http://ex/B> .").has_value());
  CHECK_FALSE(parse_ntriples_line("<http://ex/A> <http://ex/p> \"open .").has_value());
  CHECK_FALSE(parse_ntriples_line(R"(<http://ex/A> <http://ex/p> "bad\q" .)").has_value());
  CHECK_FALSE(parse_ntriples_line(R"(<http://ex/A> <http://ex/p> "x"@ .)").has_value());
  CHECK_FALSE(parse_ntriples_line(R"(<http://ex/A> <http://ex/p> "x"@en- .)").has_value());
  CHECK_FALSE(parse_ntriples_line("<http://ex/A> <http://ex/p> plain .").has_value());
  CHECK_FALSE(parse_ntriples_line("<http://ex/A> _:notiri <http://ex/B> .").has_value());
}

TEST_CASE("comment and blank lines are skippable") {
  CHECK(ntriples_line_skippable("# comment"));
  CHECK(ntriples_line_skippable("   # indented"));
  CHECK(ntriples_line_skippable(""));
  CHECK(ntriples_line_skippable(" \t "));
  CHECK_FALSE(ntriples_line_skippable("<http://ex/A> <http://ex/p> <http://ex/B> ."));
}

TEST_CASE("stream parse tallies and conserves line counts") {
  std::istringstream in(
      "# head\n"
      "<http://ex/A> <http://ex/p> <http://ex/B> .\n"
      "\n"
      "broken line\n"
      "<http://ex/B> <http://ex/p> <http://ex/C> .\n");
  auto [triples, tally] = parse_ntriples(in);
  CHECK(triples.size() == 2);
  CHECK(tally.lines_total == 5);
  CHECK(tally.triples_ok == 2);
  CHECK(tally.lines_skipped == 2);
  CHECK(tally.lines_malformed == 1);
  CHECK(tally.lines_total == tally.triples_ok + tally.lines_skipped + tally.lines_malformed);
}

TEST_CASE("crlf line endings are tolerated") {
  std::istringstream in("<http://ex/A> <http://ex/p> <http://ex/B> .\r\n# c\r\n");
  auto [triples, tally] = parse_ntriples(in);
  CHECK(triples.size() == 1);
  CHECK(tally.lines_skipped == 1);
}

TEST_CASE("conformance corpus matches its hand classification") {
  std::ifstream in(FIXTURE_DIR "/conformance.nt", std::ios::binary);
  REQUIRE(in.good());
  auto [triples, tally] = parse_ntriples(in);
  CHECK(tally.lines_total == 30);
  CHECK(tally.triples_ok == 21);
  CHECK(tally.lines_skipped == 4);
  CHECK(tally.lines_malformed == 5);
  CHECK(triples.size() == 21);
  CHECK(tally.lines_total == tally.triples_ok + tally.lines_skipped + tally.lines_malformed);
}

TEST_CASE("serialize -> reparse is a fixpoint over the conformance corpus") {
  std::ifstream in(FIXTURE_DIR "/conformance.nt", std::ios::binary);
  REQUIRE(in.good());
  auto [triples, tally] = parse_ntriples(in);

  std::string round;
  for (const Triple& t : triples) round += serialize_triple(t) + "\n";
  std::istringstream rin(round);
  auto [again, tally2] = parse_ntriples(rin);
  CHECK(tally2.lines_malformed == 0);
  REQUIRE(again.size() == triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) CHECK(again[i] == triples[i]);
}

TEST_CASE("tally accumulation operator sums fields") {
  ParseTally a{10, 6, 3, 1}, b{5, 4, 0, 1};
  a += b;
  CHECK(a.lines_total == 15);
  CHECK(a.triples_ok == 10);
  CHECK(a.lines_skipped == 3);
  CHECK(a.lines_malformed == 2);
}

TEST_CASE("extract_edges filters by predicate and roster membership") {
  IriIndex index{{"http://ex/A", 0}, {"http://ex/B", 1}};
  std::vector<Triple> triples;
  auto add = [&](const std::string& line) { triples.push_back(parse_one(line)); };
  add("<http://ex/A> <http://ex/link> <http://ex/B> .");
  add("<http://ex/A> <http://ex/other> <http://ex/B> .");
  add("<http://ex/A> <http://ex/link> <http://ex/X> .");
  add(R"(<http://ex/A> <http://ex/link> "literal" .)");
  add("_:b1 <http://ex/link> <http://ex/B> .");
  add("<http://ex/B> <http://ex/link> <http://ex/A> .");
  add("<http://ex/A> <http://ex/link> <http://ex/B> .");  // duplicate preserved

  EdgeExtraction ex = extract_edges(triples, Iri{"http://ex/link"}, index);
  CHECK(ex.edges == std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
  CHECK(ex.off_roster == 3);
  CHECK(ex.predicate_matches == 6);
  CHECK(ex.edges.size() + ex.off_roster == ex.predicate_matches);
}

TEST_CASE("empty triple sequence extracts nothing") {
  IriIndex index;
  EdgeExtraction ex = extract_edges({}, Iri{"http://ex/link"}, index);
  CHECK(ex.edges.empty());
  CHECK(ex.off_roster == 0);
  CHECK(ex.predicate_matches == 0);
}
