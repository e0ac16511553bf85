#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "linkscope/error.hpp"
#include "linkscope/temporal.hpp"
#include "test_util.hpp"

using namespace linkscope;

namespace {

Roster make_roster(const std::vector<std::optional<int>>& births) {
  std::vector<EntityRecord> recs;
  for (std::size_t i = 0; i < births.size(); ++i) {
    EntityRecord r;
    r.entity_iri = Iri{"http://ex/n" + std::to_string(i)};
    r.ulan_id = "u" + std::to_string(i);
    r.birth_year = births[i];
    recs.push_back(std::move(r));
  }
  return Roster(std::move(recs));
}

LinkGraph make(std::uint32_t n, const std::vector<Edge>& edges) {
  return build_graph(n, edges).first;
}

std::map<Edge, SpanRecord> by_edge(const SpanSet& s) {
  std::map<Edge, SpanRecord> m;
  for (const auto& r : s.records) m[{r.source_id, r.target_id}] = r;
  return m;
}

}  // namespace

TEST_CASE("five-edge hand fixture annotates spans and directions") {
  // Births: n0=1500, n1=1540, n2 unknown, n3=1500, n4=1400.
  Roster roster = make_roster({1500, 1540, std::nullopt, 1500, 1400});
  // Edges: 0->1 (future, -40), 1->0 (past, +40), 0->3 (same, 0),
  //        0->4 (past, +100), 0->2 (unknown).
  LinkGraph g = make(5, {{0, 1}, {1, 0}, {0, 3}, {0, 4}, {0, 2}});
  SpanSet spans = link_spans(g, roster);

  CHECK(spans.records.size() == 4);
  CHECK(spans.unknown_count == 1);
  auto m = by_edge(spans);
  CHECK(m.at({0, 1}).delta_years == -40);
  CHECK(m.at({0, 1}).direction == SpanDirection::Future);
  CHECK(m.at({1, 0}).delta_years == 40);
  CHECK(m.at({1, 0}).direction == SpanDirection::Past);
  CHECK(m.at({0, 3}).delta_years == 0);
  CHECK(m.at({0, 3}).direction == SpanDirection::Same);
  CHECK(m.at({0, 4}).delta_years == 100);
  CHECK(m.at({0, 4}).direction == SpanDirection::Past);

  DirectionShares d = direction_shares(spans);
  CHECK(d.past_count == 2);
  CHECK(d.future_count == 1);
  CHECK(d.same_count == 1);
  CHECK(d.unknown_count == 1);
  CHECK(d.past_share == doctest::Approx(2.0 / 3.0));
  CHECK(d.future_share == doctest::Approx(1.0 / 3.0));

  Histogram h = span_histogram(spans, 37.5);
  // |deltas| = 40, 40, 0, 100 -> bins [0,37.5): 1, [37.5,75): 2, [75,112.5): 1
  REQUIRE(h.bins.size() == 3);
  CHECK(h.bins[0].count == 1);
  CHECK(h.bins[1].count == 2);
  CHECK(h.bins[2].count == 1);
  CHECK(h.bins[1].lo == doctest::Approx(37.5));
  CHECK(h.bins[2].hi == doctest::Approx(112.5));
  CHECK(h.total == 4);
  CHECK(h.zero_count == 0);
}

TEST_CASE("span exactly on a bin boundary lands in the upper bin") {
  Roster roster = make_roster({1537, 1500});  // delta of 0->1 is +37
  LinkGraph g = make(2, {{0, 1}});
  SpanSet spans = link_spans(g, roster);
  REQUIRE(spans.records.size() == 1);
  CHECK(spans.records[0].delta_years == 37);

  // 37 < 37.5 stays in the first bin; a true boundary value moves up.
  Histogram h37 = span_histogram(spans, 37.0);
  REQUIRE(h37.bins.size() == 2);
  CHECK(h37.bins[0].count == 0);
  CHECK(h37.bins[1].count == 1);

  Histogram h375 = span_histogram(spans, 37.5);
  REQUIRE(h375.bins.size() == 1);
  CHECK(h375.bins[0].count == 1);
}

TEST_CASE("span histogram rejects non-positive bin widths") {
  Roster roster = make_roster({1500, 1540});
  LinkGraph g = make(2, {{0, 1}});
  SpanSet spans = link_spans(g, roster);
  CHECK_THROWS_AS(span_histogram(spans, 0.0), TemporalError);
  CHECK_THROWS_AS(span_histogram(spans, -1.0), TemporalError);
}

TEST_CASE("delta is antisymmetric under transposition") {
  Roster roster = make_roster({1500, 1540, 1420, 1600, std::nullopt, 1700});
  auto edges = testutil::random_digraph(6, 0.5, 3);
  LinkGraph g = make(6, edges);
  SpanSet fwd = link_spans(g, roster);
  SpanSet rev = link_spans(g.transposed(), roster);
  CHECK(fwd.unknown_count == rev.unknown_count);
  auto fm = by_edge(fwd);
  auto rm = by_edge(rev);
  REQUIRE(fm.size() == rm.size());
  for (const auto& [e, r] : fm) {
    const SpanRecord& mirror = rm.at({e.second, e.first});
    CHECK(mirror.delta_years == -r.delta_years);
  }

  DirectionShares df = direction_shares(fwd);
  DirectionShares dr = direction_shares(rev);
  CHECK(df.past_count == dr.future_count);
  CHECK(df.future_count == dr.past_count);
  CHECK(df.same_count == dr.same_count);
}

TEST_CASE("reciprocity on a hand graph") {
  LinkGraph g = make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  ReciprocityStats r = reciprocity_stats(g);
  CHECK(r.mirrored_count == 4);  // both directions of both pairs
  CHECK(r.unique_count == 1);    // only 1->2 lacks a reverse
  CHECK(r.mirrored_count + r.unique_count == g.edge_count());
  CHECK(r.mirrored_share == doctest::Approx(0.8));
  CHECK(r.mirrored_count % 2 == 0);

  // {(A,B),(B,A),(A,C)}: mirrored 2, unique 1, share 2/3.
  ReciprocityStats abc = reciprocity_stats(make(3, {{0, 1}, {1, 0}, {0, 2}}));
  CHECK(abc.mirrored_count == 2);
  CHECK(abc.unique_count == 1);
  CHECK(abc.mirrored_share == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("reciprocity matches the brute-force oracle on random graphs") {
  std::uint64_t seed = 21;
  for (std::uint32_t n : {3u, 10u, 40u}) {
    for (double density : {0.05, 0.3}) {
      auto edges = testutil::random_digraph(n, density, seed++);
      LinkGraph g = make(n, edges);
      ReciprocityStats r = reciprocity_stats(g);
      CHECK(r.mirrored_count + r.unique_count == g.edge_count());
      CHECK(r.mirrored_count == testutil::brute_mirrored(g.edges()));
      CHECK(r.mirrored_count % 2 == 0);
      if (g.edge_count() > 0)
        CHECK(r.mirrored_share == doctest::Approx(static_cast<double>(r.mirrored_count) /
                                                  static_cast<double>(g.edge_count())));
    }
  }
  ReciprocityStats empty = reciprocity_stats(make(0, {}));
  CHECK(empty.mirrored_share == 0.0);
}

TEST_CASE("span filter keeps spans up to and including the cutoff") {
  // |deltas|: 0->1: 40, 1->0: 40, 0->3: 0, 0->4: 100, 0->2 unknown,
  // 3->4: 100, 4->3: 100. Additionally 1->3: 40.
  Roster roster = make_roster({1500, 1540, std::nullopt, 1500, 1400});
  LinkGraph g = make(5, {{0, 1}, {1, 0}, {0, 3}, {0, 4}, {0, 2}, {3, 4}, {4, 3}, {1, 3}});
  SpanSet spans = link_spans(g, roster);

  auto [kept, stats] = filter_by_span(g, spans, 75.0);
  CHECK(stats.kept_count == 4);  // 40, 40, 0, 40
  CHECK(stats.dropped_over_span == 3);
  CHECK(stats.dropped_unknown == 1);
  CHECK(stats.retention_known == doctest::Approx(4.0 / 7.0));
  CHECK(stats.retention_all == doctest::Approx(4.0 / 8.0));
  CHECK(kept.node_count() == 5);
  CHECK(kept.edge_count() == 4);
  CHECK(kept.has_edge(0, 1));
  CHECK(kept.has_edge(0, 3));
  CHECK_FALSE(kept.has_edge(0, 4));
  CHECK_FALSE(kept.has_edge(0, 2));

  // Inclusive cutoff: max exactly at the span keeps the edge.
  auto [kept100, stats100] = filter_by_span(g, spans, 100.0);
  CHECK(stats100.kept_count == 7);
  CHECK(stats100.dropped_over_span == 0);

  auto [kept0, stats0] = filter_by_span(g, spans, 0.0);
  CHECK(stats0.kept_count == 1);  // only the 0-span edge 0->3
  CHECK(kept0.has_edge(0, 3));
}

TEST_CASE("negative span cutoff is fatal") {
  Roster roster = make_roster({1500, 1540});
  LinkGraph g = make(2, {{0, 1}});
  SpanSet spans = link_spans(g, roster);
  CHECK_THROWS_AS(filter_by_span(g, spans, -1.0), TemporalError);
}

TEST_CASE("empty graph yields empty span structures") {
  Roster roster = make_roster({});
  LinkGraph g = make(0, {});
  SpanSet spans = link_spans(g, roster);
  CHECK(spans.records.empty());
  CHECK(spans.unknown_count == 0);
  DirectionShares d = direction_shares(spans);
  CHECK(d.past_share == 0.0);
  CHECK(d.future_share == 0.0);
  Histogram h = span_histogram(spans);
  CHECK(h.total == 0);
  CHECK(h.bins.empty());
  auto [kept, stats] = filter_by_span(g, spans);
  CHECK(kept.node_count() == 0);
  CHECK(stats.retention_all == 0.0);
}
