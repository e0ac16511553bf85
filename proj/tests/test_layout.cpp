#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "linkscope/error.hpp"
#include "linkscope/layout.hpp"
#include "test_util.hpp"

using namespace linkscope;

namespace {

LinkGraph make(std::uint32_t n, const std::vector<Edge>& edges) {
  return build_graph(n, edges).first;
}

Roster roster_with(const std::vector<std::optional<std::string>>& nats) {
  std::vector<EntityRecord> recs;
  for (std::size_t i = 0; i < nats.size(); ++i) {
    EntityRecord r;
    r.entity_iri = Iri{"http://ex/n" + std::to_string(i)};
    r.ulan_id = "u" + std::to_string(i);
    r.nationality = nats[i];
    recs.push_back(std::move(r));
  }
  return Roster(std::move(recs));
}

bool in_frame(const Layout& l) {
  for (std::size_t i = 0; i < l.x.size(); ++i) {
    if (!std::isfinite(l.x[i]) || !std::isfinite(l.y[i])) return false;
    if (l.x[i] < 0 || l.x[i] > l.params.frame_width) return false;
    if (l.y[i] < 0 || l.y[i] > l.params.frame_height) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("layout is deterministic for fixed graph and params") {
  auto g = make(60, testutil::random_digraph(60, 0.05, 5));
  LayoutParams p;
  p.iterations = 80;
  p.seed = 31;
  Layout a = fruchterman_reingold(g, p);
  Layout b = fruchterman_reingold(g, p);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);

  p.seed = 32;
  Layout c = fruchterman_reingold(g, p);
  CHECK(a.x != c.x);
}

TEST_CASE("coordinates stay finite and inside the frame") {
  auto g = make(120, testutil::random_digraph(120, 0.04, 9));
  LayoutParams p;
  p.iterations = 120;
  p.seed = 3;
  p.frame_width = 500.0;
  p.frame_height = 300.0;
  Layout l = fruchterman_reingold(g, p);
  REQUIRE(l.x.size() == 120);
  CHECK(in_frame(l));
}

TEST_CASE("a single node feels no force and never moves") {
  LinkGraph g = make(1, {});
  LayoutParams p;
  p.iterations = 1;
  p.seed = 77;
  Layout initial = fruchterman_reingold(g, p);
  p.iterations = 50;
  Layout moved = fruchterman_reingold(g, p);
  CHECK(moved.x[0] == doctest::Approx(initial.x[0]));
  CHECK(moved.y[0] == doctest::Approx(initial.y[0]));
  CHECK(moved.x[0] >= 0.0);
  CHECK(moved.x[0] <= p.frame_width);
}

TEST_CASE("zero iterations are rejected") {
  LinkGraph g = make(1, {});
  LayoutParams p;
  p.iterations = 0;
  CHECK_THROWS_AS(fruchterman_reingold(g, p), LayoutError);
}

TEST_CASE("two connected nodes settle near the ideal edge length") {
  LinkGraph g = make(2, {{0, 1}});
  LayoutParams p;
  p.iterations = 500;
  p.seed = 12;
  Layout l = fruchterman_reingold(g, p);
  double k = std::sqrt(p.frame_width * p.frame_height / 2.0);
  double d = std::hypot(l.x[0] - l.x[1], l.y[0] - l.y[1]);
  CHECK(d > 0.5 * k);
  CHECK(d < 2.0 * k);
}

TEST_CASE("coincident points separate instead of dividing by zero") {
  // A star from a fresh seed often starts with near-coincident points after
  // the first big attraction step; run long enough to smooth that out.
  std::vector<Edge> star;
  for (std::uint32_t v = 1; v < 30; ++v) star.emplace_back(0, v);
  LinkGraph g = make(30, star);
  LayoutParams p;
  p.iterations = 200;
  p.seed = 1;
  Layout l = fruchterman_reingold(g, p);
  CHECK(in_frame(l));
  // Leaves must not collapse onto the hub.
  for (std::uint32_t v = 1; v < 30; ++v) {
    double d = std::hypot(l.x[v] - l.x[0], l.y[v] - l.y[0]);
    CHECK(d > 1e-6);
  }
}

TEST_CASE("barnes-hut approximation stays close to the exact field") {
  // One iteration from identical seeded starts: the per-node displacement
  // under theta = 1.2 must stay within 10% of k of the exact pairwise field.
  for (std::uint64_t seed : {8ull, 18ull, 28ull}) {
    auto g = make(250, testutil::random_digraph(250, 0.02, seed));
    LayoutParams exact;
    exact.iterations = 1;
    exact.seed = seed + 1;
    exact.theta = 0.0;  // exact pairwise
    LayoutParams approx = exact;
    approx.theta = 1.2;
    Layout a = fruchterman_reingold(g, exact);
    Layout b = fruchterman_reingold(g, approx);
    double k = std::sqrt(exact.frame_width * exact.frame_height / 250.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.x.size(); ++i)
      worst = std::max(worst, std::hypot(a.x[i] - b.x[i], a.y[i] - b.y[i]));
    CAPTURE(seed);
    CHECK(worst <= 0.1 * k);
  }
}

TEST_CASE("invalid layout parameters are fatal") {
  LinkGraph g = make(2, {{0, 1}});
  LayoutParams p;
  p.frame_width = 0.0;
  CHECK_THROWS_AS(fruchterman_reingold(g, p), LayoutError);
  LayoutParams q;
  q.frame_height = -5.0;
  CHECK_THROWS_AS(fruchterman_reingold(g, q), LayoutError);
  LayoutParams r;
  r.theta = -0.1;
  CHECK_THROWS_AS(fruchterman_reingold(g, r), LayoutError);
}

TEST_CASE("empty graph produces an empty layout") {
  LinkGraph g = make(0, {});
  Layout l = fruchterman_reingold(g, LayoutParams{});
  CHECK(l.x.empty());
  CHECK(l.y.empty());
}

TEST_CASE("node sizes follow the square-root scale") {
  DegreeVector d;
  d.total = {0, 4, 16};
  std::vector<double> r = node_sizes(d, 2.0, 40.0);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(2.0));
  CHECK(r[1] == doctest::Approx(2.0 + 38.0 * 0.5));   // sqrt(4/16) = 1/2
  CHECK(r[2] == doctest::Approx(40.0));

  DegreeVector zero;
  zero.total = {0, 0};
  std::vector<double> rz = node_sizes(zero);
  CHECK(rz == std::vector<double>{2.0, 2.0});

  DegreeVector uniform;
  uniform.total = {5, 5, 5};
  std::vector<double> ru = node_sizes(uniform, 2.0, 40.0);
  for (double v : ru) CHECK(v == doctest::Approx(40.0));
}

TEST_CASE("node size bounds are validated") {
  DegreeVector d;
  d.total = {1};
  CHECK_THROWS_AS(node_sizes(d, 0.0, 40.0), LayoutError);
  CHECK_THROWS_AS(node_sizes(d, 5.0, 5.0), LayoutError);
  CHECK_THROWS_AS(node_sizes(d, 6.0, 5.0), LayoutError);
}

TEST_CASE("colors rank by frequency with lexicographic ties") {
  Roster roster = roster_with({"French", "Dutch", "French", std::nullopt, "Dutch", "French"});
  ColorAssignment c = assign_colors(roster, ColorAttribute::Nationality);
  REQUIRE(c.legend.size() == 3);  // French, Dutch, (unknown)
  CHECK(c.legend[0].label == "French");
  CHECK(c.legend[0].count == 3);
  CHECK(c.legend[0].color == kPalette[0]);
  CHECK(c.legend[1].label == "Dutch");
  CHECK(c.legend[1].count == 2);
  CHECK(c.legend[1].color == kPalette[1]);
  CHECK(c.legend[2].label == "(unknown)");
  CHECK(c.legend[2].count == 1);
  CHECK(c.legend[2].color == kGrey);

  CHECK(c.node_color[0] == kPalette[0]);
  CHECK(c.node_color[1] == kPalette[1]);
  CHECK(c.node_color[3] == kGrey);

  // Equal frequencies: lexicographic order decides the palette slot.
  Roster tied = roster_with({"B", "A"});
  ColorAssignment ct = assign_colors(tied, ColorAttribute::Nationality);
  CHECK(ct.legend[0].label == "A");
  CHECK(ct.legend[1].label == "B");
  CHECK(ct.node_color[1] == kPalette[0]);
}

TEST_CASE("categories beyond the palette fall back to grey") {
  std::vector<std::optional<std::string>> nats;
  for (int i = 0; i < 25; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "nat%02d", i);
    nats.emplace_back(buf);
    nats.emplace_back(buf);  // two holders each; ties break lexicographically
  }
  Roster roster = roster_with(nats);
  ColorAssignment c = assign_colors(roster, ColorAttribute::Nationality, 20);
  REQUIRE(c.legend.size() == 26);  // 25 categories + unknown bucket
  for (std::size_t i = 0; i < 20; ++i) CHECK(c.legend[i].color == kPalette[i]);
  for (std::size_t i = 20; i < 25; ++i) CHECK(c.legend[i].color == kGrey);
  CHECK(c.legend[25].label == "(unknown)");
  CHECK(c.legend[25].count == 0);

  // Every node's color agrees with its category's legend entry.
  for (std::uint32_t v = 0; v < roster.size(); ++v) {
    const auto& nat = roster.record(v).nationality;
    for (const auto& entry : c.legend)
      if (nat && entry.label == *nat) CHECK(c.node_color[v] == entry.color);
  }
}

TEST_CASE("role attribute and clamped palette size") {
  std::vector<EntityRecord> recs;
  const char* roles[] = {"painter", "painter", "sculptor", nullptr};
  for (std::size_t i = 0; i < 4; ++i) {
    EntityRecord r;
    r.entity_iri = Iri{"http://ex/r" + std::to_string(i)};
    r.ulan_id = "r" + std::to_string(i);
    if (roles[i]) r.role = roles[i];
    recs.push_back(std::move(r));
  }
  Roster roster{std::move(recs)};
  ColorAssignment c = assign_colors(roster, ColorAttribute::Role, 99);
  REQUIRE(c.legend.size() == 3);
  CHECK(c.legend[0].label == "painter");
  CHECK(c.legend[0].color == kPalette[0]);
  CHECK(c.legend[1].label == "sculptor");
  CHECK(c.legend[2].label == "(unknown)");
  CHECK(c.legend[2].count == 1);

  // palette_size = 1: only the top category is colored.
  ColorAssignment c1 = assign_colors(roster, ColorAttribute::Role, 1);
  CHECK(c1.legend[0].color == kPalette[0]);
  CHECK(c1.legend[1].color == kGrey);
}
