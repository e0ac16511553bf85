#include "linkscope/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

using nlohmann::json;

void check_stream(std::ostream& out, const char* what) {
  if (!out) throw ExportError(std::string(what) + ": I/O failure");
}

json json_real(double v) { return json(round_sig6(v)); }

json histogram_json(const Histogram& h) {
  json bins = json::array();
  for (std::size_t i = 0; i < h.bins.size(); ++i) {
    bins.push_back({{"lo", json_real(h.bins[i].lo)},
                    {"hi", json_real(h.bins[i].hi)},
                    {"count", h.bins[i].count},
                    {"share", json_real(h.share(i))}});
  }
  return {{"bins", std::move(bins)},
          {"zero_count", h.zero_count},
          {"zero_share", json_real(h.zero_share())},
          {"total", h.total}};
}

json summary_json(const ComponentSummary& s) {
  json j{{"component_count", s.k},
         {"giant_size", s.giant_size},
         {"giant_fraction", json_real(s.giant_fraction)},
         {"singleton_count", s.singleton_count}};
  j["smallest_nonsingleton"] =
      s.smallest_nonsingleton ? json(*s.smallest_nonsingleton) : json(nullptr);
  return j;
}

json direction_json(const DirectionShares& d) {
  return {{"past_count", d.past_count},
          {"future_count", d.future_count},
          {"same_count", d.same_count},
          {"unknown_count", d.unknown_count},
          {"past_share", json_real(d.past_share)},
          {"future_share", json_real(d.future_share)}};
}

json reciprocity_json(const ReciprocityStats& r) {
  return {{"mirrored_count", r.mirrored_count},
          {"unique_count", r.unique_count},
          {"mirrored_share", json_real(r.mirrored_share)},
          {"cross_domain_reference", json_real(kCrossDomainReciprocityReference)}};
}

json retention_json(const RetentionStats& r) {
  return {{"kept_count", r.kept_count},
          {"dropped_over_span", r.dropped_over_span},
          {"dropped_unknown", r.dropped_unknown},
          {"retention_known", json_real(r.retention_known)},
          {"retention_all", json_real(r.retention_all)}};
}

void write_attvalue(std::ostream& out, int id, const std::string& value) {
  out << "        <attvalue for=\"" << id << "\" value=\"" << xml_escape(value) << "\"/>\n";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// IRI-tail node names, made unique by suffixing the node id on collision.
std::vector<std::string> dot_names(const LinkGraph& g, const Roster& roster) {
  std::vector<std::string> names(g.node_count());
  std::unordered_set<std::string> taken;
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    std::string name = iri_tail(roster.record(i).entity_iri.value);
    if (!taken.insert(name).second) name += "~" + std::to_string(i);
    names[i] = dot_escape(name);
  }
  return names;
}

}  // namespace

double round_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string iri_tail(const std::string& iri) {
  std::size_t pos = iri.find_last_of("/#");
  return pos == std::string::npos ? iri : iri.substr(pos + 1);
}

nlohmann::json report_to_json(const StatsReport& report) {
  json j;
  j["node_count"] = report.node_count;
  j["edge_count"] = report.edge_count;
  j["ingest"] = {{"lines_total", report.ingest.parse.lines_total},
                 {"triples_ok", report.ingest.parse.triples_ok},
                 {"lines_skipped", report.ingest.parse.lines_skipped},
                 {"lines_malformed", report.ingest.parse.lines_malformed},
                 {"predicate_matches", report.ingest.predicate_matches}};
  j["build"] = {{"duplicates_dropped", report.build_tally.duplicates_dropped},
                {"self_loops_dropped", report.build_tally.self_loops_dropped},
                {"off_roster_dropped", report.build_tally.off_roster_dropped}};
  j["wcc"] = summary_json(report.wcc);
  j["scc"] = summary_json(report.scc);
  j["degree_histogram_linear"] = histogram_json(report.degree_hist_linear);
  j["degree_histogram_log"] = histogram_json(report.degree_hist_log);
  if (report.power_law) {
    j["power_law"] = {{"alpha", json_real(report.power_law->alpha)},
                      {"xmin", report.power_law->xmin},
                      {"n_tail", report.power_law->n_tail},
                      {"ks_distance", json_real(report.power_law->ks_distance)}};
  } else {
    j["power_law"] = nullptr;
  }
  j["span_histogram"] = histogram_json(report.span_histogram);
  j["direction"] = direction_json(report.direction);
  j["reciprocity"] = reciprocity_json(report.reciprocity);
  j["retention"] = retention_json(report.retention);
  j["bin_width"] = json_real(report.bin_width);
  j["max_span_years"] = json_real(report.max_span_years);
  if (report.reference) {
    j["reference"] = {{"edge_count", report.reference->edge_count},
                      {"skipped_rows", report.reference->skipped_rows},
                      {"span_histogram", histogram_json(report.reference->span_histogram)},
                      {"direction", direction_json(report.reference->direction)},
                      {"reciprocity", reciprocity_json(report.reference->reciprocity)},
                      {"retention", retention_json(report.reference->retention)}};
  } else {
    j["reference"] = nullptr;
  }
  return j;
}

std::size_t write_report(const StatsReport& report, std::ostream& out) {
  std::string s = report_to_json(report).dump(2);
  s.push_back('\n');
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  out.flush();
  check_stream(out, "write_report");
  return s.size();
}

void write_gexf(const LinkGraph& g, const Roster& roster, std::ostream& out,
                const Layout* layout, const NodeStyles* styles) {
  if (roster.size() < g.node_count())
    throw ExportError("write_gexf: roster smaller than graph");
  if (layout && layout->x.size() != g.node_count())
    throw ExportError("write_gexf: layout does not cover the graph");
  if (styles && (styles->radius.size() != g.node_count() ||
                 styles->color.size() != g.node_count()))
    throw ExportError("write_gexf: styles do not cover the graph");

  DegreeVector deg = degrees(g);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://www.gexf.net/1.2draft\""
         " xmlns:viz=\"http://www.gexf.net/1.2draft/viz\" version=\"1.2\">\n"
      << "  <graph defaultedgetype=\"directed\">\n"
      << "    <attributes class=\"node\">\n"
      << "      <attribute id=\"0\" title=\"ulan_id\" type=\"string\"/>\n"
      << "      <attribute id=\"1\" title=\"birth_year\" type=\"integer\"/>\n"
      << "      <attribute id=\"2\" title=\"nationality\" type=\"string\"/>\n"
      << "      <attribute id=\"3\" title=\"role\" type=\"string\"/>\n"
      << "      <attribute id=\"4\" title=\"total_degree\" type=\"integer\"/>\n"
      << "    </attributes>\n"
      << "    <nodes>\n";
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    const EntityRecord& rec = roster.record(i);
    out << "      <node id=\"" << i << "\" label=\""
        << xml_escape(iri_tail(rec.entity_iri.value)) << "\">\n"
        << "        <attvalues>\n";
    write_attvalue(out, 0, rec.ulan_id);
    if (rec.birth_year) write_attvalue(out, 1, std::to_string(*rec.birth_year));
    if (rec.nationality) write_attvalue(out, 2, *rec.nationality);
    if (rec.role) write_attvalue(out, 3, *rec.role);
    write_attvalue(out, 4, std::to_string(deg.total[i]));
    out << "        </attvalues>\n";
    if (layout)
      out << "        <viz:position x=\"" << fmt_real(layout->x[i]) << "\" y=\""
          << fmt_real(layout->y[i]) << "\"/>\n";
    if (styles) {
      out << "        <viz:size value=\"" << fmt_real(styles->radius[i]) << "\"/>\n";
      const Rgb& c = styles->color[i];
      out << "        <viz:color r=\"" << static_cast<int>(c.r) << "\" g=\""
          << static_cast<int>(c.g) << "\" b=\"" << static_cast<int>(c.b) << "\"/>\n";
    }
    out << "      </node>\n";
  }
  out << "    </nodes>\n"
      << "    <edges>\n";
  std::uint64_t edge_id = 0;
  g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
    out << "      <edge id=\"" << edge_id++ << "\" source=\"" << u << "\" target=\"" << v
        << "\"/>\n";
  });
  out << "    </edges>\n"
      << "  </graph>\n"
      << "</gexf>\n";
  out.flush();
  check_stream(out, "write_gexf");
}

void write_dot(const LinkGraph& g, const Roster& roster, std::ostream& out) {
  if (roster.size() < g.node_count())
    throw ExportError("write_dot: roster smaller than graph");
  std::vector<std::string> names = dot_names(g, roster);
  out << "digraph links {\n";
  for (std::uint32_t i = 0; i < g.node_count(); ++i) out << "  \"" << names[i] << "\";\n";
  g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
    out << "  \"" << names[u] << "\" -> \"" << names[v] << "\";\n";
  });
  out << "}\n";
  out.flush();
  check_stream(out, "write_dot");
}

void write_csv_histogram(const Histogram& h, std::ostream& out) {
  out << "bin_start,bin_end,count,share\n";
  if (h.zero_count > 0)
    out << "0,1," << h.zero_count << ',' << fmt_real(h.zero_share()) << '\n';
  for (std::size_t i = 0; i < h.bins.size(); ++i) {
    out << fmt_real(h.bins[i].lo) << ',' << fmt_real(h.bins[i].hi) << ',' << h.bins[i].count
        << ',' << fmt_real(h.share(i)) << '\n';
  }
  out.flush();
  check_stream(out, "write_csv_histogram");
}

void write_svg(const LinkGraph& g, const Layout& layout, const NodeStyles& styles,
               std::ostream& out) {
  std::uint32_t n = g.node_count();
  if (layout.x.size() != n || styles.radius.size() != n || styles.color.size() != n)
    throw ExportError("write_svg: layout/styles do not cover the graph");

  std::string w = fmt_real(layout.params.frame_width);
  std::string h = fmt_real(layout.params.frame_height);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << w << ' '
      << h << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
    out << "  <line x1=\"" << fmt_real(layout.x[u]) << "\" y1=\"" << fmt_real(layout.y[u])
        << "\" x2=\"" << fmt_real(layout.x[v]) << "\" y2=\"" << fmt_real(layout.y[v])
        << "\" stroke=\"#808080\" stroke-opacity=\"0.15\"/>\n";
  });
  for (std::uint32_t i = 0; i < n; ++i) {
    const Rgb& c = styles.color[i];
    out << "  <circle cx=\"" << fmt_real(layout.x[i]) << "\" cy=\"" << fmt_real(layout.y[i])
        << "\" r=\"" << fmt_real(styles.radius[i]) << "\" fill=\"rgb("
        << static_cast<int>(c.r) << ',' << static_cast<int>(c.g) << ','
        << static_cast<int>(c.b) << ")\"/>\n";
  }
  out << "</svg>\n";
  out.flush();
  check_stream(out, "write_svg");
}

}  // namespace linkscope
