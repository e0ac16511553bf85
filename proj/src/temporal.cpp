#include "linkscope/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "linkscope/error.hpp"

namespace linkscope {

SpanSet link_spans(const LinkGraph& graph, const Roster& roster) {
  SpanSet out;
  graph.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
    const EntityRecord& src = roster.record(u);
    const EntityRecord& dst = roster.record(v);
    if (!src.birth_year || !dst.birth_year) {
      ++out.unknown_count;
      return;
    }
    SpanRecord r;
    r.source_id = u;
    r.target_id = v;
    r.delta_years = *src.birth_year - *dst.birth_year;
    r.direction = r.delta_years > 0   ? SpanDirection::Past
                  : r.delta_years < 0 ? SpanDirection::Future
                                      : SpanDirection::Same;
    out.records.push_back(r);
  });
  return out;
}

Histogram span_histogram(const SpanSet& spans, double bin_width) {
  if (!(bin_width > 0.0)) throw TemporalError("span_histogram: bin_width must be positive");
  Histogram h;
  if (spans.records.empty()) return h;

  std::size_t nbins = 0;
  std::vector<std::size_t> idx(spans.records.size());
  for (std::size_t i = 0; i < spans.records.size(); ++i) {
    double span = std::abs(static_cast<double>(spans.records[i].delta_years));
    auto bin = static_cast<std::size_t>(std::floor(span / bin_width));
    idx[i] = bin;
    nbins = std::max(nbins, bin + 1);
  }
  h.bins.resize(nbins);
  for (std::size_t b = 0; b < nbins; ++b) {
    h.bins[b].lo = static_cast<double>(b) * bin_width;
    h.bins[b].hi = static_cast<double>(b + 1) * bin_width;
  }
  for (std::size_t bin : idx) ++h.bins[bin].count;
  h.total = spans.records.size();
  return h;
}

DirectionShares direction_shares(const SpanSet& spans) {
  DirectionShares d;
  d.unknown_count = spans.unknown_count;
  for (const SpanRecord& r : spans.records) {
    switch (r.direction) {
      case SpanDirection::Past: ++d.past_count; break;
      case SpanDirection::Future: ++d.future_count; break;
      case SpanDirection::Same: ++d.same_count; break;
    }
  }
  std::uint64_t directed = d.past_count + d.future_count;
  if (directed > 0) {
    d.past_share = static_cast<double>(d.past_count) / directed;
    d.future_share = static_cast<double>(d.future_count) / directed;
  }
  return d;
}

ReciprocityStats reciprocity_stats(const LinkGraph& graph) {
  ReciprocityStats s;
  graph.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
    if (graph.has_edge(v, u)) ++s.mirrored_count;
    else ++s.unique_count;
  });
  std::uint64_t m = s.mirrored_count + s.unique_count;
  if (m > 0) s.mirrored_share = static_cast<double>(s.mirrored_count) / m;
  return s;
}

std::pair<LinkGraph, RetentionStats> filter_by_span(const LinkGraph& graph,
                                                    const SpanSet& spans,
                                                    double max_years) {
  if (max_years < 0.0) throw TemporalError("filter_by_span: max_years must be non-negative");
  RetentionStats stats;
  stats.dropped_unknown = spans.unknown_count;
  std::vector<Edge> kept;
  kept.reserve(spans.records.size());
  for (const SpanRecord& r : spans.records) {
    if (std::abs(static_cast<double>(r.delta_years)) <= max_years) {
      kept.emplace_back(r.source_id, r.target_id);
      ++stats.kept_count;
    } else {
      ++stats.dropped_over_span;
    }
  }
  std::uint64_t known = stats.kept_count + stats.dropped_over_span;
  std::uint64_t all = known + stats.dropped_unknown;
  if (known > 0) stats.retention_known = static_cast<double>(stats.kept_count) / known;
  if (all > 0) stats.retention_all = static_cast<double>(stats.kept_count) / all;
  auto [filtered, tally] = build_graph(graph.node_count(), kept);
  (void)tally;  // edges come from a simple graph: nothing to dedupe
  return {std::move(filtered), stats};
}

}  // namespace linkscope
