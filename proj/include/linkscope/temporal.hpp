#pragma once

#include <cstdint>
#include <vector>

#include "linkscope/graph.hpp"
#include "linkscope/histogram.hpp"
#include "linkscope/roster.hpp"

namespace linkscope {

// Reciprocal-link share reported for cross-domain Wikipedia link studies;
// emitted alongside the measured share for comparison.
inline constexpr double kCrossDomainReciprocityReference = 0.087;

enum class SpanDirection { Past, Future, Same };

// Temporal annotation of one directed edge. delta_years is
// birth_year(source) - birth_year(target): positive deltas point into the
// past (the target was born earlier).
struct SpanRecord {
  std::uint32_t source_id = 0;
  std::uint32_t target_id = 0;
  std::int32_t delta_years = 0;
  SpanDirection direction = SpanDirection::Same;
};

struct SpanSet {
  std::vector<SpanRecord> records;
  // Edges with at least one endpoint missing a birth year.
  std::uint64_t unknown_count = 0;
};

struct DirectionShares {
  std::uint64_t past_count = 0;
  std::uint64_t future_count = 0;
  std::uint64_t same_count = 0;
  std::uint64_t unknown_count = 0;
  // Computed over past + future only; 0 when that denominator is empty.
  double past_share = 0.0;
  double future_share = 0.0;
};

struct ReciprocityStats {
  std::uint64_t mirrored_count = 0;  // directed edges whose reverse exists
  std::uint64_t unique_count = 0;
  double mirrored_share = 0.0;  // mirrored / m, 0 on the empty graph
};

struct RetentionStats {
  std::uint64_t kept_count = 0;
  std::uint64_t dropped_over_span = 0;
  std::uint64_t dropped_unknown = 0;
  // Share of known-span edges kept, and share of all edges kept.
  double retention_known = 0.0;
  double retention_all = 0.0;
};

// Annotates every edge whose endpoints both carry birth years; the rest are
// tallied as unknown. Node ids must index the roster.
SpanSet link_spans(const LinkGraph& graph, const Roster& roster);

// Histogram of |delta_years| over half-open bins [i*w, (i+1)*w), contiguous
// from 0 through the largest observed span. The boundary value w lands in
// the second bin. Throws TemporalError if bin_width <= 0.
Histogram span_histogram(const SpanSet& spans, double bin_width = 37.5);

// Past/Future/Same counts; shares computed over past+future only.
DirectionShares direction_shares(const SpanSet& spans);

// An edge (u,v) is mirrored iff (v,u) is also present. mirrored_count is
// necessarily even.
ReciprocityStats reciprocity_stats(const LinkGraph& graph);

// Keeps edges with known span and |delta_years| <= max_years; unknown-span
// edges are dropped and tallied. Node set is unchanged. Throws
// TemporalError if max_years < 0.
std::pair<LinkGraph, RetentionStats> filter_by_span(const LinkGraph& graph,
                                                    const SpanSet& spans,
                                                    double max_years = 75.0);

}  // namespace linkscope
