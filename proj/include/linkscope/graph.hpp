#pragma once

// Entity-resolved simple directed graph with dense node ids, stored as
// forward + reverse CSR for cache-friendly traversal. Immutable after
// construction; all analyses may run concurrently over one graph.

#include <cstdint>
#include <span>
#include <vector>

#include "linkscope/histogram.hpp"
#include "linkscope/ntriples.hpp"

namespace linkscope {

class LinkGraph {
 public:
  LinkGraph() = default;

  std::uint32_t node_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::span<const std::uint32_t> out_neighbors(std::uint32_t u) const {
    return {fwd_.data() + fwd_off_[u], fwd_.data() + fwd_off_[u + 1]};
  }
  std::span<const std::uint32_t> in_neighbors(std::uint32_t u) const {
    return {rev_.data() + rev_off_[u], rev_.data() + rev_off_[u + 1]};
  }

  // Binary search over the sorted forward adjacency.
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  // Visits edges in ascending (source, target) order.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (std::uint32_t u = 0; u < n_; ++u)
      for (std::uint32_t v : out_neighbors(u)) f(u, v);
  }

  std::vector<Edge> edges() const;
  LinkGraph transposed() const;

 private:
  friend LinkGraph make_graph_from_unique_sorted(std::uint32_t n, std::vector<Edge>&& edges);

  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> fwd_off_{0}, rev_off_{0};  // size n+1
  std::vector<std::uint32_t> fwd_, rev_;
};

struct BuildTally {
  std::uint64_t duplicates_dropped = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t off_roster_dropped = 0;  // carried through from edge extraction
};

// Deduplicates, drops self-loops, sorts adjacency, builds the transpose.
// Isolated nodes remain as degree-0 nodes. Throws GraphError when an edge id
// is >= n.
std::pair<LinkGraph, BuildTally> build_graph(std::uint32_t n, std::span<const Edge> raw_edges,
                                             std::uint64_t off_roster_dropped = 0);

struct DegreeVector {
  std::vector<std::uint32_t> in, out, total;  // total = in + out
};

DegreeVector degrees(const LinkGraph& g);

// Count per exact degree value; degree-0 samples go to the zero bucket.
Histogram degree_histogram_linear(std::span<const std::uint32_t> samples);

// Multiplicative bins [b, b*ratio) starting at 1, contiguous up to the
// largest sample; degree-0 samples go to the zero bucket. ratio must be > 1.
Histogram degree_histogram_log(std::span<const std::uint32_t> samples, double ratio);

}  // namespace linkscope
