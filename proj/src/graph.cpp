#include "linkscope/graph.hpp"

#include <algorithm>

#include "linkscope/error.hpp"

namespace linkscope {

bool LinkGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> LinkGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for_each_edge([&](std::uint32_t u, std::uint32_t v) { out.emplace_back(u, v); });
  return out;
}

// Takes edges that are already unique, self-loop-free and in-range.
LinkGraph make_graph_from_unique_sorted(std::uint32_t n, std::vector<Edge>&& edges) {
  LinkGraph g;
  g.n_ = n;
  g.m_ = edges.size();

  g.fwd_off_.assign(n + 1, 0);
  g.rev_off_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.fwd_off_[u + 1];
    ++g.rev_off_[v + 1];
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    g.fwd_off_[i + 1] += g.fwd_off_[i];
    g.rev_off_[i + 1] += g.rev_off_[i];
  }

  g.fwd_.resize(g.m_);
  g.rev_.resize(g.m_);
  std::vector<std::uint64_t> fpos(g.fwd_off_.begin(), g.fwd_off_.end() - 1);
  std::vector<std::uint64_t> rpos(g.rev_off_.begin(), g.rev_off_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.fwd_[fpos[u]++] = v;
    g.rev_[rpos[v]++] = u;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    std::sort(g.fwd_.begin() + static_cast<std::ptrdiff_t>(g.fwd_off_[i]),
              g.fwd_.begin() + static_cast<std::ptrdiff_t>(g.fwd_off_[i + 1]));
    std::sort(g.rev_.begin() + static_cast<std::ptrdiff_t>(g.rev_off_[i]),
              g.rev_.begin() + static_cast<std::ptrdiff_t>(g.rev_off_[i + 1]));
  }
  return g;
}

LinkGraph LinkGraph::transposed() const {
  LinkGraph t;
  t.n_ = n_;
  t.m_ = m_;
  t.fwd_off_ = rev_off_;
  t.fwd_ = rev_;
  t.rev_off_ = fwd_off_;
  t.rev_ = fwd_;
  return t;
}

std::pair<LinkGraph, BuildTally> build_graph(std::uint32_t n, std::span<const Edge> raw_edges,
                                             std::uint64_t off_roster_dropped) {
  BuildTally tally;
  tally.off_roster_dropped = off_roster_dropped;

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const auto& [u, v] : raw_edges) {
    if (u >= n || v >= n)
      throw GraphError("edge id out of range: (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") with n=" + std::to_string(n));
    if (u == v) {
      ++tally.self_loops_dropped;
      continue;
    }
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  tally.duplicates_dropped = static_cast<std::uint64_t>(edges.end() - last);
  edges.erase(last, edges.end());

  return {make_graph_from_unique_sorted(n, std::move(edges)), tally};
}

DegreeVector degrees(const LinkGraph& g) {
  std::uint32_t n = g.node_count();
  DegreeVector d;
  d.in.resize(n);
  d.out.resize(n);
  d.total.resize(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    d.in[u] = static_cast<std::uint32_t>(g.in_neighbors(u).size());
    d.out[u] = static_cast<std::uint32_t>(g.out_neighbors(u).size());
    d.total[u] = d.in[u] + d.out[u];
  }
  return d;
}

Histogram degree_histogram_linear(std::span<const std::uint32_t> samples) {
  Histogram h;
  std::vector<std::uint32_t> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::uint32_t value = sorted[i];
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == value) ++j;
    std::uint64_t count = j - i;
    if (value == 0) h.zero_count = count;
    else h.bins.push_back({static_cast<double>(value), static_cast<double>(value) + 1, count});
    i = j;
  }
  h.total = samples.size();
  return h;
}

Histogram degree_histogram_log(std::span<const std::uint32_t> samples, double ratio) {
  if (!(ratio > 1.0)) throw GraphError("log binning ratio must be > 1");
  Histogram h;
  h.total = samples.size();
  std::uint32_t max_sample = 0;
  for (std::uint32_t s : samples) {
    if (s == 0) ++h.zero_count;
    max_sample = std::max(max_sample, s);
  }
  if (max_sample == 0) return h;

  // Geometric lattice of bin edges 1, r, r^2, ... covering max_sample.
  std::vector<double> edges{1.0};
  while (edges.back() <= static_cast<double>(max_sample)) edges.push_back(edges.back() * ratio);
  h.bins.resize(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) h.bins[i] = {edges[i], edges[i + 1], 0};
  for (std::uint32_t s : samples) {
    if (s == 0) continue;
    auto it = std::upper_bound(edges.begin(), edges.end(), static_cast<double>(s));
    ++h.bins[static_cast<std::size_t>(it - edges.begin()) - 1].count;
  }
  return h;
}

}  // namespace linkscope
