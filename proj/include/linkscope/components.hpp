#pragma once

// Weakly and strongly connected components with deterministic renumbering:
// component ids ordered by descending size, ties by smallest member node id,
// so reports and exports are reproducible byte-for-byte.

#include <cstdint>
#include <optional>
#include <vector>

#include "linkscope/graph.hpp"

namespace linkscope {

enum class ComponentKind { Weak, Strong };

struct ComponentLabeling {
  ComponentKind kind = ComponentKind::Weak;
  std::vector<std::uint32_t> label;  // per-node component id in 0..k-1
  std::uint32_t k = 0;
  std::vector<std::uint32_t> sizes;  // per-component node counts, descending
  double giant_fraction = 0;         // sizes[0] / n, 0 when n == 0
};

// Union-find (path compression + union by size) over the undirected view.
ComponentLabeling weakly_connected_components(const LinkGraph& g);

// Iterative Tarjan with an explicit stack; survives path-shaped graphs of
// 1e5+ nodes.
ComponentLabeling strongly_connected_components(const LinkGraph& g);

struct ComponentSummary {
  std::uint32_t k = 0;
  std::uint32_t giant_size = 0;
  double giant_fraction = 0;
  std::optional<std::uint32_t> smallest_nonsingleton;
  std::uint32_t singleton_count = 0;
};

ComponentSummary component_summary(const ComponentLabeling& labeling);

}  // namespace linkscope
