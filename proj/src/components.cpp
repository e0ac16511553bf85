#include "linkscope/components.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace linkscope {

namespace {

// Renumbers raw labels by (size desc, min member asc) and fills the summary
// fields. Consumes raw labels in place.
ComponentLabeling finalize(ComponentKind kind, std::vector<std::uint32_t> raw,
                           std::uint32_t raw_count) {
  std::uint32_t n = static_cast<std::uint32_t>(raw.size());
  std::vector<std::uint32_t> size(raw_count, 0);
  std::vector<std::uint32_t> min_member(raw_count, std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t c = raw[v];
    ++size[c];
    min_member[c] = std::min(min_member[c], v);
  }

  std::vector<std::uint32_t> order(raw_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (size[a] != size[b]) return size[a] > size[b];
    return min_member[a] < min_member[b];
  });

  std::vector<std::uint32_t> remap(raw_count);
  for (std::uint32_t rank = 0; rank < raw_count; ++rank) remap[order[rank]] = rank;

  ComponentLabeling out;
  out.kind = kind;
  out.k = raw_count;
  out.label.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) out.label[v] = remap[raw[v]];
  out.sizes.resize(raw_count);
  for (std::uint32_t rank = 0; rank < raw_count; ++rank) out.sizes[rank] = size[order[rank]];
  out.giant_fraction =
      n == 0 ? 0.0 : static_cast<double>(out.sizes.empty() ? 0 : out.sizes[0]) / n;
  return out;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit UnionFind(std::uint32_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

ComponentLabeling weakly_connected_components(const LinkGraph& g) {
  std::uint32_t n = g.node_count();
  UnionFind uf(n);
  g.for_each_edge([&](std::uint32_t u, std::uint32_t v) { uf.unite(u, v); });

  std::vector<std::uint32_t> raw(n);
  std::vector<std::uint32_t> root_label(n, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t count = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t r = uf.find(v);
    if (root_label[r] == std::numeric_limits<std::uint32_t>::max()) root_label[r] = count++;
    raw[v] = root_label[r];
  }
  return finalize(ComponentKind::Weak, std::move(raw), count);
}

ComponentLabeling strongly_connected_components(const LinkGraph& g) {
  std::uint32_t n = g.node_count();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> index(n, kUnset), lowlink(n, kUnset), raw(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> scc_stack;
  struct Frame {
    std::uint32_t v;
    std::uint32_t next_child;
  };
  std::vector<Frame> call_stack;
  std::uint32_t counter = 0, components = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call_stack.push_back({root, 0});
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      std::uint32_t v = frame.v;
      if (frame.next_child == 0) {
        index[v] = lowlink[v] = counter++;
        scc_stack.push_back(v);
        on_stack[v] = true;
      }
      auto out = g.out_neighbors(v);
      if (frame.next_child < out.size()) {
        std::uint32_t w = out[frame.next_child++];
        if (index[w] == kUnset) {
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          while (true) {
            std::uint32_t w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = false;
            raw[w] = components;
            if (w == v) break;
          }
          ++components;
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          std::uint32_t parent = call_stack.back().v;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }
  return finalize(ComponentKind::Strong, std::move(raw), components);
}

ComponentSummary component_summary(const ComponentLabeling& labeling) {
  ComponentSummary s;
  s.k = labeling.k;
  s.giant_size = labeling.sizes.empty() ? 0 : labeling.sizes[0];
  s.giant_fraction = labeling.giant_fraction;
  for (std::uint32_t size : labeling.sizes) {
    if (size == 1) ++s.singleton_count;
    else s.smallest_nonsingleton = size;  // sizes are descending
  }
  return s;
}

}  // namespace linkscope
