#include "linkscope/layout.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

constexpr std::size_t kBucketCap = 8;
constexpr int kMaxDepth = 32;

// Region quadtree over the current positions. Leaves own contiguous ranges
// of `order`; internal nodes carry subtree count and center of mass.
struct QuadTree {
  struct Cell {
    double cx, cy, half;
    double com_x = 0.0, com_y = 0.0;
    std::uint32_t count = 0;
    std::int32_t child[4] = {-1, -1, -1, -1};
    std::uint32_t bucket_begin = 0, bucket_end = 0;
    bool leaf = false;
  };

  std::vector<Cell> cells;
  std::vector<std::uint32_t> order;
  const std::vector<double>& px;
  const std::vector<double>& py;

  QuadTree(const std::vector<double>& x, const std::vector<double>& y, double w, double h)
      : px(x), py(y) {
    std::uint32_t n = static_cast<std::uint32_t>(px.size());
    order.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    cells.reserve(n / 2 + 8);
    double side = std::max(w, h);
    build(0, n, w / 2.0, h / 2.0, side / 2.0, 0);
  }

  std::int32_t build(std::uint32_t b, std::uint32_t e, double cx, double cy, double half,
                     int depth) {
    if (b == e) return -1;
    std::int32_t idx = static_cast<std::int32_t>(cells.size());
    cells.push_back({cx, cy, half});
    Cell c;
    c.cx = cx;
    c.cy = cy;
    c.half = half;
    c.count = e - b;
    if (c.count <= kBucketCap || depth >= kMaxDepth) {
      c.leaf = true;
      c.bucket_begin = b;
      c.bucket_end = e;
      double sx = 0.0, sy = 0.0;
      for (std::uint32_t t = b; t < e; ++t) {
        sx += px[order[t]];
        sy += py[order[t]];
      }
      c.com_x = sx / c.count;
      c.com_y = sy / c.count;
      cells[idx] = c;
      return idx;
    }
    auto first = order.begin();
    auto mid_y = std::partition(first + b, first + e,
                                [&](std::uint32_t i) { return py[i] < cy; });
    auto mid_x0 = std::partition(first + b, mid_y,
                                 [&](std::uint32_t i) { return px[i] < cx; });
    auto mid_x1 = std::partition(mid_y, first + e,
                                 [&](std::uint32_t i) { return px[i] < cx; });
    std::uint32_t s0 = b;
    std::uint32_t s1 = static_cast<std::uint32_t>(mid_x0 - first);
    std::uint32_t s2 = static_cast<std::uint32_t>(mid_y - first);
    std::uint32_t s3 = static_cast<std::uint32_t>(mid_x1 - first);
    double q = half / 2.0;
    c.child[0] = build(s0, s1, cx - q, cy - q, q, depth + 1);
    c.child[1] = build(s1, s2, cx + q, cy - q, q, depth + 1);
    c.child[2] = build(s2, s3, cx - q, cy + q, q, depth + 1);
    c.child[3] = build(s3, e, cx + q, cy + q, q, depth + 1);
    double wx = 0.0, wy = 0.0;
    for (std::int32_t ch : c.child) {
      if (ch < 0) continue;
      wx += cells[ch].com_x * cells[ch].count;
      wy += cells[ch].com_y * cells[ch].count;
    }
    c.com_x = wx / c.count;
    c.com_y = wy / c.count;
    cells[idx] = c;
    return idx;
  }
};

// Deterministic, antisymmetric unit direction used when two points coincide.
void jitter_direction(std::uint32_t i, std::uint32_t j, double& ux, double& uy) {
  std::uint32_t lo = std::min(i, j), hi = std::max(i, j);
  std::uint32_t h = lo * 2654435761u ^ hi * 40503u;
  double ang = static_cast<double>(h % 6283u) / 1000.0;
  ux = std::cos(ang);
  uy = std::sin(ang);
  if (i > j) {
    ux = -ux;
    uy = -uy;
  }
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Layout fruchterman_reingold(const LinkGraph& graph, const LayoutParams& params) {
  if (params.iterations < 1) throw LayoutError("layout: iterations must be >= 1");
  if (!(params.frame_width > 0.0) || !(params.frame_height > 0.0))
    throw LayoutError("layout: frame dimensions must be positive");
  if (!(params.theta >= 0.0)) throw LayoutError("layout: theta must be non-negative");

  Layout layout;
  layout.params = params;
  std::uint32_t n = graph.node_count();
  if (n == 0) return layout;

  double w = params.frame_width, h = params.frame_height;
  std::mt19937_64 rng(params.seed);
  layout.x.resize(n);
  layout.y.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    layout.x[i] = unit_double(rng) * w;
    layout.y[i] = unit_double(rng) * h;
  }

  double k = std::sqrt(w * h / n);
  double k2 = k * k;
  double t_start = w / 10.0, t_end = w / 5000.0;
  std::vector<double> fx(n), fy(n);
  std::vector<std::int32_t> stack;

  for (std::uint32_t iter = 0; iter < params.iterations; ++iter) {
    double t = params.iterations == 1
                   ? t_start
                   : t_start + (t_end - t_start) * iter / (params.iterations - 1);
    std::fill(fx.begin(), fx.end(), 0.0);
    std::fill(fy.begin(), fy.end(), 0.0);

    QuadTree tree(layout.x, layout.y, w, h);
    for (std::uint32_t i = 0; i < n; ++i) {
      stack.clear();
      stack.push_back(0);
      while (!stack.empty()) {
        const QuadTree::Cell& c = tree.cells[stack.back()];
        stack.pop_back();
        if (c.leaf) {
          for (std::uint32_t t2 = c.bucket_begin; t2 < c.bucket_end; ++t2) {
            std::uint32_t j = tree.order[t2];
            if (j == i) continue;
            double dx = layout.x[i] - layout.x[j];
            double dy = layout.y[i] - layout.y[j];
            double d2 = dx * dx + dy * dy;
            if (d2 < 1e-18) {
              double ux, uy;
              jitter_direction(i, j, ux, uy);
              dx = ux * 1e-6;
              dy = uy * 1e-6;
              d2 = 1e-12;
            }
            fx[i] += dx * k2 / d2;
            fy[i] += dy * k2 / d2;
          }
          continue;
        }
        double dx = layout.x[i] - c.com_x;
        double dy = layout.y[i] - c.com_y;
        double d2 = dx * dx + dy * dy;
        // Opening test against the gap to the cell's square rather than the
        // COM distance, so every member is provably at least `gap` away.
        double gx = std::max(0.0, std::abs(layout.x[i] - c.cx) - c.half);
        double gy = std::max(0.0, std::abs(layout.y[i] - c.cy) - c.half);
        double gap = std::hypot(gx, gy);
        if (gap > 0.0 && 2.0 * c.half / gap < params.theta) {
          fx[i] += dx * c.count * k2 / d2;
          fy[i] += dy * c.count * k2 / d2;
        } else {
          for (std::int32_t ch : c.child)
            if (ch >= 0) stack.push_back(ch);
        }
      }
    }

    graph.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
      double dx = layout.x[u] - layout.x[v];
      double dy = layout.y[u] - layout.y[v];
      double d = std::sqrt(dx * dx + dy * dy);
      if (d <= 0.0) return;
      fx[u] -= dx * d / k;
      fy[u] -= dy * d / k;
      fx[v] += dx * d / k;
      fy[v] += dy * d / k;
    });

    for (std::uint32_t i = 0; i < n; ++i) {
      double len = std::sqrt(fx[i] * fx[i] + fy[i] * fy[i]);
      if (len > 0.0) {
        double step = std::min(len, t);
        layout.x[i] += fx[i] / len * step;
        layout.y[i] += fy[i] / len * step;
      }
      layout.x[i] = std::clamp(layout.x[i], 0.0, w);
      layout.y[i] = std::clamp(layout.y[i], 0.0, h);
      if (!std::isfinite(layout.x[i]) || !std::isfinite(layout.y[i]))
        throw LayoutError("layout: non-finite coordinate");
    }
  }
  return layout;
}

std::vector<double> node_sizes(const DegreeVector& degrees, double r_min, double r_max) {
  if (!(r_min > 0.0) || !(r_min < r_max))
    throw LayoutError("node_sizes: require 0 < r_min < r_max");
  std::uint64_t max_total = 0;
  for (std::uint64_t d : degrees.total) max_total = std::max(max_total, d);
  std::vector<double> radius(degrees.total.size(), r_min);
  if (max_total == 0) return radius;
  for (std::size_t i = 0; i < radius.size(); ++i)
    radius[i] = r_min + (r_max - r_min) *
                            std::sqrt(static_cast<double>(degrees.total[i]) / max_total);
  return radius;
}

ColorAssignment assign_colors(const Roster& roster, ColorAttribute attribute,
                              std::size_t palette_size) {
  palette_size = std::min(palette_size, kPalette.size());
  auto value_of = [&](const EntityRecord& rec) -> const std::optional<std::string>& {
    return attribute == ColorAttribute::Nationality ? rec.nationality : rec.role;
  };

  std::map<std::string, std::uint64_t> freq;
  std::uint64_t missing = 0;
  for (const EntityRecord& rec : roster.records()) {
    const auto& v = value_of(rec);
    if (v) ++freq[*v];
    else ++missing;
  }

  std::vector<std::pair<std::string, std::uint64_t>> ranked(freq.begin(), freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  ColorAssignment out;
  std::map<std::string, Rgb> color_of;
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    Rgb c = r < palette_size ? kPalette[r] : kGrey;
    color_of[ranked[r].first] = c;
    out.legend.push_back({ranked[r].first, c, ranked[r].second});
  }
  out.legend.push_back({"(unknown)", kGrey, missing});

  out.node_color.resize(roster.size(), kGrey);
  for (std::uint32_t i = 0; i < roster.size(); ++i) {
    const auto& v = value_of(roster.record(i));
    if (v) out.node_color[i] = color_of[*v];
  }
  return out;
}

}  // namespace linkscope
