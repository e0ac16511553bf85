#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linkscope/graph.hpp"
#include "linkscope/roster.hpp"

namespace linkscope {

struct LayoutParams {
  std::uint32_t iterations = 500;
  double frame_width = 10000.0;
  double frame_height = 10000.0;
  double theta = 1.2;  // Barnes-Hut opening angle
  std::uint64_t seed = 0;
};

struct Layout {
  std::vector<double> x;
  std::vector<double> y;
  LayoutParams params;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kGrey{128, 128, 128};

// Fixed categorical palette: 20 evenly spaced hues, alternating
// saturation/value so neighbours stay distinguishable. Literal values keep
// renders byte-reproducible.
inline constexpr std::array<Rgb, 20> kPalette{{
    {217, 65, 65},   {242, 149, 109}, {217, 156, 65},  {242, 229, 109},
    {186, 217, 65},  {176, 242, 109}, {95, 217, 65},   {109, 242, 122},
    {65, 217, 126},  {109, 242, 202}, {65, 217, 217},  {109, 202, 242},
    {65, 126, 217},  {109, 122, 242}, {95, 65, 217},   {176, 109, 242},
    {186, 65, 217},  {242, 109, 229}, {217, 65, 156},  {242, 109, 149},
}};

struct LegendEntry {
  std::string label;
  Rgb color;
  std::uint64_t count = 0;
};

enum class ColorAttribute { Nationality, Role };

struct ColorAssignment {
  std::vector<Rgb> node_color;        // indexed by node id
  std::vector<LegendEntry> legend;    // one entry per category, rank order,
                                      // plus a trailing grey bucket for
                                      // missing values
};

// Seeded Fruchterman-Reingold with Barnes-Hut repulsion. Initial positions
// are uniform in the frame from a seeded mt19937_64; each iteration applies
// k^2/d repulsion (quadtree-approximated at opening angle theta), d^2/k
// attraction per directed edge with k = sqrt(frame_area/n), caps node
// displacement by a temperature decaying linearly from frame_width/10 to
// frame_width/5000, and clamps to the frame. Deterministic for fixed
// (graph, params). Throws LayoutError on invalid params or if a non-finite
// coordinate appears.
Layout fruchterman_reingold(const LinkGraph& graph, const LayoutParams& params);

// radius = r_min + (r_max - r_min) * sqrt(total_degree / max_total_degree);
// all radii are r_min when every degree is zero. Throws LayoutError unless
// r_min < r_max and r_min > 0.
std::vector<double> node_sizes(const DegreeVector& degrees, double r_min = 2.0,
                               double r_max = 40.0);

// Categories ranked by descending frequency (ties lexicographic); the top
// palette_size get kPalette entries in rank order, the rest and missing
// values get grey. palette_size above kPalette.size() is clamped.
ColorAssignment assign_colors(const Roster& roster,
                              ColorAttribute attribute = ColorAttribute::Nationality,
                              std::size_t palette_size = 20);

}  // namespace linkscope
