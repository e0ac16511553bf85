#pragma once

#include <cstdint>
#include <vector>

namespace linkscope {

// Half-open bin [lo, hi).
struct HistogramBin {
  double lo = 0;
  double hi = 0;
  std::uint64_t count = 0;
};

struct Histogram {
  std::vector<HistogramBin> bins;
  // Samples reported outside the binning scheme (degree-0 nodes); 0 for
  // span histograms, whose first bin starts at 0.
  std::uint64_t zero_count = 0;
  std::uint64_t total = 0;  // sum of bin counts + zero_count

  double share(std::size_t i) const {
    return total == 0 ? 0.0 : static_cast<double>(bins[i].count) / static_cast<double>(total);
  }
  double zero_share() const {
    return total == 0 ? 0.0 : static_cast<double>(zero_count) / static_cast<double>(total);
  }
};

}  // namespace linkscope
