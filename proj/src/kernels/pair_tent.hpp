#pragma once

#include <algorithm>
#include <cstdint>

namespace kohler::detail {

// Scalar tent update for one unordered pair: every threshold in [lo, hi)
// gains the smaller of the two contrast steps it cuts, plus one boundary
// count. Requires lo <= hi; equal values fall through without touching
// anything.
inline void add_pair(int lo, int hi, std::uint64_t* contrast_sum, std::uint64_t* cardinality)
{
    for (int t = lo; t < hi; ++t) {
        contrast_sum[t] += static_cast<std::uint64_t>(std::min(hi - t, t - lo));
        cardinality[t] += 1;
    }
}

} // namespace kohler::detail
