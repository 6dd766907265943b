#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kohler/image.hpp"

namespace kohler {

/// Per-threshold accumulators: summed pair contrast and boundary pair count
/// for every candidate threshold t. contrast_sum[t] / cardinality[t] is the
/// mean boundary contrast at t (see mean_contrast in threshold.hpp).
struct ContrastCurve {
    explicit ContrastCurve(int levels = kGrayLevels)
        : contrast_sum(static_cast<std::size_t>(levels), 0),
          cardinality(static_cast<std::size_t>(levels), 0)
    {
    }

    std::vector<std::uint64_t> contrast_sum;
    std::vector<std::uint64_t> cardinality;

    int levels() const noexcept { return static_cast<int>(contrast_sum.size()); }

    friend bool operator==(const ContrastCurve&, const ContrastCurve&) = default;
};

/// Adds one neighbour pair with grey values (lo, hi), lo <= hi: every
/// threshold t in [lo, hi) gains min(hi - t, t - lo) contrast and one
/// boundary pair. Equal values straddle no threshold and contribute nothing.
void pair_contribution(std::uint8_t lo, std::uint8_t hi, ContrastCurve& acc);

/// Entrywise sum of partial curves; associative and commutative, so the
/// result does not depend on merge order. Throws std::invalid_argument on an
/// empty list or mismatched lengths.
ContrastCurve merge_accumulators(std::span<const ContrastCurve> parts);

} // namespace kohler
