#include "kohler/curve.hpp"

#include <cassert>
#include <stdexcept>

#include "kernels/pair_tent.hpp"

namespace kohler {

void pair_contribution(std::uint8_t lo, std::uint8_t hi, ContrastCurve& acc)
{
    assert(lo <= hi);
    detail::add_pair(lo, hi, acc.contrast_sum.data(), acc.cardinality.data());
}

ContrastCurve merge_accumulators(std::span<const ContrastCurve> parts)
{
    if (parts.empty())
        throw std::invalid_argument("merge_accumulators: no partial results");
    ContrastCurve total(parts.front().levels());
    for (const ContrastCurve& part : parts) {
        if (part.levels() != total.levels())
            throw std::invalid_argument("merge_accumulators: mismatched curve lengths");
        for (int t = 0; t < total.levels(); ++t) {
            total.contrast_sum[t] += part.contrast_sum[t];
            total.cardinality[t] += part.cardinality[t];
        }
    }
    return total;
}

} // namespace kohler
