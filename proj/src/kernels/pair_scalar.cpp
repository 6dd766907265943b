// Scalar reference kernel. The SIMD variants are checked bit-for-bit
// against this one.

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "pair_tent.hpp"

namespace kohler::kernels {

void pair_run_scalar(const std::uint8_t* cur, const std::uint8_t* nbr, std::size_t n,
                     std::uint64_t* contrast_sum, std::uint64_t* cardinality)
{
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint8_t a = cur[j];
        const std::uint8_t b = nbr[j];
        if (a == b)
            continue;
        detail::add_pair(std::min(a, b), std::max(a, b), contrast_sum, cardinality);
    }
}

} // namespace kohler::kernels
