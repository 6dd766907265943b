// NEON variant: vectorised column min/max and equal-run skipping, scalar
// threshold loop per differing pair.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>
#include <cstdint>

#include "pair_tent.hpp"

namespace kohler::kernels {

void pair_run_neon(const std::uint8_t* cur, const std::uint8_t* nbr, std::size_t n,
                   std::uint64_t* contrast_sum, std::uint64_t* cardinality)
{
    std::size_t j = 0;
    for (; j + 16 <= n; j += 16) {
        const uint8x16_t a = vld1q_u8(cur + j);
        const uint8x16_t b = vld1q_u8(nbr + j);
        if (vminvq_u8(vceqq_u8(a, b)) == 0xFF)
            continue; // whole chunk equal
        std::uint8_t lo[16];
        std::uint8_t hi[16];
        vst1q_u8(lo, vminq_u8(a, b));
        vst1q_u8(hi, vmaxq_u8(a, b));
        for (int k = 0; k < 16; ++k)
            if (lo[k] != hi[k])
                detail::add_pair(lo[k], hi[k], contrast_sum, cardinality);
    }
    for (; j < n; ++j) {
        const std::uint8_t a = cur[j];
        const std::uint8_t b = nbr[j];
        if (a == b)
            continue;
        detail::add_pair(a < b ? a : b, a < b ? b : a, contrast_sum, cardinality);
    }
}

} // namespace kohler::kernels

#endif // aarch64
