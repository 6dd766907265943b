// AVX2 variant of the pair accumulation kernel.
//
// Stage 1 runs the column loop 32 pixels at a time: vector min/max plus an
// equality mask, so runs of equal neighbours cost one compare. Stage 2 walks
// the threshold range of each differing pair four 64-bit lanes at a time.
//
// Built unconditionally on x86-64 through the function target attribute;
// the dispatcher only hands it out after a cpuid check.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "pair_tent.hpp"

namespace kohler::kernels {

namespace {

__attribute__((target("avx2"))) inline void add_tent_avx2(int lo, int hi,
                                                          std::uint64_t* contrast_sum,
                                                          std::uint64_t* cardinality)
{
    if (hi - lo < 8) {
        detail::add_pair(lo, hi, contrast_sum, cardinality);
        return;
    }
    const __m256i vlo = _mm256_set1_epi64x(lo);
    const __m256i vhi = _mm256_set1_epi64x(hi);
    const __m256i vone = _mm256_set1_epi64x(1);
    const __m256i vstep = _mm256_set1_epi64x(4);
    __m256i vt = _mm256_add_epi64(vlo, _mm256_setr_epi64x(0, 1, 2, 3));

    int t = lo;
    for (; t + 4 <= hi; t += 4) {
        const __m256i down = _mm256_sub_epi64(vhi, vt); // hi - t
        const __m256i up = _mm256_sub_epi64(vt, vlo);   // t - lo
        const __m256i contrib = _mm256_blendv_epi8(down, up, _mm256_cmpgt_epi64(down, up));
        __m256i* sum_ptr = reinterpret_cast<__m256i*>(contrast_sum + t);
        __m256i* card_ptr = reinterpret_cast<__m256i*>(cardinality + t);
        _mm256_storeu_si256(sum_ptr, _mm256_add_epi64(_mm256_loadu_si256(sum_ptr), contrib));
        _mm256_storeu_si256(card_ptr, _mm256_add_epi64(_mm256_loadu_si256(card_ptr), vone));
        vt = _mm256_add_epi64(vt, vstep);
    }
    for (; t < hi; ++t) {
        contrast_sum[t] += static_cast<std::uint64_t>(std::min(hi - t, t - lo));
        cardinality[t] += 1;
    }
}

} // namespace

__attribute__((target("avx2"))) void pair_run_avx2(const std::uint8_t* cur,
                                                   const std::uint8_t* nbr, std::size_t n,
                                                   std::uint64_t* contrast_sum,
                                                   std::uint64_t* cardinality)
{
    std::size_t j = 0;
    for (; j + 32 <= n; j += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cur + j));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(nbr + j));
        const std::uint32_t differs =
            ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, b)));
        if (differs == 0)
            continue;
        alignas(32) std::uint8_t lo[32];
        alignas(32) std::uint8_t hi[32];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lo), _mm256_min_epu8(a, b));
        _mm256_store_si256(reinterpret_cast<__m256i*>(hi), _mm256_max_epu8(a, b));
        std::uint32_t rest = differs;
        while (rest != 0) {
            const int k = __builtin_ctz(rest);
            rest &= rest - 1;
            add_tent_avx2(lo[k], hi[k], contrast_sum, cardinality);
        }
    }
    for (; j < n; ++j) {
        const std::uint8_t a = cur[j];
        const std::uint8_t b = nbr[j];
        if (a == b)
            continue;
        detail::add_pair(std::min(a, b), std::max(a, b), contrast_sum, cardinality);
    }
}

} // namespace kohler::kernels

#endif // x86
