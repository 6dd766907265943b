#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace kohler::kernels {

// Accumulates the straddling pairs of two parallel pixel runs into the
// per-threshold arrays: for each j, the pair (cur[j], nbr[j]) adds
// min(maxi - t, t - mini) to contrast_sum[t] and 1 to cardinality[t] for
// every t in [mini, maxi). All variants produce bit-identical results; the
// SIMD ones are equivalence-tested against the scalar reference.
using PairRunFn = void (*)(const std::uint8_t* cur, const std::uint8_t* nbr,
                           std::size_t n, std::uint64_t* contrast_sum,
                           std::uint64_t* cardinality);

struct PairKernel {
    std::string_view name;
    PairRunFn run;
};

/// Kernels usable on this host; index 0 is always the scalar reference.
std::span<const PairKernel> available();

/// Kernel the fast path dispatches to: the best available one, or the one
/// named by the KOHLER_KERNEL environment variable when set.
const PairKernel& active();

/// Looks up a kernel by name ("scalar", "avx2", "neon"); nullptr when this
/// host does not provide it.
const PairKernel* find(std::string_view name);

} // namespace kohler::kernels
