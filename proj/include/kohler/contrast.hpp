#pragma once

#include "kohler/curve.hpp"
#include "kohler/image.hpp"

namespace kohler {

/// Reference implementation: one full scan of ordered 4-neighbour pairs per
/// threshold, straight from the definition. Deliberately naive; it is the
/// correctness oracle for the fast path and shares no code with it.
ContrastCurve direct_contrast_curve(const GrayImage& img);

/// Single-pass implementation: each unordered right/down neighbour pair is
/// accumulated over its whole threshold range at once. Rows are split into
/// contiguous blocks over `workers` threads, each thread owning private
/// accumulators that are merged by summation at the end. The result is
/// bit-identical to direct_contrast_curve for every worker count.
ContrastCurve fast_contrast_curve(const GrayImage& img, unsigned workers = 1);

} // namespace kohler
