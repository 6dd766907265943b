#include "kohler/contrast.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kohler/kernels.hpp"

namespace kohler {

namespace {

// All pairs owned by rows [row_begin, row_end): the right-neighbour pairs
// inside each row and the down-neighbour pairs into the next row. The last
// column has no right pair and the last row no down pair.
void accumulate_rows(const GrayImage& img, int row_begin, int row_end, kernels::PairRunFn run,
                     ContrastCurve& acc)
{
    const int w = img.width();
    const int h = img.height();
    std::uint64_t* sum = acc.contrast_sum.data();
    std::uint64_t* card = acc.cardinality.data();
    for (int i = row_begin; i < row_end; ++i) {
        const std::uint8_t* row = img.row(i);
        if (w > 1)
            run(row, row + 1, static_cast<std::size_t>(w) - 1, sum, card);
        if (i + 1 < h)
            run(row, img.row(i + 1), static_cast<std::size_t>(w), sum, card);
    }
}

} // namespace

ContrastCurve fast_contrast_curve(const GrayImage& img, unsigned workers)
{
    if (workers < 1)
        throw std::invalid_argument("fast_contrast_curve: workers must be at least 1");
    const kernels::PairRunFn run = kernels::active().run;
    const int h = img.height();
    const unsigned blocks = std::min(workers, static_cast<unsigned>(h));

    if (blocks <= 1) {
        ContrastCurve curve;
        accumulate_rows(img, 0, h, run, curve);
        return curve;
    }

    std::vector<ContrastCurve> parts(blocks, ContrastCurve{});
    std::vector<std::thread> pool;
    pool.reserve(blocks);
    for (unsigned b = 0; b < blocks; ++b) {
        const int begin = static_cast<int>(static_cast<std::uint64_t>(h) * b / blocks);
        const int end = static_cast<int>(static_cast<std::uint64_t>(h) * (b + 1) / blocks);
        pool.emplace_back(accumulate_rows, std::cref(img), begin, end, run,
                          std::ref(parts[b]));
    }
    for (std::thread& worker : pool)
        worker.join();
    return merge_accumulators(parts);
}

} // namespace kohler
