#include "kohler/contrast.hpp"

#include <algorithm>

namespace kohler {

// One full image pass per threshold, scanning ordered 4-neighbour pairs
// exactly as the definition reads. Kept naive on purpose: this is the oracle
// the fast path is validated against, so it must not share its kernels.
ContrastCurve direct_contrast_curve(const GrayImage& img)
{
    ContrastCurve curve;
    const int w = img.width();
    const int h = img.height();
    static constexpr int dx[4] = {1, -1, 0, 0};
    static constexpr int dy[4] = {0, 0, 1, -1};

    for (int t = 0; t < kGrayLevels; ++t) {
        std::uint64_t sum = 0;
        std::uint64_t count = 0;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const int v0 = img(x, y);
                if (v0 > t)
                    continue; // x0 must lie in the lower class
                for (int k = 0; k < 4; ++k) {
                    const int x1 = x + dx[k];
                    const int y1 = y + dy[k];
                    if (x1 < 0 || x1 >= w || y1 < 0 || y1 >= h)
                        continue;
                    const int v1 = img(x1, y1);
                    if (v1 > t) {
                        count += 1;
                        sum += static_cast<std::uint64_t>(std::min(v1 - t, t - v0));
                    }
                }
            }
        }
        curve.contrast_sum[t] = sum;
        curve.cardinality[t] = count;
    }
    return curve;
}

} // namespace kohler
