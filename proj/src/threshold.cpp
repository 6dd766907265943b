#include "kohler/threshold.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace kohler {

MeanContrastCurve mean_contrast(const ContrastCurve& curve)
{
    const int m = curve.levels();
    MeanContrastCurve mc;
    mc.values.assign(static_cast<std::size_t>(m), 0.0);
    mc.defined.assign(static_cast<std::size_t>(m), false);
    for (int t = 0; t < m; ++t) {
        if (curve.cardinality[t] > 0) {
            mc.values[t] = static_cast<double>(curve.contrast_sum[t]) /
                           static_cast<double>(curve.cardinality[t]);
            mc.defined[t] = true;
        }
    }
    return mc;
}

int optimal_threshold(const MeanContrastCurve& mc)
{
    int best = -1;
    for (int t = 0; t < mc.levels(); ++t) {
        if (!mc.defined[t])
            continue;
        if (best < 0 || mc.values[t] > mc.values[best])
            best = t; // strict > keeps the smallest t on ties
    }
    if (best < 0)
        throw NoBoundaryError{};
    return best;
}

ThresholdSet top_k_local_maxima(const MeanContrastCurve& mc, int k)
{
    if (k < 1)
        throw std::invalid_argument("top_k_local_maxima: k must be at least 1");

    // Collapse the defined subsequence into runs of equal value. A run is a
    // local maximum when strictly above both neighbouring runs; the curve
    // ends compare one-sided. Each plateau contributes its smallest t.
    struct Run {
        double value;
        int first_t;
    };
    std::vector<Run> runs;
    for (int t = 0; t < mc.levels(); ++t) {
        if (!mc.defined[t])
            continue;
        if (runs.empty() || mc.values[t] != runs.back().value)
            runs.push_back({mc.values[t], t});
    }
    if (runs.empty())
        throw NoBoundaryError{};

    std::vector<Run> maxima;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const bool above_prev = (r == 0) || runs[r].value > runs[r - 1].value;
        const bool above_next = (r + 1 == runs.size()) || runs[r].value > runs[r + 1].value;
        if (above_prev && above_next)
            maxima.push_back(runs[r]);
    }

    std::sort(maxima.begin(), maxima.end(), [](const Run& a, const Run& b) {
        if (a.value != b.value)
            return a.value > b.value;
        return a.first_t < b.first_t;
    });
    maxima.resize(std::min(maxima.size(), static_cast<std::size_t>(k)));

    ThresholdSet ts;
    ts.thresholds.reserve(maxima.size());
    for (const Run& run : maxima)
        ts.thresholds.push_back(run.first_t);
    std::sort(ts.thresholds.begin(), ts.thresholds.end());
    return ts;
}

LabelImage classify(const GrayImage& img, const ThresholdSet& ts)
{
    // label = number of thresholds strictly below the value; precomputed per
    // grey level.
    std::array<std::uint8_t, kGrayLevels> label_of{};
    for (int v = 0; v < kGrayLevels; ++v) {
        const auto first_ge =
            std::lower_bound(ts.thresholds.begin(), ts.thresholds.end(), v);
        label_of[v] = static_cast<std::uint8_t>(first_ge - ts.thresholds.begin());
    }

    LabelImage out{img.width(), img.height(), {}};
    out.labels.resize(img.pixel_count());
    const auto px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        out.labels[i] = label_of[px[i]];
    return out;
}

GrayImage quantize(const GrayImage& img, const ThresholdSet& ts)
{
    const LabelImage labels = classify(img, ts);
    const std::size_t classes = ts.thresholds.size() + 1;

    std::vector<std::uint64_t> sum(classes, 0);
    std::vector<std::uint64_t> count(classes, 0);
    const auto px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        sum[labels.labels[i]] += px[i];
        count[labels.labels[i]] += 1;
    }

    std::vector<std::uint8_t> mean(classes, 0);
    for (std::size_t c = 0; c < classes; ++c)
        if (count[c] > 0) // round half up, in integers
            mean[c] = static_cast<std::uint8_t>((2 * sum[c] + count[c]) / (2 * count[c]));

    GrayImage out(img.width(), img.height());
    auto out_px = out.pixels();
    for (std::size_t i = 0; i < out_px.size(); ++i)
        out_px[i] = mean[labels.labels[i]];
    return out;
}

} // namespace kohler
