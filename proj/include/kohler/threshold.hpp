#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kohler/curve.hpp"
#include "kohler/image.hpp"

namespace kohler {

/// Raised when a curve has no boundary at any threshold (constant or
/// single-pixel image): no threshold can be selected.
class NoBoundaryError : public std::runtime_error {
public:
    NoBoundaryError()
        : std::runtime_error("no boundary: the contrast curve is undefined at every threshold")
    {
    }
};

/// Normalised contrast per threshold. Entries whose boundary is empty are
/// masked out and carry value 0; they never take part in maxima selection.
struct MeanContrastCurve {
    std::vector<double> values;
    std::vector<bool> defined;

    int levels() const noexcept { return static_cast<int>(values.size()); }
};

/// Strictly increasing thresholds selected from a curve.
struct ThresholdSet {
    std::vector<int> thresholds;

    std::size_t size() const noexcept { return thresholds.size(); }

    friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
};

/// Class index per pixel; with k thresholds, labels lie in [0, k] and are
/// monotone in the pixel value.
struct LabelImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> labels;

    friend bool operator==(const LabelImage&, const LabelImage&) = default;
};

MeanContrastCurve mean_contrast(const ContrastCurve& curve);

/// Argmax of the mean contrast over defined thresholds; ties go to the
/// smallest t. Throws NoBoundaryError when nothing is defined.
int optimal_threshold(const MeanContrastCurve& mc);

/// The k highest local maxima of the defined part of the curve, returned as
/// a sorted ThresholdSet. Equal-valued plateau runs count once, at their
/// smallest t; the curve endpoints compare one-sided. Ranking ties go to the
/// smaller t. Fewer than k maxima returns all of them.
ThresholdSet top_k_local_maxima(const MeanContrastCurve& mc, int k);

/// label(x) = number of thresholds strictly below the pixel value.
LabelImage classify(const GrayImage& img, const ThresholdSet& ts);

/// Replaces every pixel by the mean grey value of its class, rounded half
/// up. The output has at most |ts| + 1 distinct values.
GrayImage quantize(const GrayImage& img, const ThresholdSet& ts);

} // namespace kohler
