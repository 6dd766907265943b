#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "kohler/contrast.hpp"
#include "kohler/threshold.hpp"
#include "test_support.hpp"

using kohler::ContrastCurve;
using kohler::GrayImage;
using kohler::LabelImage;
using kohler::MeanContrastCurve;
using kohler::ThresholdSet;
using namespace testsupport;

namespace {

MeanContrastCurve curve_of(const GrayImage& img)
{
    return kohler::mean_contrast(kohler::fast_contrast_curve(img, 2));
}

// Synthetic curve builder: value < 0 means "undefined".
MeanContrastCurve synthetic(const std::vector<double>& values)
{
    MeanContrastCurve mc;
    mc.values.assign(256, 0.0);
    mc.defined.assign(256, false);
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (values[t] >= 0.0) {
            mc.values[t] = values[t];
            mc.defined[t] = true;
        }
    }
    return mc;
}

ThresholdSet make_ts(std::vector<int> thresholds)
{
    return ThresholdSet{std::move(thresholds)};
}

const GrayImage kChecker(2, 2, {0, 255, 255, 0});

} // namespace

TEST_CASE("mean_contrast: zero curve is fully masked")
{
    const MeanContrastCurve mc = kohler::mean_contrast(ContrastCurve{});
    for (int t = 0; t < 256; ++t) {
        CHECK(!mc.defined[t]);
        CHECK(mc.values[t] == 0.0);
    }
}

TEST_CASE("mean_contrast: 1x2 [2,5] example")
{
    const MeanContrastCurve mc = curve_of(GrayImage(1, 2, {2, 5}));
    CHECK(mc.defined[2]);
    CHECK(mc.defined[3]);
    CHECK(mc.defined[4]);
    CHECK(!mc.defined[5]);
    CHECK(mc.values[2] == 0.0);
    CHECK(mc.values[3] == 1.0);
    CHECK(mc.values[4] == 1.0);
}

TEST_CASE("mean_contrast: checker curve is exactly min(t, 255-t)")
{
    const MeanContrastCurve mc = curve_of(kChecker);
    for (int t = 0; t <= 254; ++t) {
        CHECK(mc.defined[t]);
        CHECK(mc.values[t] == static_cast<double>(std::min(t, 255 - t)));
        CHECK(mc.values[t] <= 127.5);
    }
    CHECK(!mc.defined[255]);
}

TEST_CASE("optimal_threshold: examples and tie rule")
{
    CHECK(kohler::optimal_threshold(curve_of(kChecker)) == 127);
    CHECK(kohler::optimal_threshold(curve_of(GrayImage(1, 2, {2, 5}))) == 3);
    CHECK_THROWS_AS(kohler::optimal_threshold(curve_of(GrayImage(3, 3, 42))),
                    kohler::NoBoundaryError);
}

TEST_CASE("optimal_threshold is invariant under positive scaling of contrast sums")
{
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        GrayImage img = random_small_image(rng);
        ContrastCurve curve = kohler::fast_contrast_curve(img, 1);
        bool any = false;
        for (auto c : curve.cardinality)
            any |= (c > 0);
        if (!any)
            continue;
        const int base = kohler::optimal_threshold(kohler::mean_contrast(curve));
        ContrastCurve scaled = curve;
        for (auto& v : scaled.contrast_sum)
            v *= 7;
        CHECK(kohler::optimal_threshold(kohler::mean_contrast(scaled)) == base);
    }
}

TEST_CASE("top_k_local_maxima: checker plateau resolves to its smallest t")
{
    const ThresholdSet ts = kohler::top_k_local_maxima(curve_of(kChecker), 1);
    CHECK(ts.thresholds == std::vector<int>{127});
}

TEST_CASE("top_k_local_maxima: unimodal curve has exactly one maximum")
{
    std::vector<double> values(30, -1.0);
    for (int t = 0; t < 30; ++t)
        values[t] = (t < 12) ? t : 24 - t; // rises then falls
    const MeanContrastCurve mc = synthetic(values);
    for (int k : {1, 3, 10})
        CHECK(kohler::top_k_local_maxima(mc, k).size() == 1);
    CHECK(kohler::top_k_local_maxima(mc, 1).thresholds == std::vector<int>{12});
}

TEST_CASE("top_k_local_maxima: rising plateau is not a maximum")
{
    // 1 5 5 9 0: the flat 5-run continues upward, so only 9 is a maximum.
    const MeanContrastCurve mc = synthetic({1, 5, 5, 9, 0});
    const ThresholdSet ts = kohler::top_k_local_maxima(mc, 10);
    CHECK(ts.thresholds == std::vector<int>{3});
}

TEST_CASE("top_k_local_maxima: undefined entries are skipped as if absent")
{
    // Defined at 0, 4, 8 with values 3, 7, 2: the 7 at t=4 is the only
    // maximum even though its immediate neighbours are undefined.
    std::vector<double> values(10, -1.0);
    values[0] = 3.0;
    values[4] = 7.0;
    values[8] = 2.0;
    const MeanContrastCurve mc = synthetic(values);
    CHECK(kohler::top_k_local_maxima(mc, 5).thresholds == std::vector<int>{4});
}

TEST_CASE("top_k_local_maxima: ranking prefers value, then smaller t")
{
    const MeanContrastCurve mc = synthetic({0, 8, 0, 6, 0, 8, 0});
    CHECK(kohler::top_k_local_maxima(mc, 1).thresholds == std::vector<int>{1});
    CHECK(kohler::top_k_local_maxima(mc, 2).thresholds == std::vector<int>{1, 5});
    CHECK(kohler::top_k_local_maxima(mc, 3).thresholds == std::vector<int>{1, 3, 5});
    CHECK(kohler::top_k_local_maxima(mc, 9).thresholds == std::vector<int>{1, 3, 5});
}

TEST_CASE("top_k_local_maxima: k subsets nest and contain the optimum")
{
    std::mt19937 rng(61);
    for (int i = 0; i < 25; ++i) {
        const GrayImage img = random_small_image(rng);
        const MeanContrastCurve mc = curve_of(img);
        bool any = false;
        for (int t = 0; t < mc.levels(); ++t)
            any |= mc.defined[t];
        if (!any)
            continue;
        const int optimum = kohler::optimal_threshold(mc);
        std::set<int> prev;
        for (int k = 1; k <= 8; ++k) {
            const ThresholdSet ts = kohler::top_k_local_maxima(mc, k);
            const std::set<int> cur(ts.thresholds.begin(), ts.thresholds.end());
            CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
            CHECK(cur.count(optimum) == 1);
            CHECK(std::is_sorted(ts.thresholds.begin(), ts.thresholds.end()));
            prev = cur;
        }
    }
}

TEST_CASE("top_k_local_maxima: errors")
{
    CHECK_THROWS_AS(kohler::top_k_local_maxima(synthetic({}), 1), kohler::NoBoundaryError);
    CHECK_THROWS_AS(kohler::top_k_local_maxima(synthetic({1.0}), 0), std::invalid_argument);
}

TEST_CASE("classify: examples")
{
    const LabelImage checker = kohler::classify(kChecker, make_ts({127}));
    CHECK(checker.labels == std::vector<std::uint8_t>{0, 1, 1, 0});

    const LabelImage three = kohler::classify(GrayImage(3, 1, {2, 3, 5}), make_ts({2, 4}));
    CHECK(three.labels == std::vector<std::uint8_t>{0, 1, 2});

    const LabelImage none = kohler::classify(GrayImage(3, 1, {2, 3, 5}), make_ts({}));
    CHECK(none.labels == std::vector<std::uint8_t>{0, 0, 0});
}

TEST_CASE("classify is monotone in the pixel value")
{
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> tdist(0, 254);
    for (int i = 0; i < 20; ++i) {
        const GrayImage img = random_small_image(rng);
        std::set<int> tset;
        for (int j = 0; j < 4; ++j)
            tset.insert(tdist(rng));
        const ThresholdSet ts = make_ts({tset.begin(), tset.end()});
        const LabelImage labels = kohler::classify(img, ts);
        for (std::size_t a = 0; a < img.pixel_count(); ++a)
            for (std::size_t b = 0; b < img.pixel_count(); ++b)
                if (img.pixels()[a] <= img.pixels()[b])
                    REQUIRE(labels.labels[a] <= labels.labels[b]);
    }
}

TEST_CASE("quantize: examples")
{
    const GrayImage constant(4, 2, 9);
    CHECK(kohler::quantize(constant, make_ts({3, 200})) == constant);

    CHECK(kohler::quantize(kChecker, make_ts({127})) == kChecker);

    const GrayImage line(4, 1, {1, 2, 200, 201});
    const GrayImage expect(4, 1, {2, 2, 201, 201}); // means 1.5 and 200.5 round half up
    CHECK(kohler::quantize(line, make_ts({3})) == expect);
}

TEST_CASE("quantize: class count bound and reclassification stability")
{
    std::mt19937 rng(81);
    std::uniform_int_distribution<int> tdist(0, 254);
    for (int i = 0; i < 25; ++i) {
        const GrayImage img = random_small_image(rng);
        std::set<int> tset;
        for (int j = 0; j < 3; ++j)
            tset.insert(tdist(rng));
        const ThresholdSet ts = make_ts({tset.begin(), tset.end()});

        const GrayImage quantized = kohler::quantize(img, ts);
        std::set<std::uint8_t> distinct(quantized.pixels().begin(), quantized.pixels().end());
        CHECK(distinct.size() <= ts.size() + 1);

        // Class means stay inside their class interval, so labels survive.
        CHECK(kohler::classify(quantized, ts) == kohler::classify(img, ts));
    }
}
