#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kohler/curve.hpp"
#include "kohler/image.hpp"
#include "kohler/pnm.hpp"

namespace kohler {

/// The three contrast-curve implementations under comparison: direct
/// reference, fast single-threaded, fast multi-threaded.
enum class Impl { direct, fast, parallel };

std::string_view impl_name(Impl impl);
std::optional<Impl> impl_from_name(std::string_view name);

/// Thrown when implementations disagree on a curve. Timing never starts in
/// that case: a benchmark of wrong code is meaningless.
class CurveMismatchError : public std::runtime_error {
public:
    explicit CurveMismatchError(std::string message) : std::runtime_error(std::move(message)) {}
};

struct ImplTiming {
    Impl impl;
    std::vector<double> runs_s;
    double median_s = 0.0;
};

struct BenchReport {
    std::string image_id;
    int width = 0;
    int height = 0;
    int runs = 0;
    int warmup = 0;
    unsigned workers = 1;
    std::vector<ImplTiming> results;

    const ImplTiming* find(Impl impl) const;

    /// median(direct) / median(impl); nullopt when direct was not measured.
    std::optional<double> gain_vs_direct(Impl impl) const;
};

/// One named curve implementation under test. bench_image accepts arbitrary
/// implementations so tests can inject a corrupted one.
struct CurveImpl {
    Impl kind;
    std::function<ContrastCurve(const GrayImage&)> fn;
};

/// The standard implementations for a selection of kinds.
std::vector<CurveImpl> standard_impls(std::span<const Impl> impls, unsigned workers);

/// Times curve computation plus normalisation on one image. All selected
/// implementations are first checked to produce identical curves (a mismatch
/// throws CurveMismatchError and nothing is timed); then each one runs
/// `warmup + runs` times and the wall-clock durations of the last `runs`
/// executions are recorded. File I/O and decode are outside the timed
/// section by construction.
BenchReport bench_image(const GrayImage& img, std::span<const Impl> impls,
                        int runs, int warmup, unsigned workers,
                        std::string image_id = "image");
BenchReport bench_image(const GrayImage& img, std::span<const CurveImpl> impls,
                        int runs, int warmup, unsigned workers,
                        std::string image_id = "image");

/// CSV with one row per implementation:
/// name,width,height,runs,median_s,run<i>_s...,gain_vs_direct
/// Durations carry 6 decimals, the gain 2; the gain column is empty when the
/// direct implementation was not part of the run.
std::string write_report_csv(const BenchReport& report);

struct VideoReport {
    std::size_t frame_count = 0;
    int width = 0;
    int height = 0;
    unsigned workers = 1;

    struct Throughput {
        Impl impl;
        double seconds = 0.0;
        double fps = 0.0;
    };
    std::vector<Throughput> results;

    double decode_seconds = 0.0;      // measured separately, not part of fps
    std::size_t constant_frames = 0;  // frames with no boundary, passed through

    const Throughput* find(Impl impl) const;
    std::optional<double> gain_vs_direct(Impl impl) const;
};

/// Two-class segmentation throughput over a frame sequence. Frames are
/// decoded up front (decode time reported separately); the timed section per
/// frame covers the curve, threshold selection and quantisation. Constant
/// frames have no boundary: they are passed through unchanged and tallied.
/// With `out_dir` set, the frames produced by the first implementation are
/// written there as PGM, outside the timed section.
VideoReport bench_video(const FrameSequence& frames, std::span<const Impl> impls,
                        unsigned workers,
                        const std::optional<std::filesystem::path>& out_dir = std::nullopt);

} // namespace kohler
