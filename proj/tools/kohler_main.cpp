// Command-line front end: curve extraction, multi-threshold segmentation,
// implementation benchmarking and frame-sequence throughput.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kohler/bench.hpp"
#include "kohler/contrast.hpp"
#include "kohler/pnm.hpp"
#include "kohler/threshold.hpp"

namespace {

namespace fs = std::filesystem;
using namespace kohler;

unsigned default_workers()
{
    if (const char* env = std::getenv("KOHLER_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0' && v >= 1 && v <= 65536)
            return static_cast<unsigned>(v);
        std::fprintf(stderr, "warning: ignoring invalid KOHLER_WORKERS='%s'\n", env);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<Impl> parse_impls(const std::vector<std::string>& names)
{
    std::vector<Impl> impls;
    for (const std::string& name : names) {
        const auto impl = impl_from_name(name);
        if (!impl)
            throw CLI::ValidationError("--impl", "unknown implementation '" + name +
                                                     "' (expected direct, fast or parallel)");
        impls.push_back(*impl);
    }
    return impls;
}

void write_text_file(const fs::path& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw PnmError(PnmDefect::io, "cannot create " + path.string());
    file << text;
    if (!file)
        throw PnmError(PnmDefect::io, "cannot write " + path.string());
}

int cmd_curve(const fs::path& input, const fs::path& out, unsigned workers)
{
    const GrayImage img = read_pnm_file(input);
    const ContrastCurve curve = fast_contrast_curve(img, workers);
    const MeanContrastCurve mc = mean_contrast(curve);

    std::string csv = "t,cardinality,contrast_sum,mean_contrast\n";
    char line[96];
    for (int t = 0; t < curve.levels(); ++t) {
        std::snprintf(line, sizeof line, "%d,%llu,%llu,%.6f\n", t,
                      static_cast<unsigned long long>(curve.cardinality[t]),
                      static_cast<unsigned long long>(curve.contrast_sum[t]), mc.values[t]);
        csv += line;
    }
    write_text_file(out, csv);
    return 0;
}

GrayImage label_view(const GrayImage& img, const ThresholdSet& ts)
{
    const LabelImage labels = classify(img, ts);
    const int k = static_cast<int>(ts.size());
    GrayImage out(img.width(), img.height());
    auto px = out.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = static_cast<std::uint8_t>(255 * labels.labels[i] / k);
    return out;
}

int cmd_segment(const fs::path& input, const fs::path& out, int k, unsigned workers,
                bool labels_flag)
{
    const GrayImage img = read_pnm_file(input);
    const ContrastCurve curve = fast_contrast_curve(img, workers);
    const MeanContrastCurve mc = mean_contrast(curve);
    const ThresholdSet ts = top_k_local_maxima(mc, k); // throws on constant images
    if (static_cast<int>(ts.size()) < k)
        std::fprintf(stderr, "warning: only %zu local maxima available, using all of them\n",
                     ts.size());

    const GrayImage result = labels_flag ? label_view(img, ts) : quantize(img, ts);
    write_pgm_file(result, out);
    for (const int t : ts.thresholds)
        std::printf("%d\n", t);
    return 0;
}

int cmd_bench(const fs::path& input, const std::vector<std::string>& impl_names, int runs,
              int warmup, unsigned workers, const fs::path& out)
{
    const GrayImage img = read_pnm_file(input);
    const std::vector<Impl> impls = parse_impls(impl_names);

    std::vector<CurveImpl> curve_impls = standard_impls(impls, workers);
    if (std::getenv("KOHLER_BENCH_CORRUPT") != nullptr) {
        // Test hook: poison the last implementation so the mismatch guard
        // can be exercised end to end.
        CurveImpl& victim = curve_impls.back();
        const auto inner = victim.fn;
        victim.fn = [inner](const GrayImage& image) {
            ContrastCurve curve = inner(image);
            curve.contrast_sum[0] += 1;
            return curve;
        };
    }

    const BenchReport report =
        bench_image(img, curve_impls, runs, warmup, workers, input.stem().string());
    write_text_file(out, write_report_csv(report));

    std::printf("image %s (%dx%d), %d runs, %d warmup, %u workers\n", report.image_id.c_str(),
                report.width, report.height, report.runs, report.warmup, report.workers);
    for (const ImplTiming& timing : report.results) {
        std::printf("  %-8s median %.6f s", std::string(impl_name(timing.impl)).c_str(),
                    timing.median_s);
        if (const auto gain = report.gain_vs_direct(timing.impl); gain && timing.impl != Impl::direct)
            std::printf("  gain vs direct %.2f", *gain);
        std::printf("\n");
    }
    return 0;
}

int cmd_video(const fs::path& dir, const std::string& pattern,
              const std::optional<fs::path>& out_dir, unsigned workers,
              const std::string& impl_name_str)
{
    const auto impl = impl_from_name(impl_name_str);
    if (!impl)
        throw CLI::ValidationError("--impl", "unknown implementation '" + impl_name_str + "'");

    const FrameSequence frames = frame_sequence(dir, pattern);
    const std::vector<Impl> impls{*impl};
    const VideoReport report = bench_video(frames, impls, workers, out_dir);

    std::printf("frames %zu (%dx%d), %u workers, decode %.3f s\n", report.frame_count,
                report.width, report.height, report.workers, report.decode_seconds);
    for (const VideoReport::Throughput& result : report.results)
        std::printf("  %-8s %.3f s  %.2f frames/s\n",
                    std::string(impl_name(result.impl)).c_str(), result.seconds, result.fps);
    if (report.constant_frames > 0)
        std::fprintf(stderr, "warning: %zu constant frame(s) passed through unsegmented\n",
                     report.constant_frames);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Köhler boundary-contrast multi-thresholding toolkit"};
    app.require_subcommand(1);
    const unsigned workers_default = default_workers();

    // curve
    auto* curve = app.add_subcommand("curve", "Write the contrast curve of an image as CSV");
    fs::path curve_input, curve_out;
    unsigned curve_workers = workers_default;
    curve->add_option("input", curve_input, "input image (PGM/PPM)")->required();
    curve->add_option("--out", curve_out, "output CSV path")->required();
    curve->add_option("--workers", curve_workers, "worker threads");

    // segment
    auto* segment = app.add_subcommand("segment", "Multi-threshold an image");
    fs::path seg_input, seg_out;
    int seg_k = 1;
    unsigned seg_workers = workers_default;
    bool seg_labels = false;
    segment->add_option("input", seg_input, "input image (PGM/PPM)")->required();
    segment->add_option("--out", seg_out, "output PGM path")->required();
    segment->add_option("--k", seg_k, "number of thresholds")->check(CLI::PositiveNumber);
    segment->add_option("--workers", seg_workers, "worker threads");
    segment->add_flag("--labels", seg_labels, "write scaled class labels instead of class means");

    // bench
    auto* bench = app.add_subcommand("bench", "Compare implementation timings on an image");
    fs::path bench_input, bench_out;
    std::vector<std::string> bench_impls{"direct", "fast", "parallel"};
    int bench_runs = 5, bench_warmup = 1;
    unsigned bench_workers = workers_default;
    bench->add_option("input", bench_input, "input image (PGM/PPM)")->required();
    bench->add_option("--out", bench_out, "output CSV path")->required();
    bench->add_option("--impl", bench_impls, "implementations to compare")->delimiter(',');
    bench->add_option("--runs", bench_runs, "timed runs per implementation")
        ->check(CLI::PositiveNumber);
    bench->add_option("--warmup", bench_warmup, "untimed runs per implementation")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--workers", bench_workers, "worker threads for the parallel impl");

    // video
    auto* video = app.add_subcommand("video", "Segment a frame sequence in two classes");
    fs::path video_dir;
    std::string video_pattern = "*.pgm";
    std::string video_impl = "parallel";
    std::optional<fs::path> video_out;
    unsigned video_workers = workers_default;
    video->add_option("frames", video_dir, "directory holding the frames")->required();
    video->add_option("--pattern", video_pattern, "filename glob for frames");
    video->add_option("--out", video_out, "directory for segmented frames");
    video->add_option("--workers", video_workers, "worker threads");
    video->add_option("--impl", video_impl, "implementation (direct, fast, parallel)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*curve)
            return cmd_curve(curve_input, curve_out, curve_workers);
        if (*segment)
            return cmd_segment(seg_input, seg_out, seg_k, seg_workers, seg_labels);
        if (*bench)
            return cmd_bench(bench_input, bench_impls, bench_runs, bench_warmup, bench_workers,
                             bench_out);
        if (*video)
            return cmd_video(video_dir, video_pattern, video_out, video_workers, video_impl);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2; // unreachable: a subcommand is required
}
