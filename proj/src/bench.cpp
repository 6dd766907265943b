#include "kohler/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>

#include "kohler/contrast.hpp"
#include "kohler/threshold.hpp"

namespace kohler {

namespace {

using Clock = std::chrono::steady_clock;

// Keep the optimizer from discarding an otherwise unused result.
template <class T>
inline void do_not_optimize(const T& value)
{
    asm volatile("" : : "g"(&value) : "memory");
}

double elapsed_s(Clock::time_point t0, Clock::time_point t1)
{
    // Clamp to the clock granularity so durations stay positive.
    return std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
}

double median_of(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fixed6(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed2(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

bool has_boundary(const ContrastCurve& curve)
{
    for (const std::uint64_t c : curve.cardinality)
        if (c > 0)
            return true;
    return false;
}

} // namespace

std::string_view impl_name(Impl impl)
{
    switch (impl) {
    case Impl::direct:
        return "direct";
    case Impl::fast:
        return "fast";
    case Impl::parallel:
        return "parallel";
    }
    return "unknown";
}

std::optional<Impl> impl_from_name(std::string_view name)
{
    if (name == "direct")
        return Impl::direct;
    if (name == "fast")
        return Impl::fast;
    if (name == "parallel")
        return Impl::parallel;
    return std::nullopt;
}

std::vector<CurveImpl> standard_impls(std::span<const Impl> impls, unsigned workers)
{
    std::vector<CurveImpl> out;
    out.reserve(impls.size());
    for (const Impl impl : impls) {
        switch (impl) {
        case Impl::direct:
            out.push_back({impl, [](const GrayImage& img) { return direct_contrast_curve(img); }});
            break;
        case Impl::fast:
            out.push_back({impl, [](const GrayImage& img) { return fast_contrast_curve(img, 1); }});
            break;
        case Impl::parallel:
            out.push_back({impl, [workers](const GrayImage& img) {
                               return fast_contrast_curve(img, workers);
                           }});
            break;
        }
    }
    return out;
}

const ImplTiming* BenchReport::find(Impl impl) const
{
    for (const ImplTiming& timing : results)
        if (timing.impl == impl)
            return &timing;
    return nullptr;
}

std::optional<double> BenchReport::gain_vs_direct(Impl impl) const
{
    const ImplTiming* direct = find(Impl::direct);
    const ImplTiming* subject = find(impl);
    if (direct == nullptr || subject == nullptr)
        return std::nullopt;
    return direct->median_s / subject->median_s;
}

BenchReport bench_image(const GrayImage& img, std::span<const Impl> impls, int runs, int warmup,
                        unsigned workers, std::string image_id)
{
    const std::vector<CurveImpl> curve_impls = standard_impls(impls, workers);
    return bench_image(img, curve_impls, runs, warmup, workers, std::move(image_id));
}

BenchReport bench_image(const GrayImage& img, std::span<const CurveImpl> impls, int runs,
                        int warmup, unsigned workers, std::string image_id)
{
    if (runs < 1)
        throw std::invalid_argument("bench_image: runs must be at least 1");
    if (warmup < 0)
        throw std::invalid_argument("bench_image: warmup must be non-negative");
    if (impls.empty())
        throw std::invalid_argument("bench_image: no implementations selected");

    // Correctness before timing: all implementations must agree entrywise.
    std::vector<ContrastCurve> curves;
    curves.reserve(impls.size());
    for (const CurveImpl& impl : impls)
        curves.push_back(impl.fn(img));
    for (std::size_t i = 1; i < curves.size(); ++i) {
        if (curves[i] != curves[0]) {
            int differs_at = -1;
            for (int t = 0; t < curves[0].levels(); ++t) {
                if (curves[i].contrast_sum[t] != curves[0].contrast_sum[t] ||
                    curves[i].cardinality[t] != curves[0].cardinality[t]) {
                    differs_at = t;
                    break;
                }
            }
            throw CurveMismatchError(
                std::string("bench: ") + std::string(impl_name(impls[i].kind)) + " and " +
                std::string(impl_name(impls[0].kind)) + " disagree at t=" +
                std::to_string(differs_at) + "; refusing to time broken code");
        }
    }

    BenchReport report;
    report.image_id = std::move(image_id);
    report.width = img.width();
    report.height = img.height();
    report.runs = runs;
    report.warmup = warmup;
    report.workers = workers;

    for (const CurveImpl& impl : impls) {
        ImplTiming timing{impl.kind, {}, 0.0};
        timing.runs_s.reserve(static_cast<std::size_t>(runs));
        for (int r = 0; r < warmup + runs; ++r) {
            const auto t0 = Clock::now();
            const ContrastCurve curve = impl.fn(img);
            const MeanContrastCurve mc = mean_contrast(curve); // normalisation is timed
            do_not_optimize(mc);
            const auto t1 = Clock::now();
            if (r >= warmup)
                timing.runs_s.push_back(elapsed_s(t0, t1));
        }
        timing.median_s = median_of(timing.runs_s);
        report.results.push_back(std::move(timing));
    }
    return report;
}

std::string write_report_csv(const BenchReport& report)
{
    std::string out = "name,width,height,runs,median_s";
    for (int r = 1; r <= report.runs; ++r)
        out += ",run" + std::to_string(r) + "_s";
    out += ",gain_vs_direct\n";

    for (const ImplTiming& timing : report.results) {
        out += std::string(impl_name(timing.impl));
        out += "," + std::to_string(report.width);
        out += "," + std::to_string(report.height);
        out += "," + std::to_string(report.runs);
        out += "," + fixed6(timing.median_s);
        for (const double s : timing.runs_s)
            out += "," + fixed6(s);
        out += ",";
        if (const auto gain = report.gain_vs_direct(timing.impl))
            out += fixed2(*gain);
        out += "\n";
    }
    return out;
}

const VideoReport::Throughput* VideoReport::find(Impl impl) const
{
    for (const Throughput& result : results)
        if (result.impl == impl)
            return &result;
    return nullptr;
}

std::optional<double> VideoReport::gain_vs_direct(Impl impl) const
{
    const Throughput* direct = find(Impl::direct);
    const Throughput* subject = find(impl);
    if (direct == nullptr || subject == nullptr)
        return std::nullopt;
    return subject->fps / direct->fps;
}

VideoReport bench_video(const FrameSequence& frames, std::span<const Impl> impls,
                        unsigned workers, const std::optional<std::filesystem::path>& out_dir)
{
    if (frames.size() == 0)
        throw PnmError(PnmDefect::empty_sequence, "bench_video: empty frame sequence");
    if (impls.empty())
        throw std::invalid_argument("bench_video: no implementations selected");

    const std::vector<CurveImpl> curve_impls = standard_impls(impls, workers);

    // Decode everything up front; decode time is reported on its own and
    // kept out of the throughput figure.
    FrameStream stream(frames);
    std::vector<GrayImage> decoded;
    decoded.reserve(frames.size());
    const auto d0 = Clock::now();
    for (std::size_t i = 0; i < frames.size(); ++i)
        decoded.push_back(stream.read(i));
    const auto d1 = Clock::now();

    VideoReport report;
    report.frame_count = frames.size();
    report.width = decoded.front().width();
    report.height = decoded.front().height();
    report.workers = workers;
    report.decode_seconds = std::chrono::duration<double>(d1 - d0).count();

    if (out_dir)
        std::filesystem::create_directories(*out_dir);

    bool first_impl = true;
    for (const CurveImpl& impl : curve_impls) {
        double seconds = 0.0;
        std::size_t constant_frames = 0;
        for (std::size_t i = 0; i < decoded.size(); ++i) {
            const GrayImage& frame = decoded[i];

            const auto t0 = Clock::now();
            const ContrastCurve curve = impl.fn(frame);
            std::optional<GrayImage> segmented;
            if (has_boundary(curve)) {
                const MeanContrastCurve mc = mean_contrast(curve);
                ThresholdSet ts;
                ts.thresholds.push_back(optimal_threshold(mc));
                segmented = quantize(frame, ts); // two classes
            }
            const auto t1 = Clock::now();
            seconds += std::chrono::duration<double>(t1 - t0).count();

            if (!segmented) {
                segmented = frame; // constant frame: pass through unchanged
                if (first_impl)
                    ++constant_frames;
            }
            if (first_impl && out_dir) {
                const std::filesystem::path name =
                    frames.paths[i].filename().replace_extension(".pgm");
                write_pgm_file(*segmented, *out_dir / name);
            }
        }
        seconds = std::max(seconds, 1e-9);
        report.results.push_back(
            {impl.kind, seconds, static_cast<double>(frames.size()) / seconds});
        if (first_impl)
            report.constant_frames = constant_frames;
        first_impl = false;
    }
    return report;
}

} // namespace kohler
