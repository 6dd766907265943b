#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kohler/image.hpp"

namespace kohler {

enum class PnmDefect {
    bad_magic,
    bad_header,
    zero_dimension,
    maxval_too_large,
    truncated,
    sample_out_of_range,
    image_too_large,
    io,
    empty_sequence,
    dimension_mismatch,
};

class PnmError : public std::runtime_error {
public:
    PnmError(PnmDefect defect, std::string message)
        : std::runtime_error(std::move(message)), defect_(defect)
    {
    }

    PnmDefect defect() const noexcept { return defect_; }

private:
    PnmDefect defect_;
};

/// Decodes PGM (P2/P5) or PPM (P3/P6) with maxval <= 255. Grey samples are
/// taken verbatim (no rescaling for maxval < 255); colour is reduced to
/// Rec. 601 luma, rounded half up.
GrayImage read_pnm(std::span<const std::uint8_t> bytes);
GrayImage read_pnm_file(const std::filesystem::path& path);

/// Binary PGM bytes, header exactly "P5\n<width> <height>\n255\n".
/// read_pnm(write_pgm(img)) == img.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);
void write_pgm_file(const GrayImage& img, const std::filesystem::path& path);

/// Frame files ordered lexicographically by filename.
struct FrameSequence {
    std::vector<std::filesystem::path> paths;

    std::size_t size() const noexcept { return paths.size(); }
};

/// Regular files under `dir` whose filename matches the shell glob
/// `pattern`, sorted by filename. Throws PnmError(empty_sequence) when
/// nothing matches.
FrameSequence frame_sequence(const std::filesystem::path& dir, std::string_view pattern);

/// Decoder over a FrameSequence that checks every frame against the
/// dimensions of the first decoded one.
class FrameStream {
public:
    explicit FrameStream(FrameSequence seq) : seq_(std::move(seq)) {}

    std::size_t size() const noexcept { return seq_.size(); }
    const FrameSequence& sequence() const noexcept { return seq_; }

    /// Decodes frame `idx`; throws PnmError(dimension_mismatch) naming the
    /// offending file when its size differs from the first decoded frame.
    GrayImage read(std::size_t idx);

private:
    FrameSequence seq_;
    int width_ = 0;
    int height_ = 0;
};

} // namespace kohler
