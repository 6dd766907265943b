#include "kohler/pnm.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <utility>

namespace kohler {

namespace {

// Refuse headers that would allocate absurd amounts before any data check.
constexpr std::size_t kMaxPixels = std::size_t{1} << 30;

struct Cursor {
    std::span<const std::uint8_t> buf;
    std::size_t pos = 0;

    bool eof() const noexcept { return pos >= buf.size(); }
    int peek() const noexcept { return eof() ? -1 : buf[pos]; }
};

bool is_pnm_space(int c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Whitespace and '#' comments (to end of line) separate header tokens and
// plain-format samples.
void skip_space_and_comments(Cursor& in)
{
    for (;;) {
        while (!in.eof() && is_pnm_space(in.peek()))
            ++in.pos;
        if (in.peek() == '#') {
            while (!in.eof() && in.peek() != '\n')
                ++in.pos;
            continue;
        }
        return;
    }
}

unsigned next_uint(Cursor& in, const char* what)
{
    skip_space_and_comments(in);
    if (in.eof())
        throw PnmError(PnmDefect::truncated, std::string("pnm: missing ") + what);
    if (in.peek() < '0' || in.peek() > '9')
        throw PnmError(PnmDefect::bad_header, std::string("pnm: malformed ") + what);
    unsigned long long value = 0;
    while (!in.eof() && in.peek() >= '0' && in.peek() <= '9') {
        value = value * 10 + static_cast<unsigned long long>(in.buf[in.pos] - '0');
        ++in.pos;
        if (value > 0xFFFFFFFFull)
            throw PnmError(PnmDefect::bad_header, std::string("pnm: oversized ") + what);
    }
    return static_cast<unsigned>(value);
}

std::uint8_t luma601(unsigned r, unsigned g, unsigned b)
{
    // Rec. 601 weights; +500 implements round half up in thousandths.
    const unsigned v = (299u * r + 587u * g + 114u * b + 500u) / 1000u;
    return static_cast<std::uint8_t>(std::min(v, 255u));
}

unsigned ascii_sample(Cursor& in)
{
    const unsigned v = next_uint(in, "sample");
    if (v > 255)
        throw PnmError(PnmDefect::sample_out_of_range,
                       "pnm: sample value " + std::to_string(v) + " exceeds 255");
    return v;
}

} // namespace

GrayImage read_pnm(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw PnmError(PnmDefect::bad_magic, "pnm: not a PNM stream (missing magic)");
    const char kind = static_cast<char>(bytes[1]);
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
        throw PnmError(PnmDefect::bad_magic,
                       std::string("pnm: unsupported magic P") + kind);
    const bool color = (kind == '3' || kind == '6');
    const bool plain = (kind == '2' || kind == '3');

    Cursor in{bytes, 2};
    const unsigned width = next_uint(in, "width");
    const unsigned height = next_uint(in, "height");
    if (width == 0 || height == 0)
        throw PnmError(PnmDefect::zero_dimension, "pnm: zero image dimension");
    const unsigned maxval = next_uint(in, "maxval");
    if (maxval > 255)
        throw PnmError(PnmDefect::maxval_too_large,
                       "pnm: maxval " + std::to_string(maxval) + " exceeds 255");
    if (maxval == 0)
        throw PnmError(PnmDefect::bad_header, "pnm: maxval must be positive");

    const std::size_t pixel_count = std::size_t{width} * height;
    if (pixel_count > kMaxPixels)
        throw PnmError(PnmDefect::image_too_large, "pnm: image dimensions too large");

    std::vector<std::uint8_t> pixels(pixel_count);

    if (plain) {
        for (std::size_t i = 0; i < pixel_count; ++i) {
            if (color) {
                const unsigned r = ascii_sample(in);
                const unsigned g = ascii_sample(in);
                const unsigned b = ascii_sample(in);
                pixels[i] = luma601(r, g, b);
            } else {
                pixels[i] = static_cast<std::uint8_t>(ascii_sample(in));
            }
        }
    } else {
        // Exactly one whitespace byte separates the maxval from raw data.
        if (in.eof() || !is_pnm_space(in.peek()))
            throw PnmError(PnmDefect::bad_header, "pnm: missing whitespace after maxval");
        ++in.pos;
        const std::size_t needed = pixel_count * (color ? 3u : 1u);
        if (bytes.size() - in.pos < needed)
            throw PnmError(PnmDefect::truncated, "pnm: truncated pixel data");
        const std::uint8_t* raw = bytes.data() + in.pos;
        if (color) {
            for (std::size_t i = 0; i < pixel_count; ++i)
                pixels[i] = luma601(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]);
        } else {
            std::copy(raw, raw + pixel_count, pixels.begin());
        }
    }

    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

GrayImage read_pnm_file(const std::filesystem::path& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw PnmError(PnmDefect::io, "pnm: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                    std::istreambuf_iterator<char>());
    if (file.bad())
        throw PnmError(PnmDefect::io, "pnm: cannot read " + path.string());
    return read_pnm(bytes);
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img)
{
    char header[48];
    const int len =
        std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", img.width(), img.height());
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(len) + img.pixel_count());
    out.insert(out.end(), header, header + len);
    const auto px = img.pixels();
    out.insert(out.end(), px.begin(), px.end());
    return out;
}

void write_pgm_file(const GrayImage& img, const std::filesystem::path& path)
{
    const std::vector<std::uint8_t> bytes = write_pgm(img);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw PnmError(PnmDefect::io, "pnm: cannot create " + path.string());
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file)
        throw PnmError(PnmDefect::io, "pnm: cannot write " + path.string());
}

FrameSequence frame_sequence(const std::filesystem::path& dir, std::string_view pattern)
{
    const std::string pat(pattern);
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        const std::string name = entry.path().filename().string();
        if (fnmatch(pat.c_str(), name.c_str(), 0) == 0)
            paths.push_back(entry.path());
    }
    if (paths.empty())
        throw PnmError(PnmDefect::empty_sequence, "frame sequence: no file in " + dir.string() +
                                                      " matches '" + pat + "'");
    std::sort(paths.begin(), paths.end(),
              [](const std::filesystem::path& a, const std::filesystem::path& b) {
                  return a.filename().string() < b.filename().string();
              });
    return FrameSequence{std::move(paths)};
}

GrayImage FrameStream::read(std::size_t idx)
{
    GrayImage img = read_pnm_file(seq_.paths.at(idx));
    if (width_ == 0) {
        width_ = img.width();
        height_ = img.height();
    } else if (img.width() != width_ || img.height() != height_) {
        throw PnmError(PnmDefect::dimension_mismatch,
                       "frame sequence: " + seq_.paths[idx].string() + " is " +
                           std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                           ", expected " + std::to_string(width_) + "x" +
                           std::to_string(height_));
    }
    return img;
}

} // namespace kohler
