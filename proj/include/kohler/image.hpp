#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace kohler {

// Grey-level count for 8-bit images; pixel values live in [0, kGrayLevels).
inline constexpr int kGrayLevels = 256;

/// 8-bit grayscale image, row-major storage.
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height)
    {
        check_dims(width, height);
        pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels))
    {
        check_dims(width, height);
        if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
            throw std::invalid_argument("GrayImage: pixel count does not match dimensions");
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    std::uint8_t operator()(int x, int y) const noexcept { return pixels_[index(x, y)]; }
    std::uint8_t& operator()(int x, int y) noexcept { return pixels_[index(x, y)]; }

    const std::uint8_t* row(int y) const noexcept { return pixels_.data() + index(0, y); }
    std::uint8_t* row(int y) noexcept { return pixels_.data() + index(0, y); }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    static void check_dims(int w, int h)
    {
        if (w < 1 || h < 1)
            throw std::invalid_argument("GrayImage: dimensions must be at least 1x1");
    }

    std::size_t index(int x, int y) const noexcept
    {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Translation vector to a neighbour pixel.
struct NeighborOffset {
    int dx;
    int dy;
};

// Half 4-neighbourhood: right and down. Visiting each pixel once with these
// two offsets enumerates every unordered 4-neighbour pair of the image.
inline constexpr std::array<NeighborOffset, 2> kHalfNeighborhood{{{1, 0}, {0, 1}}};

} // namespace kohler
