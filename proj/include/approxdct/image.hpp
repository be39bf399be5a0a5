#ifndef APPROXDCT_IMAGE_HPP
#define APPROXDCT_IMAGE_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

namespace approxdct {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // row-major

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), samples(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int y, int x) const {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int y, int x) {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
};

// Binary 8-bit PGM (P5).
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace approxdct

#endif
