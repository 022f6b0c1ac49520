#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace lf::png {

struct RawImage {
    int height = 0;
    int width = 0;
    int channels = 0; // 1 = gray, 3 = rgb
    std::vector<std::uint8_t> data; // row-major, interleaved channels
};

// Decodes an 8-bit PNG. Palette images expand to RGB, 16-bit depth strips
// to 8, alpha is dropped. Throws Error{MissingFile, UnsupportedFormat}.
RawImage read_png(const std::filesystem::path& path);

// Writes 8-bit grayscale. Throws Error{WriteFailure}.
void write_gray_png(const std::filesystem::path& path, const std::uint8_t* pixels,
                    int height, int width);

} // namespace lf::png
