#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace lf {

// Smallest dimension accepted anywhere in the pipeline.
inline constexpr int kMinImageDim = 32;

// Single-channel image, intensities in [0,1].
struct GrayImage {
    int height = 0;
    int width = 0;
    std::vector<double> pixels; // row-major

    GrayImage() = default;
    GrayImage(int h, int w, double fill = 0.0)
        : height(h), width(w), pixels(static_cast<std::size_t>(h) * w, fill) {}

    double& at(int y, int x) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return pixels.size(); }
};

// Decodes an 8-bit grayscale/RGB raster; RGB collapses to Rec.601 luminance,
// 8-bit values divide by 255. Throws MissingFile/UnsupportedFormat/TooSmall.
GrayImage load_image(const std::filesystem::path& path);

// Writes 8-bit grayscale PNG; quantization is round(p*255) with halves away
// from zero. Throws WriteFailure (and validates the [0,1] invariant).
void save_image(const GrayImage& img, const std::filesystem::path& path);

// Bilinear resample at half-pixel centers (corner alignment disabled).
// Output values stay inside the convex hull of the four source taps.
GrayImage resize_bilinear(const GrayImage& img, int h, int w);

// Validates GrayImage invariants (range, min dims); throws on violation.
void validate_image(const GrayImage& img);

} // namespace lf
