#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lf {

// Channel-major c x h x w buffer of doubles.
struct Tensor {
    int c = 0, h = 0, w = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int c_, int h_, int w_, double fill = 0.0)
        : c(c_), h(h_), w(w_), v(static_cast<std::size_t>(c_) * h_ * w_, fill) {}

    double& at(int ci, int y, int x) {
        return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
    }
    double at(int ci, int y, int x) const {
        return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
    }

    std::size_t size() const { return v.size(); }
    int hw() const { return h * w; }
    bool same_shape(const Tensor& o) const { return c == o.c && h == o.h && w == o.w; }
    void zero() { std::fill(v.begin(), v.end(), 0.0); }
    double* data() { return v.data(); }
    const double* data() const { return v.data(); }
};

// Output of the perceptual encoder: one map per stage, stage s at spatial
// scale 2^(s-1) with the declared channel count.
inline constexpr std::array<int, 5> kStageChannels{64, 128, 256, 512, 512};

struct FeaturePyramid {
    std::array<Tensor, 5> maps;

    const Tensor& stage(int s) const { return maps[s - 1]; } // s in 1..5
    Tensor& stage(int s) { return maps[s - 1]; }
};

// 512-d L2-normalized matching embedding.
inline constexpr int kEmbeddingDim = 512;

struct IdentityEmbedding {
    std::vector<double> v;

    IdentityEmbedding() : v(kEmbeddingDim, 0.0) {}
};

double cosine_similarity(const IdentityEmbedding& a, const IdentityEmbedding& b);

// Checksum over raw tensor bytes; used by freeze-contract tests.
std::uint64_t tensor_checksum(const std::vector<double>& v, std::uint64_t seed);

} // namespace lf
