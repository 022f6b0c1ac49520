#pragma once

#include "latentforge/random.hpp"
#include "latentforge/tensor.hpp"

#include <string>
#include <vector>

namespace lf {

// Flat view of a network's parameters, in declaration order. Used for the
// optimizer, checkpointing, checksums and freeze checks.
struct ParamRef {
    std::string name;
    std::vector<int> shape;
    std::vector<double>* data;
    std::vector<double>* grad;
};
using ParamList = std::vector<ParamRef>;

std::uint64_t params_checksum(const ParamList& params);
void zero_grads(const ParamList& params);

// Layers cache what backward needs during forward(); infer() is const and
// cache-free so frozen networks can serve concurrent readers.

struct Conv3x3 {
    int ci = 0, co = 0;
    std::vector<double> w, b, gw, gb;
    Tensor cached_in;

    void init(int ci_, int co_, RandomSource& rng);
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    // accumulates parameter grads when wgrad; returns input grad
    Tensor backward(const Tensor& gy, bool wgrad);
    void params(const std::string& prefix, ParamList& out);
};

struct DWConv3x3 {
    int c = 0;
    std::vector<double> w, b, gw, gb;
    Tensor cached_in;

    void init(int c_, RandomSource& rng);
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy, bool wgrad);
    void params(const std::string& prefix, ParamList& out);
};

struct Conv1x1 {
    int ci = 0, co = 0;
    std::vector<double> w, b, gw, gb;
    Tensor cached_in;

    void init(int ci_, int co_, RandomSource& rng);
    void init_identity(int c_); // square, w = I, b = 0
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy, bool wgrad);
    void params(const std::string& prefix, ParamList& out);
};

struct ReLU {
    Tensor cached_in;
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy) const;
};

struct Sigmoid {
    Tensor cached_out;
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy) const;
};

// 2x2 average pool; identity on maps smaller than 2 in either dimension.
struct AvgPool2 {
    int in_h = 0, in_w = 0;
    bool applied = false;
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy) const;
};

struct Upsample2 {
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x) { return infer(x); }
    Tensor backward(const Tensor& gy) const;
};

struct Linear {
    int ci = 0, co = 0;
    std::vector<double> w, b, gw, gb;
    std::vector<double> cached_in;

    void init(int ci_, int co_, RandomSource& rng);
    std::vector<double> infer(const std::vector<double>& x) const;
    std::vector<double> forward(const std::vector<double>& x);
    std::vector<double> backward(const std::vector<double>& gy, bool wgrad);
    void params(const std::string& prefix, ParamList& out);
};

struct GlobalAvgPool {
    int in_c = 0, in_h = 0, in_w = 0;
    std::vector<double> infer(const Tensor& x) const;
    std::vector<double> forward(const Tensor& x);
    Tensor backward(const std::vector<double>& gy) const;
};

// y = x / max(||x||, eps)
struct L2Normalize {
    static constexpr double kNormEps = 1e-12;
    std::vector<double> cached_y;
    double cached_norm = 1.0;
    std::vector<double> infer(const std::vector<double>& x) const;
    std::vector<double> forward(const std::vector<double>& x);
    std::vector<double> backward(const std::vector<double>& gy) const;
};

} // namespace lf
