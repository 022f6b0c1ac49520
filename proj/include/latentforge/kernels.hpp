#pragma once

#include <cstddef>

// Data-parallel compute kernels. lf::kern holds the OpenMP builds used by
// the pipeline; lf::kern::serial holds plain-loop references with identical
// signatures and identical per-output arithmetic order, so results are
// bit-equal and the serial side doubles as a test oracle and benchmark
// baseline. Every loop parallelizes over independent outputs only (no
// reduction clauses), which keeps results independent of the thread count.
//
// Tensor layout is channel-major: t[c][y][x] = p[(c*h + y)*w + x].

#define LF_DECLARE_KERNELS                                                              \
    /* dense 3x3 convolution, zero padding, stride 1 */                                 \
    void conv3x3_fwd(const double* in, int ci, int h, int w, const double* wt,          \
                     const double* bias, int co, double* out);                          \
    void conv3x3_bwd_input(const double* gout, int co, int h, int w, const double* wt,  \
                           int ci, double* gin);                                        \
    void conv3x3_bwd_params(const double* gout, int co, const double* in, int ci,       \
                            int h, int w, double* gwt, double* gbias);                  \
    /* depthwise 3x3 convolution, zero padding */                                       \
    void dwconv3x3_fwd(const double* in, int c, int h, int w, const double* wt,         \
                       const double* bias, double* out);                                \
    void dwconv3x3_bwd_input(const double* gout, int c, int h, int w,                   \
                             const double* wt, double* gin);                            \
    void dwconv3x3_bwd_params(const double* gout, const double* in, int c, int h,       \
                              int w, double* gwt, double* gbias);                       \
    /* pointwise (1x1) convolution over hw positions */                                 \
    void conv1x1_fwd(const double* in, int ci, int hw, const double* wt,                \
                     const double* bias, int co, double* out);                          \
    void conv1x1_bwd_input(const double* gout, int co, int hw, const double* wt,        \
                           int ci, double* gin);                                        \
    void conv1x1_bwd_params(const double* gout, int co, const double* in, int ci,       \
                            int hw, double* gwt, double* gbias);                        \
    void relu_fwd(const double* in, std::size_t n, double* out);                        \
    void relu_bwd(const double* in, const double* gout, std::size_t n, double* gin);    \
    void sigmoid_fwd(const double* in, std::size_t n, double* out);                     \
    void sigmoid_bwd(const double* out, const double* gout, std::size_t n,              \
                     double* gin);                                                      \
    /* 2x2 average pooling (h, w even) */                                               \
    void avgpool2_fwd(const double* in, int c, int h, int w, double* out);              \
    void avgpool2_bwd(const double* gout, int c, int h, int w, double* gin);            \
    /* 2x nearest-neighbor upsampling */                                                \
    void upsample2_fwd(const double* in, int c, int h, int w, double* out);             \
    void upsample2_bwd(const double* gout, int c, int h, int w, double* gin);           \
    /* fully connected: out[o] = bias[o] + sum_i wt[o*ci+i]*in[i] */                    \
    void linear_fwd(const double* in, int ci, const double* wt, const double* bias,     \
                    int co, double* out);                                               \
    void linear_bwd_input(const double* gout, int co, const double* wt, int ci,         \
                          double* gin);                                                 \
    void linear_bwd_params(const double* gout, int co, const double* in, int ci,        \
                           double* gwt, double* gbias);                                 \
    /* bilinear resample at half-pixel centers, clamped to the 4-tap hull */            \
    void resize_bilinear(const double* in, int h, int w, int oh, int ow,                \
                         double* out);                                                  \
    /* attention-weighted first/second moments of style features.                       \
       content/style are channel-major [c][n]; K and Q are the per-position             \
       channel-normalized features, A = row-softmax(Q K^T), and                         \
       mean = A Vraw, std = sqrt(max(0, A Vraw^2 - mean^2)) clamped >= eps. */          \
    void attn_weighted_stats(const double* content, int c, int n_c,                     \
                             const double* style, int n_s, double eps,                  \
                             double* mean_map, double* std_map);                        \
    /* one exact t-SNE gradient evaluation given precomputed p, y */                    \
    void tsne_gradient(const double* p, const double* y, int n, double* grad);

namespace lf::kern {
LF_DECLARE_KERNELS
namespace serial {
LF_DECLARE_KERNELS
}
} // namespace lf::kern

#undef LF_DECLARE_KERNELS
