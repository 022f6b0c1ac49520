#pragma once

#include "latentforge/style_transfer.hpp"

namespace lf {

struct LossWeights {
    double lambda_g = 3.0;
    double lambda_l = 10.0;
    double lambda_i = 1.0;
};

struct LossBreakdown {
    double gs = 0.0;
    double lf = 0.0;
    double id = 0.0;
    double total = 0.0;
};

// Global style loss over stages 2..5: MSE of per-channel means plus MSE of
// per-channel (population, eps-clamped) standard deviations.
double global_style_loss(const FeaturePyramid& pyr_cs, const FeaturePyramid& pyr_s);

// Gradients w.r.t. the stylized pyramid's stage maps (stages 2..5 populated).
std::array<Tensor, 5> global_style_loss_backward(const FeaturePyramid& pyr_cs,
                                                 const FeaturePyramid& pyr_s);

// Same loss/grad against precomputed style statistics for stages 2..5
// (training caches these per pair instead of re-encoding the style image).
double global_style_loss_stats(const FeaturePyramid& pyr_cs,
                               const std::array<InstanceStats, 4>& style_stats);
std::array<Tensor, 5> global_style_loss_stats_backward(
    const FeaturePyramid& pyr_cs, const std::array<InstanceStats, 4>& style_stats);

// Local feature loss over stages 3..5: MSE between the stylized features and
// the attention-fused target adaattn_block(stage_c, stage_s).
double local_feature_loss(const FeaturePyramid& pyr_cs, const FeaturePyramid& pyr_c,
                          const FeaturePyramid& pyr_s);

// Same, against precomputed targets (training caches them per pair).
double local_feature_loss_to_targets(const FeaturePyramid& pyr_cs,
                                     const std::array<Tensor, 3>& targets);
std::array<Tensor, 5> local_feature_loss_backward(const FeaturePyramid& pyr_cs,
                                                  const std::array<Tensor, 3>& targets);

// MSE over the 512 embedding components of V(F_cs) and V(F_c).
double identity_loss(const IdentityEncoder& v, const GrayImage& f_cs, const GrayImage& f_c);

// Exposed so synthetic embeddings can be tested directly.
double embedding_mse(const IdentityEmbedding& a, const IdentityEmbedding& b);

// lambda_g*gs + lambda_l*lf + lambda_i*id; parts must be non-negative.
LossBreakdown total_loss(double gs, double lf, double id, const LossWeights& w);

// Append-only training log: `step,gs,lf,id,total` with full float precision.
std::string loss_csv_header();
std::string loss_csv_row(int step, const LossBreakdown& b);

} // namespace lf
