#pragma once

#include "latentforge/encoders.hpp"

#include <array>
#include <filesystem>

namespace lf {

// Shared floor for every standard-deviation clamp in normalization.
inline constexpr double kStatEps = 1e-5;

// Per-channel spatial mean and population standard deviation (clamped >= eps).
struct InstanceStats {
    std::vector<double> mean;
    std::vector<double> stdev;
};

InstanceStats instance_stats(const Tensor& f);

// out = target.std * (x - mu(x)) / sigma(x) + target.mean, per channel.
Tensor adain(const Tensor& content, const InstanceStats& target);

// (x - mu_c) / sigma_c per channel over spatial positions.
Tensor instance_normalize(const Tensor& f);

// Attention-weighted per-position style statistics: Q/K are per-position
// channel-normalized content/style features, A = row-softmax(Q K^T),
// mean = A Vraw and std = sqrt(max(0, A Vraw^2 - mean^2)) clamped >= eps.
struct AttnStats {
    Tensor mean_map;
    Tensor std_map;
};

AttnStats attention_weighted_stats(const Tensor& content_feat, const Tensor& style_feat);

// std_map * instance_normalize(content) + mean_map
Tensor adaattn_block(const Tensor& content_feat, const Tensor& style_feat);

// Analytic gradients of adaattn_block w.r.t. both inputs; verified against
// central finite differences. Either output pointer may be null.
void adaattn_block_backward(const Tensor& content_feat, const Tensor& style_feat,
                            const Tensor& gout, Tensor* gcontent, Tensor* gstyle);

// Mirrors encoder stages 5..1: nearest-neighbor upsampling, depthwise +
// pointwise convolutions, stage-3/4 skip projections, sigmoid-bounded output.
struct Decoder {
    DWConv3x3 d5_dw;
    Conv1x1 d5_pw;
    ReLU d5_relu;
    Upsample2 d5_up;
    Conv1x1 proj4;
    DWConv3x3 d4_dw;
    Conv1x1 d4_pw;
    ReLU d4_relu;
    Upsample2 d4_up;
    Conv1x1 proj3;
    DWConv3x3 d3_dw;
    Conv1x1 d3_pw;
    ReLU d3_relu;
    Upsample2 d3_up;
    DWConv3x3 d2_dw;
    Conv1x1 d2_pw;
    ReLU d2_relu;
    Upsample2 d2_up;
    Conv3x3 out_conv;
    Sigmoid out_act;

    static Decoder make(RandomSource& rng);

    Tensor infer(const Tensor& f3, const Tensor& f4, const Tensor& f5) const;
    Tensor forward(const Tensor& f3, const Tensor& f4, const Tensor& f5);
    // returns grads w.r.t. (f3, f4, f5)
    std::array<Tensor, 3> backward(const Tensor& gy, bool wgrad);
    void params(ParamList& out, const std::string& prefix = "decoder");
};

// Shape-checked decode of fused stage-3..5 maps to a bounded image.
GrayImage decode(const Decoder& dec, const std::vector<Tensor>& fused);

// Frozen perceptual encoder + per-stage attention adapters (identity-init
// 1x1 convolutions on the fused maps; the trainable "attention parameters")
// + decoder.
struct StyleTransferModel {
    PerceptualEncoder encoder;
    std::array<Conv1x1, 3> attn_adapt; // stages 3, 4, 5
    Decoder decoder;

    static StyleTransferModel make(RandomSource& rng);

    GrayImage stylize(const GrayImage& content, const GrayImage& style) const;

    void trainable_params(ParamList& out); // decoder + attention adapters
    void all_params(ParamList& out);       // + frozen encoder
};

GrayImage stylize(const StyleTransferModel& model, const GrayImage& content,
                  const GrayImage& style);

void save_model(const StyleTransferModel& model, const std::filesystem::path& dir);
StyleTransferModel load_model(const std::filesystem::path& dir);

} // namespace lf
