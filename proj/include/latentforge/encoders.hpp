#pragma once

#include "latentforge/image.hpp"
#include "latentforge/layers.hpp"
#include "latentforge/records.hpp"

#include <array>
#include <cstdint>

namespace lf {

Tensor image_to_tensor(const GrayImage& img);
GrayImage tensor_to_image(const Tensor& t); // clamps into [0,1]

// pool -> depthwise 3x3 -> pointwise 1x1 -> relu
struct ConvStage {
    AvgPool2 pool;
    DWConv3x3 dw;
    Conv1x1 pw;
    ReLU relu;

    void init(int ci, int co, RandomSource& rng);
    Tensor infer(const Tensor& x) const;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy, bool wgrad);
    void params(const std::string& prefix, ParamList& out);
};

// Five-stage rectified feature pyramid: stage s downsamples by 2^(s-1),
// channels (64, 128, 256, 512, 512).
struct PerceptualEncoder {
    Conv3x3 s1_conv;
    ReLU s1_relu;
    ConvStage s2, s3, s4, s5;
    bool frozen = false;

    static PerceptualEncoder make(RandomSource& rng);

    FeaturePyramid encode(const Tensor& x) const;
    FeaturePyramid forward(const Tensor& x);
    // Chains per-stage output grads back to the input; empty tensors mean
    // no grad at that stage. Parameter grads accumulate only when wgrad.
    Tensor backward(const std::array<Tensor, 5>& stage_grads, bool wgrad);
    void params(ParamList& out, const std::string& prefix = "encoder");
    std::uint64_t checksum();
};

// Input must be at least 16x16 with dimensions divisible by 16.
FeaturePyramid encode_pyramid(const PerceptualEncoder& enc, const GrayImage& img);

// Convolutional trunk + global average pooling + projection to 512,
// L2-normalized output.
struct IdentityEncoder {
    Conv3x3 c0;
    ReLU r0;
    ConvStage s1, s2, s3;
    GlobalAvgPool gap;
    Linear proj;
    L2Normalize norm;
    bool frozen = false;

    static IdentityEncoder make(RandomSource& rng);

    IdentityEmbedding embed(const GrayImage& img) const;
    std::vector<double> forward(const Tensor& x);
    Tensor backward(const std::vector<double>& gy, bool wgrad);
    void params(ParamList& out, const std::string& prefix = "identity");
    std::uint64_t checksum();
};

IdentityEmbedding embed_identity(const IdentityEncoder& v, const GrayImage& img);

// Random rotation (±15 deg) plus zoom crop, clamp-to-edge bilinear resample.
GrayImage augment_crop_rotate(const GrayImage& img, RandomSource& rng);

struct PretrainLog {
    double initial_train_loss = 0.0;
    double final_train_loss = 0.0;
    double initial_val_loss = 0.0;
    double final_val_loss = 0.0;
    std::vector<double> history;
};

struct IdentityPretrainOptions {
    int batch_triplets = 6;
    double learning_rate = 3e-3;
    double margin = 0.2;
    int resolution = 64;
    int val_triplets = 32;
};

// Triplet-margin pretraining over (subject, finger) classes of the sensor
// corpus; returns the encoder frozen. steps == 0 freezes without touching
// weights. Throws InsufficientClasses.
IdentityEncoder pretrain_identity(IdentityEncoder v,
                                  const std::vector<FingerprintRecord>& corpus,
                                  RandomSource& rng, int steps,
                                  const IdentityPretrainOptions& opts = {},
                                  PretrainLog* log = nullptr);

struct EncoderPretrainOptions {
    int batch_size = 4;
    double learning_rate = 1e-3;
    int resolution = 64;
};

// Autoencoder pretraining of the perceptual pyramid on sensor images (the
// reconstruction head is discarded); returns the encoder frozen.
PerceptualEncoder pretrain_encoder(PerceptualEncoder enc,
                                   const std::vector<FingerprintRecord>& corpus,
                                   RandomSource& rng, int steps,
                                   const EncoderPretrainOptions& opts = {},
                                   PretrainLog* log = nullptr);

} // namespace lf
