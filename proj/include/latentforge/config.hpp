#pragma once

#include "latentforge/training.hpp"

namespace lf {

// Flat `key = value` configuration with bracketed sections; CLI flags
// override file keys, LATENTFORGE_SEED overrides the configured seed.
struct PipelineConfig {
    std::uint64_t seed = 42;
    int resolution = 256;
    std::filesystem::path output_dir = "out";

    // [train]
    int train_steps = 200;
    int batch_size = 4;
    double learning_rate = 1e-4;
    LossWeights weights;
    int checkpoint_every = 100;
    int encoder_pretrain_steps = 100;
    int identity_pretrain_steps = 300;

    // [blend]
    double alpha_min = 0.3;
    double alpha_max = 0.8;
    int background_crop = 320;
    int background_count = 16;
    double speckle_variance = 0.05;

    // [backgrounds]
    std::filesystem::path background_plain;
    std::filesystem::path background_textured;

    // [tools] — empty or "proxy" selects the internal proxies
    std::string quality_tool;
    std::string matcher_tool;

    // [tsne]
    double tsne_perplexity = 30.0;
    int tsne_iterations = 1000;

    TrainConfig train_config() const;
    void validate() const;
};

using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

PipelineConfig load_config(const std::filesystem::path& path,
                           const ConfigOverrides& overrides = {});
PipelineConfig config_from_overrides(const ConfigOverrides& overrides);

// Effective configuration in the file format (--print-config).
std::string print_config(const PipelineConfig& cfg);

} // namespace lf
