#pragma once

#include "latentforge/losses.hpp"
#include "latentforge/optim.hpp"

#include <map>
#include <optional>

namespace lf {

struct TrainConfig {
    int steps = 200;
    int batch_size = 4;
    double learning_rate = 1e-4;
    LossWeights weights;
    int resolution = 256; // must be divisible by 16
    std::uint64_t seed = 0;
    int checkpoint_every = 100;
};

void validate_train_config(const TrainConfig& cfg);

// Mated content-style pairs: every latent with a mated sensor appears once,
// content assigned round-robin over that finger's sensors (corpus order),
// final order shuffled by rng. Throws NoMatedPairs.
std::vector<PairSample> build_pairs(const std::vector<FingerprintRecord>& corpus,
                                    RandomSource& rng);

// Per-pair constants cached across steps (E and V are frozen).
struct PairActivations {
    std::array<Tensor, 3> targets; // adaattn outputs, stages 3..5
    std::array<InstanceStats, 4> style_stats; // stages 2..5
    IdentityEmbedding content_embedding;
    Tensor content; // unused by the step itself, kept for evaluation hooks
};

struct TrainState {
    StyleTransferModel model;
    int step = 0;
    std::vector<LossBreakdown> loss_history;
    AdamOptimizer opt;
    IdentityEncoder identity; // frozen working copy (caches are scratch)

    // transient caches, never serialized
    std::map<std::string, GrayImage> image_cache;
    std::map<std::string, PairActivations> pair_cache;
};

TrainState make_train_state(StyleTransferModel model, IdentityEncoder identity,
                            const TrainConfig& cfg);

// One gradient update on decoder + attention parameters (E and V frozen).
// Throws NonFiniteLoss naming the offending batch when a loss goes NaN/Inf.
TrainState train_step(TrainState state, const std::vector<PairSample>& batch,
                      const TrainConfig& cfg);

// Full loop: rotating batches over the shuffled pair list, a checkpoint at
// step 0 and every checkpoint_every steps, plus `final/`. Empty out_dir
// skips checkpointing. Appends to <out_dir>/loss.csv.
TrainState train(const std::vector<FingerprintRecord>& corpus, const TrainConfig& cfg,
                 TrainState state, const std::filesystem::path& out_dir);

// Checkpoint layout: <dir>/ holds the model + optimizer tensors and
// state.txt with step and seed; the identity encoder saves alongside under
// identity/.
void save_train_checkpoint(const TrainState& state, const TrainConfig& cfg,
                           const std::filesystem::path& dir);
TrainState load_train_checkpoint(const std::filesystem::path& dir, const TrainConfig& cfg,
                                 const std::filesystem::path& loss_csv = {});

} // namespace lf
