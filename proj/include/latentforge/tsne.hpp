#pragma once

#include "latentforge/tensor.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lf {

struct Projection2D {
    std::vector<std::array<double, 2>> points;
    std::vector<std::string> labels;
    std::uint64_t seed = 0;
};

struct TsneOptions {
    int iterations = 1000;
    double learning_rate = 200.0;
    double early_exaggeration = 12.0;
    int exaggeration_until = 250;
    int momentum_switch = 250;
    double initial_momentum = 0.5;
    double final_momentum = 0.8;
};

// Exact (non-Barnes-Hut) t-SNE to 2 components. Deterministic given seed;
// points run in a canonical content order internally, so the output is
// invariant to input order up to the same permutation of rows. Requires
// n >= 5 and 0 < perplexity < (n-1)/3.
Projection2D tsne_project(const std::vector<IdentityEmbedding>& embeddings,
                          const std::vector<std::string>& labels, std::uint64_t seed,
                          double perplexity, const TsneOptions& opts = {});

// Default perplexity 30, capped below the precondition bound for small n.
double default_perplexity(std::size_t n);

} // namespace lf
