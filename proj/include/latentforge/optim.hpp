#pragma once

#include "latentforge/layers.hpp"

#include <cmath>
#include <cstdint>

namespace lf {

// Adaptive-moment gradient descent. Moment buffers pair positionally with a
// fixed ParamList, and are exposed as named tensors (adam.m.*, adam.v.*) so
// checkpoints can resume runs exactly.
struct AdamOptimizer {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    int t = 0;
    std::vector<std::vector<double>> m, v;

    void init(const ParamList& params) {
        m.clear();
        v.clear();
        for (const auto& p : params) {
            m.emplace_back(p.data->size(), 0.0);
            v.emplace_back(p.data->size(), 0.0);
        }
        t = 0;
    }

    void step(const ParamList& params) {
        ++t;
        const double bc1 = 1.0 - std::pow(beta1, t);
        const double bc2 = 1.0 - std::pow(beta2, t);
        for (std::size_t k = 0; k < params.size(); ++k) {
            auto& data = *params[k].data;
            auto& grad = *params[k].grad;
            auto& mk = m[k];
            auto& vk = v[k];
            const std::int64_t n = static_cast<std::int64_t>(data.size());
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < n; ++i) {
                const double g = grad[i];
                mk[i] = beta1 * mk[i] + (1.0 - beta1) * g;
                vk[i] = beta2 * vk[i] + (1.0 - beta2) * g * g;
                const double mhat = mk[i] / bc1;
                const double vhat = vk[i] / bc2;
                data[i] -= lr * mhat / (std::sqrt(vhat) + eps);
            }
        }
    }

    // moment buffers as ParamRefs for checkpointing (grad slots reuse data)
    void state_params(const ParamList& params, ParamList& out) {
        for (std::size_t k = 0; k < params.size(); ++k) {
            out.push_back({"adam.m." + params[k].name, params[k].shape, &m[k], &m[k]});
            out.push_back({"adam.v." + params[k].name, params[k].shape, &v[k], &v[k]});
        }
    }
};

} // namespace lf
