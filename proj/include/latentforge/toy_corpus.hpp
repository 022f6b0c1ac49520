#pragma once

#include "latentforge/records.hpp"
#include "latentforge/random.hpp"

namespace lf {

// Synthetic ridge-pattern corpus: per finger one clean "sensor" image
// (oriented sinusoidal ridge field under an elliptical mask) and
// per_finger-1 degraded "latent" variants (contrast reduction, occlusion
// patches, mild additive noise). Written to out_dir using the ingest layout
// <out_dir>/<kind>/<subject>_<finger>_<idx>.png.
std::vector<FingerprintRecord> make_toy_corpus(int n_fingers, int per_finger,
                                               int resolution, RandomSource& rng,
                                               const std::filesystem::path& out_dir);

} // namespace lf
