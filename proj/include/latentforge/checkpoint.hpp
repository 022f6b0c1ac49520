#pragma once

#include "latentforge/layers.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace lf {

// Checkpoint directory format: `weights.bin` holds one raw little-endian
// f64 blob per named tensor; `index.txt` lists `name,shape,dtype,offset`
// (shape like 64x1x3x3, offset in bytes); optional `manifest.txt` carries
// `key = value` metadata. Round-trips are bit-exact.
void save_checkpoint(const std::filesystem::path& dir, const ParamList& params,
                     const std::map<std::string, std::string>& manifest = {});

struct LoadedTensor {
    std::vector<int> shape;
    std::vector<double> data;
};

struct Checkpoint {
    std::map<std::string, LoadedTensor> tensors;
    std::map<std::string, std::string> manifest;
};

Checkpoint load_checkpoint(const std::filesystem::path& dir);

// Copies every entry of `params` from the checkpoint; missing names or
// shape mismatches throw ShapeError.
void restore_params(const Checkpoint& ckpt, const ParamList& params);

} // namespace lf
