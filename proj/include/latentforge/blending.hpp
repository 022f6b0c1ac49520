#pragma once

#include "latentforge/records.hpp"
#include "latentforge/style_transfer.hpp"

namespace lf {

inline constexpr double kAlphaMin = 0.3;
inline constexpr double kAlphaMax = 0.8;

enum class BackgroundStyle { plain, textured };

// Random-position crops of background or latent source images, resized to
// the pipeline resolution; source_ids record per-crop provenance.
struct BackgroundLibrary {
    std::vector<GrayImage> crops;
    std::vector<std::string> source_ids;
    BackgroundStyle style_tag = BackgroundStyle::plain;

    std::size_t size() const { return crops.size(); }
    // unique per-crop id: "<index>:<source_id>"
    std::string crop_id(std::size_t i) const;
    const GrayImage& lookup(const std::string& background_id) const;
};

struct BlendSpec {
    double alpha = kAlphaMin;
    std::string background_id;
    std::uint64_t seed = 0;
};

// Uniform draw in [0.3, 0.8].
double sample_alpha(RandomSource& rng);

// alpha*F + (1-alpha)*noise, clamped into [0,1] against rounding.
GrayImage blend(const GrayImage& fingerprint, const GrayImage& noise, double alpha);

BackgroundLibrary make_background_library(const std::vector<FingerprintRecord>& records,
                                          int crop, int count, int resolution,
                                          RandomSource& rng, BackgroundStyle style_tag);

// Speckle baseline: F' = clamp(F + F.*n), n ~ N(0, variance) i.i.d., then
// blend with a random library crop at a sampled alpha.
GrayImage speckle_baseline(const GrayImage& fingerprint, const BackgroundLibrary& lib,
                           double variance, RandomSource& rng);

// blend(stylize(model, F_c, F_s), lib[spec.background_id], spec.alpha)
GrayImage generate_latent(const StyleTransferModel& model, const GrayImage& f_c,
                          const GrayImage& f_s, const BackgroundLibrary& lib,
                          const BlendSpec& spec);

// Provenance ledger of generated latents. CSV header
// `synthetic_path,content_path,style_path,background_id,alpha,seed,set_tag`,
// alpha printed with 6 decimals, paths relative to the manifest file.
struct GenerationRecord {
    std::filesystem::path synthetic_path;
    std::filesystem::path content_path;
    std::filesystem::path style_path;
    std::string background_id;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    std::string set_tag;
};

void write_generation_manifest(const std::vector<GenerationRecord>& records,
                               const std::filesystem::path& manifest_path);
std::vector<GenerationRecord> read_generation_manifest(
    const std::filesystem::path& manifest_path);

} // namespace lf
