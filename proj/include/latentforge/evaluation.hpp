#pragma once

#include "latentforge/blending.hpp"
#include "latentforge/tsne.hpp"

#include <optional>

namespace lf {

// ---- quality scoring ----

struct QualityScore {
    int value = 0;
    enum class Source { external_nfiq2, internal_proxy } source = Source::internal_proxy;
};

struct QualityResult {
    std::optional<QualityScore> score;
    std::string error; // non-empty on per-image tool failure
};

// Empty exe selects the internal proxy. External contract:
// `<exe> <image_path>` printing one integer 0..100; nonzero exit or
// unparsable output yields a per-image error entry.
struct QualityTool {
    std::string external_exe;
    bool is_proxy() const { return external_exe.empty(); }
};

// Ridge clarity proxy: mean local gradient magnitude times local orientation
// coherence over 8x8 blocks, affinely mapped to 0..100. A constant image
// scores 0.
int quality_proxy_score(const GrayImage& img);

std::vector<QualityResult> quality_scores(const std::vector<GrayImage>& images,
                                          const QualityTool& tool);
std::vector<QualityResult> quality_scores_paths(const std::vector<std::filesystem::path>& paths,
                                                const QualityTool& tool);

// ---- genuine-pair matching ----

struct MatchScore {
    double value = 0.0;
    enum class Source { external_matcher, embedding_proxy } source = Source::embedding_proxy;
};

struct MatchResult {
    std::optional<MatchScore> score;
    std::string error;
};

// Empty exe selects the embedding proxy (needs the frozen identity encoder).
// External contract: `<exe> <probe> <gallery>` printing one non-negative
// decimal.
struct MatcherTool {
    std::string external_exe;
    const IdentityEncoder* identity = nullptr;
    int resolution = 64;
    bool is_proxy() const { return external_exe.empty(); }
};

// 1000 * max(0, cosine similarity); symmetric in its arguments.
double proxy_match_score(const IdentityEmbedding& a, const IdentityEmbedding& b);

std::vector<MatchResult> genuine_pair_scores(const std::vector<GenerationRecord>& manifest,
                                             const MatcherTool& matcher);

// ---- statistics ----

struct ScoreSummary {
    double mean = 0.0;
    double stdev = 0.0; // sample (n-1); 0 when n == 1
    double median = 0.0;
    std::size_t n = 0;
};

ScoreSummary score_summary(const std::vector<double>& scores);

// `<name>, <mean>, <std>, <median>` with up to 4 decimals, zeros trimmed.
std::string format_summary_row(const std::string& name, const ScoreSummary& s);

struct Histogram {
    std::vector<double> edges;  // bins+1 fixed edges over [0,100]
    std::vector<double> masses; // normalized counts, sum 1
};

Histogram quality_histogram(const std::vector<QualityScore>& scores, int bins);

// 1-D Wasserstein distance between two empirical samples.
double wasserstein_1d(std::vector<double> a, std::vector<double> b);

std::vector<IdentityEmbedding> embed_dataset(const std::vector<GrayImage>& images,
                                             const IdentityEncoder& v);

// ---- report assembly ----

struct EvalSetSummary {
    std::string name;
    std::size_t images = 0;
    ScoreSummary genuine;
    ScoreSummary quality;
    std::size_t quality_errors = 0;
    std::size_t genuine_errors = 0;
    std::string histogram_file;
    std::string projection_file;
    std::optional<double> wasserstein_vs_real;
    std::vector<std::pair<std::string, double>> wasserstein_vs; // other sets
};

// Hierarchical key-value document, one [set <name>] section per dataset.
std::string render_report(const std::vector<EvalSetSummary>& sets);

void write_histogram_csv(const Histogram& h, const std::filesystem::path& path);
void write_projection_csv(const Projection2D& p, const std::filesystem::path& path);

// ---- external tool plumbing ----

struct ToolRun {
    int exit_code = -1;
    std::string output;
};

// Runs `<exe> <args...>` through the shell with quoting; throws
// ToolUnavailable when the executable is missing.
ToolRun run_external_tool(const std::string& exe, const std::vector<std::string>& args);

} // namespace lf
