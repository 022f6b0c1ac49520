#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace lf {

enum class RecordKind { sensor, latent, background, synthetic };

const char* to_string(RecordKind kind);
RecordKind record_kind_from_string(const std::string& s);

struct FingerprintRecord {
    std::filesystem::path image_path;
    std::string subject_id;
    std::string finger_id;
    RecordKind kind = RecordKind::sensor;
    std::string surface; // optional

    bool same_finger(const FingerprintRecord& o) const {
        return subject_id == o.subject_id && finger_id == o.finger_id;
    }
};

// Content-style training pair: same finger of the same subject.
struct PairSample {
    FingerprintRecord content; // kind == sensor
    FingerprintRecord style;   // kind == latent
};

// Corpus manifest CSV: header `path,subject_id,finger_id,kind,surface`,
// comma-separated, fields may not contain commas. Paths are stored relative
// to the manifest file and resolved against its directory on load.
void write_manifest(const std::vector<FingerprintRecord>& records,
                    const std::filesystem::path& manifest_path);
std::vector<FingerprintRecord> read_manifest(const std::filesystem::path& manifest_path);

// Checks corpus invariants: (subject, finger, path) unique, background
// records unkeyed. Throws LayoutError.
void validate_corpus(const std::vector<FingerprintRecord>& records);

} // namespace lf
