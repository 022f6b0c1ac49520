#pragma once

#include <stdexcept>
#include <string>

namespace lf {

enum class ErrorCode {
    MissingFile,
    UnsupportedFormat,
    TooSmall,
    WriteFailure,
    ShapeError,
    ShapeMismatch,
    ChannelMismatch,
    StageMismatch,
    EmptyMap,
    EmptyInput,
    NegativeLoss,
    AlphaOutOfRange,
    SourceTooSmall,
    UnknownBackground,
    EmptyBackgroundLibrary,
    InsufficientClasses,
    NoMatedPairs,
    NonFiniteLoss,
    ToolUnavailable,
    ToolParseError,
    MissingMate,
    TooFewPoints,
    BadPerplexity,
    LayoutError,
    ConfigError,
    UsageError,
    LockError,
    IoError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingFile: return "MissingFile";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::WriteFailure: return "WriteFailure";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ChannelMismatch: return "ChannelMismatch";
        case ErrorCode::StageMismatch: return "StageMismatch";
        case ErrorCode::EmptyMap: return "EmptyMap";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NegativeLoss: return "NegativeLoss";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::SourceTooSmall: return "SourceTooSmall";
        case ErrorCode::UnknownBackground: return "UnknownBackground";
        case ErrorCode::EmptyBackgroundLibrary: return "EmptyBackgroundLibrary";
        case ErrorCode::InsufficientClasses: return "InsufficientClasses";
        case ErrorCode::NoMatedPairs: return "NoMatedPairs";
        case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
        case ErrorCode::ToolUnavailable: return "ToolUnavailable";
        case ErrorCode::ToolParseError: return "ToolParseError";
        case ErrorCode::MissingMate: return "MissingMate";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::BadPerplexity: return "BadPerplexity";
        case ErrorCode::LayoutError: return "LayoutError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::LockError: return "LockError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace lf
