#pragma once
// Error taxonomy for the whole library. Every failure surfaces as an Error
// carrying a kind; the CLI maps kinds onto exit codes (config/usage -> 2,
// data -> 1).

#include <stdexcept>
#include <string>

namespace hypo {

enum class ErrorKind {
    InsufficientData,
    InvalidValue,
    Schema,
    Parse,
    Conflict,
    Referential,
    MissingChannel,
    EmptyRecording,
    Config,
    Shape,
    DegenerateLabels,
    Separation,
    Collinearity,
    NotConverged,
    Io,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::InvalidValue:     return "invalid-value";
        case ErrorKind::Schema:           return "schema";
        case ErrorKind::Parse:            return "parse";
        case ErrorKind::Conflict:         return "conflict";
        case ErrorKind::Referential:      return "referential";
        case ErrorKind::MissingChannel:   return "missing-channel";
        case ErrorKind::EmptyRecording:   return "empty-recording";
        case ErrorKind::Config:           return "config";
        case ErrorKind::Shape:            return "shape";
        case ErrorKind::DegenerateLabels: return "degenerate-labels";
        case ErrorKind::Separation:       return "separation";
        case ErrorKind::Collinearity:     return "collinearity";
        case ErrorKind::NotConverged:     return "not-converged";
        case ErrorKind::Io:               return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Usage-class problems are the caller's fault; everything else is data.
    bool is_usage() const noexcept { return kind_ == ErrorKind::Config; }

private:
    ErrorKind kind_;
};

}  // namespace hypo
