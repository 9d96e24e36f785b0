#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordinary {

enum class ErrorKind {
    DegenerateLine,
    IdenticalLines,
    WitnessOnLine,
    DimensionMismatch,
    NotAnArrangement,
    AllParallel,
    AllConcurrent,
    HypothesisViolated,
    DuplicateHyperplane,
    NoCrossing,
    MultipleCrossings,
    InvalidArrangement,
    SpecInfeasible,
    Parse,
    Internal,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::IdenticalLines: return "IdenticalLines";
    case ErrorKind::WitnessOnLine: return "WitnessOnLine";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAnArrangement: return "NotAnArrangement";
    case ErrorKind::AllParallel: return "AllParallel";
    case ErrorKind::AllConcurrent: return "AllConcurrent";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::NoCrossing: return "NoCrossing";
    case ErrorKind::MultipleCrossings: return "MultipleCrossings";
    case ErrorKind::InvalidArrangement: return "InvalidArrangement";
    case ErrorKind::SpecInfeasible: return "SpecInfeasible";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Invariant failure inside an algorithm. Never caught by library code.
inline void check_invariant(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::Internal, std::string("invariant violated: ") + what);
}

} // namespace ordinary
