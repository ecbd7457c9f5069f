#pragma once

#include <stdexcept>
#include <string>

namespace tenfold {

enum class ErrorCode {
    // numkit
    NotHermitian,
    NoConvergence,
    NotAntisymmetric,
    OddDimension,
    DimensionMismatch,
    // models
    UnknownModel,
    MissingParam,
    GridTooSmall,
    NotEven,
    GaplessModel,
    // symmetry
    InconsistentSignature,
    AmbiguousWitness,
    NoCandidates,
    // ktable
    ComplexClass,
    // invariants
    NonConvergent,
    SingularOverlap,
    NotChiral,
    OddSplit,
    NotClassD,
    NoRealityConstraint,
    NotTimeReversal,
    OddOccupation,
    NotSmooth,
    InconsistentOccupation,
    // cli / io
    UsageError,
    FileNotFound,
    BadModelFile,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace tenfold
