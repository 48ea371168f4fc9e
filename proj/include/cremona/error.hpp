#ifndef CREMONA_ERROR_HPP
#define CREMONA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorCode {
    DegreeMismatch,
    DegenerateTriple,
    SingularMatrix,
    NotQuadratic,
    NotBirational,
    ResultantCollapse,
    IncompleteVector,
    InvalidForest,
    DegreeTooLarge,
    NonProperCenter,
    NoetherViolation,
    BoundsViolation,
    Stuck,
    NonterminationGuard,
    InsufficientBaseCount,
    CollinearCenters,
    IrrationalBaseLocus,
    NotAutomorphism,
    DeterminantNotUnit,
    ParseError,
    InvalidArgument,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
        case ErrorCode::DegenerateTriple: return "DEGENERATE_TRIPLE";
        case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
        case ErrorCode::NotQuadratic: return "NOT_QUADRATIC";
        case ErrorCode::NotBirational: return "NOT_BIRATIONAL";
        case ErrorCode::ResultantCollapse: return "RESULTANT_COLLAPSE";
        case ErrorCode::IncompleteVector: return "INCOMPLETE_VECTOR";
        case ErrorCode::InvalidForest: return "INVALID_FOREST";
        case ErrorCode::DegreeTooLarge: return "DEGREE_TOO_LARGE";
        case ErrorCode::NonProperCenter: return "NON_PROPER_CENTER";
        case ErrorCode::NoetherViolation: return "NOETHER_VIOLATION";
        case ErrorCode::BoundsViolation: return "BOUNDS_VIOLATION";
        case ErrorCode::Stuck: return "STUCK";
        case ErrorCode::NonterminationGuard: return "NONTERMINATION_GUARD";
        case ErrorCode::InsufficientBaseCount: return "INSUFFICIENT_BASE_COUNT";
        case ErrorCode::CollinearCenters: return "COLLINEAR_CENTERS";
        case ErrorCode::IrrationalBaseLocus: return "IRRATIONAL_BASE_LOCUS";
        case ErrorCode::NotAutomorphism: return "NOT_AUTOMORPHISM";
        case ErrorCode::DeterminantNotUnit: return "DETERMINANT_NOT_UNIT";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

/// Domain error carrying a stable, machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Parse failure with the byte offset at which it was detected.
class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace cremona

#endif  // CREMONA_ERROR_HPP
