#pragma once

#include <stdexcept>
#include <string>

namespace orbitcode {

/// Stable error identifiers. The CLI prints the identifier as the
/// machine-readable failure reason and maps it to an exit code.
enum class ErrorCode {
    NonPrimeCharacteristic,
    NonMonicOrWrongDegree,
    ReducibleModulus,
    GroupOrderOverflow,
    DivisionByZero,
    ZeroElement,
    NonDivisorDegree,
    NonPrimitiveAlpha,
    MixedContexts,
    ZeroScalar,
    EnumerationTooLarge,
    DegenerateSubspace,
    ZeroGenerator,
    StabilizerTooSmall,
    GeneratorInV,
    NotFullLength,
    NotASunflower,
    ResidueOutOfRange,
    SizeOutOfRange,
    NonDivisorSubgroup,
    NotEquidistant,
    ZeroIntersection,
    NotADifferenceSet,
    DimensionMismatch,
    ParameterOrderViolation,
    OddDegreeField,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail = {})
        : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                            : std::string(to_string(code)) + ": " + detail),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* name() const noexcept { return to_string(code_); }

private:
    ErrorCode code_;
};

}  // namespace orbitcode
