#include "orbitcode/errors.hpp"

namespace orbitcode {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::NonMonicOrWrongDegree: return "NonMonicOrWrongDegree";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::GroupOrderOverflow: return "GroupOrderOverflow";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::NonDivisorDegree: return "NonDivisorDegree";
        case ErrorCode::NonPrimitiveAlpha: return "NonPrimitiveAlpha";
        case ErrorCode::MixedContexts: return "MixedContexts";
        case ErrorCode::ZeroScalar: return "ZeroScalar";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::DegenerateSubspace: return "DegenerateSubspace";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::StabilizerTooSmall: return "StabilizerTooSmall";
        case ErrorCode::GeneratorInV: return "GeneratorInV";
        case ErrorCode::NotFullLength: return "NotFullLength";
        case ErrorCode::NotASunflower: return "NotASunflower";
        case ErrorCode::ResidueOutOfRange: return "ResidueOutOfRange";
        case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
        case ErrorCode::NonDivisorSubgroup: return "NonDivisorSubgroup";
        case ErrorCode::NotEquidistant: return "NotEquidistant";
        case ErrorCode::ZeroIntersection: return "ZeroIntersection";
        case ErrorCode::NotADifferenceSet: return "NotADifferenceSet";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ParameterOrderViolation: return "ParameterOrderViolation";
        case ErrorCode::OddDegreeField: return "OddDegreeField";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace orbitcode
