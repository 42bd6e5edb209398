#include "mhgc/error.hpp"

namespace mhgc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotNondegenerate: return "NotNondegenerate";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::InvalidGroup: return "InvalidGroup";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::RangeFailure: return "RangeFailure";
        case ErrorCode::EmptyUnitComponent: return "EmptyUnitComponent";
        case ErrorCode::NotScalar: return "NotScalar";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::MultiplierMismatch: return "MultiplierMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotElement: return "NotElement";
        case ErrorCode::NotFaithful: return "NotFaithful";
        case ErrorCode::TauInconsistent: return "TauInconsistent";
        case ErrorCode::BlockLeak: return "BlockLeak";
        case ErrorCode::NotGraded: return "NotGraded";
        case ErrorCode::NotUnital: return "NotUnital";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadRational: return "BadRational";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace mhgc
