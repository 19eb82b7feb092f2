#include "fspace/errors.hpp"

namespace fspace {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidPoset: return "InvalidPoset";
        case ErrorCode::InvalidMatrix: return "InvalidMatrix";
        case ErrorCode::InvalidComplex: return "InvalidComplex";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NonBinaryEntry: return "NonBinaryEntry";
        case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::NotOrderPreserving: return "NotOrderPreserving";
        case ErrorCode::NotFree: return "NotFree";
        case ErrorCode::OrbitSizeMismatch: return "OrbitSizeMismatch";
        case ErrorCode::NotZ2: return "NotZ2";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Error";
}

}  // namespace fspace
