#include "rdpivot/error.hpp"

namespace rd {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidPosition: return "invalid-position";
        case ErrorCode::NotANeighbor: return "not-a-neighbor";
        case ErrorCode::EmptyConfiguration: return "empty-configuration";
        case ErrorCode::PositionNotInConfiguration: return "position-not-in-configuration";
        case ErrorCode::MalformedInput: return "malformed-input";
        case ErrorCode::ParityViolation: return "parity-violation";
        case ErrorCode::DuplicateModule: return "duplicate-module";
        case ErrorCode::Disconnected: return "disconnected";
        case ErrorCode::IllegalMove: return "illegal-move";
        case ErrorCode::SizeMismatch: return "size-mismatch";
        case ErrorCode::InvalidDirection: return "invalid-direction";
        case ErrorCode::OverlapError: return "overlap-error";
        case ErrorCode::InputNotSingleLayer: return "input-not-single-layer";
        case ErrorCode::NoWitnessFound: return "no-witness-found";
        case ErrorCode::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace rd
