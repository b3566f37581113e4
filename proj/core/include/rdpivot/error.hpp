#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rd {

enum class ErrorCode {
    InvalidPosition,
    NotANeighbor,
    EmptyConfiguration,
    PositionNotInConfiguration,
    MalformedInput,
    ParityViolation,
    DuplicateModule,
    Disconnected,
    IllegalMove,
    SizeMismatch,
    InvalidDirection,
    OverlapError,
    InputNotSingleLayer,
    NoWitnessFound,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rd
