#pragma once

#include <stdexcept>
#include <string>

namespace invosc {

enum class ErrorCode {
    InvalidArgument,
    InvalidQuantumNumber,
    UndefinedPhase,
    InvalidGrid,
    IncompatibleGrids,
    InvalidSuperposition,
    InvalidTargetTime,
    InvalidFit,
    InvalidTemperature,
    CutoffInsufficient,
    InvalidSchedule,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the code is the
// stable part, the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace invosc
