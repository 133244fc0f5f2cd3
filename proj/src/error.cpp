#include "invosc/error.hpp"

namespace invosc {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidQuantumNumber: return "invalid-quantum-number";
    case ErrorCode::UndefinedPhase: return "undefined-phase";
    case ErrorCode::InvalidGrid: return "invalid-grid";
    case ErrorCode::IncompatibleGrids: return "incompatible-grids";
    case ErrorCode::InvalidSuperposition: return "invalid-superposition";
    case ErrorCode::InvalidTargetTime: return "invalid-target-time";
    case ErrorCode::InvalidFit: return "invalid-fit";
    case ErrorCode::InvalidTemperature: return "invalid-temperature";
    case ErrorCode::CutoffInsufficient: return "cutoff-insufficient";
    case ErrorCode::InvalidSchedule: return "invalid-schedule";
    case ErrorCode::Io: return "io-error";
    }
    return "unknown";
}

}  // namespace invosc
