#include "mos/error.hpp"

namespace mos {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyAccumulator: return "EmptyAccumulator";
    case ErrorCode::DegenerateMass: return "DegenerateMass";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::TrailingBytes: return "TrailingBytes";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvalidDigit: return "InvalidDigit";
    case ErrorCode::NotEnoughSamples: return "NotEnoughSamples";
    case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

}  // namespace mos
