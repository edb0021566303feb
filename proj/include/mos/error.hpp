#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mos {

enum class ErrorCode {
    InvalidArgument,
    EmptyAccumulator,
    DegenerateMass,
    Exhausted,
    IndexOutOfRange,
    EmptyPool,
    DimensionMismatch,
    BadMagic,
    Truncated,
    TrailingBytes,
    InvalidLabel,
    CountMismatch,
    InvalidDigit,
    NotEnoughSamples,
    IoFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI, the Python bindings) can map it without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mos
