#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mhgc {

enum class ErrorCode {
    SingularMatrix,
    NotNondegenerate,
    NotAssociative,
    InvalidGroup,
    DimensionMismatch,
    NotASubgroup,
    RangeFailure,
    EmptyUnitComponent,
    NotScalar,
    Inconsistent,
    MultiplierMismatch,
    NotInvertible,
    NotElement,
    NotFaithful,
    TauInconsistent,
    BlockLeak,
    NotGraded,
    NotUnital,
    ParseError,
    BadRational,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the engine carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The description without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace mhgc
