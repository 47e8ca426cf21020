#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgic {

enum class Errc {
    InvalidChannel,
    InvalidInstance,
    InvalidArgument,
    LengthMismatch,
    DegenerateRegion,
    ClassError,
    OutsideRegion,
    NumericalFailure,
    NotSymmetric,
    StrongInterference,
    PowerOutOfRange,
    Infeasible,
    DomainError,
    AuditFailure,
    GridTooLarge,
    ParseError,
    RangeError,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace pgic
