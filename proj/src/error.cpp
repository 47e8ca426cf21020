#include "pgic/error.hpp"

namespace pgic {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::InvalidChannel: return "InvalidChannel";
        case Errc::InvalidInstance: return "InvalidInstance";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::DegenerateRegion: return "DegenerateRegion";
        case Errc::ClassError: return "ClassError";
        case Errc::OutsideRegion: return "OutsideRegion";
        case Errc::NumericalFailure: return "NumericalFailure";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::StrongInterference: return "StrongInterference";
        case Errc::PowerOutOfRange: return "PowerOutOfRange";
        case Errc::Infeasible: return "Infeasible";
        case Errc::DomainError: return "DomainError";
        case Errc::AuditFailure: return "AuditFailure";
        case Errc::GridTooLarge: return "GridTooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::RangeError: return "RangeError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace pgic
