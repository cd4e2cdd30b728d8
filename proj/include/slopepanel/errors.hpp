#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slopepanel {

enum class ErrorKind {
    ZeroSlope,
    NegativeSlope,
    ShapeMismatch,
    RankMismatch,
    OutOfRange,
    RankTooLarge,
    NonIntegerSlope,
    NotSequential,
    InvalidFiltration,
    NotInNefCone,
    NoChamber,
    ZeroDegree,
    BoundaryMismatch,
    ZeroFunctional,
    UnboundedSlice,
    InvalidModel,
    InvalidConfig,
    ParseError,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by every library operation. The kind is the stable,
/// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace slopepanel
