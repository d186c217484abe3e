#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taskdag {

enum class ErrorKind {
    InvalidSize,
    OrderViolation,
    DuplicateEdge,
    VertexRange,
    AbsentEdge,
    Capacity,
    Domain,
    Parameter,
    ConfigKind,
    Validation,
    Precondition,
    Format,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI and the Python layer can report it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace taskdag
