#include "taskdag/error.hpp"

namespace taskdag {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidSize: return "invalid_size";
    case ErrorKind::OrderViolation: return "order_violation";
    case ErrorKind::DuplicateEdge: return "duplicate_edge";
    case ErrorKind::VertexRange: return "vertex_range";
    case ErrorKind::AbsentEdge: return "absent_edge";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::ConfigKind: return "config_kind";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Format: return "format";
    }
    return "unknown";
}

}  // namespace taskdag
