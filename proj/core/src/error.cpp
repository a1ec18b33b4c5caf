#include "qtl/core/error.hpp"

namespace qtl {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::cycle: return "cycle";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::self_loop: return "self_loop";
    case ErrorCode::bad_weight: return "bad_weight";
    case ErrorCode::not_negative_definite: return "not_negative_definite";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::non_symmetric: return "non_symmetric";
    case ErrorCode::truncation_mismatch: return "truncation_mismatch";
    case ErrorCode::domain: return "domain";
    case ErrorCode::convergence: return "convergence";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::positivity: return "positivity";
    case ErrorCode::enumeration: return "enumeration";
    case ErrorCode::missing_coefficient: return "missing_coefficient";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qtl
