#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtl {

enum class ErrorCode {
    invalid_input,
    cycle,
    disconnected,
    duplicate_edge,
    self_loop,
    bad_weight,
    not_negative_definite,
    singular_matrix,
    non_symmetric,
    truncation_mismatch,
    domain,
    convergence,
    unsupported,
    positivity,
    enumeration,
    missing_coefficient,
    internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Negative-definiteness failure, carries the 1-based index of the failing leading minor.
class DefinitenessError : public Error {
public:
    DefinitenessError(int minor_index, const std::string& what)
        : Error(ErrorCode::not_negative_definite, what), minor_index_(minor_index) {}
    int minor_index() const noexcept { return minor_index_; }

private:
    int minor_index_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace qtl
