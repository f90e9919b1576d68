#pragma once

#include <stdexcept>
#include <string>

namespace grskit {

// Error codes shared between the C++ exceptions and the C API status values.
enum class ErrorCode : int {
    ok = 0,
    non_prime_characteristic,
    reducible_modulus,
    division_by_zero,
    field_mismatch,
    not_a_square,
    duplicate_points,
    shape_mismatch,
    zero_matrix,
    too_large,
    bad_dimension,
    zero_twist,
    out_of_range,
    bad_index,
    not_a_divisor,
    odd_length,
    even_length,
    even_characteristic,
    characteristic_divides_length,
    hypothesis_failed,
    spec_validation,
    internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace grskit
