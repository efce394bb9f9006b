#pragma once

#include <stdexcept>
#include <string>

namespace mdf {

enum class errc {
    not_prime,
    reducible_modulus,
    unsupported_order,
    division_by_zero,
    unit_ideal,
    in_ideal,
    dimension_too_high,
    not_complete_intersection,
    not_dim_one,
    precondition_violated,
    zero_vector,
    empty_factor,
    field_too_small,
    zero_polynomial,
    too_many_codewords,
    trivial_set,
    point_not_in_set,
    overflow,
    missing_initial_ideal,
    input_error,
};

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Integer helpers with overflow detection. Degree products can get large for
// adversarial inputs, so every product in the formula layer goes through here.
inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in product");
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in sum");
    return r;
}

}  // namespace mdf
