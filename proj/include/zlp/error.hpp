#pragma once

#include <stdexcept>
#include <string>

namespace zlp {

/// Failure categories raised by the library. Each maps to exactly one
/// precondition or domain restriction.
enum class errc {
    not_prime,
    reducible,
    too_large,
    mixed_fields,
    division_by_zero,
    zero_element,
    zero_parameter,
    singular_parameter,
    dimension_mismatch,
    dimension_too_small,
    not_triangular,
    parse_error,
    invalid_argument,
};

inline const char* to_string(errc e) noexcept
{
    switch (e) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible: return "Reducible";
    case errc::too_large: return "TooLarge";
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_element: return "ZeroElement";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::singular_parameter: return "SingularParameter";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::not_triangular: return "NotTriangular";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace zlp
