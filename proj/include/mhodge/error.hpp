#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mhodge {

enum class error_kind {
    cap_mismatch,
    zero_monomial,
    invalid_argument,
    non_coprime,
    genus_too_small,
    non_integer_exponent,
    symmetry_violation,
    duality_violation,
    unit_violation,
    negative_hodge_number,
    unsupported_dimension,
    bad_index,
    bad_gcd,
    internal_inconsistency,
    slope_condition_violated,
    solve_failure,
    assertion_failure,
};

constexpr std::string_view to_string(error_kind k) noexcept
{
    switch (k) {
    case error_kind::cap_mismatch: return "CapMismatch";
    case error_kind::zero_monomial: return "ZeroMonomial";
    case error_kind::invalid_argument: return "InvalidArgument";
    case error_kind::non_coprime: return "NonCoprime";
    case error_kind::genus_too_small: return "GenusTooSmall";
    case error_kind::non_integer_exponent: return "NonIntegerExponent";
    case error_kind::symmetry_violation: return "SymmetryViolation";
    case error_kind::duality_violation: return "DualityViolation";
    case error_kind::unit_violation: return "UnitViolation";
    case error_kind::negative_hodge_number: return "NegativeHodgeNumber";
    case error_kind::unsupported_dimension: return "UnsupportedDimension";
    case error_kind::bad_index: return "BadIndex";
    case error_kind::bad_gcd: return "BadGcd";
    case error_kind::internal_inconsistency: return "InternalInconsistency";
    case error_kind::slope_condition_violated: return "SlopeConditionViolated";
    case error_kind::solve_failure: return "SolveFailure";
    case error_kind::assertion_failure: return "AssertionFailure";
    }
    return "Unknown";
}

// Errors caused by the caller's arguments, as opposed to a broken invariant
// inside an evaluator.
constexpr bool is_input_error(error_kind k) noexcept
{
    switch (k) {
    case error_kind::cap_mismatch:
    case error_kind::zero_monomial:
    case error_kind::invalid_argument:
    case error_kind::non_coprime:
    case error_kind::genus_too_small:
    case error_kind::unsupported_dimension:
    case error_kind::bad_index:
    case error_kind::bad_gcd:
    case error_kind::slope_condition_violated:
        return true;
    default:
        return false;
    }
}

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

} // namespace mhodge
