#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

enum class Errc {
    non_symmetric,
    no_convergence,
    dim_mismatch,
    not_commuting,
    degeneracy_unresolved,
    arity_mismatch,
    non_finite_value,
    not_positive_definite,
    alpha_out_of_range,
    singular_atom,
    branch_cut,
    non_positive_denominator,
    spectrum_outside_domain,
    domain_violation,
    missing_complex_extension,
    invalid_argument,
};

constexpr const char* to_string(Errc c) {
    switch (c) {
        case Errc::non_symmetric: return "NonSymmetric";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::dim_mismatch: return "DimMismatch";
        case Errc::not_commuting: return "NotCommuting";
        case Errc::degeneracy_unresolved: return "DegeneracyUnresolved";
        case Errc::arity_mismatch: return "ArityMismatch";
        case Errc::non_finite_value: return "NonFiniteValue";
        case Errc::not_positive_definite: return "NotPositiveDefinite";
        case Errc::alpha_out_of_range: return "AlphaOutOfRange";
        case Errc::singular_atom: return "SingularAtom";
        case Errc::branch_cut: return "BranchCut";
        case Errc::non_positive_denominator: return "NonPositiveDenominator";
        case Errc::spectrum_outside_domain: return "SpectrumOutsideDomain";
        case Errc::domain_violation: return "DomainViolation";
        case Errc::missing_complex_extension: return "MissingComplexExtension";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

/// Library error carrying a machine-checkable condition code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace loewner
