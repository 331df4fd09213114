#include "loewner/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

SymMatrix apply_function(const JointSpectralDecomposition& j, const ScalarField& f) {
    if (f.arity != j.arity)
        fail(Errc::arity_mismatch, "function arity " + std::to_string(f.arity) +
                                       " vs joint spectrum arity " + std::to_string(j.arity));
    const int d = j.dim();
    std::vector<double> values(d);
    for (int k = 0; k < d; ++k) {
        values[k] = f.eval(j.point(k));
        if (!std::isfinite(values[k]))
            fail(Errc::non_finite_value,
                 "function not finite at joint spectrum point " + std::to_string(k));
    }
    return conjugate_diag(j.basis, values);
}

SymMatrix frac_power_eigen(const SymMatrix& c, double beta, const EigOptions& opt) {
    const auto e = sym_eig(c, opt);
    const bool integer_power = beta >= 0.0 && beta == std::floor(beta);
    const double scale =
        std::max({1.0, std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back())});
    if (!integer_power && e.eigenvalues.front() <= 1e-12 * scale)
        fail(Errc::not_positive_definite,
             "smallest eigenvalue " + std::to_string(e.eigenvalues.front()) +
                 " under PD floor for exponent " + std::to_string(beta));
    std::vector<double> powered(e.eigenvalues.size());
    for (size_t k = 0; k < powered.size(); ++k) powered[k] = std::pow(e.eigenvalues[k], beta);
    return conjugate_diag(e.basis, powered);
}

SymMatrix inv_frac_power_integral(const SymMatrix& c, double alpha, int nodes) {
    if (!(alpha > 0.0 && alpha < 1.0))
        fail(Errc::alpha_out_of_range, "alpha " + std::to_string(alpha) + " not in (0,1)");
    if (nodes < 2) fail(Errc::invalid_argument, "need at least 2 quadrature nodes");

    const int d = c.dim();
    // Spectrum bracket without the eigensolver: lambda_max <= ||C||_F and
    // lambda_min >= 1 / ||C^{-1}||_F. The Cholesky inverse also performs the
    // positive-definiteness check.
    const SymMatrix c_inv = inverse_spd_cholesky(c);
    const double lo_bound = 1.0 / frobenius(c_inv);
    const double hi_bound = frobenius(c);

    // After t = e^u the integrand decays like e^{(1-alpha)u} far below the
    // spectrum and e^{-alpha u} far above it, so the truncation pads must
    // scale with 1/(1-alpha) and 1/alpha respectively.
    constexpr double kLogTailBudget = 30.0; // e^{-30} ~ 1e-13 tail mass
    const double pad_lo = kLogTailBudget / (1.0 - alpha);
    const double pad_hi = kLogTailBudget / alpha;
    const double u_lo = std::log(lo_bound) - pad_lo;
    const double u_hi = std::log(hi_bound) + pad_hi;
    const double h = (u_hi - u_lo) / (nodes - 1);

    Matrix acc(d);
    const SymMatrix id = SymMatrix::identity(d);
    for (int k = 0; k < nodes; ++k) {
        const double u = u_lo + k * h;
        const double t = std::exp(u);
        const double weight = (k == 0 || k == nodes - 1) ? 0.5 * h : h;
        const SymMatrix resolvent = inverse_spd_cholesky(t * id + c);
        acc = acc + (weight * std::exp((1.0 - alpha) * u)) * resolvent.full();
    }
    const double front = std::sin(alpha * std::numbers::pi) / std::numbers::pi;
    return symmetrized(front * acc, 1e-8);
}

} // namespace loewner
