#include "loewner/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

const char* to_string(Route r) { return r == Route::eigen ? "eigen" : "integral"; }

Route route_from_string(const std::string& s) {
    if (s == "eigen") return Route::eigen;
    if (s == "integral") return Route::integral;
    fail(Errc::invalid_argument, "unknown route '" + s + "' (expected eigen or integral)");
}

namespace {

void require_positive_spectrum(const JointSpectralDecomposition& j) {
    for (int k = 0; k < j.dim(); ++k)
        for (int c = 0; c < j.arity; ++c)
            if (!(j.value(k, c) > 0.0))
                fail(Errc::spectrum_outside_domain,
                     "joint eigenvalue " + std::to_string(j.value(k, c)) +
                         " outside the open positive orthant");
}

SymMatrix shifted_product(const CommutingTuple& t, std::span<const double> xi) {
    const SymMatrix id = SymMatrix::identity(t.dim());
    Matrix prod = (xi[0] * id + t.matrix(0)).full();
    for (int j = 1; j < t.arity(); ++j) prod = prod * (xi[j] * id + t.matrix(j)).full();
    // Commuting SPD factors give a symmetric product up to rounding.
    return symmetrized(prod, 1e-8);
}

} // namespace

SymMatrix representation_inverse(const CommutingTuple& t, const QAlphaFunction& f,
                                 const RepresentationOptions& opt) {
    if (t.arity() != f.measure.arity())
        fail(Errc::arity_mismatch, "tuple arity " + std::to_string(t.arity()) +
                                       " vs function arity " +
                                       std::to_string(f.measure.arity()));
    if (!(f.alpha >= 0.0 && f.alpha <= 1.0))
        fail(Errc::alpha_out_of_range,
             "alpha " + std::to_string(f.alpha) + " outside [0, 1]");
    require_positive_spectrum(joint_diagonalize(t, opt.joint));

    const int d = t.dim();
    const SymMatrix id = SymMatrix::identity(d);
    SymMatrix acc = f.gamma * id;
    for (const auto& atom : f.measure.atoms()) {
        SymMatrix term(d);
        if (f.alpha == 0.0) {
            term = id;
        } else {
            const SymMatrix prod = shifted_product(t, atom.xi);
            if (f.alpha == 1.0)
                term = inverse_spd(prod, opt.joint.eig);
            else if (opt.route == Route::eigen)
                term = frac_power_eigen(prod, -f.alpha, opt.joint.eig);
            else
                term = inv_frac_power_integral(prod, f.alpha, opt.nodes);
        }
        acc = acc + atom.w * term;
    }
    return acc;
}

double representation_residual(const CommutingTuple& t, const QAlphaFunction& f,
                               const RepresentationOptions& opt) {
    const auto j = joint_diagonalize(t, opt.joint);
    const ScalarField field{t.arity(),
                            [&](std::span<const double> x) { return q_alpha_eval(f, x); }};
    const SymMatrix f_of_a = apply_function(j, field);
    const SymMatrix lhs = inverse_spd(f_of_a, opt.joint.eig);
    const SymMatrix rhs = representation_inverse(t, f, opt);
    return frobenius(lhs - rhs) / std::max(1.0, frobenius(lhs));
}

} // namespace loewner
