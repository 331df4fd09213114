#pragma once

#include <string>

#include "loewner/calculus.hpp"
#include "loewner/commuting.hpp"
#include "loewner/stieltjes.hpp"

namespace loewner {

/// Computation route for the inverse fractional powers inside the
/// representation formula.
enum class Route { eigen, integral };

const char* to_string(Route r);
Route route_from_string(const std::string& s);

struct RepresentationOptions {
    Route route = Route::eigen;
    int nodes = 400; // quadrature nodes for the integral route
    JointDiagOptions joint{};
};

/// The representation side of the inverse identity for f with
/// 1/f = gamma + S^alpha tau:
///   gamma I + sum_atoms w * (prod_j (xi_j I + A_j))^{-alpha},
/// each product formed as an ordinary matrix product of the commuting
/// positive factors. Requires the joint spectrum of T inside the open
/// positive orthant and 0 <= alpha <= 1. For alpha = 0 each term is the
/// identity; for alpha = 1 the power is a direct inverse.
SymMatrix representation_inverse(const CommutingTuple& t, const QAlphaFunction& f,
                                 const RepresentationOptions& opt = {});

/// Relative residual || f(A)^{-1} - representation_inverse ||_F /
/// max(1, ||f(A)^{-1}||_F) with f(A) built by the joint functional calculus
/// and inverted through its eigendecomposition.
double representation_residual(const CommutingTuple& t, const QAlphaFunction& f,
                               const RepresentationOptions& opt = {});

} // namespace loewner
