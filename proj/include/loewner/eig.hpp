#pragma once

#include <vector>

#include "loewner/matrix.hpp"

namespace loewner {

/// Termination controls for the cyclic Jacobi sweep. `off_tol` bounds the
/// off-diagonal Frobenius norm relative to max(1, ||M||_F).
struct EigOptions {
    double off_tol = 1e-13;
    int max_sweeps = 100;
};

struct SpectralDecomposition {
    std::vector<double> eigenvalues; // ascending
    Matrix basis;                    // columns are eigenvectors
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Deterministic: eigenvalues ascending, each eigenvector's largest-magnitude
/// component made positive. Throws NoConvergence when the sweep budget is
/// exhausted.
SpectralDecomposition sym_eig(const SymMatrix& m, const EigOptions& opt = {});

double lambda_min(const SymMatrix& m, const EigOptions& opt = {});

struct LoewnerResult {
    bool holds;
    double margin; // lambda_min(B - A)
};

/// Tests A <= B in the Loewner order: holds iff lambda_min(B - A) >= -eps.
LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b, double eps);
/// Same with eps = 1e-9 * max(1, ||A||_F, ||B||_F).
LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b);

/// Inverse of a positive definite matrix through its eigendecomposition, so a
/// definiteness failure surfaces as NotPositiveDefinite instead of silent
/// instability.
SymMatrix inverse_spd(const SymMatrix& m, const EigOptions& opt = {});

/// Cholesky-based SPD inverse; independent of the Jacobi path. Throws
/// NotPositiveDefinite when a pivot falls below 1e-12 * max(1, max|diag|).
SymMatrix inverse_spd_cholesky(const SymMatrix& m);

} // namespace loewner
