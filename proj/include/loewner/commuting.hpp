#pragma once

#include <span>
#include <vector>

#include "loewner/eig.hpp"
#include "loewner/matrix.hpp"

namespace loewner {

/// n pairwise-commuting symmetric matrices of equal dimension. Construction
/// validates ||A_i A_j - A_j A_i||_F <= comm_tol * max(1, ||A_i||_F ||A_j||_F)
/// and throws NotCommuting otherwise.
class CommutingTuple {
public:
    static constexpr double kDefaultCommTol = 1e-10;

    CommutingTuple(std::vector<SymMatrix> matrices, double comm_tol = kDefaultCommTol);

    int arity() const { return static_cast<int>(matrices_.size()); }
    int dim() const { return matrices_.front().dim(); }
    double comm_tol() const { return comm_tol_; }
    const SymMatrix& matrix(int j) const { return matrices_[j]; }
    const std::vector<SymMatrix>& matrices() const { return matrices_; }

private:
    std::vector<SymMatrix> matrices_;
    double comm_tol_;
};

/// Shared eigenbasis of a commuting tuple together with the joint spectrum:
/// row k of `spectrum` is the eigenvalue tuple of basis column k.
struct JointSpectralDecomposition {
    int arity = 0;
    Matrix basis;
    std::vector<double> spectrum; // dim x arity, row-major

    int dim() const { return basis.dim(); }
    double value(int k, int j) const { return spectrum[static_cast<size_t>(k) * arity + j]; }
    std::span<const double> point(int k) const {
        return std::span<const double>(spectrum).subspan(static_cast<size_t>(k) * arity, arity);
    }
};

struct JointDiagOptions {
    EigOptions eig{};
    /// Eigenvalues of the mixing combination closer than this (times scale)
    /// are treated as one cluster and split recursively.
    double cluster_tol = 1e-7;
    /// Recursion / re-mix budget.
    int max_depth = 5;
    /// A block is accepted once every matrix restricted to it is diagonal to
    /// this relative tolerance.
    double accept_tol = 1e-9;
    /// Final validation threshold for ||Q^T A_j Q - diag||_F.
    double residual_tol = 1e-8;
};

/// Simultaneous diagonalization: diagonalizes a pseudorandom linear
/// combination of the tuple, then splits unresolved eigenvalue clusters
/// recursively with fresh coefficients. Deterministic (fixed internal seed);
/// spectrum rows are sorted lexicographically. Throws DegeneracyUnresolved
/// when the budget runs out before the residual target is met.
JointSpectralDecomposition joint_diagonalize(const CommutingTuple& t,
                                             const JointDiagOptions& opt = {});

} // namespace loewner
