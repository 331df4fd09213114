#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace loewner {

/// Relative tolerance for symmetry validation, scaled by max(1, max|entry|).
inline constexpr double kSymTol = 1e-12;

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim);
    static Matrix identity(int dim);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return dim_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    std::span<const double> entries() const { return a_; }

private:
    int dim_ = 0;
    std::vector<double> a_;
};

/// Dense real symmetric matrix. Entries are kept exactly symmetric; every
/// construction path either fills both triangles or validates and averages.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim);
    static SymMatrix identity(int dim);
    static SymMatrix diagonal(std::span<const double> d);
    static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    /// Sets (i,j) and (j,i).
    void set(int i, int j, double v);
    std::span<const double> entries() const { return a_; }
    Matrix full() const;

private:
    friend SymMatrix symmetrized(const Matrix& m, double rel_tol);
    int dim_ = 0;
    std::vector<double> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(double c, const Matrix& x);
Matrix operator*(const Matrix& x, const Matrix& y);

SymMatrix operator+(const SymMatrix& x, const SymMatrix& y);
SymMatrix operator-(const SymMatrix& x, const SymMatrix& y);
SymMatrix operator*(double c, const SymMatrix& x);
/// Product of two symmetric matrices is not symmetric in general.
Matrix operator*(const SymMatrix& x, const SymMatrix& y);

Matrix transpose(const Matrix& x);
double frobenius(const Matrix& x);
double frobenius(const SymMatrix& x);
double max_abs(const Matrix& x);
double max_abs(const SymMatrix& x);

/// (M + M^T)/2 after checking |M_ij - M_ji| <= rel_tol * max(1, max|entry|).
/// Throws NonSymmetric when the check fails.
SymMatrix symmetrized(const Matrix& m, double rel_tol = kSymTol);

/// Q * diag(d) * Q^T, filled symmetrically.
SymMatrix conjugate_diag(const Matrix& q, std::span<const double> d);

/// Q^T * A * Q.
Matrix conjugate_transposed(const Matrix& q, const SymMatrix& a);

/// A*B - B*A.
Matrix commutator(const SymMatrix& a, const SymMatrix& b);

} // namespace loewner
