#include "loewner/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

void require_dim(int dim) {
    if (dim < 1) fail(Errc::invalid_argument, "matrix dimension must be >= 1");
}

void require_same_dim(int a, int b) {
    if (a != b)
        fail(Errc::dim_mismatch,
             "dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Matrix::Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {
    require_dim(dim);
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int d = static_cast<int>(rows.size());
    Matrix m(d);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d)
            fail(Errc::invalid_argument, "row length does not match dimension");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

SymMatrix::SymMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {
    require_dim(dim);
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.a_[static_cast<size_t>(i) * dim + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m.a_[static_cast<size_t>(i) * m.dim_ + i] = d[i];
    return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    return symmetrized(Matrix::from_rows(rows), kSymTol);
}

void SymMatrix::set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * dim_ + j] = v;
    a_[static_cast<size_t>(j) * dim_ + i] = v;
}

Matrix SymMatrix::full() const {
    Matrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    require_same_dim(x.dim(), y.dim());
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    require_same_dim(x.dim(), y.dim());
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

Matrix operator*(double c, const Matrix& x) {
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = c * x(i, j);
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    require_same_dim(x.dim(), y.dim());
    const int d = x.dim();
    Matrix r(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < d; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

SymMatrix operator+(const SymMatrix& x, const SymMatrix& y) {
    require_same_dim(x.dim(), y.dim());
    SymMatrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = i; j < x.dim(); ++j) r.set(i, j, x(i, j) + y(i, j));
    return r;
}

SymMatrix operator-(const SymMatrix& x, const SymMatrix& y) {
    require_same_dim(x.dim(), y.dim());
    SymMatrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = i; j < x.dim(); ++j) r.set(i, j, x(i, j) - y(i, j));
    return r;
}

SymMatrix operator*(double c, const SymMatrix& x) {
    SymMatrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = i; j < x.dim(); ++j) r.set(i, j, c * x(i, j));
    return r;
}

Matrix operator*(const SymMatrix& x, const SymMatrix& y) {
    return x.full() * y.full();
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(j, i) = x(i, j);
    return r;
}

namespace {
double frobenius_of(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}
double max_abs_of(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}
} // namespace

double frobenius(const Matrix& x) { return frobenius_of(x.entries()); }
double frobenius(const SymMatrix& x) { return frobenius_of(x.entries()); }
double max_abs(const Matrix& x) { return max_abs_of(x.entries()); }
double max_abs(const SymMatrix& x) { return max_abs_of(x.entries()); }

SymMatrix symmetrized(const Matrix& m, double rel_tol) {
    const int d = m.dim();
    require_dim(d);
    const double scale = std::max(1.0, max_abs(m));
    SymMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const double gap = std::abs(m(i, j) - m(j, i));
            if (gap > rel_tol * scale)
                fail(Errc::non_symmetric, "entry (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") asymmetry " +
                                              std::to_string(gap));
            r.set(i, j, 0.5 * (m(i, j) + m(j, i)));
        }
    return r;
}

SymMatrix conjugate_diag(const Matrix& q, std::span<const double> d) {
    const int n = q.dim();
    if (static_cast<int>(d.size()) != n)
        fail(Errc::dim_mismatch, "diagonal length does not match basis dimension");
    SymMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += q(i, k) * d[k] * q(j, k);
            r.set(i, j, s);
        }
    return r;
}

Matrix conjugate_transposed(const Matrix& q, const SymMatrix& a) {
    return transpose(q) * (a.full() * q);
}

Matrix commutator(const SymMatrix& a, const SymMatrix& b) {
    return a * b - b * a;
}

} // namespace loewner
