#include "loewner/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

double off_diagonal_frobenius(const Matrix& w) {
    double s = 0.0;
    for (int i = 0; i < w.dim(); ++i)
        for (int j = i + 1; j < w.dim(); ++j) s += 2.0 * w(i, j) * w(i, j);
    return std::sqrt(s);
}

// One Jacobi rotation annihilating w(p,q); updates w and accumulates into v.
void rotate(Matrix& w, Matrix& v, int p, int q) {
    const int d = w.dim();
    const double apq = w(p, q);
    const double h = w(q, q) - w(p, p);
    // Callers skip elements near zero, so |theta| stays far from overflow.
    const double theta = 0.5 * h / apq;
    double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    w(p, p) -= t * apq;
    w(q, q) += t * apq;
    w(p, q) = 0.0;
    w(q, p) = 0.0;
    for (int k = 0; k < d; ++k) {
        if (k == p || k == q) continue;
        const double wkp = w(k, p), wkq = w(k, q);
        w(k, p) = wkp - s * (wkq + tau * wkp);
        w(p, k) = w(k, p);
        w(k, q) = wkq + s * (wkp - tau * wkq);
        w(q, k) = w(k, q);
    }
    for (int k = 0; k < d; ++k) {
        const double vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp - s * (vkq + tau * vkp);
        v(k, q) = vkq + s * (vkp - tau * vkq);
    }
}

} // namespace

SpectralDecomposition sym_eig(const SymMatrix& m, const EigOptions& opt) {
    const int d = m.dim();
    if (d < 1) fail(Errc::invalid_argument, "empty matrix");
    Matrix w = m.full();
    Matrix v = Matrix::identity(d);

    const double scale = std::max(1.0, frobenius(m));
    const double goal = opt.off_tol * scale;
    // Elements below this floor cannot push the off-diagonal norm past goal.
    const double elem_floor = goal / (10.0 * d);

    bool converged = off_diagonal_frobenius(w) <= goal;
    for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < d - 1; ++p)
            for (int q = p + 1; q < d; ++q)
                if (std::abs(w(p, q)) > elem_floor) rotate(w, v, p, q);
        converged = off_diagonal_frobenius(w) <= goal;
    }
    if (!converged)
        fail(Errc::no_convergence,
             "Jacobi sweep budget " + std::to_string(opt.max_sweeps) + " exhausted");

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return w(i, i) < w(j, j); });

    SpectralDecomposition out;
    out.eigenvalues.resize(d);
    out.basis = Matrix(d);
    for (int j = 0; j < d; ++j) {
        const int src = order[j];
        out.eigenvalues[j] = w(src, src);
        int imax = 0;
        for (int i = 1; i < d; ++i)
            if (std::abs(v(i, src)) > std::abs(v(imax, src))) imax = i;
        const double sign = v(imax, src) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < d; ++i) out.basis(i, j) = sign * v(i, src);
    }
    return out;
}

double lambda_min(const SymMatrix& m, const EigOptions& opt) {
    return sym_eig(m, opt).eigenvalues.front();
}

LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b, double eps) {
    if (a.dim() != b.dim())
        fail(Errc::dim_mismatch, "Loewner comparison of " + std::to_string(a.dim()) +
                                     "x and " + std::to_string(b.dim()) + "x matrices");
    const double margin = lambda_min(b - a);
    return {margin >= -eps, margin};
}

LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b) {
    const double eps = 1e-9 * std::max({1.0, frobenius(a), frobenius(b)});
    return loewner_leq(a, b, eps);
}

SymMatrix inverse_spd(const SymMatrix& m, const EigOptions& opt) {
    const auto e = sym_eig(m, opt);
    const double scale = std::max(1.0, std::abs(e.eigenvalues.back()));
    std::vector<double> inv(e.eigenvalues.size());
    for (size_t k = 0; k < inv.size(); ++k) {
        if (e.eigenvalues[k] <= 1e-12 * scale)
            fail(Errc::not_positive_definite,
                 "eigenvalue " + std::to_string(e.eigenvalues[k]) + " below PD floor");
        inv[k] = 1.0 / e.eigenvalues[k];
    }
    return conjugate_diag(e.basis, inv);
}

SymMatrix inverse_spd_cholesky(const SymMatrix& m) {
    const int d = m.dim();
    double max_diag = 1.0;
    for (int i = 0; i < d; ++i) max_diag = std::max(max_diag, std::abs(m(i, i)));
    const double floor = 1e-12 * max_diag;

    // Lower Cholesky factor.
    Matrix l(d);
    for (int j = 0; j < d; ++j) {
        double s = m(j, j);
        for (int k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
        if (s <= floor)
            fail(Errc::not_positive_definite, "Cholesky pivot " + std::to_string(s));
        l(j, j) = std::sqrt(s);
        for (int i = j + 1; i < d; ++i) {
            double t = m(i, j);
            for (int k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
            l(i, j) = t / l(j, j);
        }
    }

    // Columns of the inverse by forward/back substitution on unit vectors.
    Matrix inv(d);
    std::vector<double> y(d);
    for (int col = 0; col < d; ++col) {
        for (int i = 0; i < d; ++i) {
            double s = (i == col) ? 1.0 : 0.0;
            for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
            y[i] = s / l(i, i);
        }
        for (int i = d - 1; i >= 0; --i) {
            double s = y[i];
            for (int k = i + 1; k < d; ++k) s -= l(k, i) * inv(k, col);
            inv(i, col) = s / l(i, i);
        }
    }
    return symmetrized(inv, 1e-8);
}

} // namespace loewner
