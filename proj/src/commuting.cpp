#include "loewner/commuting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "loewner/errors.hpp"
#include "loewner/rng.hpp"

namespace loewner {

CommutingTuple::CommutingTuple(std::vector<SymMatrix> matrices, double comm_tol)
    : matrices_(std::move(matrices)), comm_tol_(comm_tol) {
    if (matrices_.empty()) fail(Errc::invalid_argument, "tuple needs at least one matrix");
    const int d = matrices_.front().dim();
    for (const auto& m : matrices_)
        if (m.dim() != d) fail(Errc::dim_mismatch, "tuple matrices have mixed dimensions");
    for (size_t i = 0; i < matrices_.size(); ++i)
        for (size_t j = i + 1; j < matrices_.size(); ++j) {
            const double bound = comm_tol_ * std::max(1.0, frobenius(matrices_[i]) *
                                                               frobenius(matrices_[j]));
            const double res = frobenius(commutator(matrices_[i], matrices_[j]));
            if (res > bound)
                fail(Errc::not_commuting, "commutator norm " + std::to_string(res) +
                                              " of matrices " + std::to_string(i) + "," +
                                              std::to_string(j) + " exceeds " +
                                              std::to_string(bound));
        }
}

namespace {

double off_diag_frobenius(const Matrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

bool all_nearly_diagonal(const std::vector<SymMatrix>& blocks, double accept_tol) {
    for (const auto& b : blocks) {
        const double bound = accept_tol * std::max(1.0, frobenius(b));
        if (off_diag_frobenius(b.full()) > bound) return false;
    }
    return true;
}

SymMatrix slice(const Matrix& t, int lo, int m) {
    Matrix b(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b(i, j) = t(lo + i, lo + j);
    // Conjugation noise keeps the slice symmetric only approximately.
    return symmetrized(b, 1e-6);
}

// Orthogonal basis jointly diagonalizing the given commuting blocks.
Matrix diagonalize_blocks(const std::vector<SymMatrix>& blocks, Rng& rng,
                          const JointDiagOptions& opt, int depth) {
    const int m = blocks.front().dim();
    if (m == 1) return Matrix::identity(1);
    if (all_nearly_diagonal(blocks, opt.accept_tol)) return Matrix::identity(m);
    if (depth <= 0)
        fail(Errc::degeneracy_unresolved, "cluster splitting budget exhausted");

    // Mix with random coefficients; a generic combination separates every
    // pair of joint eigenvalues that differ somewhere.
    SymMatrix mix(m);
    {
        std::vector<double> coeffs(blocks.size());
        for (auto& c : coeffs) c = rng.uniform(0.25, 1.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
        Matrix acc(m);
        for (size_t j = 0; j < blocks.size(); ++j) acc = acc + coeffs[j] * blocks[j].full();
        mix = symmetrized(acc, 1e-6);
    }
    const auto e = sym_eig(mix, opt.eig);

    const double scale = std::max({1.0, std::abs(e.eigenvalues.front()),
                                   std::abs(e.eigenvalues.back())});
    std::vector<int> cluster_starts{0};
    for (int k = 1; k < m; ++k)
        if (e.eigenvalues[k] - e.eigenvalues[k - 1] > opt.cluster_tol * scale)
            cluster_starts.push_back(k);
    cluster_starts.push_back(m);

    if (cluster_starts.size() == 2) {
        // No separation at all: either an unlucky combination or a genuinely
        // scalar block that failed the diagonal test; re-mix with a smaller
        // budget.
        return diagonalize_blocks(blocks, rng, opt, depth - 1);
    }

    Matrix q = e.basis;
    for (size_t c = 0; c + 1 < cluster_starts.size(); ++c) {
        const int lo = cluster_starts[c];
        const int sz = cluster_starts[c + 1] - lo;
        if (sz == 1) continue;
        std::vector<SymMatrix> restricted;
        restricted.reserve(blocks.size());
        for (const auto& b : blocks) restricted.push_back(slice(conjugate_transposed(q, b), lo, sz));
        const Matrix sub = diagonalize_blocks(restricted, rng, opt, depth - 1);
        // Fold the sub-basis into columns [lo, lo+sz) of q.
        Matrix updated(q.dim());
        for (int i = 0; i < q.dim(); ++i)
            for (int j = 0; j < q.dim(); ++j) updated(i, j) = q(i, j);
        for (int i = 0; i < q.dim(); ++i)
            for (int j = 0; j < sz; ++j) {
                double s = 0.0;
                for (int k = 0; k < sz; ++k) s += q(i, lo + k) * sub(k, j);
                updated(i, lo + j) = s;
            }
        q = updated;
    }
    return q;
}

} // namespace

JointSpectralDecomposition joint_diagonalize(const CommutingTuple& t,
                                             const JointDiagOptions& opt) {
    const int d = t.dim();
    const int n = t.arity();

    Rng rng(0x6A09E667F3BCC909ULL); // fixed: the operation is a pure function
    Matrix q = diagonalize_blocks(t.matrices(), rng, opt, opt.max_depth);

    // Joint spectrum from the diagonals, with a residual gate.
    std::vector<double> spectrum(static_cast<size_t>(d) * n);
    for (int j = 0; j < n; ++j) {
        const Matrix tj = conjugate_transposed(q, t.matrix(j));
        const double bound = opt.residual_tol * std::max(1.0, frobenius(t.matrix(j)));
        if (off_diag_frobenius(tj) > bound)
            fail(Errc::degeneracy_unresolved,
                 "off-diagonal residual " + std::to_string(off_diag_frobenius(tj)) +
                     " of matrix " + std::to_string(j) + " exceeds " + std::to_string(bound));
        for (int k = 0; k < d; ++k) spectrum[static_cast<size_t>(k) * n + j] = tj(k, k);
    }

    // Canonical row order: lexicographic in the joint eigenvalue tuples.
    // Coordinates are quantized first so that rounding noise in one column
    // cannot scramble the order of the next.
    std::vector<long long> keys(spectrum.size());
    for (int j = 0; j < n; ++j) {
        double col_scale = 1.0;
        for (int k = 0; k < d; ++k)
            col_scale = std::max(col_scale, std::abs(spectrum[static_cast<size_t>(k) * n + j]));
        const double step = 1e-9 * col_scale;
        for (int k = 0; k < d; ++k)
            keys[static_cast<size_t>(k) * n + j] =
                std::llround(spectrum[static_cast<size_t>(k) * n + j] / step);
    }
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        for (int j = 0; j < n; ++j) {
            const long long ka = keys[static_cast<size_t>(a) * n + j];
            const long long kb = keys[static_cast<size_t>(b) * n + j];
            if (ka != kb) return ka < kb;
        }
        return false;
    });

    JointSpectralDecomposition out;
    out.arity = n;
    out.basis = Matrix(d);
    out.spectrum.resize(spectrum.size());
    for (int k = 0; k < d; ++k) {
        const int src = order[k];
        for (int j = 0; j < n; ++j)
            out.spectrum[static_cast<size_t>(k) * n + j] =
                spectrum[static_cast<size_t>(src) * n + j];
        for (int i = 0; i < d; ++i) out.basis(i, k) = q(i, src);
    }
    return out;
}

} // namespace loewner
