#include "loewner/sampling.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

const char* to_string(Regime r) { return r == Regime::cross ? "cross" : "tuple"; }

Regime regime_from_string(const std::string& s) {
    if (s == "cross") return Regime::cross;
    if (s == "tuple") return Regime::tuple_only;
    fail(Errc::invalid_argument, "unknown regime '" + s + "' (expected cross or tuple)");
}

namespace {

void require_params(int n, int d, Interval box) {
    if (n < 1) fail(Errc::invalid_argument, "arity must be >= 1");
    if (d < 1) fail(Errc::invalid_argument, "dimension must be >= 1");
    if (!(box.lo <= box.hi)) fail(Errc::invalid_argument, "empty sampling box");
}

std::vector<double> uniform_vector(Rng& rng, int d, Interval box) {
    std::vector<double> v(d);
    for (auto& x : v) x = rng.uniform(box.lo, box.hi);
    return v;
}

} // namespace

Matrix random_orthogonal(Rng& rng, int d) {
    Matrix g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.normal();

    // Modified Gram-Schmidt on columns, one re-orthogonalization pass.
    Matrix q = g;
    for (int j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < j; ++k) {
                double dot = 0.0;
                for (int i = 0; i < d; ++i) dot += q(i, k) * q(i, j);
                for (int i = 0; i < d; ++i) q(i, j) -= dot * q(i, k);
            }
        double norm = 0.0;
        for (int i = 0; i < d; ++i) norm += q(i, j) * q(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-8) {
            // Degenerate draw; replace the column and redo it.
            for (int i = 0; i < d; ++i) q(i, j) = rng.normal();
            --j;
            continue;
        }
        for (int i = 0; i < d; ++i) q(i, j) /= norm;
    }
    return q;
}

CommutingTuple sample_commuting_tuple(int n, int d, Interval box, std::uint64_t seed) {
    require_params(n, d, box);
    Rng rng(seed);
    const Matrix q = random_orthogonal(rng, d);
    std::vector<SymMatrix> mats;
    mats.reserve(n);
    for (int j = 0; j < n; ++j) mats.push_back(conjugate_diag(q, uniform_vector(rng, d, box)));
    return CommutingTuple(std::move(mats));
}

DominatingPair sample_dominating_pair(Regime regime, int n, int d, Interval box,
                                      Interval gap_box, std::uint64_t seed) {
    require_params(n, d, box);
    if (!(0.0 <= gap_box.lo && gap_box.lo <= gap_box.hi))
        fail(Errc::invalid_argument, "gap box must satisfy 0 <= lo <= hi");
    Rng rng(seed);

    if (regime == Regime::cross) {
        const Matrix q = random_orthogonal(rng, d);
        std::vector<SymMatrix> a, b;
        a.reserve(n);
        b.reserve(n);
        for (int j = 0; j < n; ++j) {
            std::vector<double> da = uniform_vector(rng, d, box);
            std::vector<double> db = da;
            for (int k = 0; k < d; ++k) db[k] += rng.uniform(gap_box.lo, gap_box.hi);
            a.push_back(conjugate_diag(q, da));
            b.push_back(conjugate_diag(q, db));
        }
        return {CommutingTuple(std::move(a)), CommutingTuple(std::move(b)), regime};
    }

    const Matrix qa = random_orthogonal(rng, d);
    std::vector<SymMatrix> a;
    a.reserve(n);
    for (int j = 0; j < n; ++j) a.push_back(conjugate_diag(qa, uniform_vector(rng, d, box)));

    const Matrix qb = random_orthogonal(rng, d);
    std::vector<SymMatrix> b;
    b.reserve(n);
    for (int j = 0; j < n; ++j) b.push_back(conjugate_diag(qb, uniform_vector(rng, d, box)));

    // Repair into Loewner order with an identity shift; the strict-order
    // slack keeps sampled pairs off the boundary. On nonpositive boxes A
    // moves down so both spectra stay in the nonpositive orthant.
    const bool shift_a_down = box.hi <= 0.0;
    const SymMatrix id = SymMatrix::identity(d);
    for (int j = 0; j < n; ++j) {
        const double mu = std::max(0.0, -lambda_min(b[j] - a[j]));
        if (shift_a_down) {
            SymMatrix shifted = a[j] - mu * id;
            shifted = shifted - (1e-10 * frobenius(shifted)) * id;
            a[j] = shifted;
        } else {
            SymMatrix shifted = b[j] + mu * id;
            shifted = shifted + (1e-10 * frobenius(shifted)) * id;
            b[j] = shifted;
        }
    }
    return {CommutingTuple(std::move(a)), CommutingTuple(std::move(b)), regime};
}

} // namespace loewner
