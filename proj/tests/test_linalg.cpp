#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "loewner/commuting.hpp"
#include "loewner/eig.hpp"
#include "loewner/errors.hpp"
#include "loewner/matrix.hpp"
#include "loewner/rng.hpp"
#include "loewner/sampling.hpp"

using namespace loewner;

namespace {

SymMatrix random_symmetric(Rng& rng, int d, double span = 2.0) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) m.set(i, j, rng.uniform(-span, span));
    return m;
}

double reconstruction_residual(const SymMatrix& m, const SpectralDecomposition& e) {
    return frobenius(conjugate_diag(e.basis, e.eigenvalues) - m);
}

double orthogonality_residual(const Matrix& q) {
    return frobenius(transpose(q) * q - Matrix::identity(q.dim()));
}

} // namespace

TEST_CASE("sym_eig on the identity and the exchange matrix") {
    const auto ei = sym_eig(SymMatrix::identity(2));
    CHECK(ei.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ei.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(orthogonality_residual(ei.basis) < 1e-12);

    const auto ex = sym_eig(SymMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sym_eig reconstructs random symmetric matrices") {
    Rng rng(2024);
    for (int d = 2; d <= 12; ++d) {
        const SymMatrix m = random_symmetric(rng, d);
        const auto e = sym_eig(m);
        CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
        CHECK(reconstruction_residual(m, e) <= 1e-9 * std::max(1.0, frobenius(m)));
        CHECK(orthogonality_residual(e.basis) <= 1e-10 * d);
    }
}

TEST_CASE("sym_eig rejects asymmetric input") {
    Matrix m = Matrix::from_rows({{0.0, 1.0}, {2.0, 0.0}});
    CHECK_THROWS_AS((void)symmetrized(m), Error);
    try {
        (void)symmetrized(m);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_symmetric);
    }
}

TEST_CASE("loewner_leq basics") {
    SUBCASE("1x1 strict order") {
        const auto r = loewner_leq(SymMatrix::from_rows({{0.0}}), SymMatrix::from_rows({{1.0}}));
        CHECK(r.holds);
        CHECK(r.margin == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("incomparable diagonal pair") {
        const auto r = loewner_leq(SymMatrix::diagonal(std::vector{1.0, 2.0}),
                                   SymMatrix::diagonal(std::vector{2.0, 1.0}));
        CHECK_FALSE(r.holds);
        CHECK(r.margin == doctest::Approx(-1.0).epsilon(1e-14));
    }
    SUBCASE("boundary case: eigenvalues of I - exchange are {0, 2}") {
        const auto r =
            loewner_leq(SymMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}), SymMatrix::identity(2));
        CHECK(r.holds);
        CHECK(std::abs(r.margin) < 1e-13);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS((void)loewner_leq(SymMatrix::identity(2), SymMatrix::identity(3)), Error);
    }
}

TEST_CASE("loewner_leq shift sanity") {
    Rng rng(7);
    const SymMatrix a = random_symmetric(rng, 5);
    CHECK(std::abs(loewner_leq(a, a).margin) <= 1e-14);
    for (double c : {0.0, 1.0, 10.0}) {
        const SymMatrix b = a + c * SymMatrix::identity(5);
        CHECK(loewner_leq(a, b).margin == doctest::Approx(c).epsilon(1e-12));
    }
}

TEST_CASE("joint_diagonalize on an already diagonal tuple") {
    const CommutingTuple t({SymMatrix::diagonal(std::vector{1.0, 2.0}),
                            SymMatrix::diagonal(std::vector{3.0, 4.0})});
    const auto j = joint_diagonalize(t);
    CHECK(j.basis(0, 0) == 1.0);
    CHECK(j.basis(1, 1) == 1.0);
    CHECK(j.basis(0, 1) == 0.0);
    CHECK(j.value(0, 0) == doctest::Approx(1.0));
    CHECK(j.value(0, 1) == doctest::Approx(3.0));
    CHECK(j.value(1, 0) == doctest::Approx(2.0));
    CHECK(j.value(1, 1) == doctest::Approx(4.0));
}

TEST_CASE("joint_diagonalize undoes a shared rotation") {
    const double c = std::cos(0.7), s = std::sin(0.7);
    const Matrix q = Matrix::from_rows({{c, -s}, {s, c}});
    const auto conj = [&](std::vector<double> d) { return conjugate_diag(q, d); };
    const CommutingTuple t({conj({1.0, 2.0}), conj({3.0, 4.0})});
    const auto j = joint_diagonalize(t);
    // Rows are sorted lexicographically, so the order is pinned.
    CHECK(j.value(0, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(j.value(0, 1) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(j.value(1, 0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(j.value(1, 1) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("joint_diagonalize with a degenerate identity component") {
    Rng rng(11);
    const SymMatrix m = random_symmetric(rng, 4);
    const CommutingTuple t({SymMatrix::identity(4), m});
    const auto j = joint_diagonalize(t);
    const auto em = sym_eig(m);
    for (int k = 0; k < 4; ++k) {
        CHECK(j.value(k, 0) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(j.value(k, 1) == doctest::Approx(em.eigenvalues[k]).epsilon(1e-9));
    }
}

TEST_CASE("CommutingTuple rejects non-commuting matrices") {
    CHECK_THROWS_AS(CommutingTuple({SymMatrix::diagonal(std::vector{1.0, 2.0}),
                                    SymMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})}),
                    Error);
}

TEST_CASE("joint spectrum projection property on random tuples") {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 2;
        const int d = 2 + trial % 7;
        const CommutingTuple t =
            sample_commuting_tuple(n, d, {-3.0, 5.0}, derive_seed(99, trial));
        const auto j = joint_diagonalize(t);
        for (int col = 0; col < n; ++col) {
            const auto e = sym_eig(t.matrix(col));
            const double bound = 1e-8 * std::max(1.0, frobenius(t.matrix(col)));
            const Matrix rotated = conjugate_transposed(j.basis, t.matrix(col));
            double off = 0.0;
            for (int r = 0; r < d; ++r)
                for (int cc = 0; cc < d; ++cc)
                    if (r != cc) off += rotated(r, cc) * rotated(r, cc);
            CHECK(std::sqrt(off) <= bound);
            for (int k = 0; k < d; ++k) {
                double best = 1e300;
                for (double ev : e.eigenvalues)
                    best = std::min(best, std::abs(ev - j.value(k, col)));
                CHECK(best <= 1e-8 * std::max(1.0, std::abs(e.eigenvalues.back())));
            }
        }
    }
}

TEST_CASE("sample_commuting_tuple basics") {
    SUBCASE("1x1 sample lands in the box") {
        const auto t = sample_commuting_tuple(1, 1, {1.0, 2.0}, 42);
        CHECK(t.matrix(0)(0, 0) >= 1.0);
        CHECK(t.matrix(0)(0, 0) <= 2.0);
    }
    SUBCASE("bitwise determinism") {
        const auto t1 = sample_commuting_tuple(3, 5, {-1.0, 1.0}, 7);
        const auto t2 = sample_commuting_tuple(3, 5, {-1.0, 1.0}, 7);
        for (int j = 0; j < 3; ++j) {
            const auto a = t1.matrix(j).entries();
            const auto b = t2.matrix(j).entries();
            CHECK(std::equal(a.begin(), a.end(), b.begin()));
        }
    }
    SUBCASE("construction commutes to rounding") {
        const auto t = sample_commuting_tuple(3, 6, {0.5, 4.0}, 7);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(frobenius(commutator(t.matrix(i), t.matrix(j))) <= 1e-12);
    }
}

TEST_CASE("sample_dominating_pair orders every component") {
    SUBCASE("cross 1x1 reduces to ordered scalars") {
        const auto p = sample_dominating_pair(Regime::cross, 1, 1, {0.1, 3.0}, {0.0, 1.0}, 5);
        CHECK(p.a.matrix(0)(0, 0) <= p.b.matrix(0)(0, 0));
    }
    SUBCASE("tuple regime margins are nonnegative") {
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
            const auto p =
                sample_dominating_pair(Regime::tuple_only, 2, 4, {0.1, 10.0}, {0.0, 1.0}, seed);
            for (int j = 0; j < 2; ++j)
                CHECK(loewner_leq(p.a.matrix(j), p.b.matrix(j)).margin >= -1e-12);
        }
    }
    SUBCASE("nonpositive boxes keep both spectra nonpositive") {
        for (std::uint64_t seed : {10ULL, 11ULL, 12ULL}) {
            const auto p = sample_dominating_pair(Regime::tuple_only, 2, 4, {-3.0, -0.05},
                                                  {0.0, 1.0}, seed);
            for (int j = 0; j < 2; ++j) {
                CHECK(loewner_leq(p.a.matrix(j), p.b.matrix(j)).margin >= -1e-12);
                CHECK(sym_eig(p.a.matrix(j)).eigenvalues.back() <= 1e-12);
                CHECK(sym_eig(p.b.matrix(j)).eigenvalues.back() <= 1e-12);
            }
        }
    }
    SUBCASE("tuple regime produces genuinely non-cross-commuting pairs") {
        int noncommuting = 0;
        for (int seed = 0; seed < 100; ++seed) {
            const auto p = sample_dominating_pair(Regime::tuple_only, 2, 4, {0.1, 10.0},
                                                  {0.0, 1.0}, derive_seed(123, seed));
            if (frobenius(commutator(p.a.matrix(0), p.b.matrix(0))) > 1e-6) ++noncommuting;
        }
        CHECK(noncommuting > 0);
        CHECK(noncommuting > 50); // almost every independent-basis draw
    }
    SUBCASE("cross regime commutes across tuples") {
        const auto p = sample_dominating_pair(Regime::cross, 2, 4, {0.1, 10.0}, {0.0, 1.0}, 9);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(frobenius(commutator(p.a.matrix(i), p.b.matrix(j))) <= 1e-10);
    }
    SUBCASE("determinism") {
        const auto p1 =
            sample_dominating_pair(Regime::tuple_only, 2, 3, {0.1, 2.0}, {0.0, 0.5}, 77);
        const auto p2 =
            sample_dominating_pair(Regime::tuple_only, 2, 3, {0.1, 2.0}, {0.0, 0.5}, 77);
        const auto x = p1.b.matrix(1).entries();
        const auto y = p2.b.matrix(1).entries();
        CHECK(std::equal(x.begin(), x.end(), y.begin()));
    }
}
