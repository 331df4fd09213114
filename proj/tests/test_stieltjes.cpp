#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "loewner/errors.hpp"
#include "loewner/rng.hpp"
#include "loewner/stieltjes.hpp"

using namespace loewner;

namespace {

using Complex = std::complex<double>;

AtomicMeasure delta_origin(int n) {
    return AtomicMeasure(n, {Atom{std::vector<double>(n, 0.0), 1.0}});
}

AtomicMeasure random_measure(Rng& rng, int n, int max_atoms) {
    const int count = 1 + static_cast<int>(rng.uniform01() * max_atoms);
    std::vector<Atom> atoms;
    for (int a = 0; a < count; ++a) {
        Atom atom;
        for (int j = 0; j < n; ++j) atom.xi.push_back(rng.uniform(0.0, 5.0));
        atom.w = rng.uniform(0.1, 2.0);
        atoms.push_back(std::move(atom));
    }
    return AtomicMeasure(n, std::move(atoms));
}

} // namespace

TEST_CASE("stieltjes_transform single atoms") {
    SUBCASE("origin mass at a real point") {
        const std::vector<double> x{1.0, 2.0};
        CHECK(stieltjes_transform(delta_origin(2), std::span(x), 1.0) ==
              doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("weighted atom with square-root exponent") {
        const AtomicMeasure m(2, {Atom{{1.0, 1.0}, 2.0}});
        const std::vector<double> x{1.0, 1.0};
        CHECK(stieltjes_transform(m, std::span(x), 0.5) ==
              doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("two atoms sum to their single-atom values") {
        const AtomicMeasure m1(2, {Atom{{0.5, 2.0}, 0.7}});
        const AtomicMeasure m2(2, {Atom{{3.0, 0.1}, 1.9}});
        const AtomicMeasure both(2, {Atom{{0.5, 2.0}, 0.7}, Atom{{3.0, 0.1}, 1.9}});
        const std::vector<double> x{0.4, 1.3};
        const double expected = stieltjes_transform(m1, std::span(x), 0.6) +
                                stieltjes_transform(m2, std::span(x), 0.6);
        CHECK(stieltjes_transform(both, std::span(x), 0.6) ==
              doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("stieltjes_transform error reporting") {
    SUBCASE("vanishing factor") {
        const std::vector<double> x{0.0, 1.0};
        try {
            (void)stieltjes_transform(delta_origin(2), std::span(x), 0.5);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::singular_atom);
        }
    }
    SUBCASE("negative real product with non-integer exponent") {
        const std::vector<double> x{-1.0, 2.0};
        try {
            (void)stieltjes_transform(delta_origin(2), std::span(x), 0.5);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::branch_cut);
        }
        // Integer exponents stay on one sheet and evaluate.
        CHECK(stieltjes_transform(delta_origin(2), std::span(x), 1.0) ==
              doctest::Approx(-0.5).epsilon(1e-15));
    }
    SUBCASE("arity mismatch") {
        const std::vector<double> x{1.0};
        CHECK_THROWS_AS((void)stieltjes_transform(delta_origin(2), std::span(x), 1.0), Error);
    }
}

TEST_CASE("transform linearity in the measure") {
    Rng rng(310);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        const AtomicMeasure m1 = random_measure(rng, n, 3);
        const AtomicMeasure m2 = random_measure(rng, n, 3);
        std::vector<Atom> joined = m1.atoms();
        for (const auto& a : m2.atoms()) joined.push_back(a);
        const AtomicMeasure sum(n, joined);

        std::vector<Atom> doubled = m1.atoms();
        for (auto& a : doubled) a.w *= 2.0;
        const AtomicMeasure scaled(n, doubled);

        std::vector<double> x(n);
        for (auto& c : x) c = rng.uniform(0.1, 8.0);
        const double alpha = rng.uniform(0.1, 1.0);
        CHECK(stieltjes_transform(sum, std::span(x), alpha) ==
              doctest::Approx(stieltjes_transform(m1, std::span(x), alpha) +
                              stieltjes_transform(m2, std::span(x), alpha))
                  .epsilon(1e-12));
        CHECK(stieltjes_transform(scaled, std::span(x), alpha) ==
              doctest::Approx(2.0 * stieltjes_transform(m1, std::span(x), alpha))
                  .epsilon(1e-12));
    }
}

TEST_CASE("q_alpha_eval basics") {
    SUBCASE("origin mass with alpha = 1 is the coordinate product") {
        const QAlphaFunction f = make_qalpha(1.0, 0.0, delta_origin(2));
        const std::vector<double> x{2.0, 3.0};
        CHECK(q_alpha_eval(f, std::span(x)) == doctest::Approx(6.0).epsilon(1e-14));
    }
    SUBCASE("origin mass with alpha = 1/2 is the geometric mean") {
        const QAlphaFunction f = make_qalpha(0.5, 0.0, delta_origin(2));
        const std::vector<double> x{4.0, 9.0};
        CHECK(q_alpha_eval(f, std::span(x)) == doctest::Approx(6.0).epsilon(1e-14));
    }
    SUBCASE("zero measure gives a constant") {
        const QAlphaFunction f = make_qalpha(1.0, 2.0, AtomicMeasure(2, {}));
        for (double t : {0.2, 1.0, 7.3}) {
            const std::vector<double> x{t, 2.0 * t};
            CHECK(q_alpha_eval(f, std::span(x)) == doctest::Approx(0.5).epsilon(1e-15));
        }
    }
    SUBCASE("nonpositive representation value is rejected") {
        const QAlphaFunction f = make_qalpha(1.0, -1.0, delta_origin(2));
        const std::vector<double> x{1.0, 1.0}; // gamma + S = -1 + 1 = 0
        try {
            (void)q_alpha_eval(f, std::span(x));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::non_positive_denominator);
        }
    }
}

TEST_CASE("power_function_repr evaluates to coordinate-product powers") {
    {
        const QAlphaFunction f = power_function_repr(2, 0.5);
        const std::vector<double> x{4.0, 9.0};
        CHECK(q_alpha_eval(f, std::span(x)) == doctest::Approx(6.0).epsilon(1e-14));
    }
    {
        const QAlphaFunction f = power_function_repr(3, 1.0 / 3.0);
        const std::vector<double> x{1.0, 8.0, 27.0};
        CHECK(q_alpha_eval(f, std::span(x)) == doctest::Approx(6.0).epsilon(1e-14));
    }
    {
        const QAlphaFunction f = power_function_repr(1, 1.0);
        const std::vector<double> x{5.0};
        CHECK(q_alpha_eval(f, std::span(x)) == doctest::Approx(5.0).epsilon(1e-14));
    }
    SUBCASE("agreement with the direct product power on random points") {
        Rng rng(41);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + trial % 3;
            const double alpha = rng.uniform(0.0, 1.0 / n);
            const QAlphaFunction f = power_function_repr(n, alpha);
            std::vector<double> x(n);
            double prod = 1.0;
            for (auto& c : x) {
                c = rng.uniform(0.1, 10.0);
                prod *= c;
            }
            CHECK(q_alpha_eval(f, std::span(x)) ==
                  doctest::Approx(std::pow(prod, alpha)).epsilon(1e-12));
        }
    }
}

TEST_CASE("r_minus_eval basics") {
    SUBCASE("origin mass gives lambda minus the coordinate product") {
        const RMinusFunction psi = make_rminus(1.0, 0.0, delta_origin(2));
        const std::vector<double> w{-1.0, -2.0};
        CHECK(r_minus_eval(psi, std::span(w)) == doctest::Approx(-1.0).epsilon(1e-14));
    }
    SUBCASE("zero measure gives the constant lambda - 1/gamma") {
        const RMinusFunction psi = make_rminus(1.0, 1.0, AtomicMeasure(2, {}));
        for (double t : {-0.1, -2.0, -9.0}) {
            const std::vector<double> w{t, t * 0.5};
            CHECK(r_minus_eval(psi, std::span(w)) == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
    SUBCASE("single off-origin atom, hand evaluated") {
        const RMinusFunction psi = make_rminus(2.0, 0.0, AtomicMeasure(2, {Atom{{1.0, 1.0}, 1.0}}));
        const std::vector<double> w{0.0, 0.0};
        CHECK(r_minus_eval(psi, std::span(w)) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS((void)make_rminus(0.0, 0.0, delta_origin(1)), Error);
        CHECK_THROWS_AS((void)make_rminus(1.0, -0.5, delta_origin(1)), Error);
    }
}

TEST_CASE("product_measure builds the Cartesian product") {
    SUBCASE("two origin masses") {
        const std::vector<AtomicMeasure> parts{delta_origin(1), delta_origin(1)};
        const AtomicMeasure p = product_measure(parts);
        REQUIRE(p.atoms().size() == 1);
        CHECK(p.atoms()[0].xi == std::vector<double>{0.0, 0.0});
        CHECK(p.atoms()[0].w == doctest::Approx(1.0));
    }
    SUBCASE("weights multiply") {
        const std::vector<AtomicMeasure> parts{AtomicMeasure(1, {Atom{{1.0}, 2.0}}),
                                               AtomicMeasure(1, {Atom{{3.0}, 5.0}})};
        const AtomicMeasure p = product_measure(parts);
        REQUIRE(p.atoms().size() == 1);
        CHECK(p.atoms()[0].xi == std::vector<double>{1.0, 3.0});
        CHECK(p.atoms()[0].w == doctest::Approx(10.0));
    }
    SUBCASE("transform factorizes over the parts") {
        const AtomicMeasure m1(1, {Atom{{0.2}, 0.5}, Atom{{1.5}, 1.0}});
        const AtomicMeasure m2(1, {Atom{{0.0}, 0.3}, Atom{{2.0}, 0.7}, Atom{{4.0}, 1.1}});
        const std::vector<AtomicMeasure> parts{m1, m2};
        const AtomicMeasure p = product_measure(parts);
        CHECK(p.atoms().size() == 6);
        Rng rng(52);
        for (int trial = 0; trial < 10; ++trial) {
            const double alpha = rng.uniform(0.1, 1.0);
            const std::vector<double> x{rng.uniform(0.1, 6.0), rng.uniform(0.1, 6.0)};
            const std::vector<double> x0{x[0]}, x1{x[1]};
            const double factored = stieltjes_transform(m1, std::span(x0), alpha) *
                                    stieltjes_transform(m2, std::span(x1), alpha);
            CHECK(stieltjes_transform(p, std::span(x), alpha) ==
                  doctest::Approx(factored).epsilon(1e-12));
        }
    }
    SUBCASE("multidimensional parts are rejected") {
        const std::vector<AtomicMeasure> parts{delta_origin(2)};
        CHECK_THROWS_AS((void)product_measure(parts), Error);
    }
}

TEST_CASE("continued evaluation maps the poly-upper-half-plane correctly") {
    // For alpha <= 1/n each continued atom term has a nonpositive imaginary
    // part, so 1/(gamma + S) keeps Im >= 0 on the sampled half-plane.
    Rng rng(63);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 3;
        const double alpha = rng.uniform(0.0, 1.0 / n);
        const QAlphaFunction f =
            make_qalpha(alpha, rng.uniform(0.0, 2.0), random_measure(rng, n, 4));
        for (int s = 0; s < 25; ++s) {
            std::vector<Complex> z(n);
            for (auto& zj : z) zj = {rng.uniform(-5.0, 5.0), rng.uniform(0.01, 5.0)};
            const Complex value = q_alpha_eval_continued(f, std::span(z));
            CHECK(value.imag() >= -1e-10);
        }
    }
}

TEST_CASE("continued and product-first evaluations agree on the positive reals") {
    Rng rng(74);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        const AtomicMeasure m = random_measure(rng, n, 4);
        const double alpha = rng.uniform(0.1, 1.0);
        std::vector<double> x(n);
        std::vector<Complex> z(n);
        for (int j = 0; j < n; ++j) {
            x[j] = rng.uniform(0.1, 10.0);
            z[j] = x[j];
        }
        const Complex continued = stieltjes_transform_continued(m, std::span(z), alpha);
        const double direct = stieltjes_transform(m, std::span(x), alpha);
        CHECK(continued.real() == doctest::Approx(direct).epsilon(1e-12));
        CHECK(std::abs(continued.imag()) <= 1e-12 * std::abs(direct));
    }
}

TEST_CASE("function JSON round trip and strictness") {
    SUBCASE("qalpha round trip") {
        const std::string text =
            R"({"kind":"qalpha","n":2,"alpha":0.5,"gamma":0.25,"atoms":[{"xi":[0.0,1.5],"w":2.0}]})";
        const StieltjesFunction f = parse_function_json(text);
        const auto& q = std::get<QAlphaFunction>(f);
        CHECK(q.alpha == 0.5);
        CHECK(q.gamma == 0.25);
        REQUIRE(q.measure.atoms().size() == 1);
        CHECK(q.measure.atoms()[0].xi[1] == 1.5);
        const StieltjesFunction again = parse_function_json(function_to_json(f));
        CHECK(std::get<QAlphaFunction>(again).measure.atoms()[0].w == 2.0);
    }
    SUBCASE("rminus round trip") {
        const std::string text =
            R"({"kind":"rminus","n":2,"lambda":1.0,"gamma":0.0,"atoms":[{"xi":[0.0,0.0],"w":1.0}]})";
        const auto& r = std::get<RMinusFunction>(parse_function_json(text));
        CHECK(r.lambda == 1.0);
        CHECK(r.measure.atoms().size() == 1);
    }
    SUBCASE("unknown fields are rejected") {
        CHECK_THROWS_AS((void)parse_function_json(
                            R"({"kind":"qalpha","n":1,"alpha":1.0,"gamma":0.0,"atoms":[],"extra":1})"),
                        Error);
        CHECK_THROWS_AS((void)parse_function_json(
                            R"({"kind":"qalpha","n":1,"alpha":1.0,"gamma":0.0,"atoms":[{"xi":[0],"w":1,"tag":2}]})"),
                        Error);
    }
    SUBCASE("unknown kind, malformed JSON, type errors") {
        CHECK_THROWS_AS((void)parse_function_json(R"({"kind":"spline","n":1})"), Error);
        CHECK_THROWS_AS((void)parse_function_json("not json"), Error);
        CHECK_THROWS_AS((void)parse_function_json(
                            R"({"kind":"qalpha","n":1,"alpha":"x","gamma":0.0,"atoms":[]})"),
                        Error);
        CHECK_THROWS_AS((void)parse_function_json(
                            R"({"kind":"qalpha","n":1.5,"alpha":1.0,"gamma":0.0,"atoms":[]})"),
                        Error);
    }
}
