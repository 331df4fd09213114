#include "loewner/stieltjes.hpp"

#include <cmath>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

AtomicMeasure::AtomicMeasure(int n, std::vector<Atom> atoms)
    : n_(n), atoms_(std::move(atoms)) {
    if (n_ < 1) fail(Errc::invalid_argument, "measure dimension must be >= 1");
    for (const auto& a : atoms_) {
        if (static_cast<int>(a.xi.size()) != n_)
            fail(Errc::dim_mismatch, "atom position length does not match dimension");
        for (double c : a.xi)
            if (!(c >= 0.0))
                fail(Errc::invalid_argument, "atom coordinate " + std::to_string(c) +
                                                 " outside the positive orthant");
        if (!(a.w > 0.0))
            fail(Errc::invalid_argument, "atom weight " + std::to_string(a.w) +
                                             " must be positive");
    }
}

double AtomicMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.w;
    return s;
}

QAlphaFunction make_qalpha(double alpha, double gamma, AtomicMeasure measure) {
    if (!(alpha >= 0.0))
        fail(Errc::invalid_argument, "alpha " + std::to_string(alpha) + " must be >= 0");
    return QAlphaFunction{alpha, gamma, std::move(measure)};
}

RMinusFunction make_rminus(double lambda, double gamma, AtomicMeasure measure) {
    if (!(lambda > 0.0))
        fail(Errc::invalid_argument, "lambda " + std::to_string(lambda) + " must be > 0");
    if (!(gamma >= 0.0))
        fail(Errc::invalid_argument, "gamma " + std::to_string(gamma) + " must be >= 0");
    return RMinusFunction{lambda, gamma, std::move(measure)};
}

namespace {

void require_arity(const AtomicMeasure& m, size_t zlen) {
    if (static_cast<size_t>(m.arity()) != zlen)
        fail(Errc::arity_mismatch, "point dimension " + std::to_string(zlen) +
                                       " vs measure dimension " + std::to_string(m.arity()));
}

bool is_integer(double a) { return a == std::floor(a); }

} // namespace

std::complex<double> stieltjes_transform(const AtomicMeasure& m,
                                         std::span<const std::complex<double>> z,
                                         double alpha) {
    require_arity(m, z.size());
    std::complex<double> sum = 0.0;
    for (const auto& atom : m.atoms()) {
        std::complex<double> prod = 1.0;
        for (int j = 0; j < m.arity(); ++j) {
            const std::complex<double> factor = atom.xi[j] + z[j];
            if (factor == std::complex<double>(0.0, 0.0))
                fail(Errc::singular_atom, "factor " + std::to_string(j) + " vanishes");
            prod *= factor;
        }
        if (prod == std::complex<double>(0.0, 0.0))
            fail(Errc::singular_atom, "atom product vanishes");
        if (prod.imag() == 0.0 && prod.real() < 0.0 && !is_integer(alpha))
            fail(Errc::branch_cut, "atom product " + std::to_string(prod.real()) +
                                       " lies on the negative real axis");
        sum += atom.w * std::pow(prod, -alpha);
    }
    return sum;
}

double stieltjes_transform(const AtomicMeasure& m, std::span<const double> x, double alpha) {
    require_arity(m, x.size());
    double sum = 0.0;
    for (const auto& atom : m.atoms()) {
        double prod = 1.0;
        for (int j = 0; j < m.arity(); ++j) {
            const double factor = atom.xi[j] + x[j];
            if (factor == 0.0)
                fail(Errc::singular_atom, "factor " + std::to_string(j) + " vanishes");
            prod *= factor;
        }
        if (prod < 0.0 && !is_integer(alpha))
            fail(Errc::branch_cut, "atom product " + std::to_string(prod) +
                                       " is negative with non-integer alpha");
        sum += atom.w * std::pow(prod, -alpha);
    }
    return sum;
}

std::complex<double> stieltjes_transform_continued(const AtomicMeasure& m,
                                                   std::span<const std::complex<double>> z,
                                                   double alpha) {
    require_arity(m, z.size());
    std::complex<double> sum = 0.0;
    for (const auto& atom : m.atoms()) {
        std::complex<double> log_sum = 0.0;
        for (int j = 0; j < m.arity(); ++j) {
            const std::complex<double> factor = atom.xi[j] + z[j];
            if (factor == std::complex<double>(0.0, 0.0))
                fail(Errc::singular_atom, "factor " + std::to_string(j) + " vanishes");
            log_sum += std::log(factor);
        }
        sum += atom.w * std::exp(-alpha * log_sum);
    }
    return sum;
}

double q_alpha_eval(const QAlphaFunction& f, std::span<const double> x) {
    const double den = f.gamma + stieltjes_transform(f.measure, x, f.alpha);
    if (!(den > 1e-14))
        fail(Errc::non_positive_denominator,
             "representation value " + std::to_string(den) + " is not positive");
    return 1.0 / den;
}

std::complex<double> q_alpha_eval_continued(const QAlphaFunction& f,
                                            std::span<const std::complex<double>> z) {
    const std::complex<double> den =
        f.gamma + stieltjes_transform_continued(f.measure, z, f.alpha);
    if (std::abs(den) < 1e-140)
        fail(Errc::non_positive_denominator, "representation value vanishes");
    return 1.0 / den;
}

namespace {

template <typename T>
std::vector<T> negated(std::span<const T> w) {
    std::vector<T> v(w.size());
    for (size_t j = 0; j < w.size(); ++j) v[j] = -w[j];
    return v;
}

} // namespace

double r_minus_eval(const RMinusFunction& psi, std::span<const double> w) {
    const std::vector<double> neg = negated(w);
    const double den = psi.gamma + stieltjes_transform(psi.measure, neg, 1.0);
    if (!(den > 1e-14))
        fail(Errc::non_positive_denominator,
             "representation value " + std::to_string(den) + " is not positive");
    return psi.lambda - 1.0 / den;
}

std::complex<double> r_minus_eval_continued(const RMinusFunction& psi,
                                            std::span<const std::complex<double>> z) {
    const std::vector<std::complex<double>> neg = negated(z);
    const std::complex<double> den =
        psi.gamma + stieltjes_transform_continued(psi.measure, neg, 1.0);
    if (std::abs(den) < 1e-140)
        fail(Errc::non_positive_denominator, "representation value vanishes");
    return psi.lambda - 1.0 / den;
}

QAlphaFunction power_function_repr(int n, double alpha) {
    return make_qalpha(alpha, 0.0,
                       AtomicMeasure(n, {Atom{std::vector<double>(n, 0.0), 1.0}}));
}

AtomicMeasure product_measure(std::span<const AtomicMeasure> parts) {
    if (parts.empty()) fail(Errc::invalid_argument, "need at least one factor measure");
    for (const auto& p : parts)
        if (p.arity() != 1)
            fail(Errc::dim_mismatch, "product factors must be one-dimensional");

    std::vector<Atom> atoms{Atom{{}, 1.0}};
    for (const auto& p : parts) {
        std::vector<Atom> next;
        next.reserve(atoms.size() * p.atoms().size());
        for (const auto& prefix : atoms)
            for (const auto& a : p.atoms()) {
                Atom combined = prefix;
                combined.xi.push_back(a.xi[0]);
                combined.w *= a.w;
                next.push_back(std::move(combined));
            }
        atoms = std::move(next);
    }
    return AtomicMeasure(static_cast<int>(parts.size()), std::move(atoms));
}

} // namespace loewner
