#pragma once

#include <complex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loewner/matrix.hpp"

namespace loewner {

struct Atom {
    std::vector<double> xi; // point of the closed positive orthant
    double w = 0.0;         // weight > 0
};

/// Finite positive atomic measure on the closed positive orthant of R^n.
/// The empty atom list is the zero measure.
class AtomicMeasure {
public:
    AtomicMeasure(int n, std::vector<Atom> atoms);

    int arity() const { return n_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    double total_mass() const;

private:
    int n_;
    std::vector<Atom> atoms_;
};

/// Positive function f with 1/f = gamma + S^alpha tau, where S^alpha is the
/// generalized Stieltjes transform of the measure. gamma may be any real;
/// positivity of the evaluation target is enforced at call time.
struct QAlphaFunction {
    double alpha = 1.0; // >= 0
    double gamma = 0.0;
    AtomicMeasure measure;
};

QAlphaFunction make_qalpha(double alpha, double gamma, AtomicMeasure measure);

/// Nonpositive-orthant function psi with 1/(lambda - psi(-z)) = gamma +
/// S tau(z), i.e. psi(w) = lambda - 1/(gamma + S tau(-w)) with the plain
/// (alpha = 1) transform.
struct RMinusFunction {
    double lambda = 1.0; // > 0
    double gamma = 0.0;  // >= 0
    AtomicMeasure measure;
};

RMinusFunction make_rminus(double lambda, double gamma, AtomicMeasure measure);

/// Generalized Stieltjes transform sum_atoms w / (prod_j (xi_j + z_j))^alpha.
/// The product is formed first and raised to alpha on the principal branch,
/// so a negative real product with non-integer alpha is reported as BranchCut
/// rather than silently evaluated. A vanishing product is SingularAtom.
std::complex<double> stieltjes_transform(const AtomicMeasure& m,
                                         std::span<const std::complex<double>> z,
                                         double alpha);

/// Real-argument path of the same product-first evaluation.
double stieltjes_transform(const AtomicMeasure& m, std::span<const double> x, double alpha);

/// Analytic continuation of the transform from the positive orthant: the
/// factor logarithms are summed before exponentiation, which differs from the
/// product-first form exactly where the product's argument wraps past the
/// principal branch. This is the evaluation under which half-plane image
/// tests are meaningful.
std::complex<double> stieltjes_transform_continued(const AtomicMeasure& m,
                                                   std::span<const std::complex<double>> z,
                                                   double alpha);

/// f(x) = 1/(gamma + S^alpha tau(x)) on the positive orthant. Throws
/// NonPositiveDenominator when the representation value drops to <= 1e-14.
double q_alpha_eval(const QAlphaFunction& f, std::span<const double> x);

/// Continuation of 1/(gamma + S^alpha tau(z)) matching q_alpha_eval on the
/// positive reals.
std::complex<double> q_alpha_eval_continued(const QAlphaFunction& f,
                                            std::span<const std::complex<double>> z);

/// psi(w) = lambda - 1/(gamma + S tau(-w)) for w in the nonpositive orthant.
double r_minus_eval(const RMinusFunction& psi, std::span<const double> w);

std::complex<double> r_minus_eval_continued(const RMinusFunction& psi,
                                            std::span<const std::complex<double>> z);

/// The function (x_1 ... x_n)^alpha as a QAlphaFunction: unit mass at the
/// origin, gamma = 0.
QAlphaFunction power_function_repr(int n, double alpha);

/// Product of one-dimensional measures: Cartesian atoms, multiplied weights.
/// The transform then factorizes, S^alpha(prod)(z) = prod_j S^alpha(m_j)(z_j).
AtomicMeasure product_measure(std::span<const AtomicMeasure> parts);

using StieltjesFunction = std::variant<QAlphaFunction, RMinusFunction>;

/// Parses the JSON definition format:
///   {"kind":"qalpha","n":2,"alpha":0.5,"gamma":0.0,"atoms":[{"xi":[0,0],"w":1}]}
///   {"kind":"rminus","n":2,"lambda":1.0,"gamma":0.0,"atoms":[...]}
/// Unknown fields are rejected; numbers are read as 64-bit floats.
StieltjesFunction parse_function_json(const std::string& text);
StieltjesFunction load_function_file(const std::string& path);
std::string function_to_json(const StieltjesFunction& f);

} // namespace loewner
