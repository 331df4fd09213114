#include "loewner/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

using nlohmann::json;

std::string dump_definition(const json& j) { return j.dump(); }

} // namespace

FunctionUnderTest make_power_function(int n, double alpha) {
    const QAlphaFunction repr = power_function_repr(n, alpha);
    FunctionUnderTest f;
    f.name = "power";
    f.arity = n;
    f.domain = TrialDomain::positive;
    f.real_eval = ScalarField{n, [repr](std::span<const double> x) {
                                  return q_alpha_eval(repr, x);
                              }};
    f.complex_eval = [repr](std::span<const std::complex<double>> z) {
        return q_alpha_eval_continued(repr, z);
    };
    f.source = StieltjesFunction{repr};
    f.definition_json = dump_definition(json{{"function", "power"}, {"n", n}, {"alpha", alpha}});
    return f;
}

FunctionUnderTest make_qalpha_function(QAlphaFunction q) {
    FunctionUnderTest f;
    f.name = "qalpha";
    f.arity = q.measure.arity();
    f.domain = TrialDomain::positive;
    f.source = StieltjesFunction{q};
    f.definition_json = function_to_json(*f.source);
    f.real_eval = ScalarField{f.arity, [q](std::span<const double> x) {
                                  return q_alpha_eval(q, x);
                              }};
    f.complex_eval = [q](std::span<const std::complex<double>> z) {
        return q_alpha_eval_continued(q, z);
    };
    return f;
}

FunctionUnderTest make_rminus_function(RMinusFunction r) {
    FunctionUnderTest f;
    f.name = "rminus";
    f.arity = r.measure.arity();
    f.domain = TrialDomain::nonpositive;
    f.source = StieltjesFunction{r};
    f.definition_json = function_to_json(*f.source);
    f.real_eval = ScalarField{f.arity, [r](std::span<const double> w) {
                                  return r_minus_eval(r, w);
                              }};
    f.complex_eval = [r](std::span<const std::complex<double>> z) {
        return r_minus_eval_continued(r, z);
    };
    return f;
}

FunctionUnderTest make_bilinear_function(double lambda) {
    if (!(lambda > 0.0))
        fail(Errc::invalid_argument, "lambda " + std::to_string(lambda) + " must be > 0");
    FunctionUnderTest f;
    f.name = "bilinear";
    f.arity = 2;
    f.domain = TrialDomain::nonpositive;
    f.real_eval = ScalarField{2, [lambda](std::span<const double> w) {
                                  return lambda - w[0] * w[1];
                              }};
    f.complex_eval = [lambda](std::span<const std::complex<double>> z) {
        return lambda - z[0] * z[1];
    };
    // The same function written through its resolvent-class triple.
    f.source = StieltjesFunction{make_rminus(
        lambda, 0.0, AtomicMeasure(2, {Atom{{0.0, 0.0}, 1.0}}))};
    f.definition_json = dump_definition(json{{"function", "bilinear"}, {"lambda", lambda}});
    return f;
}

FunctionUnderTest make_polyproduct_function(std::vector<double> coeffs,
                                            std::vector<double> alphas) {
    if (coeffs.empty() || coeffs.size() != alphas.size())
        fail(Errc::invalid_argument, "need equal-length nonempty coefficient and exponent lists");
    for (double c : coeffs)
        if (!(c >= 0.0)) fail(Errc::invalid_argument, "coefficients must be >= 0");
    for (double a : alphas)
        if (!(a >= 0.0)) fail(Errc::invalid_argument, "exponents must be >= 0");
    const int n = static_cast<int>(coeffs.size());
    FunctionUnderTest f;
    f.name = "polyproduct";
    f.arity = n;
    f.domain = TrialDomain::positive;
    f.real_eval = ScalarField{n, [coeffs, alphas](std::span<const double> x) {
                                  double sum = 0.0;
                                  double prefix = 1.0;
                                  for (size_t j = 0; j < coeffs.size(); ++j) {
                                      prefix *= x[j];
                                      sum += coeffs[j] * std::pow(prefix, alphas[j]);
                                  }
                                  return sum;
                              }};
    f.complex_eval = [coeffs, alphas](std::span<const std::complex<double>> z) {
        std::complex<double> sum = 0.0;
        std::complex<double> log_prefix = 0.0;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            log_prefix += std::log(z[j]);
            sum += coeffs[j] * std::exp(alphas[j] * log_prefix);
        }
        return sum;
    };
    f.definition_json = dump_definition(
        json{{"function", "polyproduct"}, {"n", n}, {"c", coeffs}, {"alphas", alphas}});
    return f;
}

CheckOptions CheckOptions::tightened() {
    CheckOptions opt;
    opt.joint.eig.off_tol = 1e-15;
    opt.joint.eig.max_sweeps = 200;
    return opt;
}

namespace {

void require_in_domain(const JointSpectralDecomposition& j, TrialDomain domain, double tol,
                       const char* which) {
    double scale = 1.0;
    for (double v : j.spectrum) scale = std::max(scale, std::abs(v));
    for (double v : j.spectrum) {
        const bool ok = domain == TrialDomain::positive ? v > 0.0 : v <= tol * scale;
        if (!ok)
            fail(Errc::domain_violation, std::string("joint eigenvalue ") +
                                             std::to_string(v) + " of tuple " + which +
                                             " outside the trial domain");
    }
}

double pair_margin(const FunctionUnderTest& f, const DominatingPair& pair,
                   const CheckOptions& opt) {
    if (f.arity != pair.a.arity())
        fail(Errc::arity_mismatch, "function arity " + std::to_string(f.arity) +
                                       " vs tuple arity " + std::to_string(pair.a.arity()));
    const auto ja = joint_diagonalize(pair.a, opt.joint);
    const auto jb = joint_diagonalize(pair.b, opt.joint);
    require_in_domain(ja, f.domain, opt.domain_tol, "A");
    require_in_domain(jb, f.domain, opt.domain_tol, "B");
    const SymMatrix fa = apply_function(ja, f.real_eval);
    const SymMatrix fb = apply_function(jb, f.real_eval);
    const double scale = std::max({1.0, frobenius(fa), frobenius(fb)});
    return lambda_min(fb - fa, opt.joint.eig) / scale;
}

// Classified margin: dead-zone outcomes are re-evaluated with tightened
// eigensolver thresholds and the re-run decides.
double settled_margin(const FunctionUnderTest& f, const DominatingPair& pair,
                      double eps, double floor) {
    const double margin = pair_margin(f, pair, CheckOptions{});
    if (margin >= -eps || margin < -floor) return margin;
    return pair_margin(f, pair, CheckOptions::tightened());
}

void require_compatible(const FunctionUnderTest& f, const TrialConfig& cfg) {
    if (f.arity != cfg.n)
        fail(Errc::arity_mismatch, "function arity " + std::to_string(f.arity) +
                                       " vs configured n " + std::to_string(cfg.n));
    const bool ok = f.domain == TrialDomain::positive ? cfg.box.lo > 0.0 : cfg.box.hi <= 0.0;
    if (!ok)
        fail(Errc::domain_violation,
             "sampling box incompatible with the function's trial domain");
}

} // namespace

CheckResult check_pair(const FunctionUnderTest& f, const DominatingPair& pair, double eps,
                       const CheckOptions& opt) {
    const double margin = pair_margin(f, pair, opt);
    return {margin, margin >= -eps};
}

MonotonicityReport run_trials(const FunctionUnderTest& f, Regime regime, int trials,
                              const TrialConfig& cfg) {
    if (trials < 0) fail(Errc::invalid_argument, "negative trial count");
    require_compatible(f, cfg);

    MonotonicityReport report;
    report.function = f.name;
    report.regime = regime;
    report.trials = trials;
    report.config = cfg;
    report.function_definition = f.definition_json;

    for (int k = 0; k < trials; ++k) {
        const std::uint64_t seed_k = derive_seed(cfg.seed, static_cast<std::uint64_t>(k));
        const DominatingPair pair =
            sample_dominating_pair(regime, cfg.n, cfg.d, cfg.box, cfg.gap_box, seed_k);
        const double margin = settled_margin(f, pair, cfg.eps, cfg.violation_floor);
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -cfg.eps) {
            ++report.violations;
            if (!report.witness) report.witness = Witness{seed_k, margin, pair};
        }
    }
    return report;
}

std::optional<Witness> counterexample_search(const FunctionUnderTest& f, Regime regime,
                                             int budget, const TrialConfig& cfg) {
    if (budget < 0) fail(Errc::invalid_argument, "negative search budget");
    require_compatible(f, cfg);
    for (int k = 0; k < budget; ++k) {
        const std::uint64_t seed_k = derive_seed(cfg.seed, static_cast<std::uint64_t>(k));
        const DominatingPair pair =
            sample_dominating_pair(regime, cfg.n, cfg.d, cfg.box, cfg.gap_box, seed_k);
        const double margin = settled_margin(f, pair, cfg.eps, cfg.violation_floor);
        if (margin < -cfg.violation_floor) return Witness{seed_k, margin, pair};
    }
    return std::nullopt;
}

std::vector<PickViolation> pick_check(const FunctionUnderTest& f, int samples,
                                      std::uint64_t seed, bool include_probes) {
    if (!f.complex_eval)
        fail(Errc::missing_complex_extension,
             "function '" + f.name + "' has no complex extension");
    if (samples < 0) fail(Errc::invalid_argument, "negative sample count");

    std::vector<ComplexPoint> points;
    if (include_probes) {
        using namespace std::complex_literals;
        points.push_back(ComplexPoint(
            f.arity, std::polar(1.0, 3.0 * std::numbers::pi / 4.0)));
        points.push_back(ComplexPoint(f.arity, std::polar(1.0, std::numbers::pi / 4.0)));
    }
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        ComplexPoint z(f.arity);
        for (auto& zj : z) {
            const double re = rng.uniform(-5.0, 5.0);
            const double im = rng.uniform(0.01, 5.0);
            zj = {re, im};
        }
        points.push_back(std::move(z));
    }

    std::vector<PickViolation> violations;
    for (const auto& z : points) {
        const std::complex<double> value = f.complex_eval(z);
        if (value.imag() < -1e-10) violations.push_back({z, value.imag()});
    }
    return violations;
}

namespace {

json matrix_to_json(const SymMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json tuple_to_json(const CommutingTuple& t) {
    json mats = json::array();
    for (const auto& m : t.matrices()) mats.push_back(matrix_to_json(m));
    return mats;
}

} // namespace

std::string report_to_json(const MonotonicityReport& report) {
    json config{{"function", json::parse(report.function_definition)},
                {"regime", to_string(report.regime)},
                {"trials", report.trials},
                {"n", report.config.n},
                {"d", report.config.d},
                {"box", {report.config.box.lo, report.config.box.hi}},
                {"gap_box", {report.config.gap_box.lo, report.config.gap_box.hi}},
                {"seed", report.config.seed},
                {"eps", report.config.eps},
                {"violation_floor", report.config.violation_floor}};
    json root{{"function", report.function},
              {"regime", to_string(report.regime)},
              {"trials", report.trials},
              {"violations", report.violations},
              {"worst_margin", report.worst_margin},
              {"config", std::move(config)}};
    if (report.witness) {
        root["witness"] = json{{"seed", report.witness->seed},
                               {"n", report.witness->pair.a.arity()},
                               {"d", report.witness->pair.a.dim()},
                               {"matrices_a", tuple_to_json(report.witness->pair.a)},
                               {"matrices_b", tuple_to_json(report.witness->pair.b)},
                               {"margin", report.witness->margin}};
    }
    return root.dump(2) + "\n";
}

} // namespace loewner
