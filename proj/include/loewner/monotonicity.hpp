#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loewner/calculus.hpp"
#include "loewner/sampling.hpp"
#include "loewner/stieltjes.hpp"

namespace loewner {

enum class TrialDomain { positive, nonpositive };

using ComplexPoint = std::vector<std::complex<double>>;
using ComplexEval =
    std::function<std::complex<double>(std::span<const std::complex<double>>)>;

/// A candidate operator-monotone function: real evaluation on its trial
/// domain, an optional complex extension (the analytic continuation used by
/// half-plane image checks), and a JSON definition echoed into reports.
/// `source` carries the Stieltjes representation when the function has one.
struct FunctionUnderTest {
    std::string name;
    int arity = 0;
    TrialDomain domain = TrialDomain::positive;
    ScalarField real_eval;
    ComplexEval complex_eval; // may be empty
    std::optional<StieltjesFunction> source;
    std::string definition_json;
};

/// (x_1 ... x_n)^alpha on the positive orthant, backed by its Stieltjes
/// representation (unit mass at the origin).
FunctionUnderTest make_power_function(int n, double alpha);

FunctionUnderTest make_qalpha_function(QAlphaFunction f);
FunctionUnderTest make_rminus_function(RMinusFunction f);

/// lambda - z_1 z_2 on the nonpositive orthant.
FunctionUnderTest make_bilinear_function(double lambda);

/// sum_j c_j (x_1 ... x_j)^{alpha_j} on the positive orthant, c_j >= 0.
FunctionUnderTest make_polyproduct_function(std::vector<double> coeffs,
                                            std::vector<double> alphas);

struct CheckOptions {
    JointDiagOptions joint{};
    double domain_tol = 1e-9;
    static CheckOptions tightened();
};

struct CheckResult {
    double margin; // lambda_min(f(B) - f(A)) / max(1, ||f(A)||_F, ||f(B)||_F)
    bool passes;   // margin >= -eps
};

/// Evaluates the monotonicity margin of f on an ordered pair through the
/// joint functional calculus. Throws DomainViolation when either joint
/// spectrum leaves f's domain.
CheckResult check_pair(const FunctionUnderTest& f, const DominatingPair& pair,
                       double eps = 1e-9, const CheckOptions& opt = {});

struct TrialConfig {
    int n = 2;
    int d = 4;
    Interval box{0.1, 10.0};
    Interval gap_box{0.0, 1.0};
    std::uint64_t seed = 1;
    double eps = 1e-9;
    double violation_floor = 1e-6;
};

struct Witness {
    std::uint64_t seed = 0; // regenerates the pair via sample_dominating_pair
    double margin = 0.0;
    DominatingPair pair;
};

struct MonotonicityReport {
    std::string function;
    Regime regime = Regime::tuple_only;
    int trials = 0;
    int violations = 0;
    double worst_margin = 0.0;
    std::optional<Witness> witness; // present iff violations > 0
    TrialConfig config;
    std::string function_definition;
};

/// Runs `trials` sampled ordered pairs; trial k derives its seed from
/// (config seed, k), so reports are reproducible and order-independent.
/// Margins between -violation_floor and -eps are re-evaluated with tightened
/// eigensolver thresholds and classified by the re-run, so rounding noise
/// cannot fabricate a counterexample.
MonotonicityReport run_trials(const FunctionUnderTest& f, Regime regime, int trials,
                              const TrialConfig& cfg);

/// First sampled pair whose (re-checked) margin falls below -violation_floor,
/// or nullopt. Restartable and deterministic: trial k of the same config
/// always examines the same pair.
std::optional<Witness> counterexample_search(const FunctionUnderTest& f, Regime regime,
                                             int budget, const TrialConfig& cfg);

struct PickViolation {
    ComplexPoint z;
    double im_f = 0.0;
};

/// Samples the open poly-upper-half-plane (Re z_j in (-5,5), Im z_j in
/// (0.01,5)) and records points where Im f(z) < -1e-10. Two deterministic
/// probes with all coordinates e^{3 pi i/4} and e^{pi i/4} are prepended so
/// known violations surface even at samples = 0. Requires a complex
/// extension.
std::vector<PickViolation> pick_check(const FunctionUnderTest& f, int samples,
                                      std::uint64_t seed, bool include_probes = true);

/// Deterministic JSON rendering of a report (keys sorted, config echoed).
std::string report_to_json(const MonotonicityReport& report);

} // namespace loewner
