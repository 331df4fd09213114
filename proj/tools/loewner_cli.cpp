#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loewner/errors.hpp"
#include "loewner/monotonicity.hpp"
#include "loewner/representation.hpp"
#include "loewner/stieltjes.hpp"

namespace {

using namespace loewner;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInvalid = 3;

struct FunctionFlags {
    std::string name;
    std::string file;
    int n = 2;
    double alpha = 0.5;
    double lambda = 1.0;
    std::vector<double> coeffs;
    std::vector<double> alphas;
};

void add_function_flags(CLI::App* cmd, FunctionFlags& ff) {
    cmd->add_option("--function", ff.name,
                    "registry function: power, bilinear, polyproduct, qalpha, rminus");
    cmd->add_option("--file", ff.file, "JSON definition file (qalpha or rminus)");
    cmd->add_option("--n", ff.n, "arity for registry functions");
    cmd->add_option("--alpha", ff.alpha, "exponent for --function power");
    cmd->add_option("--lambda", ff.lambda, "constant for --function bilinear");
    cmd->add_option("--c", ff.coeffs, "polyproduct coefficients")->delimiter(',');
    cmd->add_option("--alphas", ff.alphas, "polyproduct exponents")->delimiter(',');
}

FunctionUnderTest select_function(const FunctionFlags& ff) {
    if (!ff.file.empty()) {
        StieltjesFunction parsed = load_function_file(ff.file);
        if (const auto* q = std::get_if<QAlphaFunction>(&parsed))
            return make_qalpha_function(*q);
        return make_rminus_function(std::get<RMinusFunction>(parsed));
    }
    if (ff.name == "power") return make_power_function(ff.n, ff.alpha);
    if (ff.name == "bilinear") return make_bilinear_function(ff.lambda);
    if (ff.name == "polyproduct") return make_polyproduct_function(ff.coeffs, ff.alphas);
    if (ff.name == "qalpha" || ff.name == "rminus")
        fail(Errc::invalid_argument, "'" + ff.name + "' needs a --file definition");
    if (ff.name.empty()) fail(Errc::invalid_argument, "no function selected");
    fail(Errc::invalid_argument, "unknown function '" + ff.name + "'");
}

Interval interval_from(const std::vector<double>& v, Interval fallback) {
    if (v.empty()) return fallback;
    if (v.size() != 2) fail(Errc::invalid_argument, "interval options take exactly two values");
    return {v[0], v[1]};
}

Interval default_box(TrialDomain domain) {
    return domain == TrialDomain::positive ? Interval{0.1, 10.0} : Interval{-10.0, -1.01};
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::invalid_argument, "cannot write '" + path + "'");
    out << text;
}

struct VerifyArgs {
    FunctionFlags ff;
    std::string regime = "tuple";
    int trials = 1000;
    int d = 4;
    std::uint64_t seed = 1;
    std::vector<double> box, gap;
    double eps = 1e-9;
    double floor = 1e-6;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    const FunctionUnderTest fut = select_function(args.ff);
    TrialConfig cfg;
    cfg.n = fut.arity;
    cfg.d = args.d;
    cfg.box = interval_from(args.box, default_box(fut.domain));
    cfg.gap_box = interval_from(args.gap, {0.0, 1.0});
    cfg.seed = args.seed;
    cfg.eps = args.eps;
    cfg.violation_floor = args.floor;

    const MonotonicityReport report =
        run_trials(fut, regime_from_string(args.regime), args.trials, cfg);

    std::printf("%-12s %-7s %8s %11s %14s   %s\n", "function", "regime", "trials",
                "violations", "worst-margin", "result");
    std::printf("%-12s %-7s %8d %11d %14.5g   %s\n", report.function.c_str(),
                to_string(report.regime), report.trials, report.violations,
                report.worst_margin, report.violations == 0 ? "PASS" : "VIOLATION");
    if (report.witness) {
        std::printf("witness: seed=%llu d=%d margin=%.12g\n",
                    static_cast<unsigned long long>(report.witness->seed),
                    report.witness->pair.a.dim(), report.witness->margin);
    }
    if (!args.out.empty()) write_text_file(args.out, report_to_json(report));
    return report.violations == 0 ? kExitPass : kExitViolation;
}

struct IdentityArgs {
    FunctionFlags ff;
    std::string route = "both";
    int nodes = 400;
    int samples = 20;
    int d = 4;
    std::uint64_t seed = 1;
    std::vector<double> box;
    double tol_eigen = 1e-8;
    double tol_integral = 1e-6;
};

int run_identity(const IdentityArgs& args) {
    const FunctionUnderTest fut = select_function(args.ff);
    if (!fut.source || !std::holds_alternative<QAlphaFunction>(*fut.source))
        fail(Errc::invalid_argument,
             "the identity check needs a qalpha-representable function");
    const QAlphaFunction& q = std::get<QAlphaFunction>(*fut.source);
    const Interval box = interval_from(args.box, {0.1, 10.0});
    if (!(box.lo > 0.0))
        fail(Errc::invalid_argument, "sampling box must lie in the positive orthant");

    const bool do_eigen = args.route == "both" || args.route == "eigen";
    const bool do_integral = args.route == "both" || args.route == "integral";
    if (!do_eigen && !do_integral) (void)route_from_string(args.route); // throws

    std::printf("%-7s %3s %3s %7s %14s %14s\n", "sample", "n", "d", "alpha", "eigen",
                "integral");
    double max_eigen = 0.0, max_integral = 0.0;
    for (int s = 0; s < args.samples; ++s) {
        const std::uint64_t seed_s = derive_seed(args.seed, static_cast<std::uint64_t>(s));
        const CommutingTuple t =
            sample_commuting_tuple(q.measure.arity(), args.d, box, seed_s);
        double res_eigen = std::nan(""), res_integral = std::nan("");
        if (do_eigen) {
            RepresentationOptions opt;
            opt.route = Route::eigen;
            res_eigen = representation_residual(t, q, opt);
            max_eigen = std::max(max_eigen, res_eigen);
        }
        if (do_integral) {
            RepresentationOptions opt;
            opt.route = Route::integral;
            opt.nodes = args.nodes;
            res_integral = representation_residual(t, q, opt);
            max_integral = std::max(max_integral, res_integral);
        }
        std::printf("%-7d %3d %3d %7.3f %14.5g %14.5g\n", s, q.measure.arity(), args.d,
                    q.alpha, res_eigen, res_integral);
    }

    bool pass = true;
    if (do_eigen) {
        std::printf("max eigen residual    %.5g (tolerance %.3g)\n", max_eigen,
                    args.tol_eigen);
        pass = pass && max_eigen <= args.tol_eigen;
    }
    if (do_integral) {
        std::printf("max integral residual %.5g (tolerance %.3g)\n", max_integral,
                    args.tol_integral);
        pass = pass && max_integral <= args.tol_integral;
    }
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    return pass ? kExitPass : kExitViolation;
}

struct EvalArgs {
    FunctionFlags ff;
    std::vector<std::string> points;
};

std::vector<double> parse_point(const std::string& text, int arity) {
    std::vector<double> x;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t used = 0;
        x.push_back(std::stod(token, &used));
    }
    if (static_cast<int>(x.size()) != arity)
        fail(Errc::invalid_argument, "point '" + text + "' does not have " +
                                         std::to_string(arity) + " coordinates");
    return x;
}

int run_eval(const EvalArgs& args) {
    const FunctionUnderTest fut = select_function(args.ff);
    if (args.points.empty()) fail(Errc::invalid_argument, "no --point given");
    for (const auto& text : args.points) {
        const std::vector<double> x = parse_point(text, fut.arity);
        std::printf("point (%s):", text.c_str());
        if (fut.source) {
            if (const auto* q = std::get_if<QAlphaFunction>(&*fut.source)) {
                const double s = stieltjes_transform(q->measure, std::span(x), q->alpha);
                std::printf(" S = %.12g", s);
            } else {
                const auto& r = std::get<RMinusFunction>(*fut.source);
                std::vector<double> neg(x.size());
                for (size_t j = 0; j < x.size(); ++j) neg[j] = -x[j];
                const double s = stieltjes_transform(r.measure, std::span(neg), 1.0);
                std::printf(" S(-w) = %.12g", s);
            }
        }
        const double value = fut.real_eval.eval(x);
        std::printf(" f = %.12g\n", value);
    }
    return kExitPass;
}

struct PickArgs {
    FunctionFlags ff;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::string out;
};

int run_pick(const PickArgs& args) {
    const FunctionUnderTest fut = select_function(args.ff);
    const auto violations = pick_check(fut, args.samples, args.seed);

    if (!args.out.empty()) {
        // Deterministic mini-report mirroring the verify report layout.
        std::string body = "{\n  \"function\": \"" + fut.name + "\",\n";
        body += "  \"samples\": " + std::to_string(args.samples) + ",\n";
        body += "  \"seed\": " + std::to_string(args.seed) + ",\n";
        body += "  \"violations\": " + std::to_string(violations.size()) + "\n}\n";
        write_text_file(args.out, body);
    }

    if (violations.empty()) {
        std::printf("%d samples + probes: no half-plane image violations\n", args.samples);
        return kExitPass;
    }
    const auto worst = std::min_element(
        violations.begin(), violations.end(),
        [](const PickViolation& a, const PickViolation& b) { return a.im_f < b.im_f; });
    std::printf("%zu violations among %d samples + probes\n", violations.size(),
                args.samples);
    std::printf("worst point:");
    for (const auto& zj : worst->z) std::printf(" (%.12g%+.12gi)", zj.real(), zj.imag());
    std::printf("  Im f = %.12g\n", worst->im_f);
    return kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-monotonicity testbench for commuting symmetric matrix tuples"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "run randomized Loewner-order monotonicity trials");
    add_function_flags(verify, verify_args.ff);
    verify->add_option("--regime", verify_args.regime, "cross or tuple");
    verify->add_option("--trials", verify_args.trials, "number of sampled pairs");
    verify->add_option("--d", verify_args.d, "matrix dimension");
    verify->add_option("--seed", verify_args.seed, "master seed");
    verify->add_option("--box", verify_args.box, "spectrum box LO HI")->expected(2);
    verify->add_option("--gap", verify_args.gap, "cross-regime gap box LO HI")->expected(2);
    verify->add_option("--eps", verify_args.eps, "pass tolerance");
    verify->add_option("--floor", verify_args.floor, "violation floor");
    verify->add_option("--out", verify_args.out, "write the JSON report here");

    IdentityArgs identity_args;
    CLI::App* identity = app.add_subcommand(
        "identity", "check the inverse-representation identity on sampled tuples");
    add_function_flags(identity, identity_args.ff);
    identity->add_option("--route", identity_args.route, "eigen, integral, or both");
    identity->add_option("--nodes", identity_args.nodes, "quadrature nodes");
    identity->add_option("--samples", identity_args.samples, "sampled tuples");
    identity->add_option("--d", identity_args.d, "matrix dimension");
    identity->add_option("--seed", identity_args.seed, "master seed");
    identity->add_option("--box", identity_args.box, "spectrum box LO HI")->expected(2);
    identity->add_option("--tol-eigen", identity_args.tol_eigen, "eigen-route tolerance");
    identity->add_option("--tol-integral", identity_args.tol_integral,
                         "integral-route tolerance");

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a function and its transform");
    add_function_flags(eval, eval_args.ff);
    eval->add_option("--point", eval_args.points, "comma-separated coordinates (repeatable)");

    PickArgs pick_args;
    CLI::App* pick = app.add_subcommand(
        "pick", "sample the poly-upper-half-plane image of the complex extension");
    add_function_flags(pick, pick_args.ff);
    pick->add_option("--samples", pick_args.samples, "random sample count");
    pick->add_option("--seed", pick_args.seed, "master seed");
    pick->add_option("--out", pick_args.out, "write a JSON summary here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInvalid;
    }

    try {
        if (verify->parsed()) return run_verify(verify_args);
        if (identity->parsed()) return run_identity(identity_args);
        if (eval->parsed()) return run_eval(eval_args);
        if (pick->parsed()) return run_pick(pick_args);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
    return kExitInvalid;
}
