#pragma once

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boundary.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "io.hpp"
#include "jack.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "series.hpp"
#include "theorems.hpp"

// Command-line front end. Exit codes:
//   0   success, every verdict holds
//   1   evaluation error (pole, degenerate alpha, ...), error record emitted
//   2   a verdict failed (report still emitted)
//   64  malformed flags or out-of-range parameters

namespace gft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerdict = 2;
inline constexpr int kExitConfig = 64;

inline int exit_code_for(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::RhoOutOfRange:
    case ErrorKind::CoefficientTooLarge:
        return kExitConfig;
    default:
        return kExitError;
    }
}

/// verify exit status as a function of the verdicts alone.
inline int verdict_exit_code(const TheoremReport& r) noexcept
{
    if (!r.hypothesis_ok || !r.conclusion_ok)
        return kExitVerdict;
    if (r.chain_ok && !*r.chain_ok)
        return kExitVerdict;
    return kExitOk;
}

struct Options {
    std::string coeffs;
    std::string coeffs_file;
    int order = 0; // 0 = largest admissible
    std::size_t angular_samples = 4096;
    std::size_t refine_iters = 64;
    double epsilon = 1e-4;
    double inner_cutoff = 1e-3;
    std::string format = "json";
    std::string output;

    // verify
    int theorem = 0;
    std::string points;
    std::string zpoints;
    double rho = 0.0;
    double ray_tol = 1e-6;

    // example
    int example_id = 0;
    int n = 1;
    std::string a;

    // jack-probe
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    int n_min = 1;
    int n_max = 3;
    int deg_min = 0;
    int deg_max = 7;
    std::string radii = "0.5,0.9";
    double tol = 1e-6;
    double radius = 0.0;

    // sup / field
    std::string kind = "T1";
    std::string shift = "0";
    std::string reduce = "modulus";
    int grid = 64;
};

inline SamplingConfig sampling_from(const Options& o)
{
    SamplingConfig cfg = SamplingConfig::with_epsilon(o.epsilon);
    cfg.angular_samples = o.angular_samples;
    cfg.refine_iters = o.refine_iters;
    cfg.inner_cutoff = o.inner_cutoff;
    cfg.validate();
    return cfg;
}

inline PowerPoly function_source(const Options& o)
{
    if (o.coeffs.empty() == o.coeffs_file.empty())
        throw ConfigError("give exactly one of --coeffs or --coeffs-file");
    if (!o.coeffs.empty())
        return PowerPoly(io::parse_complex_list(o.coeffs));
    return io::read_coefficient_file(o.coeffs_file);
}

inline ClassMember class_member_from(const Options& o)
{
    PowerPoly p = function_source(o);
    if (o.order > 0)
        return ClassMember(std::move(p), o.order);
    return ClassMember::from_poly(std::move(p));
}

inline ExprKind parse_kind(const std::string& name, Complex shift)
{
    if (name == "T1") return ExprKind::t1();
    if (name == "T2") return ExprKind::t2();
    if (name == "T3") return ExprKind::t3();
    if (name == "T4") return ExprKind::t4();
    if (name == "T5") return ExprKind::t5();
    if (name == "fprime-minus-1") return ExprKind::fprime_minus_1();
    if (name == "f-over-z-minus-1") return ExprKind::f_over_z_minus_1();
    if (name == "fprime-minus-alpha") return ExprKind::fprime_minus_alpha(shift);
    if (name == "f-over-z-minus-beta") return ExprKind::f_over_z_minus_beta(shift);
    throw ConfigError("unknown expression kind '" + name + "'");
}

inline Reduction parse_reduction(const std::string& name)
{
    if (name == "modulus") return Reduction::Modulus;
    if (name == "real") return Reduction::RealPart;
    if (name == "ray") return Reduction::NegRayDistance;
    throw ConfigError("unknown reduction '" + name + "'");
}

inline std::string render(const Json& j, const std::string& format)
{
    if (format == "json")
        return j.dump(2) + "\n";
    if (format == "csv")
        return to_csv(j);
    throw ConfigError("format must be json or csv");
}

inline void emit(const std::string& text, const Options& o, std::ostream& out)
{
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw ConfigError("cannot open output file " + o.output);
    file << text;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.theorem < 1 || o.theorem > 5)
        throw ConfigError("--theorem must be 1..5");
    const SamplingConfig cfg = sampling_from(o);
    const ClassMember f = class_member_from(o);
    std::vector<Complex> pts;
    if (!o.points.empty() && !o.zpoints.empty())
        throw ConfigError("give boundary points either as --points or as --zpoints");
    if (!o.points.empty())
        pts = io::points_from_turns(io::parse_real_list(o.points));
    else if (!o.zpoints.empty())
        pts = io::normalize_boundary_points(io::parse_complex_list(o.zpoints));
    else
        throw ConfigError("boundary points are required (--points or --zpoints)");
    if (!(o.rho > 1.0))
        throw RhoOutOfRange("rho = " + io::format_real(o.rho) + " must be a real number > 1");

    const AlphaMode mode = o.theorem == 5 ? AlphaMode::FOverZMean : AlphaMode::DerivativeMean;
    AlphaSpec spec = alpha_mean(f, pts, mode);
    spec.rho = o.rho;
    const TheoremReport rep = check_theorem(o.theorem, f, spec, cfg, o.ray_tol);
    if (rep.counterexample)
        err << "warning: hypothesis holds but conclusion fails; possible counterexample or sampling defect\n";
    emit(render(to_json(rep), o.format), o, out);
    return verdict_exit_code(rep);
}

inline int cmd_example(const Options& o, std::ostream& out, std::ostream& err)
{
    const SamplingConfig cfg = sampling_from(o);
    if (o.a.empty())
        throw ConfigError("--a is required");
    const TheoremReport rep = example_end_to_end(example_from_int(o.example_id), o.n, io::parse_complex(o.a), cfg);
    if (rep.counterexample)
        err << "warning: hypothesis holds but conclusion fails; possible counterexample or sampling defect\n";
    emit(render(to_json(rep), o.format), o, out);
    return verdict_exit_code(rep);
}

inline int cmd_jack(const Options& o, std::ostream& out, std::ostream&)
{
    SamplingConfig sampling;
    sampling.angular_samples = o.angular_samples;
    sampling.refine_iters = o.refine_iters;
    if (!o.coeffs.empty() || !o.coeffs_file.empty()) {
        const PowerPoly w = function_source(o);
        const ProbeResult res = probe(w, o.radius, sampling, o.tol);
        emit(render(to_json(res), o.format), o, out);
        return res.all_ok() ? kExitOk : kExitVerdict;
    }
    ProbeSuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.n_min = o.n_min;
    cfg.n_max = o.n_max;
    cfg.extra_min = o.deg_min;
    cfg.extra_max = o.deg_max;
    cfg.radii = io::parse_real_list(o.radii);
    cfg.tol = o.tol;
    cfg.sampling = sampling;
    const ProbeSummary sum = random_probe_suite(cfg);
    emit(render(to_json(sum, cfg), o.format), o, out);
    return sum.fail_details.empty() ? kExitOk : kExitVerdict;
}

inline int cmd_sup(const Options& o, std::ostream& out, std::ostream&)
{
    const SamplingConfig cfg = sampling_from(o);
    const ClassMember f = class_member_from(o);
    const ExprKind kind = parse_kind(o.kind, io::parse_complex(o.shift));
    const Reduction reduce = parse_reduction(o.reduce);
    Json j{{"kind", std::string(tag_name(kind.tag))}, {"shift", to_json_complex(kind.shift)}, {"reduce", o.reduce}};
    if (o.radius > 0.0) {
        j["sup"] = to_json(sup_on_circle(kind, f, o.radius, cfg, reduce));
    } else {
        Json circles = Json::array();
        for (const auto& c : circle_sups(kind, f, cfg, reduce))
            circles.push_back(to_json(c));
        j["sup"] = to_json(sup_on_disk(kind, f, cfg, reduce));
        j["circles"] = circles;
    }
    j["limit_at_zero"] = to_json_complex(limit_at_zero(kind, f));
    j["config_echo"] = to_json(cfg);
    emit(render(j, o.format), o, out);
    return kExitOk;
}

// CSV x,y,value on the (N+1) x (N+1) lattice x, y = -1 + 2j/N, rows by
// increasing y. Points outside |z| <= 1 - eps and poles get an empty value.
inline int cmd_field(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.grid < 16)
        throw ConfigError("--grid must be at least 16");
    const SamplingConfig cfg = sampling_from(o);
    const ClassMember f = class_member_from(o);
    const ExprKind kind = parse_kind(o.kind, io::parse_complex(o.shift));
    const Reduction reduce = parse_reduction(o.reduce);
    const ExprEvaluator expr(kind, f);
    const double ray_origin = f.order();
    const auto N = static_cast<std::size_t>(o.grid);
    const double limit = (1.0 - cfg.epsilon) * (1.0 - cfg.epsilon);

    std::vector<std::string> rows(N + 1);
    std::vector<std::size_t> poles(N + 1, 0);
    parallel_for(N + 1, [&](std::size_t i) {
        const double y = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(N);
        std::string& row = rows[i];
        for (std::size_t jx = 0; jx <= N; ++jx) {
            const double x = -1.0 + 2.0 * static_cast<double>(jx) / static_cast<double>(N);
            row += io::format_real(x) + "," + io::format_real(y) + ",";
            if (x * x + y * y <= limit) {
                try {
                    row += io::format_real(reduce_value(reduce, expr({x, y}), ray_origin));
                } catch (const PoleError&) {
                    ++poles[i];
                }
            }
            row += "\n";
        }
    });
    std::string text = "x,y,value\n";
    std::size_t pole_count = 0;
    for (std::size_t i = 0; i <= N; ++i) {
        text += rows[i];
        pole_count += poles[i];
    }
    if (pole_count > 0)
        err << "field: " << pole_count << " grid points hit a pole and were left empty\n";
    emit(text, o, out);
    return kExitOk;
}

inline void error_record(const Error& e, const Options& o, std::ostream& out, std::ostream& err)
{
    err << e.what() << "\n";
    const Json j{{"error", std::string(e.code())}, {"message", e.what()}};
    try {
        emit(render(j, o.format == "csv" ? "csv" : "json"), o, out);
    } catch (const Error&) {
        out << j.dump(2) << "\n";
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    Options o;
    CLI::App app{"Numerical checks of boundary-average sufficient conditions for |f'(z) - 1| < rho |1 - alpha|"};
    app.require_subcommand(1);

    auto add_function = [&](CLI::App* sub) {
        auto* c = sub->add_option("--coeffs", o.coeffs,
                                  "coefficients a0,a1,a2,... each as re or re+imi (e.g. 0,1,0+0.2i)");
        auto* cf = sub->add_option("--coeffs-file", o.coeffs_file, "file with lines index,re,im");
        c->excludes(cf);
        sub->add_option("--order", o.order, "class order n (default: largest admissible)");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--angular-samples", o.angular_samples, "uniform samples per circle (>= 64)");
        sub->add_option("--refine-iters", o.refine_iters, "golden-section refinement steps");
        sub->add_option("--epsilon", o.epsilon, "verify on the disk of radius 1 - epsilon");
        sub->add_option("--inner-cutoff", o.inner_cutoff, "inner radius of the T3/T4 annulus");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", o.output, "write the report here instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "check one theorem's hypothesis and conclusion");
    add_function(verify);
    add_sampling(verify);
    verify->add_option("--theorem", o.theorem, "theorem 1..5")->required();
    verify->add_option("--points", o.points, "boundary points as angles in turns, e.g. 0,0.25");
    verify->add_option("--zpoints", o.zpoints, "boundary points as complex numbers, e.g. 1,0+1i");
    verify->add_option("--rho", o.rho, "real rho > 1")->required();
    verify->add_option("--ray-tol", o.ray_tol, "theorem 4 ray-avoidance tolerance");

    auto* example = app.add_subcommand("example", "reproduce worked example 1, 2 or 5 for z + a z^(n+1)");
    add_sampling(example);
    example->add_option("--id", o.example_id, "example id: 1, 2 or 5")->required();
    example->add_option("--n", o.n, "class order n");
    example->add_option("--a", o.a, "coefficient a_(n+1), re or re+imi")->required();

    auto* jack = app.add_subcommand("jack-probe", "probe Jack's lemma on random or given w");
    jack->add_option("--coeffs", o.coeffs, "probe a single w instead of the random suite");
    jack->add_option("--coeffs-file", o.coeffs_file, "single w from a coefficient file");
    jack->add_option("--radius", o.radius, "circle radius for a single probe");
    jack->add_option("--seed", o.seed, "suite seed");
    jack->add_option("--trials", o.trials, "random functions per vanishing order");
    jack->add_option("--n-min", o.n_min, "smallest vanishing order");
    jack->add_option("--n-max", o.n_max, "largest vanishing order");
    jack->add_option("--deg-min", o.deg_min, "fewest coefficients after the leading one");
    jack->add_option("--deg-max", o.deg_max, "most coefficients after the leading one");
    jack->add_option("--radii", o.radii, "probe radii, e.g. 0.5,0.9");
    jack->add_option("--tol", o.tol, "tolerance of the lemma's inequalities");
    jack->add_option("--angular-samples", o.angular_samples, "uniform samples per circle (>= 64)");
    jack->add_option("--refine-iters", o.refine_iters, "golden-section refinement steps");
    jack->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    jack->add_option("--output,-o", o.output, "write the summary here instead of stdout");

    const std::string kinds =
        "T1..T5, fprime-minus-1, f-over-z-minus-1, fprime-minus-alpha, f-over-z-minus-beta";
    auto* sup = app.add_subcommand("sup", "estimate the sup of an expression on a circle or the disk");
    add_function(sup);
    add_sampling(sup);
    sup->add_option("--kind", o.kind, kinds);
    sup->add_option("--shift", o.shift, "alpha or beta for the *-minus-alpha/beta kinds");
    sup->add_option("--reduce", o.reduce, "modulus, real or ray");
    sup->add_option("--radius", o.radius, "single circle radius (default: whole disk schedule)");

    auto* field = app.add_subcommand("field", "emit x,y,value CSV of an expression over [-1,1]^2");
    add_function(field);
    field->add_option("--kind", o.kind, kinds);
    field->add_option("--shift", o.shift, "alpha or beta for the *-minus-alpha/beta kinds");
    field->add_option("--reduce", o.reduce, "modulus, real or ray");
    field->add_option("--grid", o.grid, "lattice resolution N (>= 16)");
    field->add_option("--epsilon", o.epsilon, "blank points with |z| > 1 - epsilon");
    field->add_option("--output,-o", o.output, "write the grid here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (verify->parsed())
            return cmd_verify(o, out, err);
        if (example->parsed())
            return cmd_example(o, out, err);
        if (jack->parsed())
            return cmd_jack(o, out, err);
        if (sup->parsed())
            return cmd_sup(o, out, err);
        return cmd_field(o, out, err);
    } catch (const Error& e) {
        error_record(e, o, out, err);
        return exit_code_for(e.kind());
    }
}

} // namespace gft::cli
