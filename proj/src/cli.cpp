#include "varistar/cli.hpp"

#include "varistar/errors.hpp"
#include "varistar/suites.hpp"
#include "varistar/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

namespace varistar {

namespace {

using nlohmann::json;

constexpr double cli_p_min = 0.001;
constexpr double cli_p_max = 0.999;

enum class Format { text, csv, json };

struct Options {
    std::optional<double> p;
    std::string w0;
    std::string c1;
    std::string c2;
    std::string c;
    std::size_t k = 360;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
    std::optional<std::size_t> trunc;
    std::string format = "text";
    std::string out;
    std::string suite = "all";
};

// Exit with status 2 and this message.
struct CliFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw CliFailure("--format must be one of text, csv, json");
}

double require_p(const Options& o) {
    if (!o.p) {
        throw CliFailure("--p is required");
    }
    if (!(*o.p >= cli_p_min && *o.p <= cli_p_max)) {
        throw CliFailure(fmt::format("--p {} outside [{}, {}]", *o.p, cli_p_min, cli_p_max));
    }
    return *o.p;
}

std::optional<cplx> complex_option(const std::string& text, const char* name) {
    if (text.empty()) {
        return std::nullopt;
    }
    auto z = parse_complex(text);
    if (!z) {
        throw CliFailure(fmt::format("{}: malformed complex literal '{}' (expected a, a+bi or a-bi)", name, text));
    }
    return z;
}

void forbid(const std::string& value, const char* name, const char* command) {
    if (!value.empty()) {
        throw CliFailure(fmt::format("{} is not accepted by '{}' (fixed-p command)", name, command));
    }
}

std::size_t check_trunc(std::optional<std::size_t> requested, std::size_t fallback = default_order) {
    const std::size_t trunc = requested.value_or(fallback);
    if (trunc < 6 || trunc > 256) {
        throw CliFailure(fmt::format("--trunc {} outside [6, 256]", trunc));
    }
    return trunc;
}

PoleParams require_pair(const Options& o) {
    const double p = require_p(o);
    const auto w0 = complex_option(o.w0, "--w0");
    if (!w0) {
        throw CliFailure("--w0 is required");
    }
    PoleParams params{p, *w0};
    require_admissible(params);
    return params;
}

json to_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

json to_json(const Disc& d) {
    return json{{"center", to_json(d.center)}, {"radius", d.radius}};
}

int cmd_disc(const Options& o, Format fmt_kind, std::ostream& out) {
    const PoleParams params = require_pair(o);
    const cplx c1 = c1_from_pair(params);
    const std::pair<const char*, Disc> discs[] = {
        {"miller72", disc_miller72(params)},
        {"miller80", disc_miller80(params)},
        {"exact", disc_exact(params)},
        {"theorem2", disc_theorem2(params.p)},
    };
    switch (fmt_kind) {
    case Format::text:
        out << fmt::format("p = {}\nw0 = {}\nc1 = {}\n", format_real(params.p), format_complex(params.w0),
                           format_complex(c1));
        for (const auto& [name, d] : discs) {
            out << fmt::format("{:<9} center = {}  radius = {}\n", name, format_complex(d.center), format_real(d.radius));
        }
        break;
    case Format::csv:
        out << "disc,center_re,center_im,radius\n";
        for (const auto& [name, d] : discs) {
            out << fmt::format("{},{},{},{}\n", name, format_real(d.center.real()), format_real(d.center.imag()),
                               format_real(d.radius));
        }
        break;
    case Format::json: {
        json j{{"p", params.p}, {"w0", to_json(params.w0)}, {"c1", to_json(c1)}};
        for (const auto& [name, d] : discs) {
            j["discs"][name] = to_json(d);
        }
        out << j.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

// c1 from --c1 or --w0 (exactly one may be given; neither means c1 = 0).
cplx resolve_c1(const Options& o, double p) {
    const auto c1 = complex_option(o.c1, "--c1");
    const auto w0 = complex_option(o.w0, "--w0");
    if (c1 && w0) {
        throw CliFailure("give at most one of --c1 and --w0");
    }
    if (w0) {
        return c1_from_pair({p, *w0});
    }
    return c1.value_or(cplx{0.0});
}

int cmd_a2(const Options& o, Format fmt_kind, std::ostream& out) {
    const double p = require_p(o);
    if (o.c1.empty() && o.w0.empty()) {
        throw CliFailure("a2 needs --c1 or --w0");
    }
    const cplx c1 = resolve_c1(o, p);
    const auto c2 = complex_option(o.c2, "--c2");
    const auto c = complex_option(o.c, "--c");
    if (c2 && c) {
        throw CliFailure("give at most one of --c2 and --c");
    }
    if (c && std::abs(*c) > 1.0 + 1e-12) {
        throw CliFailure("--c must satisfy |c| <= 1");
    }
    const SchwarzCoeffs coeffs{c1, c ? *c * (1.0 - std::norm(c1)) : c2.value_or(cplx{0.0})};
    const A2Report r = a2_closed_form(p, coeffs);
    const PoleParams params{p, w0_from_c1(p, c1)};
    const Disc exact = disc_exact(params);
    const Disc fixed_p = disc_theorem2(p);
    const bool in_exact = disc_contains(exact, r.a2);
    const bool in_fixed = disc_contains(fixed_p, r.a2);

    auto spaced = [](cplx z) {
        return fmt::format("{} {} {}i", format_real(z.real()), z.imag() < 0 ? '-' : '+', format_real(std::abs(z.imag())));
    };
    switch (fmt_kind) {
    case Format::text:
        out << fmt::format("a2 = {}, M = {}\n", spaced(r.a2), spaced(r.M));
        out << fmt::format("denominator = {}\n", spaced(r.denominator));
        out << fmt::format("c1 = {}\nc2 = {}\nw0 = {}\n", format_complex(coeffs.c1), format_complex(coeffs.c2),
                           format_complex(params.w0));
        out << fmt::format("route = {}\n", to_string(r.route));
        out << fmt::format("in exact disc: {}\nin theorem2 disc: {}\n", in_exact ? "yes" : "no", in_fixed ? "yes" : "no");
        break;
    case Format::csv:
        out << "p,c1_re,c1_im,c2_re,c2_im,a2_re,a2_im,M_re,M_im\n";
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", format_real(p), format_real(c1.real()), format_real(c1.imag()),
                           format_real(coeffs.c2.real()), format_real(coeffs.c2.imag()), format_real(r.a2.real()),
                           format_real(r.a2.imag()), format_real(r.M.real()), format_real(r.M.imag()));
        break;
    case Format::json:
        out << json{{"p", p},
                    {"c1", to_json(c1)},
                    {"c2", to_json(coeffs.c2)},
                    {"w0", to_json(params.w0)},
                    {"a2", to_json(r.a2)},
                    {"M", to_json(r.M)},
                    {"denominator", to_json(r.denominator)},
                    {"route", to_string(r.route)},
                    {"in_exact", in_exact},
                    {"in_theorem2", in_fixed}}
                   .dump(2)
            << '\n';
        break;
    }
    return 0;
}

int cmd_construct(const Options& o, Format fmt_kind, std::ostream& out) {
    const double p = require_p(o);
    const std::size_t order = check_trunc(o.trunc);
    const cplx c1 = resolve_c1(o, p);
    const auto c2 = complex_option(o.c2, "--c2");
    const auto c = complex_option(o.c, "--c");
    if (c2 && c) {
        throw CliFailure("give at most one of --c2 and --c");
    }
    auto make_omega = [&](std::size_t n) {
        return c ? extremal_omega({c1, *c}, n) : TruncatedSeries(n, {cplx{0.0}, c1, c2.value_or(cplx{0.0})});
    };
    const TruncatedSeries omega = make_omega(order);
    if (!validate_schwarz_pair({omega[1], omega[2]}, 1e-12)) {
        throw CliFailure("(c1, c2) violates |c2| <= 1 - |c1|^2");
    }
    const Member m = construct_from_omega(p, omega, order);
    const TruncatedSeries P = carath_from_f(m.params, m.f);
    // certify on a longer expansion of P so the discarded tail cannot flip the sign
    const auto radii = default_certificate_radii();
    const CertificateReport cert =
        starlike_certificate(m.params, carath_from_omega(make_omega(std::max(order, certificate_order))), radii, 360, 1e-9);

    switch (fmt_kind) {
    case Format::text:
        out << fmt::format("p = {}\nw0 = {}\nc1 = {}\nomega = {}\ntrunc = {}\n", format_real(p), format_complex(m.params.w0),
                           format_complex(c1), c ? "extremal" : "quadratic", order);
        out << fmt::format("{:>3}  {:<28}  {}\n", "k", "a_k", "b_k");
        for (std::size_t k = 0; k <= order; ++k) {
            out << fmt::format("{:>3}  {:<28}  {}\n", k, format_complex(m.f[k]), format_complex(P[k]));
        }
        out << fmt::format("certificate: min Re P = {} at {} ({})\n", format_real(cert.min_re),
                           format_complex(cert.argmin_point), cert.pass ? "pass" : "fail");
        break;
    case Format::csv:
        out << "k,a_re,a_im,b_re,b_im\n";
        for (std::size_t k = 0; k <= order; ++k) {
            out << fmt::format("{},{},{},{},{}\n", k, format_real(m.f[k].real()), format_real(m.f[k].imag()),
                               format_real(P[k].real()), format_real(P[k].imag()));
        }
        break;
    case Format::json: {
        json a = json::array(), b = json::array();
        for (std::size_t k = 0; k <= order; ++k) {
            a.push_back(to_json(m.f[k]));
            b.push_back(to_json(P[k]));
        }
        out << json{{"p", p},
                    {"w0", to_json(m.params.w0)},
                    {"c1", to_json(c1)},
                    {"a", a},
                    {"b", b},
                    {"certificate", {{"min_re", cert.min_re}, {"pass", cert.pass}}}}
                   .dump(2)
            << '\n';
        break;
    }
    }
    return 0;
}

int cmd_sweep(const Options& o, Format fmt_kind, std::ostream& out) {
    const PoleParams params = require_pair(o);
    const auto pts = sweep_boundary(params, o.k, check_trunc(o.trunc));
    const Disc exact = disc_exact(params);
    switch (fmt_kind) {
    case Format::text:
        out << fmt::format("exact center = {}  radius = {}\n", format_complex(exact.center), format_real(exact.radius));
        for (const auto& pt : pts) {
            out << fmt::format("{:>4}  c = {:<32}  a2 = {:<32}  dist = {}\n", pt.k, format_complex(pt.c),
                               format_complex(pt.a2), format_real(pt.dist_to_center));
        }
        break;
    case Format::csv:
        out << "k,c_re,c_im,a2_re,a2_im,dist_to_center\n";
        for (const auto& pt : pts) {
            out << fmt::format("{},{},{},{},{},{}\n", pt.k, format_real(pt.c.real()), format_real(pt.c.imag()),
                               format_real(pt.a2.real()), format_real(pt.a2.imag()), format_real(pt.dist_to_center));
        }
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& pt : pts) {
            arr.push_back({{"k", pt.k}, {"c", to_json(pt.c)}, {"a2", to_json(pt.a2)}, {"dist_to_center", pt.dist_to_center}});
        }
        out << json{{"exact", to_json(exact)}, {"points", arr}}.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

int cmd_verify_region(const Options& o, Format fmt_kind, std::ostream& out) {
    const double p = require_p(o);
    const std::size_t n = o.samples.value_or(100'000);
    if (n == 0) {
        throw CliFailure("--samples must be positive");
    }
    const RegionStats s = monte_carlo_region(p, o.seed, n);
    const bool pass = s.violations == 0;
    switch (fmt_kind) {
    case Format::text:
        out << fmt::format("suite: region\np = {}\nseed: {}\nrng: {}\nn: {}\nviolations: {}\n", format_real(p), s.seed,
                           s.rng, s.n_samples, s.violations);
        out << fmt::format("violations_exact: {}\nviolations_theorem2: {}\n", s.violations_exact, s.violations_theorem2);
        out << fmt::format("max_excess: {:.6e}\nsup_attained: {}\nmin_re_a2: {}\nresult: {}\n", s.max_radial_excess,
                           format_real(s.sup_attained), format_real(s.min_re_a2), pass ? "pass" : "fail");
        break;
    case Format::csv:
        out << "seed,n,violations,max_excess,sup_attained\n";
        out << fmt::format("{},{},{},{:.6e},{}\n", s.seed, s.n_samples, s.violations, s.max_radial_excess,
                           format_real(s.sup_attained));
        break;
    case Format::json:
        out << json{{"suite", "region"},
                    {"p", p},
                    {"seed", s.seed},
                    {"rng", s.rng},
                    {"n", s.n_samples},
                    {"violations", s.violations},
                    {"violations_exact", s.violations_exact},
                    {"violations_theorem2", s.violations_theorem2},
                    {"max_excess", s.max_radial_excess},
                    {"sup_attained", s.sup_attained},
                    {"min_re_a2", s.min_re_a2},
                    {"pass", pass}}
                   .dump(2)
            << '\n';
        break;
    }
    return pass ? 0 : 1;
}

int cmd_verify(const Options& o, Format fmt_kind, std::ostream& out) {
    forbid(o.w0, "--w0", "verify");
    if (o.suite == "region") {
        return cmd_verify_region(o, fmt_kind, out);
    }

    std::vector<SuiteResult> results;
    if (o.suite == "all") {
        if (o.p) {
            results.push_back(suite_region(require_p(o), o.seed, o.samples.value_or(100'000)));
            for (auto& r : run_fixed_suites(o.seed)) {
                results.push_back(std::move(r));
            }
        } else {
            results = run_all_suites(o.seed, o.samples.value_or(100'000));
        }
    } else if (o.suite == "boundary") {
        results.push_back(suite_boundary(o.k));
    } else if (o.suite == "tangency") {
        results.push_back(suite_tangency(o.seed, o.samples.value_or(1000)));
    } else if (o.suite == "sharpness") {
        results.push_back(suite_sharpness());
    } else if (o.suite == "routes") {
        results.push_back(suite_routes(check_trunc(o.trunc)));
    } else if (o.suite == "cross") {
        results.push_back(suite_cross(o.seed, o.samples.value_or(1000), check_trunc(o.trunc)));
    } else if (o.suite == "positivity") {
        results.push_back(suite_positivity(o.seed, o.samples.value_or(2000)));
    } else if (o.suite == "certificate") {
        results.push_back(suite_certificate(o.seed, o.samples.value_or(100), check_trunc(o.trunc, certificate_order)));
    } else {
        throw CliFailure(fmt::format("unknown verify suite '{}'", o.suite));
    }

    const bool pass = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass; });
    switch (fmt_kind) {
    case Format::text:
        out << fmt::format("seed: {}\nrng: {}\n", o.seed, sampler_rng_name);
        for (const auto& r : results) {
            out << fmt::format("{:<12} {}  {}\n", r.name, r.pass ? "pass" : "FAIL", r.summary);
        }
        out << fmt::format("result: {}\n", pass ? "pass" : "fail");
        break;
    case Format::csv:
        out << "suite,result,summary\n";
        for (const auto& r : results) {
            out << fmt::format("{},{},\"{}\"\n", r.name, r.pass ? "pass" : "fail", r.summary);
        }
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"summary", r.summary}});
        }
        out << json{{"seed", o.seed}, {"rng", sampler_rng_name}, {"suites", arr}, {"pass", pass}}.dump(2) << '\n';
        break;
    }
    }
    return pass ? 0 : 1;
}

int cmd_plot(const Options& o, std::ostream& out) {
    const double p = require_p(o);
    const std::size_t n = o.samples.value_or(2000);
    std::vector<LabeledDisc> discs{{fmt::format("theorem2 |a2 - 1/p| <= p, p = {}", format_real(p)), disc_theorem2(p), "#d62728"}};
    std::vector<cplx> points;
    points.reserve(n);
    std::string title;
    if (const auto w0 = complex_option(o.w0, "--w0")) {
        const PoleParams params{p, *w0};
        require_admissible(params);
        const cplx c1 = c1_from_pair(params);
        discs.push_back({"miller72", disc_miller72(params), "#ff7f0e"});
        discs.push_back({"miller80", disc_miller80(params), "#9467bd"});
        discs.push_back({"exact", disc_exact(params), "#2ca02c"});
        std::mt19937_64 rng(o.seed);
        const double r2 = std::max(0.0, 1.0 - std::norm(c1));
        for (std::size_t i = 0; i < n; ++i) {
            points.push_back(a2_closed_form(p, {c1, uniform_in_disc(rng, r2)}).a2);
        }
        title = fmt::format("a2 region, p = {}, w0 = {}, seed = {}", format_real(p), format_complex(*w0), o.seed);
    } else {
        for (const auto& pair : sample_schwarz_pairs(o.seed, n)) {
            points.push_back(a2_closed_form(p, pair).a2);
        }
        title = fmt::format("a2 region, p = {}, seed = {}", format_real(p), o.seed);
    }
    out << render_svg(title, discs, points);
    return 0;
}

} // namespace

std::optional<cplx> parse_complex(std::string_view text) {
    static const std::regex grammar(
        R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
        return std::nullopt;
    }
    const double re = std::stod(m[1].str());
    double im = 0.0;
    if (m[2].matched) {
        im = std::stod(m[3].str());
        if (m[2].str() == "-") {
            im = -im;
        }
    }
    return cplx{re, im};
}

std::string format_real(double x) {
    std::string s = fmt::format("{:.12g}", x);
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string format_complex(cplx z) {
    const std::string im = format_real(z.imag());
    if (im.front() == '-') {
        return format_real(z.real()) + im + "i";
    }
    return format_real(z.real()) + "+" + im + "i";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"varistar: variability regions of the second coefficient of meromorphic starlike functions"};
    app.require_subcommand(1);

    Options o;
    auto common = [&o](CLI::App* sub) {
        sub->add_option("--p", o.p, "pole location in (0,1)");
        sub->add_option("--w0", o.w0, "starlikeness center, complex literal a+bi");
        sub->add_option("--c1", o.c1, "first Schwarz coefficient");
        sub->add_option("--c2", o.c2, "second Schwarz coefficient");
        sub->add_option("--c", o.c, "extremal family parameter, |c| <= 1");
        sub->add_option("--k", o.k, "boundary sweep resolution");
        sub->add_option("--samples", o.samples, "Monte Carlo sample count");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--trunc", o.trunc, "series truncation order");
        sub->add_option("--format", o.format, "text, csv or json");
        sub->add_option("--out", o.out, "write output to this path");
    };
    auto* disc = app.add_subcommand("disc", "Miller 1972/1980, exact and fixed-p discs for (p, w0)");
    auto* a2 = app.add_subcommand("a2", "closed-form a2 for Schwarz coefficients (c1, c2)");
    auto* construct = app.add_subcommand("construct", "Taylor coefficients of f and P from a Schwarz function");
    auto* sweep = app.add_subcommand("sweep", "boundary sweep of the exact disc over the extremal family");
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    auto* plot = app.add_subcommand("plot", "SVG figure of the discs and sampled a2 values");
    for (auto* sub : {disc, a2, construct, sweep, verify, plot}) {
        common(sub);
    }
    verify->add_option("suite", o.suite,
                       "region | boundary | tangency | sharpness | routes | cross | positivity | certificate | all");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const Format fmt_kind = parse_format(o.format);
        std::ostringstream buffer;
        int code = 0;
        if (disc->parsed()) {
            code = cmd_disc(o, fmt_kind, buffer);
        } else if (a2->parsed()) {
            code = cmd_a2(o, fmt_kind, buffer);
        } else if (construct->parsed()) {
            code = cmd_construct(o, fmt_kind, buffer);
        } else if (sweep->parsed()) {
            code = cmd_sweep(o, fmt_kind, buffer);
        } else if (verify->parsed()) {
            code = cmd_verify(o, fmt_kind, buffer);
        } else if (plot->parsed()) {
            code = cmd_plot(o, buffer);
        }
        if (o.out.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) {
                throw CliFailure(fmt::format("cannot open '{}' for writing", o.out));
            }
            file << buffer.str();
        }
        return code;
    } catch (const CliFailure& e) {
        err << "error: " << e.what() << '\n';
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

} // namespace varistar
