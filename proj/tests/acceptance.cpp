// Acceptance gate. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include "varistar/regions.hpp"
#include "varistar/schwarz.hpp"
#include "varistar/sigma_star.hpp"
#include "varistar/suites.hpp"
#include "varistar/verify.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace varistar;

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

constexpr std::uint64_t seed = 20240611;

// 1. closed form vs series recurrence on 1000 random (p, c1, c2)
Outcome closed_form_vs_series() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (const auto& rc : sample_random_cases(seed, 1000)) {
        const cplx closed = a2_closed_form(rc.p, rc.coeffs).a2;
        const TruncatedSeries omega(default_order, {0.0, rc.coeffs.c1, rc.coeffs.c2});
        const cplx series = construct_from_omega(rc.p, omega).f[2];
        worst = std::max(worst, std::abs(closed - series));
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-10 && elapsed < 5.0, fmt::format("max |gap| = {:.3e} (tol 1e-10), {:.3f} s (< 5 s)", worst, elapsed)};
}

// 2. measure route vs Schwarz route on the three matched pairs
Outcome route_agreement() {
    double worst = 0.0;
    for (double p : {0.3, 0.5, 0.7}) {
        for (const auto& pair : matched_route_pairs()) {
            const cplx a = construct_from_measure(p, pair.measure).f[2];
            const cplx b = construct_from_omega(p, pair.omega).f[2];
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return {worst <= 1e-10, fmt::format("max |gap| = {:.3e} over 3 pairs x 3 p (tol 1e-10)", worst)};
}

// 3. Monte Carlo inclusion in the exact and fixed-p discs
Outcome monte_carlo_inclusion() {
    Outcome o;
    for (double p : {0.2, 0.5, 0.8}) {
        const auto t0 = clock_type::now();
        const RegionStats s = monte_carlo_region(p, seed, 100'000);
        const double elapsed = seconds_since(t0);
        const bool ok = s.violations_exact == 0 && s.violations_theorem2 == 0 && elapsed < 10.0;
        o.pass = o.pass && ok;
        o.detail += fmt::format("p={}: exact {} / thm2 {} violations, {:.2f} s; ", p, s.violations_exact,
                                s.violations_theorem2, elapsed);
    }
    o.detail += fmt::format("n=100000 seed={} rng={}", seed, sampler_rng_name);
    return o;
}

// 4. boundary attainment by the |c| = 1 extremal family
Outcome boundary_attainment() {
    const PoleParams cases[] = {{0.5, -0.4}, {0.5, -2.0 / 3.0}, {0.3, w0_from_c1(0.3, {0.4, 0.3})}};
    double radial = 0.0;
    double step = 0.0;
    for (const auto& params : cases) {
        const Disc exact = disc_exact(params);
        const auto pts = sweep_boundary(params, 360);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            radial = std::max(radial, std::abs(std::abs(pts[k].a2 - exact.center) - exact.radius));
            step = std::max(step, std::abs(pts[(k + 1) % pts.size()].a2 - pts[k].a2));
        }
    }
    return {radial <= 1e-9 && step <= 1e-2,
            fmt::format("max radial error = {:.3e} (tol 1e-9), max consecutive gap = {:.3e} (tol 1e-2)", radial, step)};
}

// 5. internal tangency of the exact disc in both Miller discs
Outcome remark_tangency() {
    constexpr double tol = 1e-12;
    double worst = 0.0;
    std::size_t coincidence_mismatch = 0;
    auto check = [&](double p, cplx c1) {
        const PoleParams params{p, w0_from_c1(p, c1)};
        const Disc exact = disc_exact(params);
        const Disc m72 = disc_miller72(params);
        const Disc m80 = disc_miller80(params);
        const double expected = std::abs(params.w0) * std::norm(c1);
        for (const Disc& outer : {m72, m80}) {
            const TangencyReport t = tangency_check(exact, outer, tol);
            worst = std::max({worst, std::abs(t.delta_center - expected), std::abs(t.radius_gap - expected)});
            if (!t.internally_tangent) {
                worst = std::max(worst, 1.0);
            }
        }
        auto same = [&](const Disc& a, const Disc& b) {
            return std::abs(a.center - b.center) <= tol && std::abs(a.radius - b.radius) <= tol;
        };
        const bool coincide = same(exact, m72) && same(exact, m80);
        coincidence_mismatch += coincide == (std::abs(c1) < 1e-12) ? 0 : 1;
    };
    for (const auto& rc : sample_random_cases(seed + 5, 1000)) {
        check(rc.p, rc.coeffs.c1);
    }
    for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
        check(p, 0.0);
    }
    return {worst <= tol && coincidence_mismatch == 0,
            fmt::format("max |identity error| = {:.3e} (tol 1e-12), coincidence mismatches = {}", worst,
                        coincidence_mismatch)};
}

// 6. sharpness of the fixed-p disc
Outcome theorem2_sharpness() {
    double worst = 0.0;
    for (double p : {0.2, 0.5, 0.8}) {
        const cplx a2 = a2_closed_form(p, {p, p * p - 1.0}).a2;
        worst = std::max({worst, std::abs(std::abs(a2 - 1.0 / p) - p), std::abs(a2 - (p + 1.0 / p))});
    }
    const Disc exact = disc_exact({0.5, -2.0 / 3.0});
    const Disc fixed_p = disc_theorem2(0.5);
    const double disc_gap = std::max(std::abs(exact.center - fixed_p.center), std::abs(exact.radius - fixed_p.radius));
    return {worst <= 1e-12 && disc_gap <= 1e-12,
            fmt::format("max attainment error = {:.3e}, disc gap at (0.5, -2/3) = {:.3e} (tol 1e-12)", worst, disc_gap)};
}

// 7. Re a2 > 0 for every p in (0, 1)
Outcome remark_positivity() {
    std::vector<double> ps;
    for (int k = 1; k <= 99; ++k) {
        ps.push_back(k / 100.0);
    }
    const auto rows = positivity_sweep(ps, seed, 10'000);
    std::size_t nonpositive_bounds = 0;
    std::size_t nonpositive_samples = 0;
    double least_sample = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        nonpositive_bounds += row.lower_bound > 0.0 ? 0 : 1;
        nonpositive_samples += row.min_sampled_re > 0.0 ? 0 : 1;
        least_sample = std::min(least_sample, row.min_sampled_re);
    }
    return {rows.size() == 99 && nonpositive_bounds == 0 && nonpositive_samples == 0,
            fmt::format("99 p values, nonpositive bounds = {}, nonpositive samples = {}, least sampled Re a2 = {:.6g}, "
                        "bounds at 0.39/0.61 = {:.4f}/{:.4f}",
                        nonpositive_bounds, nonpositive_samples, least_sample, rows[38].lower_bound, rows[60].lower_bound)};
}

// 8. starlikeness certificates on extremal members with |c| <= 0.9
Outcome starlike_certificates() {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> p_dist(0.05, 0.95);
    const auto radii = default_certificate_radii();
    std::size_t failures = 0;
    double least = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
        const cplx c1 = uniform_in_disc(rng, 1.0);
        const cplx c = uniform_in_disc(rng, 0.9);
        const double p = p_dist(rng);
        const Member m = construct_from_omega(p, extremal_omega({c1, c}));
        const TruncatedSeries P = carath_from_omega(extremal_omega({c1, c}, certificate_order));
        const CertificateReport rep = starlike_certificate(m.params, P, radii, 360, 0.0);
        failures += rep.pass && rep.min_re > 0.0 ? 0 : 1;
        least = std::min(least, rep.min_re);
    }
    return {failures == 0, fmt::format("100 members, radii 0.1..0.9 x 360 angles, trunc {}, failures = {}, least min Re P = {:.6g}",
                                       certificate_order, failures, least)};
}

// 9. spot values of the disc table
Outcome spot_values() {
    double worst = 0.0;
    auto expect = [&](const Disc& d, cplx center, double radius) {
        worst = std::max({worst, std::abs(d.center - center), std::abs(d.radius - radius)});
    };
    const PoleParams a{0.5, -0.4};
    expect(disc_miller72(a), 2.1, 0.4);
    expect(disc_miller80(a), 2.1, 0.4);
    expect(disc_exact(a), 2.1, 0.4);
    expect(disc_theorem2(0.5), 2.0, 0.5);
    const PoleParams b{0.5, -2.0 / 3.0};
    expect(disc_miller72(b), 13.0 / 6.0, 2.0 / 3.0);
    expect(disc_miller80(b), 11.0 / 6.0, 2.0 / 3.0);
    expect(disc_exact(b), 2.0, 0.5);
    expect(disc_exact({0.5, -2.0}), 2.5, 0.0);
    return {worst <= 1e-12, fmt::format("max deviation = {:.3e} (tol 1e-12)", worst)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 closed form vs series oracle", closed_form_vs_series},
        {"2 measure/omega route agreement", route_agreement},
        {"3 Monte Carlo inclusion", monte_carlo_inclusion},
        {"4 boundary attainment", boundary_attainment},
        {"5 internal tangency of Miller discs", remark_tangency},
        {"6 fixed-p disc sharpness", theorem2_sharpness},
        {"7 positivity of Re a2", remark_positivity},
        {"8 starlikeness certificates", starlike_certificates},
        {"9 disc spot values", spot_values},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        fmt::print("[{}] {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
        failed += o.pass ? 0 : 1;
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
