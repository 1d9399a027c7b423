#include "varistar/suites.hpp"

#include <cmath>
#include <fmt/format.h>
#include <random>

namespace varistar {

namespace {

constexpr double cross_tol = 1e-10;
constexpr double tangency_tol = 1e-12;
constexpr double sweep_tol = 1e-9;
constexpr double sharp_tol = 1e-12;

} // namespace

std::vector<RandomCase> sample_random_cases(std::uint64_t seed, std::size_t n) {
    // p comes from a generator seeded apart from the pair sampler
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> p_dist(0.05, 0.95);
    const auto pairs = sample_schwarz_pairs(seed, n);
    std::vector<RandomCase> cases;
    cases.reserve(n);
    for (const auto& pair : pairs) {
        cases.push_back({p_dist(rng), pair});
    }
    return cases;
}

std::vector<RoutePair> matched_route_pairs(std::size_t order) {
    std::vector<RoutePair> pairs;
    pairs.push_back({"point-mass/omega=z", ProbMeasure::point_mass(1.0), TruncatedSeries::monomial(1.0, 1, order)});
    pairs.push_back({"atoms+-1/omega=z^2", ProbMeasure::roots_of_unity(2), TruncatedSeries::monomial(1.0, 2, order)});
    pairs.push_back({"cube-roots/omega=0", ProbMeasure::roots_of_unity(3), TruncatedSeries(order)});
    return pairs;
}

SuiteResult suite_region(double p, std::uint64_t seed, std::size_t samples) {
    const RegionStats stats = monte_carlo_region(p, seed, samples);
    const bool pass = stats.violations == 0 && stats.sup_attained <= p + default_membership_tol;
    return {"region", pass,
            fmt::format("p={} seed={} n={} violations={} max_excess={:.3e} sup_attained={:.12g}", p, seed,
                        stats.n_samples, stats.violations, stats.max_radial_excess, stats.sup_attained)};
}

SuiteResult suite_boundary(std::size_t K) {
    const PoleParams cases[] = {
        {0.5, -0.4},
        {0.5, -2.0 / 3.0},
        {0.3, w0_from_c1(0.3, {0.4, 0.3})},
    };
    double worst_radial = 0.0;
    double worst_step = 0.0;
    for (const auto& params : cases) {
        const Disc exact = disc_exact(params);
        const auto pts = sweep_boundary(params, K);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            worst_radial = std::max(worst_radial, std::abs(pts[k].dist_to_center - exact.radius));
            const auto& next = pts[(k + 1) % pts.size()];
            worst_step = std::max(worst_step, std::abs(next.a2 - pts[k].a2));
        }
    }
    const bool pass = worst_radial <= sweep_tol && worst_step <= 1e-2;
    return {"boundary", pass, fmt::format("K={} max_radial_error={:.3e} max_step={:.3e}", K, worst_radial, worst_step)};
}

SuiteResult suite_tangency(std::uint64_t seed, std::size_t pairs) {
    std::size_t failures = 0;
    double worst = 0.0;
    for (const auto& rc : sample_random_cases(seed, pairs)) {
        const PoleParams params{rc.p, w0_from_c1(rc.p, rc.coeffs.c1)};
        const Disc exact = disc_exact(params);
        const double expected = std::abs(params.w0) * std::norm(rc.coeffs.c1);
        for (const Disc& outer : {disc_miller72(params), disc_miller80(params)}) {
            const TangencyReport t = tangency_check(exact, outer, tangency_tol);
            const double err = std::max(std::abs(t.delta_center - expected), std::abs(t.radius_gap - expected));
            worst = std::max(worst, err);
            if (!t.internally_tangent || err > tangency_tol) {
                ++failures;
            }
        }
    }
    return {"tangency", failures == 0,
            fmt::format("seed={} pairs={} failures={} max_error={:.3e}", seed, pairs, failures, worst)};
}

SuiteResult suite_sharpness() {
    std::size_t failures = 0;
    for (double p : {0.2, 0.5, 0.8}) {
        const A2Report r = a2_closed_form(p, {p, p * p - 1.0});
        if (std::abs(std::abs(r.a2 - 1.0 / p) - p) > sharp_tol || std::abs(r.a2 - (p + 1.0 / p)) > sharp_tol) {
            ++failures;
        }
    }
    const PoleParams degenerate{0.5, -2.0 / 3.0};
    const Disc exact = disc_exact(degenerate);
    const Disc fixed_p = disc_theorem2(0.5);
    if (std::abs(exact.center - fixed_p.center) > sharp_tol || std::abs(exact.radius - fixed_p.radius) > sharp_tol) {
        ++failures;
    }
    return {"sharpness", failures == 0, fmt::format("failures={}", failures)};
}

SuiteResult suite_routes(std::size_t order) {
    double worst = 0.0;
    for (double p : {0.3, 0.5, 0.7}) {
        for (const auto& pair : matched_route_pairs(order)) {
            const cplx a2_measure = construct_from_measure(p, pair.measure, order).f[2];
            const cplx a2_omega = construct_from_omega(p, pair.omega, order).f[2];
            worst = std::max(worst, std::abs(a2_measure - a2_omega));
        }
    }
    return {"routes", worst <= cross_tol, fmt::format("max_a2_gap={:.3e}", worst)};
}

SuiteResult suite_cross(std::uint64_t seed, std::size_t pairs, std::size_t order) {
    std::size_t failures = 0;
    for (const auto& rc : sample_random_cases(seed, pairs)) {
        failures += cross_validate_a2(rc.p, rc.coeffs, order, cross_tol) ? 0 : 1;
    }
    return {"cross", failures == 0, fmt::format("seed={} pairs={} failures={}", seed, pairs, failures)};
}

SuiteResult suite_positivity(std::uint64_t seed, std::size_t samples_per_p) {
    std::vector<double> ps;
    for (int k = 1; k <= 99; ++k) {
        ps.push_back(k / 100.0);
    }
    std::size_t failures = 0;
    double least_bound = std::numeric_limits<double>::infinity();
    for (const auto& row : positivity_sweep(ps, seed, samples_per_p)) {
        failures += row.pass ? 0 : 1;
        least_bound = std::min(least_bound, row.lower_bound);
    }
    return {"positivity", failures == 0,
            fmt::format("seed={} p_values=99 failures={} least_lower_bound={:.6g}", seed, failures, least_bound)};
}

SuiteResult suite_certificate(std::uint64_t seed, std::size_t members, std::size_t order) {
    std::mt19937_64 rng(seed);
    const auto radii = default_certificate_radii();
    std::size_t failures = 0;
    double least = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members; ++i) {
        const cplx c1 = uniform_in_disc(rng, 1.0);
        const cplx c = uniform_in_disc(rng, 0.9);
        const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        const Member m = construct_from_omega(p, extremal_omega({c1, c}, default_order));
        const CertificateReport rep =
            starlike_certificate(m.params, carath_from_omega(extremal_omega({c1, c}, order)), radii, 360, 0.0);
        failures += rep.pass ? 0 : 1;
        least = std::min(least, rep.min_re);
    }
    return {"certificate", failures == 0,
            fmt::format("seed={} members={} trunc={} failures={} least_min_re={:.6g}", seed, members, order, failures,
                        least)};
}

std::vector<SuiteResult> run_fixed_suites(std::uint64_t seed) {
    std::vector<SuiteResult> results;
    results.push_back(suite_boundary());
    results.push_back(suite_tangency(seed));
    results.push_back(suite_sharpness());
    results.push_back(suite_routes());
    results.push_back(suite_cross(seed));
    results.push_back(suite_positivity(seed));
    results.push_back(suite_certificate(seed));
    return results;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::size_t samples) {
    std::vector<SuiteResult> results;
    for (double p : {0.2, 0.5, 0.8}) {
        results.push_back(suite_region(p, seed, samples));
    }
    for (auto& r : run_fixed_suites(seed)) {
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace varistar
