#include "varistar/verify.hpp"

#include "varistar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace varistar {

namespace {

constexpr double degenerate_c1_tol = 1e-12;

} // namespace

std::vector<SweepPoint> sweep_boundary(const PoleParams& params, std::size_t K, std::size_t order) {
    if (K < 4) {
        throw usage_error("sweep_boundary: need K >= 4");
    }
    if (order < 2) {
        throw usage_error("sweep_boundary: need order >= 2");
    }
    const cplx c1 = c1_from_pair(params);
    if (std::abs(c1) >= 1.0 - degenerate_c1_tol) {
        throw domain_error("sweep_boundary: |c1| = 1, the exact region is a single point");
    }
    const Disc exact = disc_exact(params);

    std::vector<SweepPoint> points;
    points.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        const cplx c = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(K));
        const TruncatedSeries omega = extremal_omega({c1, c}, order);
        const A2Report report = a2_closed_form(params.p, {omega[1], omega[2]});
        points.push_back({k, c, report.a2, std::abs(report.a2 - exact.center)});
    }
    return points;
}

RegionStats region_stats_for_pairs(double p, std::span<const SchwarzCoeffs> pairs, double tol, std::uint64_t seed) {
    const Disc fixed_p = disc_theorem2(p);
    RegionStats stats;
    stats.seed = seed;
    stats.n_samples = pairs.size();
    stats.max_radial_excess = -std::numeric_limits<double>::infinity();
    stats.min_re_a2 = std::numeric_limits<double>::infinity();
    for (const auto& pair : pairs) {
        const cplx a2 = a2_closed_form(p, pair).a2;
        const Disc exact = disc_exact({p, w0_from_c1(p, pair.c1)});
        const double excess_exact = radial_excess(exact, a2);
        const double excess_fixed = radial_excess(fixed_p, a2);
        const bool bad_exact = excess_exact > tol;
        const bool bad_fixed = excess_fixed > tol;
        stats.violations_exact += bad_exact ? 1 : 0;
        stats.violations_theorem2 += bad_fixed ? 1 : 0;
        stats.violations += (bad_exact || bad_fixed) ? 1 : 0;
        stats.max_radial_excess = std::max({stats.max_radial_excess, excess_exact, excess_fixed});
        stats.sup_attained = std::max(stats.sup_attained, std::abs(a2 - fixed_p.center));
        stats.min_re_a2 = std::min(stats.min_re_a2, a2.real());
    }
    if (pairs.empty()) {
        stats.max_radial_excess = 0.0;
        stats.min_re_a2 = 0.0;
    }
    return stats;
}

RegionStats monte_carlo_region(double p, std::uint64_t seed, std::size_t n, double tol) {
    require_pole_location(p);
    if (n == 0) {
        throw usage_error("monte_carlo_region: need at least one sample");
    }
    const auto pairs = sample_schwarz_pairs(seed, n);
    return region_stats_for_pairs(p, pairs, tol, seed);
}

bool cross_validate_a2(double p, const SchwarzCoeffs& coeffs, std::size_t order, double tol) {
    if (order < 6) {
        throw usage_error("cross_validate_a2: need order >= 6");
    }
    const A2Report closed = a2_closed_form(p, coeffs);
    const TruncatedSeries omega(order, {cplx{0.0}, coeffs.c1, coeffs.c2});
    const A2Report series = a2_from_member(construct_from_omega(p, omega, order), A2Route::omega_series);
    return std::abs(closed.a2 - series.a2) <= tol;
}

std::vector<PositivityRow> positivity_sweep(std::span<const double> p_values, std::uint64_t seed,
                                            std::size_t samples, double tol) {
    std::vector<PositivityRow> rows;
    rows.reserve(p_values.size());
    for (double p : p_values) {
        require_pole_location(p);
        PositivityRow row;
        row.p = p;
        row.lower_bound = 1.0 / p - p;
        row.min_sampled_re = std::numeric_limits<double>::infinity();
        if (samples > 0) {
            row.min_sampled_re = monte_carlo_region(p, seed, samples, tol).min_re_a2;
        }
        row.pass = row.lower_bound > 0.0 && row.min_sampled_re > 0.0 &&
                   row.min_sampled_re >= row.lower_bound - tol;
        rows.push_back(row);
    }
    return rows;
}

} // namespace varistar
