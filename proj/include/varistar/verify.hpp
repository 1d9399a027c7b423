#pragma once

// Numerical certification of the a2 variability regions: boundary sweeps
// over the extremal family, seeded Monte Carlo inclusion runs, agreement of
// the closed form with the series constructors, and positivity of Re a2.

#include "varistar/regions.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace varistar {

struct SweepPoint {
    std::size_t k = 0;
    cplx c{0.0};
    cplx a2{0.0};
    double dist_to_center = 0.0;
};

/// For k = 0..K-1 take c = e^(2 pi i k / K), build the extremal omega for
/// (c1(params), c) and evaluate a2 from its first two coefficients.
/// Requires K >= 4 and |c1| < 1 (the degenerate boundary is a single point).
std::vector<SweepPoint> sweep_boundary(const PoleParams& params, std::size_t K, std::size_t order = default_order);

struct RegionStats {
    std::size_t n_samples = 0;
    /// Samples outside the per-pair exact disc or the fixed-p disc by more than tol.
    std::size_t violations = 0;
    std::size_t violations_exact = 0;
    std::size_t violations_theorem2 = 0;
    /// Largest |a2 - center| - radius over both discs and all samples.
    double max_radial_excess = 0.0;
    /// sup |a2 - 1/p|; approaches p from below.
    double sup_attained = 0.0;
    double min_re_a2 = 0.0;
    std::uint64_t seed = 0;
    std::string rng = "mt19937_64";

    friend bool operator==(const RegionStats&, const RegionStats&) = default;
};

/// Draws n pairs with sample_schwarz_pairs(seed, n) and checks each a2
/// against disc_exact(p, w0(c1)) and disc_theorem2(p).
RegionStats monte_carlo_region(double p, std::uint64_t seed, std::size_t n,
                               double tol = default_membership_tol);

/// Same checks on caller-supplied pairs; `seed` is only recorded.
RegionStats region_stats_for_pairs(double p, std::span<const SchwarzCoeffs> pairs, double tol,
                                   std::uint64_t seed = 0);

inline constexpr double default_cross_route_tol = 1e-10;

/// a2 from the closed form versus a2 read off construct_from_omega with
/// omega = c1 z + c2 z^2. Requires order >= 6.
bool cross_validate_a2(double p, const SchwarzCoeffs& coeffs, std::size_t order = default_order,
                       double tol = default_cross_route_tol);

struct PositivityRow {
    double p = 0.0;
    /// 1/p - p, the least real part on |a2 - 1/p| <= p.
    double lower_bound = 0.0;
    double min_sampled_re = 0.0;
    bool pass = false;
};

/// For each p: the lower bound 1/p - p, and a Monte Carlo spot check that
/// every sampled Re a2 >= 1/p - p - tol and > 0.
std::vector<PositivityRow> positivity_sweep(std::span<const double> p_values, std::uint64_t seed = 0,
                                            std::size_t samples = 10'000, double tol = default_membership_tol);

} // namespace varistar
