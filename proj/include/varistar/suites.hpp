#pragma once

// Named invariant suites run by `varistar verify`. Each returns a pass flag
// and a one-line summary; none of them throw on a failed check.

#include "varistar/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace varistar {

inline constexpr std::size_t certificate_order = 64;

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string summary;
};

SuiteResult suite_region(double p, std::uint64_t seed, std::size_t samples);
SuiteResult suite_boundary(std::size_t K = 360);
SuiteResult suite_tangency(std::uint64_t seed, std::size_t pairs = 1000);
SuiteResult suite_sharpness();
SuiteResult suite_routes(std::size_t order = default_order);
SuiteResult suite_cross(std::uint64_t seed, std::size_t pairs = 1000, std::size_t order = default_order);
SuiteResult suite_positivity(std::uint64_t seed, std::size_t samples_per_p = 2000);
/// Re P > 0 on the 0.1..0.9 x 360 grid for extremal members with |c| <= 0.9.
/// P is expanded to `order` terms; since |b_n| <= 2 the tail at r = 0.9 is
/// at most 20 * 0.9^(order+1), below the Harnack minimum 0.1/1.9 once order >= 56.
SuiteResult suite_certificate(std::uint64_t seed, std::size_t members = 100,
                              std::size_t order = certificate_order);

/// Every suite except region, at default sizes.
std::vector<SuiteResult> run_fixed_suites(std::uint64_t seed);

/// Every suite above; region runs at p in {0.2, 0.5, 0.8}.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::size_t samples);

/// p uniform on [0.05, 0.95] and a sampled Schwarz pair, deterministic in seed.
struct RandomCase {
    double p = 0.5;
    SchwarzCoeffs coeffs;
};
std::vector<RandomCase> sample_random_cases(std::uint64_t seed, std::size_t n);

/// The three measure / Schwarz-function pairs known to give the same member:
/// point mass at 1 with omega = z, atoms at +-1 with omega = z^2, and the
/// cube roots of unity with omega = 0.
struct RoutePair {
    std::string name;
    ProbMeasure measure;
    TruncatedSeries omega;
};
std::vector<RoutePair> matched_route_pairs(std::size_t order = default_order);

} // namespace varistar
