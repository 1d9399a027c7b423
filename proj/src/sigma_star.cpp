#include "varistar/sigma_star.hpp"

#include "varistar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace varistar {

namespace {

constexpr double measure_tol = 1e-12;
constexpr double normalization_tol = 1e-10;
constexpr double self_consistency_tol = 1e-12;
constexpr double rigidity_tol = 1e-12;

bool is_finite(cplx z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// -p/(z - p) + p z/(1 - p z) = sum_{n>=0} p^(-n) z^n + sum_{n>=1} p^n z^n
TruncatedSeries pole_terms(double p, std::size_t order) {
    TruncatedSeries s = series_geometric(1.0 / p, order) + series_geometric(p, order);
    s[0] -= 1.0;
    return s;
}

} // namespace

void require_pole_location(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw domain_error(fmt::format("pole location p = {} must lie in (0, 1)", p));
    }
}

void require_admissible(const PoleParams& params, double tol) {
    require_pole_location(params.p);
    if (!is_finite(params.w0) || params.w0 == cplx{0.0}) {
        throw domain_error("w0 must be finite and nonzero");
    }
    const double b1 = std::abs(params.p + 1.0 / params.p + 1.0 / params.w0);
    if (!(b1 <= 2.0 + tol)) {
        throw domain_error(fmt::format(
            "inadmissible (p, w0): |p + 1/p + 1/w0| = {:.17g} exceeds 2 (|c1| <= 1 violated)", b1));
    }
}

bool is_admissible(const PoleParams& params, double tol) noexcept {
    try {
        require_admissible(params, tol);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

ProbMeasure::ProbMeasure(std::vector<MeasureAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw domain_error("probability measure needs at least one atom");
    }
    double total = 0.0;
    for (const auto& atom : atoms_) {
        if (!(atom.weight >= 0.0 && atom.weight <= 1.0)) {
            throw domain_error(fmt::format("measure weight {} outside [0, 1]", atom.weight));
        }
        if (std::abs(std::abs(atom.zeta) - 1.0) > measure_tol) {
            throw domain_error(fmt::format("measure atom ({}, {}) is not on the unit circle",
                                           atom.zeta.real(), atom.zeta.imag()));
        }
        total += atom.weight;
    }
    if (std::abs(total - 1.0) > measure_tol) {
        throw domain_error(fmt::format("measure weights sum to {:.17g}, not 1", total));
    }
}

ProbMeasure ProbMeasure::point_mass(cplx zeta) {
    return ProbMeasure({MeasureAtom{zeta, 1.0}});
}

ProbMeasure ProbMeasure::roots_of_unity(std::size_t n, double phase) {
    if (n == 0) {
        throw domain_error("roots_of_unity: n must be positive");
    }
    std::vector<MeasureAtom> atoms;
    atoms.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        atoms.push_back({std::polar(1.0, angle), 1.0 / static_cast<double>(n)});
    }
    // weights 1/n may not sum to exactly 1; fold the residue into the last atom
    double total = 0.0;
    for (const auto& a : atoms) {
        total += a.weight;
    }
    atoms.back().weight += 1.0 - total;
    return ProbMeasure(std::move(atoms));
}

cplx ProbMeasure::first_moment() const noexcept {
    cplx m{0.0};
    for (const auto& atom : atoms_) {
        m += atom.weight * atom.zeta;
    }
    return m;
}

cplx w0_from_c1(double p, cplx c1) {
    require_pole_location(p);
    if (std::abs(c1) > 1.0 + admissibility_tol) {
        throw domain_error(fmt::format("|c1| = {:.17g} exceeds 1", std::abs(c1)));
    }
    const cplx denom = p + 1.0 / p - 2.0 * c1;
    // Re(denom) >= p + 1/p - 2 > 0 for |c1| <= 1, so this only trips on NaN input
    if (!(std::abs(denom) > 0.0)) {
        throw domain_error("w0_from_c1: p + 1/p - 2 c1 vanishes");
    }
    return -1.0 / denom;
}

cplx c1_from_pair(const PoleParams& params) {
    require_admissible(params);
    return 0.5 * (params.p + 1.0 / params.p + 1.0 / params.w0);
}

Member construct_from_measure(double p, const ProbMeasure& mu, std::size_t order) {
    require_pole_location(p);
    const cplx w0 = w0_from_c1(p, mu.first_moment());

    TruncatedSeries log_sum(order);
    for (const auto& atom : mu.atoms()) {
        log_sum += (2.0 * atom.weight) * series_log_one_minus(atom.zeta, order);
    }
    const TruncatedSeries power_factor = series_exp(log_sum);
    // p w0 / ((z - p)(1 - p z)) = -w0 / ((1 - z/p)(1 - p z))
    const TruncatedSeries pole_factor = series_mul(series_geometric(1.0 / p, order), series_geometric(p, order));

    TruncatedSeries f = TruncatedSeries::constant(w0, order) - w0 * series_mul(power_factor, pole_factor);

    if (std::abs(f[0]) > normalization_tol || (order >= 1 && std::abs(f[1] - 1.0) > normalization_tol)) {
        throw consistency_error("construct_from_measure: normalization f(0) = 0, f'(0) = 1 failed");
    }
    return {std::move(f), PoleParams{p, w0}};
}

Member construct_from_omega(double p, const TruncatedSeries& omega_in, std::size_t order) {
    require_pole_location(p);
    if (order < 1) {
        throw usage_error("construct_from_omega: order must be at least 1");
    }
    const TruncatedSeries omega(order, omega_in.coeffs());
    if (omega[0] != cplx{0.0}) {
        throw usage_error("construct_from_omega: omega(0) must be 0");
    }
    const cplx c1 = omega[1];
    if (std::abs(c1) > 1.0 + admissibility_tol) {
        throw domain_error(fmt::format("construct_from_omega: |c1| = {:.17g} exceeds 1", std::abs(c1)));
    }
    if (std::abs(c1) >= 1.0 - rigidity_tol) {
        for (std::size_t k = 2; k <= order; ++k) {
            if (std::abs(omega[k]) > rigidity_tol) {
                throw domain_error("construct_from_omega: |c1| = 1 forces omega = c1 z");
            }
        }
    }

    const TruncatedSeries P = carath_from_omega(omega);
    const cplx w0 = w0_from_c1(p, 0.5 * P[1]);

    // Q = P + p/(z - p) - p z/(1 - p z) vanishes at 0; R = Q / z
    const TruncatedSeries Q = P - pole_terms(p, order);
    if (std::abs(Q[0]) > self_consistency_tol) {
        throw consistency_error("construct_from_omega: Q(0) != 0");
    }

    // f' = -(f - w0) R  =>  (n+1) a_{n+1} = -sum_{k=0}^{n} g_k r_{n-k},  g = f - w0
    TruncatedSeries f(order);
    auto g = [&](std::size_t k) { return k == 0 ? -w0 : f[k]; };
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        cplx acc{0.0};
        for (std::size_t k = 0; k <= n; ++k) {
            acc += g(k) * Q[n - k + 1];
        }
        f[n + 1] = -acc / static_cast<double>(n + 1);
    }
    if (std::abs(f[1] - 1.0) > self_consistency_tol) {
        throw consistency_error(fmt::format("construct_from_omega: recurrence produced a1 = {:.17g}{:+.17g}i",
                                            f[1].real(), f[1].imag()));
    }
    return {std::move(f), PoleParams{p, w0}};
}

TruncatedSeries carath_from_omega(const TruncatedSeries& omega) {
    if (omega[0] != cplx{0.0}) {
        throw usage_error("carath_from_omega: omega(0) must be 0");
    }
    const TruncatedSeries one = TruncatedSeries::constant(1.0, omega.order());
    return series_div(one + omega, one - omega);
}

TruncatedSeries carath_from_f(const PoleParams& params, const TruncatedSeries& f) {
    require_pole_location(params.p);
    const std::size_t order = f.order();
    if (order < 2) {
        throw usage_error("carath_from_f: need order >= 2");
    }
    if (std::abs(f[0]) > normalization_tol || std::abs(f[1] - 1.0) > normalization_tol) {
        throw usage_error("carath_from_f: f must satisfy f(0) = 0 and f'(0) = 1");
    }
    if (params.w0 == cplx{0.0}) {
        throw domain_error("carath_from_f: w0 must be nonzero");
    }
    TruncatedSeries minus_z_fprime(order);
    for (std::size_t k = 1; k <= order; ++k) {
        minus_z_fprime[k] = -static_cast<double>(k) * f[k];
    }
    const TruncatedSeries shifted = f - TruncatedSeries::constant(params.w0, order);
    TruncatedSeries P = series_div(minus_z_fprime, shifted) + pole_terms(params.p, order);
    if (std::abs(P[0] - 1.0) > normalization_tol) {
        throw consistency_error("carath_from_f: P(0) != 1");
    }
    return P;
}

CertificateReport starlike_certificate(const PoleParams& params, const TruncatedSeries& P,
                                       std::span<const double> radii, std::size_t angles, double tol) {
    require_pole_location(params.p);
    if (angles < 8) {
        throw usage_error("starlike_certificate: need at least 8 angles");
    }
    if (radii.empty()) {
        throw usage_error("starlike_certificate: empty radius list");
    }
    for (double r : radii) {
        if (!(r > 0.0)) {
            throw usage_error(fmt::format("starlike_certificate: radius {} must be positive", r));
        }
        if (r > max_certificate_radius) {
            throw domain_error(fmt::format("starlike_certificate: radius {} exceeds {}", r, max_certificate_radius));
        }
    }

    CertificateReport report;
    report.radii.assign(radii.begin(), radii.end());
    report.angles = angles;
    report.tol = tol;
    report.min_re = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        for (std::size_t j = 0; j < angles; ++j) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles));
            const double re = P.evaluate(z).real();
            if (re < report.min_re) {
                report.min_re = re;
                report.argmin_point = z;
            }
        }
    }
    report.pass = report.min_re > -tol;
    return report;
}

std::vector<double> default_certificate_radii() {
    std::vector<double> radii;
    for (int k = 1; k <= 9; ++k) {
        radii.push_back(k / 10.0);
    }
    return radii;
}

} // namespace varistar
