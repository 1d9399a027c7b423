#include "varistar/regions.hpp"

#include "varistar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace varistar {

namespace {

constexpr double schwarz_pick_slack = 1e-12;

} // namespace

std::string_view to_string(A2Route route) noexcept {
    switch (route) {
    case A2Route::closed_form:
        return "closed-form";
    case A2Route::omega_series:
        return "omega-series";
    case A2Route::measure_series:
        return "measure-series";
    }
    return "unknown";
}

A2Report a2_closed_form(double p, const SchwarzCoeffs& coeffs) {
    require_pole_location(p);
    if (!validate_schwarz_pair(coeffs, schwarz_pick_slack)) {
        throw domain_error(fmt::format("invalid Schwarz pair: |c1| = {:.17g}, |c2| = {:.17g} violates |c2| <= 1 - |c1|^2",
                                       std::abs(coeffs.c1), std::abs(coeffs.c2)));
    }
    const cplx c1 = coeffs.c1;
    const cplx denominator = 1.0 + p * p - 2.0 * c1 * p;
    const cplx M = (c1 * c1 - coeffs.c2 + p * p - 2.0 * c1 * p) / denominator;
    return {1.0 / p + p * M, M, denominator, A2Route::closed_form};
}

A2Report a2_from_member(const Member& member, A2Route route) {
    if (member.f.order() < 2) {
        throw usage_error("a2_from_member: series order must be at least 2");
    }
    const double p = member.params.p;
    const cplx a2 = member.f[2];
    const cplx c1 = 0.5 * (p + 1.0 / p + 1.0 / member.params.w0);
    return {a2, (a2 - 1.0 / p) / p, 1.0 + p * p - 2.0 * c1 * p, route};
}

Disc disc_miller72(const PoleParams& params) {
    require_admissible(params);
    const double p = params.p;
    const cplx w0 = params.w0;
    return {-0.5 * w0 * (p * p + 1.0 / (p * p) + 1.0 / (w0 * w0)), std::abs(w0)};
}

Disc disc_miller80(const PoleParams& params) {
    require_admissible(params);
    const double p = params.p;
    return {p + 1.0 / p + params.w0, std::abs(params.w0)};
}

Disc disc_exact(const PoleParams& params) {
    require_admissible(params);
    const double p = params.p;
    const cplx w0 = params.w0;
    const cplx b1 = p + 1.0 / p + 1.0 / w0;
    const double b1_abs = std::abs(b1);
    // admissibility slack can push 1 - |b1|^2/4 a hair below zero
    const double radius = std::max(0.0, std::abs(w0) * (1.0 - 0.25 * b1_abs * b1_abs));
    return {p + 1.0 / p + w0 - 0.25 * w0 * b1 * b1, radius};
}

Disc disc_theorem2(double p) {
    require_pole_location(p);
    return {1.0 / p, p};
}

double radial_excess(const Disc& d, cplx point) noexcept {
    return std::abs(point - d.center) - d.radius;
}

bool disc_contains(const Disc& d, cplx point, double tol) noexcept {
    return std::abs(point - d.center) <= d.radius + tol;
}

bool disc_inside(const Disc& inner, const Disc& outer, double tol) noexcept {
    return std::abs(outer.center - inner.center) <= outer.radius - inner.radius + tol;
}

TangencyReport tangency_check(const Disc& inner, const Disc& outer, double tol) noexcept {
    TangencyReport r;
    r.delta_center = std::abs(inner.center - outer.center);
    r.radius_gap = outer.radius - inner.radius;
    r.internally_tangent = std::abs(r.delta_center - r.radius_gap) <= tol && r.radius_gap >= -tol;
    return r;
}

} // namespace varistar
