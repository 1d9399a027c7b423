#pragma once

// Closed-form geometry of the second Taylor coefficient a2(f).

#include "varistar/schwarz.hpp"
#include "varistar/sigma_star.hpp"

#include <string_view>

namespace varistar {

/// Closed disc |z - center| <= radius. Radius 0 is a legitimate point disc.
struct Disc {
    cplx center{0.0};
    double radius = 0.0;
};

inline constexpr double default_membership_tol = 1e-9;
inline constexpr double default_tangency_tol = 1e-12;

enum class A2Route { closed_form, omega_series, measure_series };

std::string_view to_string(A2Route route) noexcept;

struct A2Report {
    cplx a2{0.0};
    /// (c1^2 - c2 + p^2 - 2 c1 p) / (1 + p^2 - 2 c1 p); a2 = 1/p + p M.
    cplx M{0.0};
    /// 1 + p^2 - 2 c1 p
    cplx denominator{0.0};
    A2Route route = A2Route::closed_form;
};

/// a2 = 1/p + p (c1^2 - c2 + p^2 - 2 c1 p) / (1 + p^2 - 2 c1 p).
/// Pairs outside the Schwarz-Pick bound (slack 1e-12) throw domain_error.
A2Report a2_closed_form(double p, const SchwarzCoeffs& coeffs);

/// a2 read off a constructed series; M and denominator are back-filled from
/// a2 = 1/p + p M and c1 = (p + 1/p + 1/w0)/2.
A2Report a2_from_member(const Member& member, A2Route route);

/// |a2 + (w0/2)(p^2 + 1/p^2 + 1/w0^2)| <= |w0|   (Miller, 1972)
Disc disc_miller72(const PoleParams& params);

/// |a2 - (1 + p^2)/p - w0| <= |w0|   (Miller, 1980)
Disc disc_miller80(const PoleParams& params);

/// Exact region for fixed (p, w0):
///   center (p + 1/p + w0) - (w0/4)(p + 1/p + 1/w0)^2
///   radius |w0| (1 - |p + 1/p + 1/w0|^2 / 4)
Disc disc_exact(const PoleParams& params);

/// Union over all admissible w0 for fixed p: |a2 - 1/p| <= p.
Disc disc_theorem2(double p);

bool disc_contains(const Disc& d, cplx point, double tol = default_membership_tol) noexcept;

/// |outer.center - inner.center| <= outer.radius - inner.radius + tol.
bool disc_inside(const Disc& inner, const Disc& outer, double tol = default_membership_tol) noexcept;

/// |point - center| - radius; positive outside the disc.
double radial_excess(const Disc& d, cplx point) noexcept;

struct TangencyReport {
    double delta_center = 0.0;
    double radius_gap = 0.0;
    bool internally_tangent = false;
};

TangencyReport tangency_check(const Disc& inner, const Disc& outer, double tol = default_tangency_tol) noexcept;

} // namespace varistar
