#pragma once

// Members of the class of meromorphic starlike functions with a simple pole
// at p in (0,1), normalized f(0) = 0, f'(0) = 1, whose omitted set is
// starlike with respect to w0.
//
// Two constructors are provided. The measure route expands
//
//   f(z) = w0 + p w0 exp(sum_k 2 l_k log(1 - zeta_k z)) / ((z - p)(1 - p z))
//
// for an atomic probability measure sum_k l_k delta(zeta_k). The Schwarz
// route takes w, forms P = (1 + w)/(1 - w) and integrates
//
//   -z f'(z) / (f(z) - w0) = P(z) + p/(z - p) - p z/(1 - p z)
//
// as a linear recurrence on the Taylor coefficients of f.

#include "varistar/cseries.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace varistar {

/// Slack used when testing admissibility of (p, w0), i.e. |c1| <= 1.
inline constexpr double admissibility_tol = 1e-9;

struct PoleParams {
    double p = 0.5;
    cplx w0{-0.4};
};

/// Throws domain_error unless 0 < p < 1.
void require_pole_location(double p);

/// Throws domain_error naming the violated bound unless p is in (0,1),
/// w0 is finite and nonzero and |p + 1/p + 1/w0| <= 2 + tol.
void require_admissible(const PoleParams& params, double tol = admissibility_tol);
bool is_admissible(const PoleParams& params, double tol = admissibility_tol) noexcept;

struct MeasureAtom {
    cplx zeta{1.0};
    double weight = 1.0;
};

/// Finite atomic probability measure on the unit circle.
class ProbMeasure {
public:
    /// Throws domain_error unless weights lie in [0,1] and sum to 1, and
    /// every atom is unimodular (both within 1e-12).
    explicit ProbMeasure(std::vector<MeasureAtom> atoms);

    static ProbMeasure point_mass(cplx zeta);
    /// Equal weights on the n-th roots of unity rotated by `phase`.
    static ProbMeasure roots_of_unity(std::size_t n, double phase = 0.0);

    std::span<const MeasureAtom> atoms() const noexcept { return atoms_; }
    /// Integral of zeta d mu; equals c1 of the associated Schwarz function.
    cplx first_moment() const noexcept;

private:
    std::vector<MeasureAtom> atoms_;
};

/// A constructed member: Taylor series of f about 0 and its (p, w0).
struct Member {
    TruncatedSeries f;
    PoleParams params;
};

/// w0 = -1 / (p + 1/p - 2 c1).
cplx w0_from_c1(double p, cplx c1);

/// c1 = (p + 1/p + 1/w0) / 2.
cplx c1_from_pair(const PoleParams& params);

Member construct_from_measure(double p, const ProbMeasure& mu, std::size_t order = default_order);

/// omega must vanish at 0. |c1| == 1 is accepted only for omega == c1 z.
Member construct_from_omega(double p, const TruncatedSeries& omega, std::size_t order = default_order);

/// P = (1 + omega) / (1 - omega).
TruncatedSeries carath_from_omega(const TruncatedSeries& omega);

/// Recovers the Caratheodory series P from f. P(0) == 1 is checked.
TruncatedSeries carath_from_f(const PoleParams& params, const TruncatedSeries& f);

struct CertificateReport {
    double min_re = 0.0;
    cplx argmin_point{0.0};
    std::vector<double> radii;
    std::size_t angles = 0;
    double tol = 0.0;
    bool pass = false;
};

inline constexpr double max_certificate_radius = 0.9;

/// Minimum of Re P over the polar grid r e^(2 pi i j / angles). This checks
/// the truncated polynomial only; no bound on the discarded tail is made.
CertificateReport starlike_certificate(const PoleParams& params, const TruncatedSeries& P,
                                       std::span<const double> radii, std::size_t angles,
                                       double tol);

/// Radii {0.1, 0.2, ..., 0.9}.
std::vector<double> default_certificate_radii();

} // namespace varistar
