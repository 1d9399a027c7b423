#include "varistar/schwarz.hpp"

#include "varistar/errors.hpp"

#include <random>

namespace varistar {

namespace {

constexpr double modulus_slack = 1e-12;

} // namespace

TruncatedSeries extremal_omega(const ExtremalParams& params, std::size_t order) {
    if (std::abs(params.c1) > 1.0 + modulus_slack) {
        throw domain_error("extremal_omega: |c1| > 1");
    }
    if (std::abs(params.c) > 1.0 + modulus_slack) {
        throw domain_error("extremal_omega: |c| > 1");
    }
    // z (c1 + c z) * 1 / (1 - alpha z) with alpha = -conj(c1) c
    const TruncatedSeries numerator(order, {cplx{0.0}, params.c1, params.c});
    const TruncatedSeries denominator_inverse = series_geometric(-std::conj(params.c1) * params.c, order);
    return series_mul(numerator, denominator_inverse);
}

bool validate_schwarz_pair(const SchwarzCoeffs& coeffs, double tol) noexcept {
    const double m1 = std::abs(coeffs.c1);
    if (!(m1 <= 1.0 + tol)) {
        return false;
    }
    return std::abs(coeffs.c2) <= 1.0 - m1 * m1 + tol;
}

std::vector<SchwarzCoeffs> sample_schwarz_pairs(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<SchwarzCoeffs> out;
    out.reserve(n);
    while (out.size() < n) {
        SchwarzCoeffs pair;
        pair.c1 = uniform_in_disc(rng, 1.0);
        const double m1 = std::abs(pair.c1);
        // |c1| == 1 collapses the admissible c2 disc to {0}
        pair.c2 = m1 >= 1.0 ? cplx{0.0} : uniform_in_disc(rng, 1.0 - m1 * m1);
        // rounding in the radius product can overshoot by an ulp; redraw
        if (validate_schwarz_pair(pair, 0.0)) {
            out.push_back(pair);
        }
    }
    return out;
}

} // namespace varistar
