#pragma once

// Schwarz functions w(z) = c1 z + c2 z^2 + ... mapping the unit disc into itself.

#include "varistar/cseries.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace varistar {

struct SchwarzCoeffs {
    cplx c1{0.0};
    cplx c2{0.0};
};

/// Parameters of w(z) = z (c1 + c z) / (1 + conj(c1) c z).
/// |c| == 1 gives the boundary extremals, |c| < 1 the interior ones.
struct ExtremalParams {
    cplx c1{0.0};
    cplx c{0.0};
};

/// Name of the generator behind sample_schwarz_pairs; embedded in reports.
inline constexpr std::string_view sampler_rng_name = "mt19937_64";

TruncatedSeries extremal_omega(const ExtremalParams& params, std::size_t order = default_order);

/// |c1| <= 1 + tol and |c2| <= 1 - |c1|^2 + tol.
bool validate_schwarz_pair(const SchwarzCoeffs& coeffs, double tol = 0.0) noexcept;

/// n pairs with c1 area-uniform on the closed unit disc and c2 area-uniform on
/// the disc of radius 1 - |c1|^2. Deterministic in seed.
std::vector<SchwarzCoeffs> sample_schwarz_pairs(std::uint64_t seed, std::size_t n);

/// Area-uniform point of the closed disc |z| <= radius, drawn by rejection
/// from the bounding square. Exposed for the verification harness.
template <class Rng>
cplx uniform_in_disc(Rng& rng, double radius);

} // namespace varistar

#include "varistar/detail/uniform_disc.hpp"
