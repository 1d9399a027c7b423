#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
// All arithmetic is carried out modulo z^(N+1).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace varistar {

using cplx = std::complex<double>;

inline constexpr std::size_t default_order = 16;

class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = default_order);

    /// Coefficients are copied and zero-padded (or cut) to order + 1 entries.
    TruncatedSeries(std::size_t order, std::span<const cplx> coeffs);
    TruncatedSeries(std::size_t order, std::initializer_list<cplx> coeffs);

    static TruncatedSeries constant(cplx value, std::size_t order);
    static TruncatedSeries monomial(cplx value, std::size_t power, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    const cplx& operator[](std::size_t k) const { return coeffs_.at(k); }
    cplx& operator[](std::size_t k) { return coeffs_.at(k); }

    /// Horner evaluation of the truncated polynomial.
    cplx evaluate(cplx z) const noexcept;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(cplx s) noexcept;

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(TruncatedSeries lhs, cplx s) { return lhs *= s; }
    friend TruncatedSeries operator*(cplx s, TruncatedSeries rhs) { return rhs *= s; }
    TruncatedSeries operator-() const { return *this * cplx{-1.0}; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<cplx> coeffs_;
};

/// Largest coefficientwise modulus of a - b over indices [0, upto].
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t upto);
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with q * b == a modulo z^(N+1). Requires b[0] != 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(a) via n e_n = sum_{k=1}^{n} k a_k e_{n-k}. Requires a[0] == 0.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// log(1 - zeta z) = -sum zeta^k z^k / k, |zeta| <= 1.
TruncatedSeries series_log_one_minus(cplx zeta, std::size_t order);

/// 1 / (1 - alpha z) = sum alpha^k z^k.
TruncatedSeries series_geometric(cplx alpha, std::size_t order);

/// d/dz; same order as the input with the top coefficient set to zero.
TruncatedSeries series_derivative(const TruncatedSeries& a);

} // namespace varistar
