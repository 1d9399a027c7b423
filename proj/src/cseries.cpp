#include "varistar/cseries.hpp"

#include "varistar/errors.hpp"

#include <algorithm>
#include <string>

namespace varistar {

namespace {

constexpr double unit_modulus_slack = 1e-12;

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw usage_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, cplx{0.0}) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::span<const cplx> coeffs)
    : coeffs_(order + 1, cplx{0.0}) {
    std::copy_n(coeffs.begin(), std::min(coeffs.size(), coeffs_.size()), coeffs_.begin());
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<cplx> coeffs)
    : TruncatedSeries(order, std::span<const cplx>(coeffs.begin(), coeffs.size())) {}

TruncatedSeries TruncatedSeries::constant(cplx value, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(cplx value, std::size_t power, std::size_t order) {
    TruncatedSeries s(order);
    if (power <= order) {
        s.coeffs_[power] = value;
    }
    return s;
}

cplx TruncatedSeries::evaluate(cplx z) const noexcept {
    cplx acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs, "series add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs, "series subtract");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(cplx s) noexcept {
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t upto) {
    const std::size_t last = std::min({upto, a.order(), b.order()});
    double worst = 0.0;
    for (std::size_t k = 0; k <= last; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    return max_abs_diff(a, b, std::max(a.order(), b.order()));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc{0.0};
        for (std::size_t j = 0; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        out[k] = acc;
    }
    return out;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_div");
    if (b[0] == cplx{0.0}) {
        throw domain_error("series_div: divisor has zero constant term and is not invertible");
    }
    const std::size_t n = a.order();
    TruncatedSeries q(n);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= b[j] * q[k - j];
        }
        q[k] = acc / b[0];
    }
    return q;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (a[0] != cplx{0.0}) {
        throw usage_error("series_exp: argument must have zero constant term");
    }
    const std::size_t n = a.order();
    TruncatedSeries e(n);
    e[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m) {
        cplx acc{0.0};
        for (std::size_t k = 1; k <= m; ++k) {
            acc += static_cast<double>(k) * a[k] * e[m - k];
        }
        e[m] = acc / static_cast<double>(m);
    }
    return e;
}

TruncatedSeries series_log_one_minus(cplx zeta, std::size_t order) {
    if (std::abs(zeta) > 1.0 + unit_modulus_slack) {
        throw domain_error("series_log_one_minus: |zeta| > 1");
    }
    TruncatedSeries s(order);
    cplx power{1.0};
    for (std::size_t k = 1; k <= order; ++k) {
        power *= zeta;
        s[k] = -power / static_cast<double>(k);
    }
    return s;
}

TruncatedSeries series_geometric(cplx alpha, std::size_t order) {
    TruncatedSeries s(order);
    cplx power{1.0};
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = power;
        power *= alpha;
    }
    return s;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    const std::size_t n = a.order();
    TruncatedSeries d(n);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = static_cast<double>(k + 1) * a[k + 1];
    }
    return d;
}

} // namespace varistar
