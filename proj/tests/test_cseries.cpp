#include "varistar/cseries.hpp"
#include "varistar/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace varistar;

namespace {

void expect_coeffs(const TruncatedSeries& s, std::initializer_list<cplx> expected, double tol = 1e-14) {
    ASSERT_EQ(s.order() + 1, expected.size());
    std::size_t k = 0;
    for (const cplx& e : expected) {
        EXPECT_NEAR(std::abs(s[k] - e), 0.0, tol) << "coefficient " << k;
        ++k;
    }
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant = false) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TruncatedSeries s(order);
    for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
        // coefficients in the unit bidisc
        s[k] = cplx{u(rng), u(rng)} / std::sqrt(2.0);
    }
    return s;
}

} // namespace

TEST(TruncatedSeries, LengthIsOrderPlusOne) {
    TruncatedSeries s(5, {1.0, 2.0});
    EXPECT_EQ(s.order(), 5u);
    EXPECT_EQ(s.coeffs().size(), 6u);
    EXPECT_EQ(s[1], cplx(2.0));
    EXPECT_EQ(s[5], cplx(0.0));
    // excess input coefficients are cut, not kept
    TruncatedSeries cut(1, {1.0, 2.0, 3.0});
    EXPECT_EQ(cut.coeffs().size(), 2u);
}

TEST(SeriesMul, DifferenceOfSquares) {
    expect_coeffs(series_mul(TruncatedSeries(2, {1.0, 1.0}), TruncatedSeries(2, {1.0, -1.0})), {1.0, 0.0, -1.0});
}

TEST(SeriesMul, IdentityIsNeutral) {
    std::mt19937_64 rng(11);
    const auto a = random_series(rng, 7);
    EXPECT_EQ(series_mul(TruncatedSeries::constant(1.0, 7), a), a);
}

TEST(SeriesMul, PointMassProduct) {
    expect_coeffs(series_mul(TruncatedSeries(2, {1.0, -2.0, 1.0}), TruncatedSeries(2, {1.0, 2.5, 5.25})),
                  {1.0, 0.5, 1.25});
}

TEST(SeriesMul, OrderMismatchIsUsageError) {
    EXPECT_THROW(series_mul(TruncatedSeries(2), TruncatedSeries(3)), usage_error);
}

TEST(SeriesDiv, ByOneAndGeometric) {
    std::mt19937_64 rng(12);
    const auto a = random_series(rng, 5);
    EXPECT_LE(max_abs_diff(series_div(a, TruncatedSeries::constant(1.0, 5)), a), 0.0);
    expect_coeffs(series_div(TruncatedSeries::constant(1.0, 3), TruncatedSeries(3, {1.0, -1.0})), {1.0, 1.0, 1.0, 1.0});
}

TEST(SeriesDiv, InvertsPointMassProduct) {
    expect_coeffs(series_div(TruncatedSeries(2, {1.0, 0.5, 1.25}), TruncatedSeries(2, {1.0, -2.0, 1.0})),
                  {1.0, 2.5, 5.25}, 1e-13);
}

TEST(SeriesDiv, NonInvertibleDivisor) {
    EXPECT_THROW(series_div(TruncatedSeries::constant(1.0, 3), TruncatedSeries(3, {0.0, 1.0})), domain_error);
}

TEST(SeriesExp, BasicExpansions) {
    expect_coeffs(series_exp(TruncatedSeries(3)), {1.0, 0.0, 0.0, 0.0});
    expect_coeffs(series_exp(TruncatedSeries(3, {0.0, 1.0})), {1.0, 1.0, 0.5, 1.0 / 6.0}, 1e-15);
    expect_coeffs(series_exp(2.0 * series_log_one_minus(1.0, 2)), {1.0, -2.0, 1.0});
}

TEST(SeriesExp, NonzeroConstantRejected) {
    EXPECT_THROW(series_exp(TruncatedSeries::constant(0.5, 3)), usage_error);
}

TEST(SeriesLogOneMinus, Examples) {
    expect_coeffs(series_log_one_minus(0.0, 2), {0.0, 0.0, 0.0});
    expect_coeffs(series_log_one_minus(1.0, 3), {0.0, -1.0, -0.5, -1.0 / 3.0});
    expect_coeffs(series_log_one_minus(cplx(0.0, 1.0), 2), {0.0, cplx(0.0, -1.0), 0.5});
    EXPECT_THROW(series_log_one_minus(cplx(1.0, 0.1), 3), domain_error);
}

TEST(SeriesGeometric, Examples) {
    expect_coeffs(series_geometric(0.0, 0), {1.0});
    expect_coeffs(series_geometric(0.5, 3), {1.0, 0.5, 0.25, 0.125});
    expect_coeffs(series_geometric(2.0, 2), {1.0, 2.0, 4.0});
}

TEST(SeriesDerivative, KeepsOrderAndZeroesTop) {
    expect_coeffs(series_derivative(TruncatedSeries::constant(1.0, 2)), {0.0, 0.0, 0.0});
    expect_coeffs(series_derivative(TruncatedSeries(2, {0.0, 1.0, 2.5})), {1.0, 5.0, 0.0});
    const cplx c{0.3, -1.7};
    expect_coeffs(series_derivative(TruncatedSeries::monomial(c, 2, 3)), {0.0, 2.0 * c, 0.0, 0.0});
}

TEST(SeriesProperties, MulCommutativeAndAssociative) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> order_dist(0, 16);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = order_dist(rng);
        const auto a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
        EXPECT_LE(max_abs_diff(series_mul(a, b), series_mul(b, a)), 1e-14);
        EXPECT_LE(max_abs_diff(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))), 1e-13);
    }
}

double l1(const TruncatedSeries& s) {
    double total = 0.0;
    for (const auto& c : s.coeffs()) {
        total += std::abs(c);
    }
    return total;
}

TEST(SeriesProperties, DivUndoesMul) {
    std::mt19937_64 rng(7);
    int dominant = 0;
    int checked = 0;
    while (checked < 400) {
        const auto a = random_series(rng, 16);
        auto b = random_series(rng, 16);
        if (checked % 2 == 0) {
            // diagonally dominant divisor: inverse coefficients stay O(1)
            b[0] = 1.5 * l1(b) * std::polar(1.0, std::arg(b[0]) + 0.3);
        }
        if (std::abs(b[0]) < 0.1) {
            continue;
        }
        const auto back = series_div(series_mul(a, b), b);
        const bool is_dominant = std::abs(b[0]) >= l1(b) - std::abs(b[0]);
        // otherwise rounding is amplified by the size of 1/b
        const double kappa = l1(series_div(TruncatedSeries::constant(1.0, 16), b)) * l1(b);
        const double tol = is_dominant ? 1e-12 : 1e-14 * kappa;
        EXPECT_LE(max_abs_diff(back, a), tol) << "kappa=" << kappa;
        dominant += is_dominant ? 1 : 0;
        ++checked;
    }
    EXPECT_GE(dominant, 200);
}

TEST(SeriesProperties, ExpIsAHomomorphism) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(rng, 16, true), b = random_series(rng, 16, true);
        EXPECT_LE(max_abs_diff(series_exp(a + b), series_mul(series_exp(a), series_exp(b))), 1e-11);
    }
}

TEST(SeriesProperties, ExpOfLogMatchesBinomial) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const cplx zeta = std::polar(trial % 4 == 0 ? 1.0 : radius(rng), angle(rng));
        for (int k = 1; k <= 5; ++k) {
            const auto lhs = series_exp(static_cast<double>(k) * series_log_one_minus(zeta, 16));
            const auto oracle_coeffs = oracle::binomial_one_minus(zeta, k, 16);
            EXPECT_LE(max_abs_diff(lhs, TruncatedSeries(16, oracle_coeffs)), 1e-12) << "k=" << k;
        }
    }
}

TEST(TruncatedSeries, HornerEvaluation) {
    const TruncatedSeries s(3, {1.0, 2.0, 0.0, cplx(0.0, 1.0)});
    const cplx z{0.2, -0.3};
    EXPECT_NEAR(std::abs(s.evaluate(z) - (1.0 + 2.0 * z + cplx(0.0, 1.0) * z * z * z)), 0.0, 1e-15);
}
