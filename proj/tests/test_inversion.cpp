#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "incgamma/coeffs.hpp"
#include "incgamma/errors.hpp"
#include "incgamma/expansions.hpp"
#include "incgamma/inversion.hpp"
#include "incgamma/oracle.hpp"
#include "incgamma/special.hpp"

using namespace incgamma;

TEST_CASE("quantile at the median sums the even-order constants") {
    QuantileResult r = quantile(10.0, 0.5, 3);
    CHECK(r.tau0 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.x == doctest::Approx(10.0 - 1.0 / 3.0 + (8.0 / 405.0) / 10.0).epsilon(1e-12));
    CHECK(r.termsUsed == 3);
}

TEST_CASE("median round-trips through the forward evaluation") {
    QuantileResult r = quantile(100.0, 0.5);
    CHECK(std::fabs(hybrid_q(100.0, r.x).value - 0.5) <= 1e-9);
}

TEST_CASE("quantile round-trips against the oracle") {
    for (double a : {10.0, 50.0, 200.0, 1000.0}) {
        for (double q : {0.05, 0.1, 0.5, 0.9, 0.95}) {
            QuantileResult r = quantile(a, q);
            const double back = oracle_q(BigFloat(a), BigFloat(r.x)).to_double();
            CHECK(std::fabs(back - q) <= std::max(1e-8, 10.0 * r.errorEstimate));
        }
    }
}

TEST_CASE("quantile verification reports the round-trip residual") {
    QuantileResult r = quantile(100.0, 0.1, -1, true);
    CHECK(r.verified);
    CHECK(r.residual <= std::max(1e-9, 10.0 * r.errorEstimate));
}

TEST_CASE("explicit six-term quantile stays within the propagated estimate") {
    QuantileResult r = quantile(100.0, 0.1, 6);
    const double back = oracle_q(BigFloat(100.0), BigFloat(r.x)).to_double();
    CHECK(std::fabs(back - 0.1) <= std::max(1e-10, 10.0 * r.errorEstimate));
}

TEST_CASE("quantile is monotone decreasing in q") {
    double prev = 1e300;
    for (int i = 1; i <= 9; ++i) {
        const double q = i / 10.0;
        const double x = quantile(50.0, q).x;
        CHECK(x < prev);
        prev = x;
    }
}

TEST_CASE("quantile guards") {
    CHECK_THROWS_AS(quantile(10.0, 1.5), DomainError);
    CHECK_THROWS_AS(quantile(10.0, 0.0), DomainError);
    // |tau0| >= 0.9 sqrt(a): tau0(1e-9) ~ 6, sqrt(2) * 0.9 ~ 1.27
    CHECK_THROWS_AS(quantile(2.0, 1e-9), ValidityError);
}

TEST_CASE("quantile series symmetry: odd terms cancel between q and 1-q") {
    // evaluate the series construction at +-tau0 explicitly
    const double a = 100.0, q = 0.2;
    const double tau0 = inv_half_erfc(q);
    const int N = 8;
    auto series_x = [&](double t) {
        double x = a + t * std::sqrt(a);
        double p = 1.0;
        for (int n = 0; n < N; ++n) {
            std::vector<double> c = d_poly_dbl(n);
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
            x += acc * p;
            p /= std::sqrt(a);
        }
        return x;
    };
    double evenSum = 0.0, p = 1.0;
    for (int n = 0; n < N; ++n) {
        if (n % 2 == 0) {
            std::vector<double> c = d_poly_dbl(n);
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * tau0 + *it;
            evenSum += acc * p;
        }
        p /= std::sqrt(a);
    }
    const double combo = series_x(tau0) + series_x(-tau0) - 2.0 * a - 2.0 * evenSum;
    CHECK(std::fabs(combo) <= 1e-12 * a);
}

TEST_CASE("tau1 is zero at half-integers and solves the Dawson equation") {
    CHECK(std::fabs(solve_tau1(-10.5)) <= 1e-14);
    CHECK(std::fabs(solve_tau1(-21.5)) <= 1e-14);
    // cot(20.25 pi) = +1, so tau1 > 0; the oracle confirms gamma*(-20.25, .)
    // changes sign only near the tau1 > 0 candidate
    const double a = -20.25;
    const double t = solve_tau1(a);
    CHECK(t > 0.0);
    const double lhs = cos_pi(-a) / sin_pi(-a);
    const double rhs = 2.0 / std::sqrt(3.14159265358979323846) *
                       dawson(t / std::sqrt(2.0)) * std::exp(0.5 * t * t);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
    // quarter offsets on the other side give tau1 < 0: cot(19.75 pi) = -1
    CHECK(solve_tau1(-19.75) < 0.0);
}

TEST_CASE("tau1 blows up logarithmically near the integers") {
    // |tau1| ~ sqrt(-2 log|a - k|) as a -> k
    const double off = 1e-4;
    const double t = solve_tau1(-12.0 + off); // just right of k = -12
    const double law = std::sqrt(-2.0 * std::log(off));
    CHECK(std::fabs(std::fabs(t) - law) / law <= 0.25);
}

TEST_CASE("tau1 guards near non-positive integers") {
    CHECK_THROWS_AS(solve_tau1(-7.0), DomainError);
    CHECK_THROWS_AS(solve_tau1(-7.0 + 1e-8), DomainError);
    CHECK_THROWS_AS(solve_tau1(2.5), DomainError);
}

TEST_CASE("negative zero at a = -10.5 sums the even-order constants") {
    ZeroResult r1 = negative_zero(-10.5, 1);
    CHECK(r1.xMinus == doctest::Approx(-10.5 - 1.0 / 3.0).epsilon(1e-14));
    ZeroResult r3 = negative_zero(-10.5, 3);
    CHECK(r3.xMinus ==
          doctest::Approx(-10.5 - 1.0 / 3.0 - (8.0 / 405.0) / 10.5).epsilon(1e-13));
}

TEST_CASE("gamma* changes sign across the computed zero") {
    for (double a : {-10.5, -30.3}) {
        ZeroResult r = negative_zero(a);
        const double delta = std::pow(-a, -3.0);
        const int s1 = oracle_gammastar(BigFloat(a), BigFloat(r.xMinus - delta)).sign();
        const int s2 = oracle_gammastar(BigFloat(a), BigFloat(r.xMinus + delta)).sign();
        CHECK(s1 != s2);
    }
}

TEST_CASE("six-term zero at a = -30.3 brackets the root within ten estimates") {
    ZeroResult r = negative_zero(-30.3, 6);
    const double w = 10.0 * r.errorEstimate + 1e-12;
    const int s1 = oracle_gammastar(BigFloat(-30.3), BigFloat(r.xMinus - w)).sign();
    const int s2 = oracle_gammastar(BigFloat(-30.3), BigFloat(r.xMinus + w)).sign();
    CHECK(s1 != s2);
}

TEST_CASE("(-i)^n d_n(i tau) real evaluation agrees with complex arithmetic") {
    for (double tau : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        for (int n = 0; n <= 10; ++n) {
            std::vector<double> c = d_poly_dbl(n);
            std::complex<double> itau(0.0, tau);
            std::complex<double> acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * itau + *it;
            std::complex<double> mi(0.0, -1.0);
            std::complex<double> w = acc;
            for (int j = 0; j < n % 4; ++j) w *= mi;
            const double real = dtilde_eval(n, tau);
            CHECK(std::fabs(w.imag()) <= 1e-15 * (std::fabs(w.real()) + 1e-300));
            CHECK(w.real() == doctest::Approx(real).epsilon(1e-12));
        }
    }
}

TEST_CASE("thompson approximation is the one-term zero expansion") {
    CHECK(thompson_approx(-25.5) == doctest::Approx(negative_zero(-25.5, 1).xMinus).epsilon(1e-15));
    const double a = -20.3;
    ZeroResult r1 = negative_zero(a, 1);
    CHECK(thompson_approx(a) == doctest::Approx(r1.xMinus).epsilon(1e-14));
}

TEST_CASE("thompson deviation scales like (-a)^{-1/2}") {
    const double d1 = std::fabs(negative_zero(-100.25, 6).xMinus - thompson_approx(-100.25));
    const double d2 = std::fabs(negative_zero(-400.25, 6).xMinus - thompson_approx(-400.25));
    CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(0.30));
}

TEST_CASE("negative zero guards") {
    CHECK_THROWS_AS(negative_zero(-9.0), DomainError);
    // very close to an integer: tau1 exceeds the 0.9 sqrt(-a) validity guard
    CHECK_THROWS_AS(negative_zero(-4.0 + 1e-5), ValidityError);
}
