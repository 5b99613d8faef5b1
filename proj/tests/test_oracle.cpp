#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "incgamma/coeffs.hpp"
#include "incgamma/errors.hpp"
#include "incgamma/oracle.hpp"

using namespace incgamma;

namespace {
double rel_diff(const BigFloat& a, const BigFloat& b) {
    return (abs(a - b) / abs(b)).to_double();
}
} // namespace

TEST_CASE("oracle_q boundary values and complementarity") {
    CHECK(oracle_q(BigFloat(3.0), BigFloat(0.0)).to_double() == 1.0);
    const BigFloat a(3.0), x(3.0 + 0.1 * std::sqrt(3.0));
    BigFloat s = oracle_q(a, x) + oracle_p(a, x) - BigFloat(1.0);
    CHECK(abs(s).to_double() <= 1e-25);
}

TEST_CASE("oracle_q equals the continued-fraction route through Gamma(a,x)") {
    for (double a : {3.0, 30.0}) {
        for (double frac : {0.5, 1.0, 2.0}) {
            const BigFloat ab(a), xb(a * frac);
            BigFloat viaGamma = oracle_gamma_upper(ab, xb) / oracle_gamma(ab);
            CHECK(rel_diff(viaGamma, oracle_q(ab, xb)) <= 1e-24);
        }
    }
}

TEST_CASE("precision ladder: doubling P moves Q by <= 1e-25") {
    const double pts[5][2] = {{3.0, 2.0}, {7.5, 9.25}, {30.0, 28.0}, {100.0, 130.0}, {12.0, 3.0}};
    for (auto& p : pts) {
        BigFloat q1 = oracle_q(BigFloat(p[0], 192), BigFloat(p[1], 192));
        BigFloat q2 = oracle_q(BigFloat(p[0], 384), BigFloat(p[1], 384));
        CHECK(rel_diff(q1.with_precision(384), q2) <= 1e-25);
    }
}

TEST_CASE("oracle_gamma_upper closed forms") {
    CHECK(rel_diff(oracle_gamma_upper(BigFloat(1.0), BigFloat(3.0)), exp(BigFloat(-3.0))) <= 1e-30);
    // Gamma(a, 0+) -> Gamma(4) = 6
    CHECK(std::fabs(oracle_gamma_upper(BigFloat(4.0), BigFloat("1e-40")).to_double() - 6.0) <= 1e-12);
    CHECK_THROWS_AS(oracle_gamma_upper(BigFloat(2.0), BigFloat(0.0)), DomainError);
}

TEST_CASE("oracle_gamma_upper at negative order via the downward recurrence") {
    // cross-route: recurrence from the shifted CF must agree with the
    // functional identity Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x})/s applied once
    const BigFloat x(50.0);
    for (double a : {-0.5, -10.25, -50.5}) {
        BigFloat g = oracle_gamma_upper(BigFloat(a), x);
        BigFloat g1 = oracle_gamma_upper(BigFloat(a + 1.0), x);
        BigFloat xs = exp(BigFloat(a) * log(x) - x);
        BigFloat lhs = BigFloat(a) * g + xs; // = Gamma(a+1, x)
        CHECK(rel_diff(lhs, g1) <= 1e-24);
    }
}

TEST_CASE("oracle_gammastar closed forms and sign change at the negative zero") {
    // gamma*(a, 0) = 1/Gamma(a+1)
    CHECK(rel_diff(oracle_gammastar(BigFloat(2.5), BigFloat(0.0)),
                   BigFloat(1.0) / gamma(BigFloat(3.5))) <= 1e-25);
    // gamma*(1, x) = (1 - e^{-x})/x at x = 2
    BigFloat ref = (BigFloat(1.0) - exp(BigFloat(-2.0))) / BigFloat(2.0);
    CHECK(rel_diff(oracle_gammastar(BigFloat(1.0), BigFloat(2.0)), ref) <= 1e-25);
    // definition consistency on the positive domain: gamma* = x^{-a} (1 - Q)
    {
        const BigFloat a(5.0), x(3.0);
        BigFloat viaQ = exp(-a * log(x)) * (BigFloat(1.0) - oracle_q(a, x));
        CHECK(rel_diff(oracle_gammastar(a, x), viaQ) <= 1e-24);
    }
    // sign change across the Theorem-3 zero of gamma*(-10.5, .)
    const double xm = -10.8351498; // x_-(-10.5) from the expansion
    CHECK(oracle_gammastar(BigFloat(-10.5), BigFloat(xm - 0.01)).sign() !=
          oracle_gammastar(BigFloat(-10.5), BigFloat(xm + 0.01)).sign());
}

TEST_CASE("contour rule hits the known c_n(0) values") {
    BigFloat c0 = oracle_c_contour(0, BigFloat(1.0), 0.5, 64);
    BigFloat c1 = oracle_c_contour(1, BigFloat(1.0), 0.5, 64);
    CHECK(std::fabs(c0.to_double() + 1.0 / 3.0) <= 1e-10 / 3.0);
    CHECK(std::fabs(c1.to_double() + 1.0 / 540.0) <= 1e-10 / 540.0);
}

TEST_CASE("contour rule converges exponentially in M") {
    const BigFloat third = BigFloat(1.0) / BigFloat(3.0);
    double prev = 0.0;
    for (int M : {16, 32, 64}) {
        const double err = abs(oracle_c_contour(0, BigFloat(1.0), 0.5, M) + third).to_double();
        if (M > 16) CHECK(prev / err >= 1e2);
        prev = err;
    }
}

TEST_CASE("contour rule agrees with the eta-Taylor series off the double point") {
    // c_3 at lambda = 1.05: series from the f table vs the trapezoidal sum
    const double lambda = 1.05;
    const double eta = std::sqrt(2.0 * (0.05 - std::log(1.05)));
    std::vector<double> row = f_row_dbl(3, 40);
    double series = 0.0, p = 1.0;
    for (double f : row) {
        series += f * p;
        p *= eta;
    }
    const double contour = oracle_c_contour(3, BigFloat(lambda), 0.5, 128).to_double();
    CHECK(std::fabs(series - contour) <= 1e-10 * std::fabs(contour));
}

TEST_CASE("contour rule parameter guards") {
    CHECK_THROWS_AS(oracle_c_contour(0, BigFloat(1.8), 0.5, 64), DomainError);
    CHECK_THROWS_AS(oracle_c_contour(0, BigFloat(1.0), 1.5, 64), DomainError);
    CHECK_THROWS_AS(oracle_c_contour(0, BigFloat(1.0), 0.5, 4), DomainError);
}

TEST_CASE("oracle domain guards") {
    CHECK_THROWS_AS(oracle_q(BigFloat(-1.0), BigFloat(2.0)), DomainError);
    CHECK_THROWS_AS(oracle_q(BigFloat(2.0), BigFloat(-1.0)), DomainError);
}
