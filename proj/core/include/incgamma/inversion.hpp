#ifndef INCGAMMA_INVERSION_HPP
#define INCGAMMA_INVERSION_HPP

namespace incgamma {

struct QuantileResult {
    double x = 0.0;
    double tau0 = 0.0;
    int termsUsed = 0;
    double residual = 0.0; // |Q(a,x) - q| when verification was requested
    bool verified = false;
    double errorEstimate = 0.0; // first neglected x-series term propagated to Q units
};

struct ZeroResult {
    double xMinus = 0.0;
    double tau1 = 0.0;
    int termsUsed = 0;
    double errorEstimate = 0.0; // magnitude of the first neglected x-series term
};

// x(a, q) with Q(a, x) = q, by the quantile expansion
//   x = a + tau0 sqrt(a) + sum_{n<N} d_n(tau0) a^{-n/2}.
// N < 0 selects optimal truncation over the generated depth (n <= 10).
QuantileResult quantile(double a, double q, int N = -1, bool verify = false);

// the unique tau1 with cot(-pi a) = (2/sqrt(pi)) F(tau1/sqrt(2)) e^{tau1^2/2}
double solve_tau1(double a);

// negative zero of gamma*(a, .) for a < 0 bounded away from the
// non-positive integers:
//   x_- = a - tau1 (-a)^{1/2} + sum_{n<N} (-i)^n d_n(i tau1) (-a)^{-n/2}
ZeroResult negative_zero(double a, int N = -1);

// a - tau1 (-a)^{1/2} - tau1^2/3 - 1/3
double thompson_approx(double a);

} // namespace incgamma

#endif
