#ifndef INCGAMMA_SPECIAL_HPP
#define INCGAMMA_SPECIAL_HPP

namespace incgamma {

// Complementary error function, relative error <= 4 ulp over |x| <= 10;
// saturates to 0 / 2 where e^{-x^2} underflows.
double erfc(double x);

// erf(x) = 1 - erfc(x), same machinery.
double erf(double x);

// The unique tau0 with (1/2) erfc(tau0/sqrt(2)) = q, 0 < q < 1.
// Monotone decreasing in q; tau0(1/2) = 0.
double inv_half_erfc(double q);

// Dawson's integral F(x) = e^{-x^2} int_0^x e^{t^2} dt.
double dawson(double x);

// Scaled gamma function Gamma*(a) = Gamma(a) e^a a^{1/2-a} (2 pi)^{-1/2},
// a > 0; tends to 1 as a -> infinity.
double scaled_gamma(double a);

// ln Gamma(a) for a > 0, through scaled_gamma.
double log_gamma(double a);

// sin(pi x), cos(pi x) with exact argument reduction on the integer grid.
double sin_pi(double x);
double cos_pi(double x);

} // namespace incgamma

#endif
