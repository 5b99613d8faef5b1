#ifndef INCGAMMA_ORACLE_HPP
#define INCGAMMA_ORACLE_HPP

#include "incgamma/bigfloat.hpp"

namespace incgamma {

// Extended-precision reference evaluations.  Convergent algorithms only:
// power series, continued fractions and trapezoidal contour sums -- no
// asymptotic expansions, so these results are independent of everything
// the expansion evaluators do.

// Q(a, x) = Gamma(a,x)/Gamma(a): lower series for x <= a+1, upper
// continued fraction for x > a+1.  a > 0, x >= 0.
BigFloat oracle_q(const BigFloat& a, const BigFloat& x);

// P(a, x) = gamma(a,x)/Gamma(a) by the lower series.  a > 0, x >= 0.
BigFloat oracle_p(const BigFloat& a, const BigFloat& x);

// gamma*(a, x) = e^{-x} sum_n x^n / Gamma(a+n+1), entire in both variables;
// reciprocal gamma treats non-positive integer arguments as exact zeros.
BigFloat oracle_gammastar(const BigFloat& a, const BigFloat& x);

// Gamma(a, x) for x > 0: continued fraction for a > 0 (series-complement
// when x <= a+1), downward recurrence from a shifted positive index for
// a <= 0.
BigFloat oracle_gamma_upper(const BigFloat& a, const BigFloat& x);

// Trapezoidal contour sum for the uniform-expansion coefficient c_n at
// lambda: M-point rule on the circle |omega| = r around the double point,
// exponentially convergent in M.  Requires 0 < r < 1, |lambda - 1| < r.
BigFloat oracle_c_contour(int n, const BigFloat& lambda, double r, int M);

// complete Gamma(a)
BigFloat oracle_gamma(const BigFloat& a);

} // namespace incgamma

#endif
