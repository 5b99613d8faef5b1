#include "incgamma/inversion.hpp"

#include <cmath>
#include <vector>

#include "incgamma/coeffs.hpp"
#include "incgamma/errors.hpp"
#include "incgamma/expansions.hpp"
#include "incgamma/special.hpp"

namespace incgamma {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double poly_eval(const std::vector<double>& coef, double x) {
    double acc = 0.0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// truncation index over the d-term magnitudes: drop the (near-)vanishing
// odd terms at tau0 ~ 0, then truncate at the numerically least remaining
// term; all terms when the least term is the last one
int truncate_terms(const std::vector<double>& mags) {
    double peak = 0.0;
    for (double m : mags) peak = std::max(peak, m);
    int best = -1;
    for (size_t i = 0; i < mags.size(); ++i) {
        if (mags[i] <= 1e-13 * peak) continue;
        if (best < 0 || mags[i] < mags[best]) best = static_cast<int>(i);
    }
    if (best < 0 || best == static_cast<int>(mags.size()) - 1)
        return static_cast<int>(mags.size());
    return best;
}

// g(tau) = (2/sqrt(pi)) F(tau/sqrt(2)) e^{tau^2/2} = sqrt(2/pi) int_0^tau e^{t^2/2} dt
double tau1_lhs(double tau) {
    return 2.0 / std::sqrt(kPi) * dawson(tau / std::sqrt(2.0)) * std::exp(0.5 * tau * tau);
}

} // namespace

QuantileResult quantile(double a, double q, int N, bool verify) {
    if (!(a > 0.0)) throw DomainError("quantile: need a > 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile: need 0 < q < 1");
    const double tau0 = inv_half_erfc(q);
    const double sa = std::sqrt(a);
    if (!(std::fabs(tau0) < 0.9 * sa))
        throw ValidityError("quantile: |tau0| >= 0.9 sqrt(a), q too extreme for this a");

    std::vector<double> mags;
    double p = 1.0;
    for (int n = 0; n <= kMaxD; ++n) {
        mags.push_back(std::fabs(poly_eval(d_poly_dbl(n), tau0)) * p);
        p /= sa;
    }
    int terms = (N < 0) ? truncate_terms(mags) : N;
    if (terms > kMaxD + 1) throw BudgetError("quantile: series depth limited to n <= 10");

    double x = a + tau0 * sa;
    p = 1.0;
    for (int n = 0; n < terms; ++n) {
        x += poly_eval(d_poly_dbl(n), tau0) * p;
        p /= sa;
    }
    QuantileResult res;
    res.x = x;
    res.tau0 = tau0;
    res.termsUsed = terms;
    // propagate the first neglected x-term through dQ/dx = -x^{a-1}e^{-x}/Gamma(a)
    const double fn = (terms <= kMaxD) ? mags[terms] : mags[kMaxD];
    const double dqdx = std::exp((a - 1.0) * std::log(x) - x - log_gamma(a));
    res.errorEstimate = fn * dqdx;
    if (verify) {
        res.residual = std::fabs(hybrid_q(a, x).value - q);
        res.verified = true;
    }
    return res;
}

double solve_tau1(double a) {
    if (!(a < 0.0)) throw DomainError("solve_tau1: need a < 0");
    if (std::fabs(a - std::round(a)) < 1e-6)
        throw DomainError("solve_tau1: a within 1e-6 of a non-positive integer");
    const double target = cos_pi(-a) / sin_pi(-a); // cot(-pi a)

    // bracket by doubling on the monotone integral form
    double lo, hi;
    if (target >= 0.0) {
        lo = 0.0;
        hi = 1.0;
        while (tau1_lhs(hi) < target) hi *= 2.0;
    } else {
        hi = 0.0;
        lo = -1.0;
        while (tau1_lhs(lo) > target) lo *= 2.0;
    }
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double g = tau1_lhs(t) - target;
        (g > 0.0 ? hi : lo) = t;
        const double deriv = std::sqrt(2.0 / kPi) * std::exp(0.5 * t * t);
        double nt = t - g / deriv;
        if (!(nt > lo && nt < hi)) nt = 0.5 * (lo + hi);
        if (std::fabs(nt - t) <= 1e-15 * (1.0 + std::fabs(nt))) return nt;
        t = nt;
    }
    return t;
}

ZeroResult negative_zero(double a, int N) {
    const double tau1 = solve_tau1(a);
    const double na = -a;
    const double sna = std::sqrt(na);
    if (!(std::fabs(tau1) < 0.9 * sna))
        throw ValidityError("negative_zero: |tau1| >= 0.9 sqrt(-a), a too close to an integer");

    std::vector<double> mags;
    double p = 1.0;
    for (int n = 0; n <= kMaxD; ++n) {
        mags.push_back(std::fabs(dtilde_eval(n, tau1)) * p);
        p /= sna;
    }
    int terms = (N < 0) ? truncate_terms(mags) : N;
    if (terms > kMaxD + 1) throw BudgetError("negative_zero: series depth limited to n <= 10");

    double x = a - tau1 * sna;
    p = 1.0;
    for (int n = 0; n < terms; ++n) {
        x += dtilde_eval(n, tau1) * p;
        p /= sna;
    }
    ZeroResult res;
    res.xMinus = x;
    res.tau1 = tau1;
    res.termsUsed = terms;
    res.errorEstimate = (terms <= kMaxD) ? mags[terms] : mags[kMaxD];
    return res;
}

double thompson_approx(double a) {
    const double tau1 = solve_tau1(a);
    return a - tau1 * std::sqrt(-a) - tau1 * tau1 / 3.0 - 1.0 / 3.0;
}

} // namespace incgamma
