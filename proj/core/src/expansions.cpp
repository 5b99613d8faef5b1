#include "incgamma/expansions.hpp"

#include <algorithm>
#include <cmath>

#include "incgamma/coeffs.hpp"
#include "incgamma/errors.hpp"
#include "incgamma/special.hpp"

namespace incgamma {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double v) {
        double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

// lambda - 1 - log(lambda), series-stable near lambda = 1
double lm1mlog(double lambda) {
    const double s = lambda - 1.0;
    if (std::fabs(s) > 0.25) return s - std::log1p(s);
    // sum_{k>=2} (-1)^k s^k / k
    double sk = s * s; // s^k
    KahanSum sum;
    sum.add(sk / 2.0);
    for (int k = 3; k < 80; ++k) {
        sk *= -s;
        double add = sk / k;
        sum.add(add);
        if (std::fabs(add) < 1e-18 * std::fabs(sum.s)) break;
    }
    return sum.value();
}

double odd_factorial2(int n) { // (2n-1)!!, exact product rounded once
    BigInteger v(1);
    for (int j = 3; j <= 2 * n - 1; j += 2) v *= j;
    return v.get_d();
}

double poly_eval(const std::vector<double>& coef, double x) {
    double acc = 0.0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// real value of sum_{k = p mod 2} coef[k] (-1)^{n+(k+n)/2} tau^k:
// with u = -tau^2 this is m_p tau^p sum_j coef[p+2j] u^j
double parity_regrouped_eval(const std::vector<double>& coef, int n, double tau) {
    const int p = n & 1;
    const double mu = -tau * tau;
    double acc = 0.0;
    int top = static_cast<int>(coef.size()) - 1;
    if (top < p) return 0.0;
    while (top > p && ((top - p) & 1)) --top;
    for (int k = top; k >= p; k -= 2) acc = acc * mu + coef[k];
    const int expo = n + (p + n) / 2;
    const double mp = (expo & 1) ? -1.0 : 1.0;
    if (p == 1) acc *= tau;
    return acc * mp;
}

} // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::OuterLower: return "outer-lower";
        case Regime::OuterUpper: return "outer-upper";
        case Regime::OuterNegative: return "outer-negative";
        case Regime::TransitionPoint: return "transition-point";
        case Regime::Transition: return "transition";
        case Regime::Uniform: return "uniform";
        case Regime::Reference: return "reference";
    }
    return "?";
}

int optimal_truncation(std::span<const double> mags) {
    if (mags.empty()) throw DomainError("optimal_truncation: empty sequence");
    // Index of the numerically least term, ties toward the smaller index.
    // The even/odd split of the coefficient polynomials makes the
    // magnitudes zigzag near tau = 0, so a single-step local-minimum test
    // would stop at the first odd-order dip long before the true turning
    // point of the divergent series.
    size_t best = 0;
    for (size_t i = 1; i < mags.size(); ++i)
        if (std::fabs(mags[i]) < std::fabs(mags[best])) best = i;
    return static_cast<int>(best);
}

double eta_from_lambda(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("eta_from_lambda: need lambda > 0");
    const double v = lm1mlog(lambda);
    return (lambda >= 1.0 ? 1.0 : -1.0) * std::sqrt(2.0 * v);
}

double lambda_from_eta(double eta) {
    if (eta == 0.0) return 1.0;
    const double target = 0.5 * eta * eta;
    // bracketed Newton on lambda - 1 - log(lambda) = target, one monotone
    // side per sign of eta
    double lo, hi;
    if (eta > 0.0) {
        lo = 1.0;
        hi = 2.0 + 2.0 * target;
        while (lm1mlog(hi) < target) hi *= 2.0;
    } else {
        hi = 1.0;
        lo = std::exp(-target - 1.0);
        while (lm1mlog(lo) < target) lo *= 0.5;
    }
    double x = 1.0 + eta + eta * eta / 3.0 + eta * eta * eta / 36.0;
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        double g = lm1mlog(x) - target;
        if (eta > 0.0) {
            (g > 0.0 ? hi : lo) = x;
        } else {
            (g > 0.0 ? lo : hi) = x;
        }
        double nx = x - g * x / (x - 1.0);
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
        if (std::fabs(nx - x) <= 1e-16 * std::fabs(x)) return nx;
        x = nx;
    }
    return x;
}

double cn_eta(int n, double eta, double lambda) {
    if (std::fabs(eta) <= 1.2) {
        // Taylor series in eta; convergence radius 2 sqrt(pi)
        std::vector<double> row = f_row_dbl(n, 48);
        KahanSum sum;
        double p = 1.0;
        for (size_t k = 0; k < row.size(); ++k) {
            sum.add(row[k] * p);
            p *= eta;
        }
        return sum.value();
    }
    const double num = cn_lambda_numer(n).eval(lambda);
    const double sgn = (n % 2 == 0) ? -1.0 : 1.0; // (-1)^{n+1}
    return num / std::pow(lambda - 1.0, 2 * n + 1) +
           sgn * odd_factorial2(n) / std::pow(eta, 2 * n + 1);
}

double ctilde_eval(int n, double tau) { return parity_regrouped_eval(c_poly_dbl(n), n, tau); }
double dtilde_eval(int n, double tau) { return parity_regrouped_eval(d_poly_dbl(n), n, tau); }

EvalReport q_transition(double a, double tau, int N) {
    if (!(a > 0.0)) throw DomainError("q_transition: need a > 0");
    if (N < 0) throw DomainError("q_transition: need N >= 0");
    const double sa = std::sqrt(a);
    if (!(a + tau * sa > 0.0))
        throw DomainError("q_transition: z = a + tau sqrt(a) must be positive");

    const double pref = std::exp(-0.5 * tau * tau) / std::sqrt(2.0 * kPi * a);
    const double r = 1.0 / sa;
    KahanSum sum;
    double p = 1.0; // a^{-n/2}
    for (int n = 0; n < N; ++n) {
        sum.add(poly_eval(c_poly_dbl(n), tau) * p);
        p *= r;
    }
    EvalReport rep;
    rep.value = 0.5 * erfc(tau / std::sqrt(2.0)) + pref * sum.value();
    rep.termsUsed = N;
    rep.firstNeglected = std::fabs(poly_eval(c_poly_dbl(N), tau)) * p * pref;
    rep.regime = Regime::Transition;
    rep.errorEstimate = rep.firstNeglected;
    return rep;
}

EvalReport q_uniform(double a, double lambda, int N) {
    if (!(a > 0.0)) throw DomainError("q_uniform: need a > 0");
    if (!(lambda > 0.0)) throw DomainError("q_uniform: need lambda > 0");
    if (N < 0) throw DomainError("q_uniform: need N >= 0");
    const double eta = eta_from_lambda(lambda);
    const double pref = std::exp(-a * lm1mlog(lambda)) / std::sqrt(2.0 * kPi * a);
    KahanSum sum;
    double p = 1.0; // a^{-n}
    for (int n = 0; n < N; ++n) {
        sum.add(cn_eta(n, eta, lambda) * p);
        p /= a;
    }
    EvalReport rep;
    rep.value = 0.5 * erfc(eta * std::sqrt(a / 2.0)) + pref * sum.value();
    rep.termsUsed = N;
    rep.firstNeglected = std::fabs(cn_eta(N, eta, lambda)) * p * pref;
    rep.regime = Regime::Uniform;
    rep.errorEstimate = rep.firstNeglected;
    return rep;
}

namespace {

// shared core of the three outer evaluators:
//   S = sum_{n<N} sgn^n a^n b_n(sl * lambda) / d^{2n+1},  value = log prefactor + log(sign * S)
EvalReport outer_eval(double a, double z, int N, Regime regime) {
    const double lambda = z / a;
    double d, blam, sgn, logpref;
    if (regime == Regime::OuterNegative) {
        d = z + a;
        blam = -lambda;
        sgn = 1.0;
        logpref = -a * std::log(z) - z;
        if (std::fabs(d) <= std::sqrt(a))
            throw ValidityError("outer expansion degenerate: |z + a| <= sqrt(a)");
    } else {
        d = z - a;
        blam = lambda;
        sgn = -1.0;
        logpref = a * std::log(z) - z;
        if (std::fabs(d) <= std::sqrt(a))
            throw ValidityError("outer expansion degenerate: |z - a| <= sqrt(a)");
    }
    const double d2 = d * d;
    KahanSum sum;
    double factor = 1.0 / d; // sgn^n a^n / d^{2n+1}
    for (int n = 0; n < N; ++n) {
        sum.add(b_poly(n).eval(blam) * factor);
        factor *= sgn * a / d2;
    }
    double S = sum.value();
    if (regime == Regime::OuterLower) S = -S; // gamma(a,z) = -z^a e^{-z} S
    const double tN = std::fabs(b_poly(N).eval(blam) * factor);
    if (!(S > 0.0))
        throw ValidityError("outer expansion: truncated series lost positivity");
    EvalReport rep;
    rep.value = logpref + std::log(S);
    rep.termsUsed = N;
    rep.firstNeglected = tN / S; // relative, since value is log-scaled
    rep.regime = regime;
    rep.errorEstimate = rep.firstNeglected;
    return rep;
}

} // namespace

EvalReport gamma_outer_upper(double a, double z, int N) {
    if (!(a > 0.0) || !(z / a > 1.0)) throw DomainError("gamma_outer_upper: need a > 0, z/a > 1");
    if (N < 0) throw DomainError("gamma_outer_upper: need N >= 0");
    return outer_eval(a, z, N, Regime::OuterUpper);
}

EvalReport gamma_outer_lower(double a, double z, int N) {
    if (!(a > 0.0) || !(z > 0.0) || !(z / a < 1.0))
        throw DomainError("gamma_outer_lower: need a > 0, 0 < z/a < 1");
    if (N < 0) throw DomainError("gamma_outer_lower: need N >= 0");
    return outer_eval(a, z, N, Regime::OuterLower);
}

EvalReport gamma_outer_neg(double a, double z, int N) {
    if (!(a > 0.0) || !(z / a > -1.0)) throw DomainError("gamma_outer_neg: need a > 0, z/a > -1");
    if (!(z > 0.0)) throw DomainError("gamma_outer_neg: need z > 0");
    if (N < 0) throw DomainError("gamma_outer_neg: need N >= 0");
    return outer_eval(a, z, N, Regime::OuterNegative);
}

EvalReport gamma_transition_point(double a, double z, int N) {
    if (!(z > 0.0)) throw DomainError("gamma_transition_point: need z > 0");
    if (N < 0) throw DomainError("gamma_transition_point: need N >= 0");
    const double eps = z - a;
    KahanSum se, so;
    double p = 1.0; // z^{-n}
    for (int n = 0; n < N; ++n) {
        se.add(a_poly(2 * n).eval(eps) * p);
        so.add(a_poly(2 * n + 1).eval(eps) * p);
        p /= z;
    }
    const double root = std::sqrt(0.5 * kPi / z);
    const double bracket = root * se.value() - so.value() / z;
    if (!(bracket > 0.0))
        throw ValidityError("gamma_transition_point: truncated series lost positivity");
    EvalReport rep;
    rep.value = a * std::log(z) - z + std::log(bracket);
    rep.termsUsed = N;
    rep.firstNeglected =
        (root * std::fabs(a_poly(2 * N).eval(eps)) + std::fabs(a_poly(2 * N + 1).eval(eps)) / z) *
        p / bracket;
    rep.regime = Regime::TransitionPoint;
    rep.errorEstimate = rep.firstNeglected;
    rep.outsideIntendedUse = std::fabs(eps) > std::pow(z, 0.25);
    return rep;
}

EvalReport gammastar_asym(double a, double x, int N) {
    if (!(a < 0.0)) throw DomainError("gammastar_asym: need a < 0");
    if (N < 0) throw DomainError("gammastar_asym: need N >= 0");
    const double dist = std::fabs(a - std::round(a));
    if (dist < 1e-6) throw DomainError("gammastar_asym: a within 1e-6 of a non-positive integer");
    const double na = -a;
    const double tau = (a - x) / std::sqrt(na);
    const double spa = sin_pi(a), cpa = cos_pi(a);

    KahanSum sum;
    double p = 1.0; // (-a)^{-n/2}
    const double r = 1.0 / std::sqrt(na);
    for (int n = 0; n < N; ++n) {
        sum.add(ctilde_eval(n, tau) * p);
        p *= r;
    }
    const double e = std::exp(0.5 * tau * tau);
    const double bracket = 2.0 * std::sqrt(kPi) * dawson(tau / std::sqrt(2.0)) +
                           std::sqrt(2.0 * kPi / na) * sum.value();
    EvalReport rep;
    rep.value = cpa + spa / kPi * bracket * e;
    rep.termsUsed = N;
    rep.firstNeglected =
        std::fabs(spa / kPi) * std::sqrt(2.0 * kPi / na) * std::fabs(ctilde_eval(N, tau)) * p * e;
    rep.regime = Regime::Transition;
    rep.errorEstimate = rep.firstNeglected;
    return rep;
}

double transition_tau_threshold(double a) { return 0.9 * std::pow(a, 1.0 / 6.0); }

std::vector<double> eq7_term_mags(double a, double tau, int nmax) {
    std::vector<double> out;
    out.reserve(nmax + 1);
    const double pref = std::exp(-0.5 * tau * tau) / std::sqrt(2.0 * kPi * a);
    double p = 1.0;
    const double r = 1.0 / std::sqrt(a);
    for (int n = 0; n <= nmax; ++n) {
        out.push_back(std::fabs(poly_eval(c_poly_dbl(n), tau)) * p * pref);
        p *= r;
    }
    return out;
}

std::vector<double> eq5_term_mags(double a, double lambda, int nmax) {
    std::vector<double> out;
    out.reserve(nmax + 1);
    const double eta = eta_from_lambda(lambda);
    const double pref = std::exp(-a * lm1mlog(lambda)) / std::sqrt(2.0 * kPi * a);
    double p = 1.0;
    for (int n = 0; n <= nmax; ++n) {
        out.push_back(std::fabs(cn_eta(n, eta, lambda)) * p * pref);
        p /= a;
    }
    return out;
}

std::vector<double> eq7_partials(double a, double tau, int nmax) {
    std::vector<double> out;
    out.reserve(nmax + 1);
    const double erfcPart = 0.5 * erfc(tau / std::sqrt(2.0));
    const double pref = std::exp(-0.5 * tau * tau) / std::sqrt(2.0 * kPi * a);
    KahanSum sum;
    double p = 1.0;
    const double r = 1.0 / std::sqrt(a);
    for (int n = 0; n <= nmax; ++n) {
        sum.add(poly_eval(c_poly_dbl(n), tau) * p);
        p *= r;
        out.push_back(erfcPart + pref * sum.value());
    }
    return out;
}

namespace {

// binary64 lower-series / continued-fraction reference (convergent routes)
double q_ref_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 100000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum))
            return 1.0 - std::exp(a * std::log(x) - x - log_gamma(a)) * sum;
    }
    throw ConvergenceError("q_reference: series did not converge");
}

double q_ref_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-17)
            return std::exp(a * std::log(x) - x - log_gamma(a)) * h;
    }
    throw ConvergenceError("q_reference: continued fraction did not converge");
}

} // namespace

double q_reference_double(double a, double x) {
    if (!(a > 0.0)) throw DomainError("q_reference: need a > 0");
    if (!(x >= 0.0)) throw DomainError("q_reference: need x >= 0");
    if (x == 0.0) return 1.0;
    double q = (x < a + 1.0) ? q_ref_series(a, x) : q_ref_cf(a, x);
    return std::clamp(q, 0.0, 1.0);
}

EvalReport hybrid_q(double a, double x) {
    if (!(a > 0.0)) throw DomainError("hybrid_q: need a > 0");
    if (!(x >= 0.0)) throw DomainError("hybrid_q: need x >= 0");
    EvalReport rep;
    if (x == 0.0) {
        rep.value = 1.0;
        rep.regime = Regime::Reference;
        return rep;
    }
    if (a < 5.0) {
        rep.value = q_reference_double(a, x);
        rep.regime = Regime::Reference;
        rep.errorEstimate = 4e-16;
        return rep;
    }
    const double tau = (x - a) / std::sqrt(a);
    if (std::fabs(tau) <= transition_tau_threshold(a)) {
        std::vector<double> mags = eq7_term_mags(a, tau, kMaxC);
        const int nstar = optimal_truncation(mags);
        rep = q_transition(a, tau, nstar);
        rep.value = std::clamp(rep.value, 0.0, 1.0);
        return rep;
    }
    const double lgam = log_gamma(a);
    const int nCap = 48;
    if (tau > 0.0) {
        // term magnitudes of the bare outer series, for optimal truncation
        std::vector<double> mags;
        const double d2 = (x - a) * (x - a);
        double factor = 1.0 / (x - a);
        for (int n = 0; n <= nCap; ++n) {
            mags.push_back(std::fabs(b_poly(n).eval(x / a) * factor));
            factor *= a / d2;
        }
        const int nstar = std::max(1, optimal_truncation(mags));
        EvalReport outer = gamma_outer_upper(a, x, nstar);
        const double q = std::exp(outer.value - lgam);
        rep = outer;
        rep.value = std::clamp(q, 0.0, 1.0);
        rep.firstNeglected = outer.firstNeglected * q;
        rep.errorEstimate = rep.firstNeglected;
        return rep;
    }
    std::vector<double> mags;
    const double d2 = (x - a) * (x - a);
    double factor = 1.0 / (a - x);
    for (int n = 0; n <= nCap; ++n) {
        mags.push_back(std::fabs(b_poly(n).eval(x / a) * factor));
        factor *= a / d2;
    }
    const int nstar = std::max(1, optimal_truncation(mags));
    EvalReport outer = gamma_outer_lower(a, x, nstar);
    const double p = std::exp(outer.value - lgam);
    rep = outer;
    rep.value = std::clamp(1.0 - p, 0.0, 1.0);
    rep.firstNeglected = outer.firstNeglected * p;
    rep.errorEstimate = rep.firstNeglected;
    return rep;
}

} // namespace incgamma
