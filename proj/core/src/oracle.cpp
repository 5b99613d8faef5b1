#include "incgamma/oracle.hpp"

#include <cmath>

#include "incgamma/errors.hpp"

namespace incgamma {

namespace {

constexpr long kMaxTerms = 1000000;
constexpr int kGuardBits = 48;

// modified-Lentz tiny-value substitution threshold
BigFloat tiny_value(unsigned prec) { return BigFloat("1e-60", prec); }

// sum of the lower series  S = sum_n x^n / (a (a+1) ... (a+n)),
// so that gamma(a,x) = x^a e^{-x} S
BigFloat lower_series_sum(const BigFloat& a, const BigFloat& x, unsigned prec) {
    BigFloat term = BigFloat(1l, prec) / a;
    BigFloat sum = term;
    BigFloat eps = BigFloat::eps(prec);
    for (long n = 1; n <= kMaxTerms; ++n) {
        term *= x / (a + BigFloat(n, prec));
        sum += term;
        if (abs(term) < eps * abs(sum)) return sum;
    }
    throw ConvergenceError("oracle: lower incomplete-gamma series did not converge");
}

// modified-Lentz continued fraction F with Gamma(a,x) = x^a e^{-x} F,
// valid for x > 0 (fast when x > a+1)
BigFloat upper_cf(const BigFloat& a, const BigFloat& x, unsigned prec) {
    const BigFloat tiny = tiny_value(prec);
    const BigFloat eps = BigFloat::eps(prec);
    const BigFloat one(1l, prec);
    BigFloat b = x + one - a;
    BigFloat c = one / tiny;
    BigFloat d = one / b;
    BigFloat h = d;
    for (long i = 1; i <= kMaxTerms; ++i) {
        BigFloat an = BigFloat(-i, prec) * (BigFloat(i, prec) - a);
        b += BigFloat(2l, prec);
        d = an * d + b;
        if (abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (abs(c) < tiny) c = tiny;
        d = one / d;
        BigFloat del = d * c;
        h *= del;
        if (abs(del - one) < eps) return h;
    }
    throw ConvergenceError("oracle: upper incomplete-gamma continued fraction did not converge");
}

BigFloat pow_exp(const BigFloat& x, const BigFloat& a, const BigFloat& minus) {
    // x^a e^{-minus} as exp(a log x - minus); x > 0
    return exp(a * log(x) - minus);
}

// small complex helper on BigFloat, used only by the contour sum
struct CBig {
    BigFloat re, im;
};

CBig cadd(const CBig& a, const CBig& b) { return {a.re + b.re, a.im + b.im}; }
CBig csub(const CBig& a, const CBig& b) { return {a.re - b.re, a.im - b.im}; }
CBig cmul(const CBig& a, const CBig& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CBig cdiv(const CBig& a, const CBig& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
CBig csqrt_principal(const CBig& z, unsigned prec) {
    BigFloat m = hypot(z.re, z.im);
    if (m.sign() == 0) return {BigFloat(0.0, prec), BigFloat(0.0, prec)};
    BigFloat u = sqrt((m + abs(z.re)) / BigFloat(2l, prec));
    if (z.re.sign() >= 0) return {u, z.im / (u + u)};
    BigFloat v = abs(z.im) / (u + u);
    return {v, z.im.sign() >= 0 ? u : -u};
}
// principal log(1 + z) for |z| < 1
CBig clog1p(const CBig& z, unsigned prec) {
    BigFloat one(1l, prec);
    BigFloat re = log1p(z.re + z.re + z.re * z.re + z.im * z.im) / BigFloat(2l, prec);
    BigFloat im = atan2(z.im, one + z.re);
    return {re, im};
}

} // namespace

BigFloat oracle_gamma(const BigFloat& a) { return gamma(a); }

BigFloat oracle_p(const BigFloat& a, const BigFloat& x) {
    if (a.sign() <= 0) throw DomainError("oracle_p: need a > 0");
    if (x.sign() < 0) throw DomainError("oracle_p: need x >= 0");
    const unsigned prec = std::max(a.precision(), x.precision()) + kGuardBits;
    if (x.sign() == 0) return BigFloat(0.0, a.precision());
    BigFloat aw = a.with_precision(prec), xw = x.with_precision(prec);
    BigFloat s = lower_series_sum(aw, xw, prec);
    BigFloat p = pow_exp(xw, aw, xw) * s / gamma(aw);
    return p.with_precision(std::max(a.precision(), x.precision()));
}

BigFloat oracle_q(const BigFloat& a, const BigFloat& x) {
    if (a.sign() <= 0) throw DomainError("oracle_q: need a > 0");
    if (x.sign() < 0) throw DomainError("oracle_q: need x >= 0");
    const unsigned resPrec = std::max(a.precision(), x.precision());
    const unsigned prec = resPrec + kGuardBits;
    if (x.sign() == 0) return BigFloat(1.0, resPrec);
    BigFloat aw = a.with_precision(prec), xw = x.with_precision(prec);
    BigFloat one(1l, prec);
    BigFloat q(0.0, prec);
    if (xw <= aw + one) {
        BigFloat s = lower_series_sum(aw, xw, prec);
        q = one - pow_exp(xw, aw, xw) * s / gamma(aw);
    } else {
        BigFloat f = upper_cf(aw, xw, prec);
        q = pow_exp(xw, aw, xw) * f / gamma(aw);
    }
    return q.with_precision(resPrec);
}

BigFloat oracle_gammastar(const BigFloat& a, const BigFloat& x) {
    const unsigned resPrec = std::max(a.precision(), x.precision());
    // alternating series for x < 0 cancels down from terms of size ~e^{|x|}
    double xd = x.to_double();
    unsigned prec = resPrec + kGuardBits;
    if (xd < 0) prec += static_cast<unsigned>(1.5 * (-xd)) + 32;
    BigFloat aw = a.with_precision(prec), xw = x.with_precision(prec);

    const bool a_integral = a.is_integer();
    auto recip_gamma = [&](long n) -> BigFloat {
        BigFloat arg = aw + BigFloat(n + 1, prec);
        if (a_integral && arg.sign() <= 0 && arg.is_integer()) return BigFloat(0.0, prec);
        return BigFloat(1l, prec) / gamma(arg);
    };

    BigFloat r = recip_gamma(0);
    BigFloat xp(1l, prec);
    BigFloat sum = r;
    BigFloat maxmag = abs(r);
    const BigFloat eps = BigFloat::eps(prec);
    for (long n = 1; n <= kMaxTerms; ++n) {
        BigFloat div = aw + BigFloat(n, prec);
        if (a_integral && div.sign() == 0) {
            r = recip_gamma(n); // restart past the reciprocal-gamma zero
        } else {
            r /= div;
        }
        xp *= xw;
        BigFloat term = xp * r;
        sum += term;
        BigFloat at = abs(term);
        if (at > maxmag) maxmag = at;
        if (n > 8 && static_cast<double>(n) > std::abs(xd) && at < eps * (maxmag + BigFloat(1l, prec)))
            return (exp(-xw) * sum).with_precision(resPrec);
    }
    throw ConvergenceError("oracle_gammastar: series did not converge");
}

BigFloat oracle_gamma_upper(const BigFloat& a, const BigFloat& x) {
    if (x.sign() <= 0) throw DomainError("oracle_gamma_upper: need x > 0");
    const unsigned resPrec = std::max(a.precision(), x.precision());
    if (a.sign() > 0) {
        const unsigned prec = resPrec + kGuardBits;
        BigFloat aw = a.with_precision(prec), xw = x.with_precision(prec);
        BigFloat one(1l, prec);
        BigFloat g(0.0, prec);
        if (xw > aw + one) {
            g = pow_exp(xw, aw, xw) * upper_cf(aw, xw, prec);
        } else {
            BigFloat s = lower_series_sum(aw, xw, prec);
            g = gamma(aw) - pow_exp(xw, aw, xw) * s;
        }
        return g.with_precision(resPrec);
    }
    // downward recurrence Gamma(s-1,x) = (Gamma(s,x) - x^{s-1} e^{-x})/(s-1),
    // started from a shifted index; each step can lose ~log2(x/|s|) bits.
    // For integer a the descent would cross s = 1 with a 0/0 step, so it is
    // seeded at s = 0 with the direct continued fraction instead; for
    // non-integer a it starts from s_top = a + m in [1, 2).
    const double ad = a.to_double(), xd = x.to_double();
    const long m = a.is_integer() ? -static_cast<long>(ad) : static_cast<long>(std::ceil(1.0 - ad));
    const unsigned prec = resPrec + kGuardBits +
        static_cast<unsigned>(static_cast<double>(m + 1) * std::max(1.0, std::log2(std::max(xd, 2.0))));
    BigFloat aw = a.with_precision(prec), xw = x.with_precision(prec);
    BigFloat s = aw + BigFloat(m, prec);
    BigFloat g = pow_exp(xw, s, xw) * upper_cf(s, xw, prec);
    BigFloat p = pow_exp(xw, s - BigFloat(1l, prec), xw); // x^{s-1} e^{-x}
    for (long j = 0; j < m; ++j) {
        BigFloat sm1 = s - BigFloat(1l, prec);
        g = (g - p) / sm1;
        s = sm1;
        p /= xw;
    }
    return g.with_precision(resPrec);
}

BigFloat oracle_c_contour(int n, const BigFloat& lambda, double r, int M) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("oracle_c_contour: need 0 < r < 1");
    if (M < 8) throw DomainError("oracle_c_contour: need M >= 8");
    if (n < 0) throw DomainError("oracle_c_contour: need n >= 0");
    const unsigned resPrec = lambda.precision();
    const unsigned prec = resPrec + kGuardBits;
    BigFloat lam = lambda.with_precision(prec);
    BigFloat one(1l, prec);
    if (!(abs(lam - one) < BigFloat(r, prec)))
        throw DomainError("oracle_c_contour: need |lambda - 1| < r");

    const BigFloat pi = BigFloat::pi(prec);
    const BigFloat rr(r, prec);
    CBig sum{BigFloat(0.0, prec), BigFloat(0.0, prec)};
    for (int m = 1 - M; m <= M; ++m) {
        BigFloat theta = pi * BigFloat(static_cast<long>(m), prec) / BigFloat(static_cast<long>(M), prec);
        auto [sn, cs] = sin_cos(theta);
        CBig w{rr * cs, rr * sn};
        CBig lg = clog1p(w, prec);
        CBig g = csub(lg, w); // log(1+w) - w
        // sqrt(w^2/(w - log(1+w))) with the explicit w^2 keeping it single-valued
        CBig sq = csqrt_principal(cdiv(cmul(w, w), csub(w, lg)), prec);
        CBig den{lam - w.re - one, -w.im}; // lambda - w - 1
        CBig gp{one, BigFloat(0.0, prec)};
        for (int j = 0; j < n; ++j) gp = cmul(gp, g);
        sum = cadd(sum, cdiv(sq, cmul(den, gp)));
    }
    BigFloat half(0.5, prec);
    BigFloat pref = gamma(BigFloat(static_cast<long>(n), prec) + half) /
                    (BigFloat(2l * M, prec) * sqrt(ldexp2(pi, 1)));
    return (pref * sum.re).with_precision(resPrec);
}

} // namespace incgamma
