#include "incgamma/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace incgamma {

namespace {
inline mpfr_prec_t maxprec(const mpfr_t a, const mpfr_t b) {
    return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}
} // namespace

BigFloat::BigFloat(unsigned prec, std::nullptr_t) { mpfr_init2(v_, prec); }

BigFloat::BigFloat(double x, unsigned prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(long x, unsigned prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& q, unsigned prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& dec, unsigned prec) {
    mpfr_init2(v_, prec);
    mpfr_set_str(v_, dec.c_str(), 10, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(unsigned prec) const {
    BigFloat r(prec, nullptr);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int significant_digits) const {
    std::vector<char> buf(significant_digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
    return std::string(buf.data());
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision(), nullptr);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
        BigFloat r(static_cast<unsigned>(mpfr_get_prec(o.v_)), nullptr);
        mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
        return *this = std::move(r);
    }
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
        BigFloat r(static_cast<unsigned>(mpfr_get_prec(o.v_)), nullptr);
        mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
        return *this = std::move(r);
    }
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
        BigFloat r(static_cast<unsigned>(mpfr_get_prec(o.v_)), nullptr);
        mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
        return *this = std::move(r);
    }
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
        BigFloat r(static_cast<unsigned>(mpfr_get_prec(o.v_)), nullptr);
        mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
        return *this = std::move(r);
    }
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

#define INCGAMMA_BF_UNARY(name, mpfr_fn)                  \
    BigFloat name(const BigFloat& x) {                    \
        BigFloat r(x.precision(), nullptr);               \
        mpfr_fn(r.v_, x.v_, MPFR_RNDN);                   \
        return r;                                         \
    }

INCGAMMA_BF_UNARY(abs, mpfr_abs)
INCGAMMA_BF_UNARY(sqrt, mpfr_sqrt)
INCGAMMA_BF_UNARY(exp, mpfr_exp)
INCGAMMA_BF_UNARY(log, mpfr_log)
INCGAMMA_BF_UNARY(log1p, mpfr_log1p)
INCGAMMA_BF_UNARY(gamma, mpfr_gamma)
INCGAMMA_BF_UNARY(lngamma, mpfr_lngamma)

#undef INCGAMMA_BF_UNARY

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r(static_cast<unsigned>(maxprec(x.v_, y.v_)), nullptr);
    mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(static_cast<unsigned>(maxprec(x.v_, y.v_)), nullptr);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(static_cast<unsigned>(maxprec(x.v_, y.v_)), nullptr);
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& x) {
    BigFloat s(x.precision(), nullptr), c(x.precision(), nullptr);
    mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

BigFloat ldexp2(const BigFloat& x, long e) {
    BigFloat r(x.precision(), nullptr);
    mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(unsigned prec) {
    BigFloat r(prec, nullptr);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::eps(unsigned prec, int guard) {
    return ldexp2(BigFloat(1.0, 64), -static_cast<long>(prec) + guard);
}

} // namespace incgamma
