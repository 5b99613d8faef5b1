#ifndef INCGAMMA_BIGFLOAT_HPP
#define INCGAMMA_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "incgamma/rational.hpp"

namespace incgamma {

// Extended-precision real: sign / significand / binary exponent with an
// explicit working precision in bits (>= 160 everywhere we use it; the
// default gives ~58 decimal digits).  Backed by MPFR with round-to-nearest
// on every operation; values are immutable after construction as far as the
// public API is concerned.
class BigFloat {
public:
    static constexpr unsigned kDefaultPrec = 192;

    BigFloat() : BigFloat(0.0, kDefaultPrec) {}
    explicit BigFloat(double x, unsigned prec = kDefaultPrec);
    explicit BigFloat(long x, unsigned prec = kDefaultPrec);
    explicit BigFloat(const BigRational& q, unsigned prec = kDefaultPrec);
    explicit BigFloat(const std::string& dec, unsigned prec = kDefaultPrec);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
    BigFloat with_precision(unsigned prec) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int significant_digits = 25) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigFloat abs(const BigFloat& x);
    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat exp(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat log1p(const BigFloat& x);
    friend BigFloat pow(const BigFloat& x, const BigFloat& y);
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
    friend std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& x);
    friend BigFloat gamma(const BigFloat& x);     // complete Gamma
    friend BigFloat lngamma(const BigFloat& x);   // log |Gamma|, x > 0 use only
    friend BigFloat ldexp2(const BigFloat& x, long e);

    static BigFloat pi(unsigned prec = kDefaultPrec);
    // 2^{-(prec - guard)}: relative tolerance used by iteration stops
    static BigFloat eps(unsigned prec, int guard = 16);

private:
    explicit BigFloat(unsigned prec, std::nullptr_t); // uninitialised value
    mpfr_t v_;
};

} // namespace incgamma

#endif
