#ifndef INCGAMMA_RATIONAL_POLY_HPP
#define INCGAMMA_RATIONAL_POLY_HPP

#include <complex>
#include <vector>

#include "incgamma/rational.hpp"

namespace incgamma {

// Dense univariate polynomial with exact rational coefficients,
// coefficient index = power of the formal variable.  The trailing
// (highest-index) coefficient is nonzero unless the polynomial is zero.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(long constant) : coeff_(1, rat(constant)) { normalize(); }
    explicit RationalPoly(const BigRational& constant) : coeff_(1, constant) { normalize(); }
    explicit RationalPoly(std::vector<BigRational> coeffs) : coeff_(std::move(coeffs)) { normalize(); }

    static RationalPoly monomial(const BigRational& c, int power);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }

    const BigRational& coeff(int k) const;      // 0 beyond the degree
    void set_coeff(int k, const BigRational& c);

    RationalPoly derivative() const;

    // true when only exponents with k % 2 == parity carry nonzero coefficients
    bool pure_parity(int parity) const;

    BigRational eval(const BigRational& x) const;
    double eval(double x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::vector<double> coeffs_as_double() const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const BigRational& s);
    RationalPoly& operator/=(const BigRational& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const BigRational& s) { return a *= s; }
    friend RationalPoly operator*(const BigRational& s, RationalPoly a) { return a *= s; }
    friend RationalPoly operator/(RationalPoly a, const BigRational& s) { return a /= s; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeff_ == b.coeff_; }

private:
    void normalize();
    std::vector<BigRational> coeff_;
    static const BigRational zero_;
};

} // namespace incgamma

#endif
