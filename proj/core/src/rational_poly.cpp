#include "incgamma/rational_poly.hpp"

#include <stdexcept>

namespace incgamma {

const BigRational RationalPoly::zero_ = BigRational(0);

RationalPoly RationalPoly::monomial(const BigRational& c, int power) {
    RationalPoly p;
    if (sgn(c) != 0) {
        p.coeff_.assign(power + 1, BigRational(0));
        p.coeff_[power] = c;
    }
    return p;
}

void RationalPoly::normalize() {
    while (!coeff_.empty() && sgn(coeff_.back()) == 0) coeff_.pop_back();
}

const BigRational& RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeff_.size())) return zero_;
    return coeff_[k];
}

void RationalPoly::set_coeff(int k, const BigRational& c) {
    if (k < 0) throw std::out_of_range("RationalPoly::set_coeff: negative index");
    if (k >= static_cast<int>(coeff_.size())) coeff_.resize(k + 1, BigRational(0));
    coeff_[k] = c;
    normalize();
}

RationalPoly RationalPoly::derivative() const {
    RationalPoly d;
    if (coeff_.size() <= 1) return d;
    d.coeff_.resize(coeff_.size() - 1);
    for (size_t k = 1; k < coeff_.size(); ++k)
        d.coeff_[k - 1] = coeff_[k] * BigRational(static_cast<long>(k));
    d.normalize();
    return d;
}

bool RationalPoly::pure_parity(int parity) const {
    for (size_t k = 0; k < coeff_.size(); ++k)
        if (static_cast<int>(k % 2) != parity && sgn(coeff_[k]) != 0) return false;
    return true;
}

BigRational RationalPoly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

std::complex<double> RationalPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

std::vector<double> RationalPoly::coeffs_as_double() const {
    std::vector<double> out(coeff_.size());
    for (size_t k = 0; k < coeff_.size(); ++k) out[k] = to_double(coeff_[k]);
    return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), BigRational(0));
    for (size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), BigRational(0));
    for (size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (coeff_.empty() || o.coeff_.empty()) {
        coeff_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeff_.size() + o.coeff_.size() - 1, BigRational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (sgn(coeff_[i]) == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j)
            out[i + j] += coeff_[i] * o.coeff_[j];
    }
    coeff_ = std::move(out);
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const BigRational& s) {
    for (auto& c : coeff_) c *= s;
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator/=(const BigRational& s) {
    if (sgn(s) == 0) throw std::invalid_argument("RationalPoly: division by zero scalar");
    for (auto& c : coeff_) c /= s;
    return *this;
}

} // namespace incgamma
