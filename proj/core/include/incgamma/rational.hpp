#ifndef INCGAMMA_RATIONAL_HPP
#define INCGAMMA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace incgamma {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need for the
// coefficient tables.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational rat(long num, long den = 1) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const BigRational& r) { return r.get_d(); }

// Canonical "num/den" rendering used by the coefficient dump format.
// Denominator is always printed, so "0/1" and "24/1" round-trip unambiguously.
inline std::string rat_to_string(const BigRational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline BigRational rat_from_string(const std::string& s) {
    BigRational r(s);
    r.canonicalize();
    return r;
}

} // namespace incgamma

#endif
