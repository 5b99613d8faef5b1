#ifndef INCGAMMA_COEFFS_HPP
#define INCGAMMA_COEFFS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "incgamma/errors.hpp"
#include "incgamma/rational.hpp"
#include "incgamma/rational_poly.hpp"

namespace incgamma {

// Two-dimensional table of exact rationals holding the Taylor coefficients
// of the uniform-expansion coefficient functions c_n, indexed (k, n).
// Row 0 is generated directly; each higher row is derived from the one
// below it and loses two k-entries, so entry (k, n) is valid only for
// k <= kmax(0) - 2n.  Published entries are immutable; the table can only
// be extended.
class SeriesTable {
public:
    SeriesTable() = default;

    int base_kmax() const { return base_kmax_; }
    int nmax() const { return static_cast<int>(rows_.size()) - 1; }
    int kmax(int n) const { return base_kmax_ - 2 * n; }

    // throws BudgetError when (k, n) lies beyond the generated frontier
    const BigRational& at(int k, int n) const;

private:
    friend SeriesTable gen_e_table(int, int);
    friend SeriesTable gen_f_table(int, int);
    friend class CoeffCache;

    std::vector<std::vector<BigRational>> rows_; // rows_[n][k]
    int base_kmax_ = -1;
};

// --- polynomial coefficient families ----------------------------------

// b_n(lambda) of the outer expansions:
//   b_0 = 1,  b_k = lambda (1 - lambda) b'_{k-1} + (2k - 1) lambda b_{k-1}.
RationalPoly gen_b(int n);

// a_n(eps) of the transition-point expansion of Gamma(a, z) at eps = z - a,
// built by formal reversion of u = e^t - t - 1 and Watson's-lemma matching.
RationalPoly gen_a(int n);

// C_n(tau) of the transition-region expansion, degree exactly 3n + 2,
// generated top-down in k from the leading coefficients
//   c_{n,3n+2} = 1 / (3^{n+1} (n+1)!),  c_{n,3n+1} = 0.
RationalPoly gen_C(int n);

// P_k(tau0): P_1 = 1, P_2 = tau0/2, k P_k = tau0 P_{k-1} + P_{k-2}.
RationalPoly gen_P(int k);

// d_n(tau0) of the quantile expansion, degree exactly n + 2.
RationalPoly gen_d(int n);

// Taylor tables of c_n: expansions in powers of (lambda - 1) and of eta.
SeriesTable gen_e_table(int kMax, int nMax);
SeriesTable gen_f_table(int kMax, int nMax);

// Stirling coefficients of the reciprocal scaled gamma function,
// 1/Gamma*(a) ~ sum_n gamma_n a^{-n}: gamma_0 = 1, gamma_n = -f_{1,n-1}.
BigRational stirling_gamma(int n);

// the sequence gamma_0 .. gamma_n as a list
using StirlingSeq = std::vector<BigRational>;
StirlingSeq stirling_seq(int n);

// Bernoulli number B_n by the binomial convolution recurrence (B_1 = -1/2).
BigRational bernoulli(int n);

// Partial ordinary Bell polynomial B_{k,m}(alpha_1, ..., alpha_{k-m+1}).
// The scalar type may be BigRational or RationalPoly.
template <typename T>
T bell_partial(int k, int m, const std::vector<T>& alpha) {
    if (m < 0 || k < 0 || m > k)
        throw std::out_of_range("bell_partial: need 0 <= m <= k");
    if (static_cast<int>(alpha.size()) < k - m + 1 && k > 0 && m > 0)
        throw std::out_of_range("bell_partial: alpha list too short");
    // B[j][i], i <= m, built from B_{j,i} = sum_t alpha_t B_{j-t,i-1}
    std::vector<std::vector<T>> B(k + 1, std::vector<T>(m + 1, T(0)));
    B[0][0] = T(1);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= k; ++j) {
            T acc(0);
            int tmax = std::min<int>(j - i + 1, static_cast<int>(alpha.size()));
            for (int t = 1; t <= tmax; ++t)
                acc += alpha[t - 1] * B[j - t][i - 1];
            B[j][i] = acc;
        }
    return B[k][m];
}

// Exact verification of the alternative d-recurrence: the Bell-polynomial
// combination below must collapse to -B_{2n}/(2n(2n-1)) when k = 4n - 2 and
// to zero otherwise.  Pure rational arithmetic, no tolerance.
bool check_altdrec(int k);

// Exact verification of the leading coefficient delta_k of d_{k-2} against
// the closed form  delta_k = [x^{k-1}] ((x^2/2)/(e^x - x - 1))^{k/2} / k
// (k >= 3; delta_2 = 1/3 directly).
bool check_delta(int k);

// --- cached accessors (append-only, safe for concurrent readers) ------

const RationalPoly& b_poly(int n);
const RationalPoly& a_poly(int n);
const RationalPoly& c_poly(int n);
const RationalPoly& p_poly(int k);
const RationalPoly& d_poly(int n);

// numerator polynomial of the rational part of c_n(eta):
//   c_n(eta) = cn_lambda_numer(n)(lambda) / (lambda-1)^{2n+1}
//              + (-1)^{n+1} (2n-1)!! / eta^{2n+1}
const RationalPoly& cn_lambda_numer(int n);

// binary64 coefficient images of the cached polynomials
std::vector<double> c_poly_dbl(int n);
std::vector<double> d_poly_dbl(int n);

// row n of the shared f-table as binary64 values, extended on demand so
// that at least kNeed+1 entries are present
std::vector<double> f_row_dbl(int n, int kNeed);

// depth limit for cached d_n (the generated table depth)
inline constexpr int kMaxD = 10;
// generation cap for cached C_n
inline constexpr int kMaxC = 64;

// --- dump format -------------------------------------------------------

// One polynomial per line: "<family> <n> <c0> <c1> ... <cdeg>" with every
// coefficient rendered num/den in lowest terms.
std::string dump_poly_line(char family, int n, const RationalPoly& p);
// One table entry per line: "<family> <k> <n> <num/den>".
std::vector<std::string> dump_table_lines(char family, const SeriesTable& t);

// Parses a polynomial dump line back into (family, n, polynomial).
RationalPoly parse_poly_line(const std::string& line, char& family, int& n);

} // namespace incgamma

#endif
