#include "incgamma/coeffs.hpp"
#include "incgamma/golden_tables.hpp"

#include <deque>
#include <mutex>
#include <sstream>

namespace incgamma {

namespace {

// ---- formal power series helpers (index = power) ----------------------

template <typename T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, int len) {
    std::vector<T> out(len, T(0));
    for (int i = 0; i < static_cast<int>(a.size()) && i < len; ++i)
        for (int j = 0; j < static_cast<int>(b.size()) && i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// exp of a series with zero constant term: E' = g' E
template <typename T>
std::vector<T> series_exp(const std::vector<T>& g, int len) {
    std::vector<T> e(len, T(0));
    e[0] = T(1);
    for (int j = 1; j < len; ++j) {
        T acc(0);
        for (int i = 1; i <= j && i < static_cast<int>(g.size()); ++i)
            acc += g[i] * BigRational(i) * e[j - i];
        e[j] = acc * BigRational(1, j);
    }
    return e;
}

// log of a series with unit constant term: j L_j = j S_j - sum i L_i S_{j-i}
std::vector<BigRational> series_log(const std::vector<BigRational>& s, int len) {
    std::vector<BigRational> l(len, BigRational(0));
    for (int j = 1; j < len; ++j) {
        BigRational acc = (j < static_cast<int>(s.size()) ? s[j] : BigRational(0)) * BigRational(j);
        for (int i = 1; i < j; ++i)
            acc -= l[i] * BigRational(i) * (j - i < static_cast<int>(s.size()) ? s[j - i] : BigRational(0));
        l[j] = acc / BigRational(j);
    }
    return l;
}

// reciprocal of a series with unit constant term
std::vector<BigRational> series_inverse(const std::vector<BigRational>& s, int len) {
    std::vector<BigRational> w(len, BigRational(0));
    w[0] = 1;
    for (int j = 1; j < len; ++j) {
        BigRational acc(0);
        for (int i = 1; i <= j; ++i)
            acc += (i < static_cast<int>(s.size()) ? s[i] : BigRational(0)) * w[j - i];
        w[j] = -acc;
    }
    return w;
}

// square root of a series with unit constant term
std::vector<BigRational> series_sqrt(const std::vector<BigRational>& s, int len) {
    std::vector<BigRational> w(len, BigRational(0));
    w[0] = 1;
    for (int j = 1; j < len; ++j) {
        BigRational acc = j < static_cast<int>(s.size()) ? s[j] : BigRational(0);
        for (int i = 1; i < j; ++i) acc -= w[i] * w[j - i];
        w[j] = acc / BigRational(2);
    }
    return w;
}

// compositional inverse of s(t) = t + a_2 t^2 + ... : returns t(s)
std::vector<BigRational> series_revert(const std::vector<BigRational>& s, int len) {
    std::vector<BigRational> b(len, BigRational(0));
    if (len > 1) b[1] = 1;
    for (int order = 2; order < len; ++order) {
        // compose s with the partial inverse and cancel the s^order residue
        std::vector<BigRational> tp(b.begin(), b.begin() + order); // b_order still 0
        std::vector<BigRational> pw = tp;                          // tp^i
        std::vector<BigRational> comp(order + 1, BigRational(0));
        for (int i = 1; i < static_cast<int>(s.size()) && i <= order; ++i) {
            if (i > 1) pw = series_mul(pw, tp, order + 1);
            for (int j = 0; j <= order && j < static_cast<int>(pw.size()); ++j)
                comp[j] += s[i] * pw[j];
        }
        b[order] = -comp[order];
    }
    return b;
}

mpz_class factorial_z(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class pow_z(long base, int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return p;
}

} // namespace

// ---- SeriesTable -------------------------------------------------------

const BigRational& SeriesTable::at(int k, int n) const {
    if (n < 0 || k < 0 || n >= static_cast<int>(rows_.size()) ||
        k >= static_cast<int>(rows_[n].size())) {
        std::ostringstream os;
        os << "SeriesTable: entry (k=" << k << ", n=" << n
           << ") beyond the generated frontier (base kmax " << base_kmax_ << ")";
        throw BudgetError(os.str());
    }
    return rows_[n][k];
}

// ---- b_n ---------------------------------------------------------------

RationalPoly gen_b(int n) {
    if (n < 0) throw DomainError("gen_b: n must be >= 0");
    RationalPoly b(1);
    const RationalPoly lam = RationalPoly::monomial(1, 1);
    const RationalPoly lam_one_minus = lam - lam * lam; // lambda (1 - lambda)
    for (int k = 1; k <= n; ++k)
        b = lam_one_minus * b.derivative() + BigRational(2 * k - 1) * lam * b;
    return b;
}

// ---- a_n ---------------------------------------------------------------

namespace {

// A_k(eps) with  e^{-eps t(s)} t'(s) = sum_k A_k(eps) s^k,  where
// s = sqrt(2u), u = e^t - t - 1.  The two Watson's-lemma integrals then give
//   a_{2m}   =  A_{2m} (2m)!/(2^m m!),
//   a_{2m+1} = -A_{2m+1} 2^m m!.
std::vector<RationalPoly> gen_a_raw(int nmax) {
    const int len = nmax + 2;
    // 2u/t^2 = sum_j 2 t^j/(j+2)!
    std::vector<BigRational> inner(len, BigRational(0));
    for (int j = 0; j < len; ++j)
        inner[j] = BigRational(2) / BigRational(factorial_z(j + 2));
    std::vector<BigRational> w = series_sqrt(inner, len); // s/t
    std::vector<BigRational> s_of_t(len + 1, BigRational(0));
    for (int i = 1; i <= len; ++i) s_of_t[i] = w[i - 1];
    std::vector<BigRational> t_of_s = series_revert(s_of_t, len + 1);

    std::vector<RationalPoly> dtds(len, RationalPoly(0));
    for (int j = 0; j < len; ++j)
        dtds[j] = RationalPoly(BigRational(j + 1) * t_of_s[j + 1]);

    std::vector<RationalPoly> g(len, RationalPoly(0)); // -eps * t(s)
    for (int j = 1; j < len; ++j)
        g[j] = RationalPoly::monomial(-t_of_s[j], 1);

    std::vector<RationalPoly> e = series_exp(g, len);
    return series_mul(e, dtds, len);
}

} // namespace

RationalPoly gen_a(int n) {
    if (n < 0) throw DomainError("gen_a: n must be >= 0");
    std::vector<RationalPoly> A = gen_a_raw(n);
    const int m = n / 2;
    if (n % 2 == 0)
        return A[n] * (BigRational(factorial_z(n)) / BigRational(pow_z(2, m) * factorial_z(m)));
    return A[n] * BigRational(-pow_z(2, m) * factorial_z(m));
}

// ---- C_n ---------------------------------------------------------------

RationalPoly gen_C(int n) {
    if (n < 0) throw DomainError("gen_C: n must be >= 0");
    RationalPoly prev;
    { // C_0 = (tau^2 - 1)/3
        prev.set_coeff(2, rat(1, 3));
        prev.set_coeff(0, rat(-1, 3));
    }
    for (int m = 1; m <= n; ++m) {
        RationalPoly cur;
        cur.set_coeff(3 * m + 2, BigRational(1) / BigRational(pow_z(3, m + 1) * factorial_z(m + 1)));
        // c_{m,k} = (k+2) c_{m,k+2} + (k+1) c_{m-1,k+1}
        //           - 2k/(k+1) c_{m-1,k-1} + 1/(k+1) c_{m-1,k-3}
        for (int k = 3 * m; k >= 0; --k) {
            BigRational v = BigRational(k + 2) * cur.coeff(k + 2)
                          + BigRational(k + 1) * prev.coeff(k + 1)
                          - BigRational(2 * k, k + 1) * prev.coeff(k - 1)
                          + BigRational(1, k + 1) * prev.coeff(k - 3);
            if (sgn(v) != 0) cur.set_coeff(k, v);
        }
        prev = cur;
    }
    return prev;
}

// ---- P_k ---------------------------------------------------------------

RationalPoly gen_P(int k) {
    if (k < 1) throw DomainError("gen_P: k must be >= 1");
    RationalPoly pm1(1);                                        // P_1
    if (k == 1) return pm1;
    RationalPoly p = RationalPoly::monomial(rat(1, 2), 1);      // P_2
    const RationalPoly tau = RationalPoly::monomial(1, 1);
    for (int j = 3; j <= k; ++j) {
        RationalPoly next = (tau * p + pm1) / BigRational(j);
        pm1 = p;
        p = next;
    }
    return p;
}

// ---- d_n ---------------------------------------------------------------

namespace {

// truncated composition of a polynomial with a series of polynomials
std::vector<RationalPoly> compose_poly_series(const RationalPoly& p,
                                              const std::vector<RationalPoly>& y,
                                              int len) {
    std::vector<RationalPoly> acc(len, RationalPoly(0));
    for (int k = p.degree(); k >= 0; --k) {
        acc = series_mul(acc, y, len);
        acc[0] += RationalPoly(p.coeff(k));
    }
    return acc;
}

std::vector<RationalPoly> gen_d_upto(int nmax) {
    std::vector<RationalPoly> d;
    d.reserve(nmax + 1);
    {
        RationalPoly d0;
        d0.set_coeff(2, rat(1, 3));
        d0.set_coeff(0, rat(-1, 3));
        d.push_back(d0);
    }
    for (int k = 1; k <= nmax; ++k) {
        // Y(x) = tau0 + d_0 x + ... + d_{k-1} x^k
        std::vector<RationalPoly> Y(k + 1, RationalPoly(0));
        Y[0] = RationalPoly::monomial(1, 1);
        for (int j = 1; j <= k; ++j) Y[j] = d[j - 1];

        RationalPoly sum(0);
        for (int n = 0; n <= k; ++n) {
            std::vector<RationalPoly> comp = compose_poly_series(c_poly(n), Y, k - n + 1);
            sum += comp[k - n];
        }

        // W(x) = d_0 + d_1 x + ...; subtract sum_{m>=2} P_m [x^{k+1-m}] W^m
        std::vector<RationalPoly> W(k, RationalPoly(0));
        for (int j = 0; j < k; ++j) W[j] = d[j];
        std::vector<RationalPoly> Wpow = W;
        for (int m = 2; m <= k + 1; ++m) {
            Wpow = series_mul(Wpow, W, k + 2 - m);
            const int idx = k + 1 - m;
            if (idx < static_cast<int>(Wpow.size()))
                sum -= p_poly(m) * Wpow[idx];
        }
        d.push_back(sum);
    }
    return d;
}

} // namespace

RationalPoly gen_d(int n) {
    if (n < 0) throw DomainError("gen_d: n must be >= 0");
    return gen_d_upto(n)[n];
}

// ---- e/f tables ---------------------------------------------------------

namespace {

std::vector<BigRational> gen_e_row0(int kMax) {
    std::vector<BigRational> e(kMax + 1);
    for (int k = 0; k <= kMax; ++k) {
        BigRational v = BigRational((k % 2 == 0) ? -1 : 1, k + 3);
        for (int l = 1; l <= k; ++l)
            v -= BigRational(2 * ((l % 2 == 0) ? 1 : -1), l + 2) * e[k - l];
        for (int l = 1; l <= k; ++l)
            for (int m = 1; m <= l; ++m)
                v -= BigRational((m % 2 == 0) ? 1 : -1, m + 1) * e[k - l] * e[l - m];
        e[k] = v;
    }
    return e;
}

std::vector<BigRational> gen_f_row0(int kMax) {
    std::vector<BigRational> f(kMax + 1);
    f[0] = rat(-1, 3);
    for (int k = 1; k <= kMax; ++k) {
        BigRational v = BigRational(2) * f[k - 1];
        for (int l = 1; l <= k; ++l) v += BigRational(3) * f[l - 1] * f[k - l];
        for (int l = 2; l <= k; ++l) v += f[l - 2] * f[k - l];
        for (int l = 2; l <= k; ++l)
            for (int m = 0; m <= k - l; ++m)
                v += f[l - 2] * f[m] * f[k - l - m];
        f[k] = v / BigRational(-(k + 3));
    }
    return f;
}

void extend_e_row0(std::vector<BigRational>& e, int kMax) {
    const int start = static_cast<int>(e.size());
    e.resize(kMax + 1);
    for (int k = start; k <= kMax; ++k) {
        BigRational v = BigRational((k % 2 == 0) ? -1 : 1, k + 3);
        for (int l = 1; l <= k; ++l)
            v -= BigRational(2 * ((l % 2 == 0) ? 1 : -1), l + 2) * e[k - l];
        for (int l = 1; l <= k; ++l)
            for (int m = 1; m <= l; ++m)
                v -= BigRational((m % 2 == 0) ? 1 : -1, m + 1) * e[k - l] * e[l - m];
        e[k] = v;
    }
}

void extend_f_row0(std::vector<BigRational>& f, int kMax) {
    const int start = static_cast<int>(f.size());
    if (start == 0) {
        f = gen_f_row0(kMax);
        return;
    }
    f.resize(kMax + 1);
    for (int k = start; k <= kMax; ++k) {
        BigRational v = BigRational(2) * f[k - 1];
        for (int l = 1; l <= k; ++l) v += BigRational(3) * f[l - 1] * f[k - l];
        for (int l = 2; l <= k; ++l) v += f[l - 2] * f[k - l];
        for (int l = 2; l <= k; ++l)
            for (int m = 0; m <= k - l; ++m)
                v += f[l - 2] * f[m] * f[k - l - m];
        f[k] = v / BigRational(-(k + 3));
    }
}

} // namespace

// row-0 generation is cubic in the base extent; cap absurd requests
constexpr int kGenerationBudget = 512;

SeriesTable gen_e_table(int kMax, int nMax) {
    if (kMax < 0 || nMax < 0) throw DomainError("gen_e_table: extents must be >= 0");
    if (kMax + 2 * nMax > kGenerationBudget)
        throw BudgetError("gen_e_table: kMax + 2 nMax exceeds the generation budget");
    SeriesTable t;
    t.base_kmax_ = kMax;
    t.rows_.resize(nMax + 1);
    t.rows_[0] = gen_e_row0(kMax);
    for (int n = 1; n <= nMax; ++n) {
        const int km = kMax - 2 * n;
        if (km < 0) continue;
        t.rows_[n].resize(km + 1);
        for (int k = 0; k <= km; ++k)
            t.rows_[n][k] = BigRational(k + 1) * t.rows_[n - 1][k + 1]
                          + BigRational(k + 2) * t.rows_[n - 1][k + 2];
    }
    return t;
}

SeriesTable gen_f_table(int kMax, int nMax) {
    if (kMax < 0 || nMax < 0) throw DomainError("gen_f_table: extents must be >= 0");
    if (kMax + 2 * nMax > kGenerationBudget)
        throw BudgetError("gen_f_table: kMax + 2 nMax exceeds the generation budget");
    SeriesTable t;
    t.base_kmax_ = kMax;
    t.rows_.resize(nMax + 1);
    t.rows_[0] = gen_f_row0(kMax);
    for (int n = 1; n <= nMax; ++n) {
        const int km = kMax - 2 * n;
        if (km < 0) continue;
        const BigRational f1 = t.rows_[n - 1].size() > 1 ? t.rows_[n - 1][1] : BigRational(0);
        t.rows_[n].resize(km + 1);
        for (int k = 0; k <= km; ++k)
            t.rows_[n][k] = BigRational(k + 2) * t.rows_[n - 1][k + 2] - f1 * t.rows_[0][k];
    }
    return t;
}

// ---- Stirling coefficients / Bernoulli numbers -------------------------

BigRational bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli: n must be >= 0");
    static std::mutex mu;
    static std::vector<BigRational> cache{BigRational(1)};
    std::lock_guard<std::mutex> lock(mu);
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        BigRational acc(0);
        for (int j = 0; j < m; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
            acc += BigRational(binom) * cache[j];
        }
        cache.push_back(-acc / BigRational(m + 1));
    }
    return cache[n];
}

// ---- alternative d-recurrence check -------------------------------------

bool check_altdrec(int k) {
    if (k < 1) throw DomainError("check_altdrec: k must be >= 1");
    const RationalPoly tau = RationalPoly::monomial(1, 1);

    std::vector<RationalPoly> taud;   // (tau0, d_0, ..., d_{k-1})
    taud.push_back(tau);
    for (int j = 0; j < k; ++j) taud.push_back(d_poly(j));
    std::vector<RationalPoly> dprime; // (d_0', ..., d_{k-1}')
    for (int j = 0; j < k; ++j) dprime.push_back(d_poly(j).derivative());
    std::vector<RationalPoly> dlist;  // (d_0, ..., d_{k-1}) after tau0 removed
    std::vector<RationalPoly> taudshort(taud.begin(), taud.end() - 1);

    RationalPoly lhs(0);
    for (int m = 2; m <= k + 2; ++m) {
        BigRational c = BigRational((m % 2 == 0) ? 1 : -1, m);
        lhs += c * bell_partial(k + 2, m, taud);
    }
    for (int m = 1; m <= k; ++m) {
        BigRational c = BigRational((m % 2 == 0) ? 1 : -1, m);
        lhs += c * (bell_partial(k, m, dprime) - bell_partial(k, m, taudshort));
    }

    RationalPoly rhs(0);
    if (k % 4 == 2) {
        const int n = (k + 2) / 4;
        rhs = RationalPoly(-bernoulli(2 * n) / BigRational(2 * n * (2 * n - 1)));
    }
    return lhs == rhs;
}

// ---- leading-coefficient check ------------------------------------------

bool check_delta(int k) {
    if (k < 2) throw DomainError("check_delta: k must be >= 2");
    const RationalPoly& dk = d_poly(k - 2);
    if (dk.degree() != k) return false;
    const BigRational lead = dk.coeff(k);
    if (k == 2) return lead == rat(1, 3);

    // (x^2/2)/(e^x - x - 1) = 1 / sum_j 2 x^j/(j+2)!
    const int len = k;
    std::vector<BigRational> denom(len, BigRational(0));
    for (int j = 0; j < len; ++j)
        denom[j] = BigRational(2) / BigRational(factorial_z(j + 2));
    std::vector<BigRational> s = series_inverse(denom, len);
    std::vector<BigRational> l = series_log(s, len);
    for (auto& c : l) c *= BigRational(k, 2);
    std::vector<BigRational> powed = series_exp(l, len);
    BigRational delta = powed[k - 1] / BigRational(k);
    return lead == delta;
}

// ---- Stirling coefficients ----------------------------------------------

namespace {

// Shared caches.  Entries are only ever appended; a single lock guards
// extension and the deque keeps element addresses stable for readers.
class Cache {
public:
    static Cache& instance() {
        static Cache c;
        return c;
    }

    const RationalPoly& get_b(int n) { return get(bs_, n, [](int i) { return gen_b(i); }); }
    const RationalPoly& get_a(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        if (n >= static_cast<int>(as_.size())) {
            std::vector<RationalPoly> raw = gen_a_raw(n);
            for (int i = static_cast<int>(as_.size()); i <= n; ++i) {
                const int m = i / 2;
                if (i % 2 == 0)
                    as_.push_back(raw[i] * (BigRational(factorial_z(i)) /
                                            BigRational(pow_z(2, m) * factorial_z(m))));
                else
                    as_.push_back(raw[i] * BigRational(-pow_z(2, m) * factorial_z(m)));
            }
        }
        return as_[n];
    }
    const RationalPoly& get_C(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        extend_C(n);
        return cs_[n];
    }
    const RationalPoly& get_P(int k) { return get(ps_, k - 1, [](int i) { return gen_P(i + 1); }); }
    const RationalPoly& get_d(int n) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (n < static_cast<int>(ds_.size())) return ds_[n];
        }
        // generate outside the lock: gen_d_upto re-enters the cache for C/P
        std::vector<RationalPoly> all = gen_d_upto(n);
        std::lock_guard<std::mutex> lock(mu_);
        for (int i = static_cast<int>(ds_.size()); i <= n; ++i) ds_.push_back(all[i]);
        return ds_[n];
    }

    const RationalPoly& get_pnum(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        if (pnum_.empty()) pnum_.push_back(RationalPoly(1));
        const RationalPoly lam = RationalPoly::monomial(1, 1);
        const RationalPoly lam1 = lam - RationalPoly(1);
        while (static_cast<int>(pnum_.size()) <= n) {
            const int m = static_cast<int>(pnum_.size());
            const RationalPoly& prev = pnum_[m - 1];
            RationalPoly lam1sq = lam1 * lam1;
            RationalPoly pw(1);
            for (int i = 0; i < m; ++i) pw *= lam1sq;
            RationalPoly next = RationalPoly(gamma_unlocked(m)) * pw
                              + lam * (prev.derivative() * lam1 - BigRational(2 * m - 1) * prev);
            pnum_.push_back(next);
        }
        return pnum_[n];
    }

    BigRational gamma_n(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        return gamma_unlocked(n);
    }

    std::vector<double> f_row(int n, int kNeed) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_f(kNeed, n);
        if (n >= static_cast<int>(frowsDbl_.size())) frowsDbl_.resize(n + 1);
        auto& cached = frowsDbl_[n];
        const auto& row = frows_[n];
        for (size_t k = cached.size(); k < row.size(); ++k) cached.push_back(to_double(row[k]));
        const size_t len = std::min<size_t>(kNeed + 1, cached.size());
        return {cached.begin(), cached.begin() + len};
    }

    BigRational f_entry(int k, int n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_f(k, n);
        return frows_[n][k];
    }

    std::vector<double> c_dbl(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        extend_C(n);
        while (static_cast<int>(cdbl_.size()) <= n)
            cdbl_.push_back(cs_[cdbl_.size()].coeffs_as_double());
        return cdbl_[n];
    }
    std::vector<double> d_dbl(int n) {
        get_d(n);
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(ddbl_.size()) <= n)
            ddbl_.push_back(ds_[ddbl_.size()].coeffs_as_double());
        return ddbl_[n];
    }

private:
    template <typename Gen>
    const RationalPoly& get(std::deque<RationalPoly>& store, int n, Gen gen) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(store.size()) <= n)
            store.push_back(gen(static_cast<int>(store.size())));
        return store[n];
    }

    void extend_C(int n) {
        if (cs_.empty()) {
            RationalPoly c0;
            c0.set_coeff(2, rat(1, 3));
            c0.set_coeff(0, rat(-1, 3));
            cs_.push_back(c0);
        }
        while (static_cast<int>(cs_.size()) <= n) {
            const int m = static_cast<int>(cs_.size());
            const RationalPoly& prev = cs_[m - 1];
            RationalPoly cur;
            cur.set_coeff(3 * m + 2,
                          BigRational(1) / BigRational(pow_z(3, m + 1) * factorial_z(m + 1)));
            for (int k = 3 * m; k >= 0; --k) {
                BigRational v = BigRational(k + 2) * cur.coeff(k + 2)
                              + BigRational(k + 1) * prev.coeff(k + 1)
                              - BigRational(2 * k, k + 1) * prev.coeff(k - 1)
                              + BigRational(1, k + 1) * prev.coeff(k - 3);
                if (sgn(v) != 0) cur.set_coeff(k, v);
            }
            cs_.push_back(cur);
        }
    }

    void ensure_f(int kNeed, int nNeed) {
        const int baseNeed = kNeed + 2 * nNeed;
        if (static_cast<int>(frow0_.size()) <= baseNeed) extend_f_row0(frow0_, baseNeed);
        if (frows_.empty()) frows_.push_back({});
        // mirror row 0
        for (int k = static_cast<int>(frows_[0].size()); k < static_cast<int>(frow0_.size()); ++k)
            frows_[0].push_back(frow0_[k]);
        const int topBase = static_cast<int>(frow0_.size()) - 1;
        for (int n = 1; n <= nNeed; ++n) {
            if (n >= static_cast<int>(frows_.size())) frows_.push_back({});
            const int km = topBase - 2 * n;
            const BigRational f1 = frows_[n - 1].size() > 1 ? frows_[n - 1][1] : BigRational(0);
            for (int k = static_cast<int>(frows_[n].size()); k <= km; ++k)
                frows_[n].push_back(BigRational(k + 2) * frows_[n - 1][k + 2] - f1 * frow0_[k]);
        }
    }

    BigRational gamma_unlocked(int n) {
        if (gammas_.empty()) gammas_.push_back(BigRational(1));
        while (static_cast<int>(gammas_.size()) <= n) {
            const int m = static_cast<int>(gammas_.size());
            ensure_f(1, m - 1);
            gammas_.push_back(-frows_[m - 1][1]);
        }
        return gammas_[n];
    }

    std::mutex mu_;
    std::deque<RationalPoly> bs_, as_, cs_, ps_, ds_, pnum_;
    std::deque<std::vector<double>> cdbl_, ddbl_;
    std::vector<BigRational> frow0_;
    std::deque<std::vector<BigRational>> frows_;
    std::deque<std::vector<double>> frowsDbl_;
    std::vector<BigRational> gammas_;
};

} // namespace

BigRational stirling_gamma(int n) {
    if (n < 0) throw DomainError("stirling_gamma: n must be >= 0");
    return Cache::instance().gamma_n(n);
}

StirlingSeq stirling_seq(int n) {
    StirlingSeq seq;
    seq.reserve(n + 1);
    for (int i = 0; i <= n; ++i) seq.push_back(stirling_gamma(i));
    return seq;
}

const RationalPoly& b_poly(int n) { return Cache::instance().get_b(n); }
const RationalPoly& a_poly(int n) { return Cache::instance().get_a(n); }
const RationalPoly& c_poly(int n) { return Cache::instance().get_C(n); }
const RationalPoly& p_poly(int k) { return Cache::instance().get_P(k); }
const RationalPoly& d_poly(int n) {
    if (n > kMaxD) throw BudgetError("d_poly: generated table depth is n <= 10");
    return Cache::instance().get_d(n);
}
const RationalPoly& cn_lambda_numer(int n) { return Cache::instance().get_pnum(n); }

std::vector<double> c_poly_dbl(int n) { return Cache::instance().c_dbl(n); }
std::vector<double> d_poly_dbl(int n) {
    if (n > kMaxD) throw BudgetError("d_poly_dbl: generated table depth is n <= 10");
    return Cache::instance().d_dbl(n);
}
std::vector<double> f_row_dbl(int n, int kNeed) { return Cache::instance().f_row(n, kNeed); }

// ---- dump format ---------------------------------------------------------

std::string dump_poly_line(char family, int n, const RationalPoly& p) {
    std::ostringstream os;
    os << family << ' ' << n;
    const int deg = std::max(p.degree(), 0);
    for (int k = 0; k <= deg; ++k) os << ' ' << rat_to_string(p.coeff(k));
    return os.str();
}

std::vector<std::string> dump_table_lines(char family, const SeriesTable& t) {
    std::vector<std::string> out;
    for (int n = 0; n <= t.nmax(); ++n) {
        const int km = t.kmax(n);
        for (int k = 0; k <= km; ++k) {
            std::ostringstream os;
            os << family << ' ' << k << ' ' << n << ' ' << rat_to_string(t.at(k, n));
            out.push_back(os.str());
        }
    }
    return out;
}

RationalPoly parse_poly_line(const std::string& line, char& family, int& n) {
    std::istringstream is(line);
    std::string fam;
    if (!(is >> fam >> n) || fam.size() != 1)
        throw DomainError("parse_poly_line: malformed line: " + line);
    family = fam[0];
    std::vector<BigRational> coeffs;
    std::string tok;
    while (is >> tok) coeffs.push_back(rat_from_string(tok));
    return RationalPoly(std::move(coeffs));
}

namespace golden {

RationalPoly poly(char family, int n) {
    if (!((family == 'C' && n >= 0 && n <= kGoldenCMax) ||
          (family == 'd' && n >= 0 && n <= kGoldenDMax)))
        throw DomainError("golden::poly: no tabulated reference for this family/index");
    RationalPoly p;
    std::istringstream is{std::string(kTableText)};
    std::string fam;
    int nn, k;
    std::string frac;
    while (is >> fam >> nn >> k >> frac) {
        if (fam.size() == 1 && fam[0] == family && nn == n)
            p.set_coeff(k, rat_from_string(frac));
    }
    return p;
}

} // namespace golden

} // namespace incgamma
