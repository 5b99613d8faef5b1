#ifndef INCGAMMA_EXPANSIONS_HPP
#define INCGAMMA_EXPANSIONS_HPP

#include <span>
#include <string>
#include <vector>

namespace incgamma {

// Which expansion an evaluation actually used.
enum class Regime {
    OuterLower,      // lower incomplete gamma, z/a < 1 away from the diagonal
    OuterUpper,      // upper incomplete gamma, z/a > 1 away from the diagonal
    OuterNegative,   // Gamma(-a, z)
    TransitionPoint, // eps = z - a bounded
    Transition,      // z = a + tau sqrt(a), tau in the transition window
    Uniform,         // eta-based uniform expansion
    Reference,       // direct series/continued-fraction evaluation
};

const char* regime_name(Regime r);

struct EvalReport {
    double value = 0.0;          // Q-type evaluators: the value itself;
                                 // Gamma-type evaluators: log of the value
    int termsUsed = 0;
    double firstNeglected = 0.0; // magnitude of the first omitted term
                                 // (relative to the series sum for log-scaled results)
    Regime regime = Regime::Reference;
    double errorEstimate = 0.0;  // first-neglected-term heuristic
    bool outsideIntendedUse = false;
};

// index of the first local minimum of |terms| (ties toward the smaller
// index); last index when the magnitudes only decrease
int optimal_truncation(std::span<const double> mags);

// eta(lambda) = sign(lambda-1) sqrt(2 (lambda - 1 - log lambda)), the branch
// with eta ~ lambda - 1 near lambda = 1
double eta_from_lambda(double lambda);
double lambda_from_eta(double eta);

// c_n(eta): Taylor series in eta inside |eta| <= 1.2, closed form
//   p_n(lambda)/(lambda-1)^{2n+1} + (-1)^{n+1} (2n-1)!!/eta^{2n+1}
// outside (lambda must correspond to eta)
double cn_eta(int n, double eta, double lambda);

// real value of (-i)^n C_n(i tau) via parity regrouping
double ctilde_eval(int n, double tau);
// real value of (-i)^n d_n(i tau) via parity regrouping
double dtilde_eval(int n, double tau);

// Q(a, a + tau sqrt(a)) by the transition expansion, N series terms
EvalReport q_transition(double a, double tau, int N);

// Q(a, lambda a) by the uniform expansion, N series terms
EvalReport q_uniform(double a, double lambda, int N);

// log Gamma(a,z) / log gamma(a,z) / log Gamma(-a,z) by the outer expansions
EvalReport gamma_outer_upper(double a, double z, int N);
EvalReport gamma_outer_lower(double a, double z, int N);
EvalReport gamma_outer_neg(double a, double z, int N);

// log Gamma(a,z) by the bounded-eps expansion at the transition point
EvalReport gamma_transition_point(double a, double z, int N);

// (-x)^a gamma*(a, x) for a < 0, x = a - tau (-a)^{1/2}
EvalReport gammastar_asym(double a, double x, int N);

// Q(a, x) with automatic regime dispatch and optimal truncation
EvalReport hybrid_q(double a, double x);

// |tau| threshold between the transition and outer regimes
double transition_tau_threshold(double a);

// binary64 reference Q by lower series / upper continued fraction
double q_reference_double(double a, double x);

// term magnitudes (prefactor included) of the two Q expansions; index n
std::vector<double> eq7_term_mags(double a, double tau, int nmax);
std::vector<double> eq5_term_mags(double a, double lambda, int nmax);
// partial sums of the transition expansion through term n (index n)
std::vector<double> eq7_partials(double a, double tau, int nmax);

} // namespace incgamma

#endif
