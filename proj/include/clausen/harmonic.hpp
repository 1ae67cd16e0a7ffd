#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "clausen/numkit.hpp"

namespace clausen::harmonic {

using numkit::BigRational;
using numkit::ExtReal;
using cplx = std::complex<double>;

// H_n^{(r)} = sum_{j<=n} j^{-r}; exact for n <= 64, compensated above
double harm(long n, int r = 1);
BigRational harm_exact(int n, int r = 1);
// same value from the polygamma form
double harm_polygamma(long n, int r = 1);

// S_j(alpha, beta, p, q; r) = sum_n (-1/beta^3)^n H_{pn+q}^{(r)} / (n + 1/alpha)^j
struct SumSpec {
    double alpha = 2.0;
    double beta = 2.0;
    int j = 1;
    int r = 1;
    int p = 1;
    int q = 0;
};

void validate(const SumSpec& s);

ExtReal s_family(const SumSpec& spec, double tol = 1e-16);

// S(2,2) by the Clausen form, the dilog form, the complex-dilog form and the
// Ramanujan-sum route. Values are real; the complex routes check their imaginary residue.
std::vector<double> s22_closed_forms();

// S(2, beta) = 2 beta^{3/2} [Cl2(theta) - 2 acot(beta^{3/2}) ln 2]
double s2beta_closed(double beta);

// sum_k 1/(k(2k-1)) 2F1(1,k;k+1;-1/beta^3), which equals beta^{3/2} Cl2(theta)
ExtReal s2beta_hypergeometric_sum(double beta);

struct Route {
    std::string name;
    ExtReal value;
    bool converged = true;
};

// every integral representation that applies to spec, evaluated by quadrature
std::vector<Route> s_integral_reps(const SumSpec& spec, double tol = 1e-12);

// s(x) = sum (-x)^{n+1/2} H_{2n}/(n+1/2), t(x) likewise with H_{2n+1}
std::pair<cplx, cplx> st_closed(double x);
std::pair<cplx, cplx> st_series(double x);
// t(x) with the dilog difference written as Clausen values
cplx t_clausen(double x);

// H(x) = sum_{k>=1} H_k x^{2k-1}/(2k-1)
double ramanujan_h(double x);
double ramanujan_h_series(double x, int nterms);
// H at (1-x)/(1+x) from the functional equation, 0 < x < 1
double ramanujan_h_functional(double x);
// sum_{k>=0} H_k x^{2k}/(k+1/2) in closed form; complex x allowed
cplx ramanujan_half_sum(cplx x);

// v(z) = (1/2)[Li2((1-z)/2) - Li2((1+z)/2)] + (1/4)[ln^2((1-z)/2) - ln^2((1+z)/2)]
double harris_v(double z);
// Taylor coefficients of vbar(z) = v(z) + 2 z ln 2 = sum_{n>=0} C_n z^{2n+1}
std::vector<double> harris_coefficients(int N);
ExtReal harris_vbar(double z, int N);

// Cl2 from the Legendre-polynomial series truncated after N terms, plus
// the asymptotic tail 1/(N+1) and its leading oscillatory correction
ExtReal cl2_legendre_series(double theta, int N);
double cl2_legendre_partial(double theta, int N);

// Li2(z) from the Legendre expansion of -ln(1-x), N terms
ExtReal li2_legendre_series(double z, int N);

// the two constant sums: sum (1/(2m)+1/(2m+1)) [(1/2)_m/m!]^2 = 2 ln 2 - 1 and
// sum (4n+1)/(2n(2n+1)) (-1)^n (1/2)_n/n! = ln 2 - 1
numkit::SeriesLimit legendre_even_sum();
numkit::SeriesLimit legendre_zero_sum();

// 2 sum_{k<N} a^{k+1}/(k+1) int_0^{1/a} v^{k+1} P_k(av)/(1+v^2) dv
ExtReal cl2_atan_legendre_series(double a, int N);

// a + b*pi or a + b*ln2, exact
struct RationalPair {
    enum class Basis { pi, ln2 };
    BigRational a;
    BigRational b;
    Basis basis;
    double value() const;
};

// int_0^1 v^{k+j} P_k(v)/(1+v^2) dv
RationalPair ik_exact(int j, int k);
// int_0^1 v^m P_k(v) dv
BigRational legendre_moment(int m, int k);

// Cl2(u) from the exponential generating function of log-sine integrals
ExtReal cl2_logsine_series(double u, int N);
ExtReal cl2_elliptic_integral(double u, double tol = 1e-12);

// (int_0^b a/sin a da, int_0^b a/tan a da) from their Bernoulli expansions
std::pair<ExtReal, ExtReal> bernoulli_trig_sums(double b);

}  // namespace clausen::harmonic
