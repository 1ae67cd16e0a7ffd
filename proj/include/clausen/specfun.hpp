#pragma once

#include <complex>
#include <span>
#include <vector>

#include "clausen/numkit.hpp"

namespace clausen::specfun {

using cplx = std::complex<double>;
using numkit::ExtReal;

// theta reduced to [0, 2pi) with a two-part pi so large multiples lose nothing extra
double normalize_angle(double theta);

enum class Cl2Method { automatic, sine_series, expansion, quadrature };

// Cl2(theta) = sum sin(n theta)/n^2
ExtReal cl2(double theta, double tol, Cl2Method method = Cl2Method::automatic);
double cl2(double theta);

// Ls_n(theta) = -int_0^theta ln^{n-1}|2 sin(t/2)| dt, 1 <= n <= 6, 0 <= theta <= 2pi
ExtReal lsn(int n, double theta, double tol = 1e-12);

// principal branch, cut [1, inf); points on the cut are taken from above
cplx li2(cplx z);
// -int_0^1 ln(1 - z t) dt/t by quadrature; independent check path
cplx li2_quadrature(cplx z, double tol = 1e-13);

// Im Li2(r e^{i theta}) via Clausen functions
double li2_im_polar(double r, double theta);

// sum z^{2n+1}/(2n+1)^2, |z| <= 1
cplx chi2(cplx z);

// int_0^x atan(t)/t dt
double ti2(double x);

// sum z^n/(n+a)^s
cplx lerch_phi(cplx z, int s, double a);

// real polylogarithm Li_r(x), r >= 1, |x| <= 1 (x = 1 needs r >= 2)
double polylog(int r, double x);

// -int_0^x ln|cos t| dt
double lobachevsky(double x);

double polygamma(int order, double x);

double legendre_p(int n, double x);

// pFq(num; den; z). |z| = 1 is summed by extrapolation (z = 1) or Levin u (z = -1).
ExtReal pfq_series(std::span<const double> num, std::span<const double> den, double z,
                   double tol = 1e-15);
ExtReal pfq_series(std::initializer_list<double> num, std::initializer_list<double> den,
                   double z, double tol = 1e-15);

// complete elliptic integral of the first kind, modulus k
double elliptic_k_agm(double k);

// I(x,u) = int_0^u (2 sin(t/2))^x dt, 0 < u < 2pi, -1 < x <= 1
double i_xu(double x, double u);

}  // namespace clausen::specfun
