#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "clausen/ctet.hpp"
#include "clausen/harmonic.hpp"
#include "clausen/identities.hpp"
#include "clausen/numkit.hpp"
#include "clausen/quad.hpp"
#include "clausen/specfun.hpp"

namespace clausen::identities {

namespace {

namespace sf = specfun;
namespace hm = harmonic;
namespace ct = ctet;
using cplx = std::complex<double>;
using numkit::Accumulator;

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSeries = 1e-12;
constexpr double kQuad = 1e-9;

double G() { return numkit::constants().catalan; }
double omega() { return numkit::constants().omega; }

// the right side farthest from lhs
Sides worst(double lhs, std::initializer_list<double> rhs) {
    Sides s{lhs, lhs};
    double e = -1.0;
    for (double r : rhs) {
        double d = std::isnan(r) ? INFINITY : std::fabs(lhs - r);
        if (d > e) {
            e = d;
            s.rhs = r;
        }
    }
    return s;
}

Sides worst_c(cplx lhs, cplx rhs) {
    double dr = std::fabs(lhs.real() - rhs.real()), di = std::fabs(lhs.imag() - rhs.imag());
    return dr >= di ? Sides{lhs.real(), rhs.real()} : Sides{lhs.imag(), rhs.imag()};
}

Sides of(const ct::Sides& s) {
    if (std::fabs(s.imag_residue) > 1e-10) throw DomainError("imaginary part did not cancel");
    return {s.lhs, s.rhs};
}

double qts(const quad::Integrand& f, double a, double b) { return quad::qts(f, a, b, 1e-12); }
double qgk(const quad::Integrand& f, double a, double b) { return quad::qgk(f, a, b, 1e-12); }
double qinf(const quad::Integrand& f, double a) {
    auto r = quad::integrate_semi_infinite(f, a, 1e-12);
    if (!r.converged) throw DomainError("semi-infinite quadrature did not converge");
    return r.value;
}

// sum_{n>=n0} term(n) until terms stay below 1e-19 relative
template <class F>
double direct_sum(F term, long n0 = 0, long nmax = 200000) {
    Accumulator acc;
    int small = 0;
    for (long n = n0; n < nmax; ++n) {
        double t = term(n);
        acc.add(t);
        if (std::fabs(t) <= 1e-19 * std::max(1e-300, std::fabs(acc.value()))) {
            if (++small > 3) return acc.value();
        } else {
            small = 0;
        }
    }
    throw DomainError("direct sum did not converge");
}

double pfq(std::initializer_list<double> a, std::initializer_list<double> b, double z) {
    return sf::pfq_series(a, b, z).value;
}

double zeta2k(int k) {
    if (k <= 30) return numkit::zeta_even(2 * k);
    double s = 1.0;
    for (int n = 2; n < 12; ++n) s += std::pow(static_cast<double>(n), -2.0 * k);
    return s;
}

// [(1/2)_m / m!]^2
double central_sq(long m) {
    double l = std::lgamma(m + 0.5) - std::lgamma(0.5) - std::lgamma(m + 1.0);
    return std::exp(2.0 * l);
}

double psi1_third() { return sf::polygamma(1, 1.0 / 3.0); }
double cl2_pi3_digamma() { return (psi1_third() - 2.0 * kPi * kPi / 3.0) / (2.0 * std::sqrt(3.0)); }

Identity make(std::string id, std::string desc, std::string topic, std::vector<Param> params,
              std::vector<Point> fixed, std::function<Sides(const Point&)> eval, double tol,
              int n_random = 0) {
    Identity x;
    x.id = std::move(id);
    x.description = std::move(desc);
    x.paper_ref = std::move(topic);
    x.params = std::move(params);
    x.fixed = std::move(fixed);
    x.eval = std::move(eval);
    x.tolerance = tol;
    x.n_random = n_random;
    return x;
}

// one sample per listed check
Identity cases(std::string id, std::string desc, std::string topic, std::vector<std::function<Sides()>> list,
               double tol) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < list.size(); ++i) pts.push_back({static_cast<double>(i)});
    auto shared = std::make_shared<std::vector<std::function<Sides()>>>(std::move(list));
    return make(std::move(id), std::move(desc), std::move(topic), {}, pts,
                [shared](const Point& p) { return (*shared)[static_cast<std::size_t>(p[0])](); }, tol);
}

Sides route_check(const hm::SumSpec& s, std::initializer_list<const char*> names) {
    double direct = hm::s_family(s).value;
    auto routes = hm::s_integral_reps(s);
    std::vector<double> vals;
    std::string missing;
    for (const char* n : names) {
        auto it = std::find_if(routes.begin(), routes.end(), [n](const hm::Route& r) { return r.name == n; });
        if (it == routes.end() || !it->converged) throw DomainError(std::string("route unavailable: ") + n);
        vals.push_back(it->value.value);
    }
    Sides out{direct, direct};
    double e = -1.0;
    for (double v : vals)
        if (std::fabs(v - direct) > e) {
            e = std::fabs(v - direct);
            out.rhs = v;
        }
    return out;
}

hm::SumSpec spec_of(const Point& p) {
    hm::SumSpec s;
    s.alpha = p[0];
    s.beta = p[1];
    return s;
}

// ------------------------------------------------------------------ groups

void clausen_definitions(std::vector<Identity>& v) {
    const std::vector<Param> th{{"theta", 0.0, 2.0 * kPi}};
    const std::vector<Point> pts{{kPi / 2}, {kPi / 3}, {1.0}, {2.0 * kPi / 3}, {5.0}};
    auto series = [](double t) { return sf::cl2(t, 1e-15, sf::Cl2Method::sine_series).value; };

    v.push_back(make("I-01a", "Cl2 as minus the integral of ln|2 sin(t/2)| equals the sine series",
                     "clausen-definitions", th, pts, [=](const Point& p) {
                         double t = p[0];
                         auto f = [](double x) {
                             double s = std::fabs(2.0 * std::sin(0.5 * x));
                             return s > 0.0 ? std::log(s) : 0.0;
                         };
                         return Sides{-qts(f, 0.0, t), series(t)};
                     },
                     kQuad));
    v.push_back(make("I-01b", "Cl2 as int_0^1 atan(x sin t/(1 - x cos t)) dx/x", "clausen-definitions", th, pts,
                     [=](const Point& p) {
                         double t = p[0], s = std::sin(t), c = std::cos(t);
                         auto f = [=](double x) { return x == 0.0 ? s : std::atan(x * s / (1.0 - x * c)) / x; };
                         return Sides{qgk(f, 0.0, 1.0), series(t)};
                     },
                     kQuad));
    v.push_back(make("I-01c", "Cl2 as -sin t int_0^1 ln x/(x^2 - 2x cos t + 1) dx", "clausen-definitions", th,
                     pts, [=](const Point& p) {
                         double t = p[0], c = std::cos(t);
                         auto f = [=](double x) { return x <= 0.0 ? 0.0 : std::log(x) / (x * x - 2.0 * x * c + 1.0); };
                         return Sides{-std::sin(t) * qts(f, 0.0, 1.0), series(t)};
                     },
                     kQuad));
    v.push_back(make("I-01d", "Cl2 by its Bernoulli expansion equals the accelerated sine series",
                     "clausen-definitions", th, pts, [=](const Point& p) {
                         return Sides{sf::cl2(p[0], 1e-15, sf::Cl2Method::expansion).value, series(p[0])};
                     },
                     kSeries));
    v.push_back(cases("I-01e", "Clausen special values", "clausen-special-values",
                      {[] { return Sides{sf::cl2(kPi / 2), numkit::catalan_alternating()}; },
                       [] { return Sides{sf::cl2(kPi / 3), cl2_pi3_digamma()}; },
                       [] { return Sides{sf::cl2(2 * kPi / 3), 2.0 / 3.0 * sf::cl2(kPi / 3)}; },
                       [] { return Sides{sf::cl2(5 * kPi / 3), -cl2_pi3_digamma()}; },
                       [] {
                           return Sides{sf::cl2(kPi / 2, 1e-14, sf::Cl2Method::quadrature).value,
                                        numkit::catalan_alternating()};
                       }},
                      kSeries));
}

// sum (-1/beta^3)^n/(n+1/2) [1/(n+1/2) - 3(ln 2 + H_n)]
double tetra_general_series(double beta) {
    const double w = -1.0 / (beta * beta * beta);
    double H = 0.0, wn = 1.0;
    return direct_sum([&](long n) {
        if (n > 0) {
            H += 1.0 / n;
            wn *= w;
        }
        double h = n + 0.5;
        return wn / h * (1.0 / h - 3.0 * (kLn2 + H));
    });
}

void tetrahedron(std::vector<Identity>& v) {
    v.push_back(cases("I-02a", "C(1,1): harmonic series equals the Clausen forms", "tetrahedron-series-clausen",
                      {[] { return Sides{ct::ctet_series().value, ct::ctet_clausen().value}; },
                       [] { return Sides{ct::ctet_series().value, ct::ctet_clausen_duplicated()}; },
                       [] {
                           return Sides{static_cast<double>(ct::ctet_series_dd()),
                                        std::strtod(ct::kReference, nullptr)};
                       },
                       [] {
                           double w = omega();
                           return Sides{ct::ctet_series().value,
                                        4.0 * kSqrt2 * (sf::cl2(4.0 * w) - sf::cl2(2.0 * w))};
                       },
                       [] {
                           double a = numkit::constants().alpha;
                           auto c = [](double t) { return sf::cl2(t, 1e-14, sf::Cl2Method::quadrature).value; };
                           return Sides{ct::ctet_series().value, 4.0 * kSqrt2 * (c(4.0 * a) - c(2.0 * a))};
                       }},
                      kSeries));
    v.push_back(make("I-02b", "tetrahedron-type series at general beta from Ti2, atan and S(2,beta)",
                     "tetrahedron-decomposition", {{"beta", 1.2, 6.0}}, {{2.0}, {3.0}}, [](const Point& p) {
                         double b = p[0], x = std::pow(b, -1.5);
                         double rhs = 4.0 * sf::ti2(x) / x - 6.0 * kLn2 * std::atan(x) / x -
                                      3.0 * hm::s2beta_closed(b);
                         return Sides{tetra_general_series(b), rhs};
                     },
                     kSeries));
}

void sum_routes(std::vector<Identity>& v) {
    std::vector<std::function<Sides()>> lst;
    for (int i = 0; i < 4; ++i)
        lst.push_back([i] { return Sides{hm::s_family({}).value, hm::s22_closed_forms().at(i)}; });
    lst.push_back([] { return Sides{hm::s_family({}).value, hm::s2beta_closed(2.0)}; });
    v.push_back(cases("I-03a", "S(2,2) closed forms against the direct sum", "sum-closed-forms", lst, kSeries));

    const std::vector<Param> ab{{"alpha", 1.5, 4.0}, {"beta", 1.3, 5.0}};
    const std::vector<Point> ab_fixed{{2.0, 2.0}, {3.0, 2.0}};
    v.push_back(make("I-03b", "S(alpha,beta) by the hypergeometric kernel and incomplete beta integrals",
                     "sum-routes", ab, ab_fixed,
                     [](const Point& p) { return route_check(spec_of(p), {"hypergeometric kernel", "incomplete beta"}); },
                     kQuad));
    v.push_back(make("I-03c", "S(alpha,beta) by the exponential and log-squared kernels", "sum-routes", ab,
                     ab_fixed,
                     [](const Point& p) { return route_check(spec_of(p), {"exponential kernel", "log-squared kernel"}); },
                     kQuad));
    v.push_back(make("I-03d", "S(alpha,beta) by the free-parameter integral at t = 1 and t = 2",
                     "sum-routes", ab, ab_fixed,
                     [](const Point& p) {
                         return route_check(spec_of(p), {"free parameter t=1", "free parameter t=2"});
                     },
                     kQuad));
    v.push_back(make("I-03e", "S(2,beta) by the sqrt-dilog, Nielsen and Ramanujan routes", "sum-routes",
                     {{"beta", 1.3, 5.0}}, {{2.0}}, [](const Point& p) {
                         return route_check(spec_of({2.0, p[0]}), {"sqrt dilog", "Nielsen", "Ramanujan sum"});
                     },
                     kQuad));
}

void lerch_forms(std::vector<Identity>& v) {
    const std::vector<Param> xs{{"x", 0.05, 1.0}};
    const std::vector<Point> x0{{1.0 / (2.0 * kSqrt2)}};
    auto phi2 = [](double x) { return sf::lerch_phi(cplx(-x * x, 0.0), 2, 0.5).real(); };

    v.push_back(make("I-04a", "Phi(-x^2,2,1/2) in Clausen values of 2 atan x", "lerch-legendre-chi", xs, x0,
                     [=](const Point& p) {
                         double x = p[0], w = std::atan(x);
                         double rhs = 4.0 / x *
                                      (w * std::log(x) + 0.5 * (sf::cl2(2.0 * w) - sf::cl2(2.0 * w + kPi)));
                         return Sides{phi2(x), rhs};
                     },
                     kSeries));
    v.push_back(make("I-04b", "Phi(-x^2,2,1/2) = (4/z) chi2(z) = (2/z)[Li2(z) - Li2(-z)], z = ix",
                     "lerch-legendre-chi", xs, x0, [=](const Point& p) {
                         cplx z(0.0, p[0]);
                         cplx a = 4.0 / z * sf::chi2(z);
                         cplx b = 2.0 / z * (sf::li2(z) - sf::li2(-z));
                         if (std::fabs(a.imag()) > 1e-13 || std::fabs(b.imag()) > 1e-13)
                             throw DomainError("imaginary part did not cancel");
                         return worst(phi2(p[0]), {a.real(), b.real()});
                     },
                     kSeries));
    v.push_back(make("I-04c", "Im Li2(r e^{i theta}) in Clausen values", "dilog-imaginary-part",
                     {{"r", 0.05, 1.0}, {"theta", -kPi, kPi}}, {{0.5, 1.0}, {1.0 / (2.0 * kSqrt2), kPi / 2}},
                     [](const Point& p) {
                         double r = p[0], t = p[1];
                         double w = std::atan(r * std::sin(t) / (1.0 - r * std::cos(t)));
                         double rhs = w * std::log(r) + 0.5 * (sf::cl2(2.0 * w) - sf::cl2(2.0 * w + 2.0 * t) +
                                                               sf::cl2(2.0 * t));
                         return worst(sf::li2(std::polar(r, t)).imag(), {rhs, sf::li2_im_polar(r, t)});
                     },
                     kSeries));
    v.push_back(make("I-04d", "chi2(x) as int_0^x atanh t/t, half the dilog difference, and an integral in x^2",
                     "legendre-chi-integrals", {{"x", 0.05, 0.95}}, {{0.5}}, [](const Point& p) {
                         double x = p[0];
                         double a = qgk([](double t) { return t == 0.0 ? 1.0 : std::atanh(t) / t; }, 0.0, x);
                         double b = 0.5 * (sf::li2(cplx(x, 0)) - sf::li2(cplx(-x, 0))).real();
                         double c = 0.5 * qts([](double u) {
                             double s = std::sqrt(u);
                             return u == 0.0 ? 0.0 : std::atanh(s) / u;
                         }, 0.0, x * x);
                         return worst(a, {b, c, sf::chi2(cplx(x, 0)).real()});
                     },
                     kQuad));
    v.push_back(make("I-04e", "int_0^{-x^2} ln t dt/((1-t) sqrt t) through Phi(.,2,1/2) and Phi(.,1,1/2)",
                     "log-integral-negative-argument", xs, x0, [](const Point& p) {
                         double x = p[0], y = x * x;
                         // t = -y s; the integral becomes i x [A + i pi B]
                         double A = qts([y](double s) {
                             return s <= 0.0 ? 0.0 : std::log(y * s) / ((1.0 + y * s) * std::sqrt(s));
                         }, 0.0, 1.0);
                         double B = qts([y](double s) {
                             return s <= 0.0 ? 0.0 : 1.0 / ((1.0 + y * s) * std::sqrt(s));
                         }, 0.0, 1.0);
                         cplx lhs = cplx(0.0, x) * cplx(A, kPi * B);
                         cplx zz(-y, 0.0);
                         cplx rhs = cplx(0.0, x) * (-sf::lerch_phi(zz, 2, 0.5) +
                                                    cplx(std::log(y), kPi) * sf::lerch_phi(zz, 1, 0.5));
                         return worst_c(lhs, rhs);
                     },
                     kQuad));
}

void subsum(std::vector<Identity>& v) {
    Identity d = make("I-05a", "sum_{n} (-1/8)^n/(n+1/2): stated closed form against 4 sqrt2 omega",
                      "eighth-power-subsum", {{"terms", 10, 60, true}}, {{10}, {15}, {20}, {30}, {40}},
                      [](const Point& p) {
                          Accumulator acc;
                          double wn = 1.0;
                          for (int n = 0; n < static_cast<int>(p[0]); ++n, wn *= -0.125) acc.add(wn / (n + 0.5));
                          return Sides{acc.value(), acc.value()};
                      },
                      kQuad);
    d.policy = Policy::discrepancy;
    d.candidates = [](const Point&) {
        double w = omega();
        return std::vector<Candidate>{{"stated 2(2 sqrt2 omega - 1)", 2.0 * (2.0 * kSqrt2 * w - 1.0)},
                                      {"4 sqrt2 omega", 4.0 * kSqrt2 * w}};
    };
    v.push_back(std::move(d));
    v.push_back(make("I-05b", "Cl2(2 theta)/2 = Cl2(theta) - Cl2(pi - theta)", "clausen-duplication",
                     {{"theta", -2.0 * kPi, 2.0 * kPi}}, {{kPi / 4}, {1.0}, {2.0}}, [](const Point& p) {
                         double t = p[0];
                         return Sides{0.5 * sf::cl2(2.0 * t), sf::cl2(t) - sf::cl2(kPi - t)};
                     },
                     kSeries));
}

void sum_family(std::vector<Identity>& v) {
    const std::vector<Param> ps{{"alpha", 1.5, 4.0}, {"beta", 1.3, 5.0}, {"j", 1, 3, true}, {"r", 1, 3, true}};
    std::vector<Point> grid;
    for (double a : {2.0, 3.0})
        for (double b : {2.0, 3.0})
            for (auto jr : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
                grid.push_back({a, b, double(jr.first), double(jr.second)});
    auto spec4 = [](const Point& p) {
        hm::SumSpec s;
        s.alpha = p[0];
        s.beta = p[1];
        s.j = static_cast<int>(p[2]);
        s.r = static_cast<int>(p[3]);
        return s;
    };
    v.push_back(make("I-06a", "S_j(alpha,beta,r) by the Lerch-kernel integral", "harmonic-sum-family", ps, grid,
                     [=](const Point& p) { return route_check(spec4(p), {"Lerch kernel"}); }, kQuad, 3));
    v.push_back(make("I-06b", "S_1(alpha,beta,r) by the polylog kernel", "harmonic-sum-family",
                     {{"alpha", 1.5, 4.0}, {"beta", 1.3, 5.0}, {"r", 1, 4, true}}, {{2, 2, 1}, {2, -2, 1}, {3, 2, 2}},
                     [=](const Point& p) { return route_check(spec4({p[0], p[1], 1, p[2]}), {"polylog kernel"}); },
                     kQuad));
    v.push_back(make("I-06c", "sums over H_{pn+q} by the hypergeometric kernel", "harmonic-sum-family",
                     {{"alpha", 1.5, 4.0}, {"beta", 1.3, 5.0}, {"p", 1, 3, true}, {"q", 0, 3, true}},
                     {{2, 2, 2, 0}, {2, 2, 1, 1}}, [](const Point& p) {
                         hm::SumSpec s;
                         s.alpha = p[0];
                         s.beta = p[1];
                         s.p = static_cast<int>(p[2]);
                         s.q = static_cast<int>(p[3]);
                         return route_check(s, {"hypergeometric kernel"});
                     },
                     kQuad));
    v.push_back(make("I-06d", "H_n^(r) from polygamma values", "harmonic-polygamma",
                     {{"n", 1, 5000, true}, {"r", 1, 4, true}}, {{1, 1}, {10, 2}, {64, 3}, {1000, 1}},
                     [](const Point& p) {
                         long n = static_cast<long>(p[0]);
                         int r = static_cast<int>(p[1]);
                         double h = hm::harm(n, r);
                         return Sides{hm::harm_polygamma(n, r) / h, 1.0};
                     },
                     kSeries, 2));
    const std::vector<Param> zs{{"z", -0.9, 0.9}};
    const std::vector<Point> z0{{0.5}, {-0.5}};
    v.push_back(make("I-06e", "(1-z) sum H_n z^n = -ln(1-z)", "harmonic-generating-functions", zs, z0,
                     [](const Point& p) {
                         double z = p[0], H = 0.0, zn = 1.0;
                         double s = direct_sum([&](long n) {
                             H += 1.0 / n;
                             zn *= z;
                             return H * zn;
                         }, 1);
                         return Sides{(1.0 - z) * s, -std::log1p(-z)};
                     },
                     kSeries));
    v.push_back(make("I-06f", "sum H_n z^{n+1}/(n+1) = ln^2(1-z)/2", "harmonic-generating-functions", zs, z0,
                     [](const Point& p) {
                         double z = p[0], H = 0.0, zn = z;
                         double s = direct_sum([&](long n) {
                             H += 1.0 / n;
                             zn *= z;
                             return H * zn / (n + 1.0);
                         }, 1);
                         double l = std::log1p(-z);
                         return Sides{s, 0.5 * l * l};
                     },
                     kSeries));
    v.push_back(make("I-06g", "sum H_n^(r) z^n = Li_r(z)/(1-z)", "harmonic-generating-functions",
                     {{"z", -0.9, 0.9}, {"r", 1, 4, true}}, {{0.5, 2}, {-0.5, 3}}, [](const Point& p) {
                         double z = p[0], H = 0.0, zn = 1.0;
                         int r = static_cast<int>(p[1]);
                         double s = direct_sum([&](long n) {
                             H += std::pow(static_cast<double>(n), -r);
                             zn *= z;
                             return H * zn;
                         }, 1);
                         return Sides{s, sf::polylog(r, z) / (1.0 - z)};
                     },
                     kSeries));
}

void half_index(std::vector<Identity>& v) {
    const std::vector<Param> xs{{"x", 0.0, 1.0}};
    const std::vector<Point> x0{{1.0}, {0.125}, {0.5}};
    v.push_back(make("I-07a", "s(x) closed form against its series", "half-index-sums", xs, x0,
                     [](const Point& p) { return worst_c(hm::st_series(p[0]).first, hm::st_closed(p[0]).first); },
                     kSeries));
    v.push_back(make("I-07b", "t(x) closed form against its series", "half-index-sums", xs, x0,
                     [](const Point& p) { return worst_c(hm::st_series(p[0]).second, hm::st_closed(p[0]).second); },
                     kSeries));
    v.push_back(make("I-07c", "t(x) with Clausen values equals the dilog closed form", "half-index-sums", xs, x0,
                     [](const Point& p) { return worst_c(hm::t_clausen(p[0]), hm::st_closed(p[0]).second); },
                     kSeries));
}

void legendre_series(std::vector<Identity>& v) {
    v.push_back(make("I-08a", "Cl2 from 100 terms of its Legendre series with tail corrections",
                     "legendre-clausen-series", {{"theta", 0.3, kPi - 0.1}}, {{kPi / 2}, {kPi / 3}, {1.0}, {2.0}},
                     [](const Point& p) { return Sides{hm::cl2_legendre_series(p[0], 100).value, sf::cl2(p[0])}; },
                     1e-6));
    v.push_back(cases(
        "I-08b", "constant sums over squared central binomial ratios", "legendre-constant-sums",
        {[] { return Sides{hm::legendre_even_sum().value, 2.0 * kLn2 - 1.0}; },
         [] { return Sides{hm::legendre_zero_sum().value, kLn2 - 1.0}; },
         [] {
             auto s = numkit::algebraic_series_limit([](long k) { return central_sq(k + 1) / (2.0L * (k + 1)); }, 1.0);
             return Sides{0.5 * kPi * s.value, kPi * kLn2 - 2.0 * G()};
         },
         [] {
             auto s = numkit::algebraic_series_limit(
                 [](long k) { return central_sq(k + 1) / (2.0L * (k + 1) + 1.0L); }, 1.0);
             return Sides{0.5 * kPi * s.value, 2.0 * G() - 0.5 * kPi};
         },
         [] {
             double f = 0.25 * (0.5 * pfq({1, 1, 1.5, 1.5}, {2, 2, 2}, 1.0) +
                                pfq({1, 1.5, 1.5, 1.5}, {2.5, 2, 2}, 1.0) / 3.0);
             return Sides{f, 2.0 * kLn2 - 1.0};
         }},
        kSeries));
    v.push_back(make("I-08c", "int_{-1}^1 P_{2m}(x)/sqrt(1-x^2) dx = [Gamma(m+1/2)/m!]^2",
                     "legendre-arcsine-moments", {{"m", 0, 12, true}}, {{0}, {1}, {2}, {3}, {6}},
                     [](const Point& p) {
                         int m = static_cast<int>(p[0]);
                         double q = qgk([m](double phi) { return sf::legendre_p(2 * m, std::cos(phi)); }, 0.0, kPi);
                         double g = std::exp(std::lgamma(m + 0.5) - std::lgamma(m + 1.0));
                         return Sides{q, g * g};
                     },
                     kQuad));
    v.push_back(make("I-08d", "P_{2n}(0) = (-1)^n (2n-1)!!/(2^n n!)", "legendre-arcsine-moments",
                     {{"n", 0, 40, true}}, {{0}, {1}, {5}, {20}}, [](const Point& p) {
                         int n = static_cast<int>(p[0]);
                         double r = std::exp(std::lgamma(n + 0.5) - std::lgamma(0.5) - std::lgamma(n + 1.0));
                         return Sides{sf::legendre_p(2 * n, 0.0), (n % 2 ? -r : r)};
                     },
                     kSeries));
    v.push_back(make("I-08e", "Li2 from 150 terms of the Legendre expansion of -ln(1-x)", "legendre-dilog-series",
                     {{"z", -1.0, 0.85}}, {{0.5}, {-1.0}}, [](const Point& p) {
                         return Sides{hm::li2_legendre_series(p[0], 150).value, sf::li2(cplx(p[0], 0)).real()};
                     },
                     1e-5));
    v.push_back(make("I-08f", "sum [(1/2)_k/k!]^2 x^k/(ka+b) as an integral of K", "elliptic-k-sums",
                     {{"x", 0.05, 0.9}, {"a", 1, 3, true}, {"b", 1, 3, true}}, {{0.5, 1, 2}, {0.5, 2, 1}},
                     [](const Point& p) {
                         double x = p[0], a = p[1], b = p[2], e = b / a;
                         double xk = 1.0;
                         double lhs = direct_sum([&](long k) {
                             if (k > 0) xk *= x;
                             return central_sq(k) * xk / (k * a + b);
                         });
                         double in = qts([e](double s) {
                             return s <= 0.0 ? 0.0 : std::pow(s, e - 1.0) * sf::elliptic_k_agm(std::sqrt(s));
                         }, 0.0, x);
                         return Sides{lhs, 2.0 / (kPi * a * std::pow(x, e)) * in};
                     },
                     kQuad));
    v.push_back(make("I-08g", "2K(k)/pi = 2F1(1/2,1/2;1;k^2)", "elliptic-k-sums", {{"k", 0.0, 0.95}},
                     {{0.5}, {1.0 / kSqrt2}}, [](const Point& p) {
                         return Sides{2.0 / kPi * sf::elliptic_k_agm(p[0]), pfq({0.5, 0.5}, {1.0}, p[0] * p[0])};
                     },
                     kSeries));
}

double half_pfq_at_one(int k) {
    int m = k / 2;
    if (k % 2 == 0)
        return std::ldexp(pfq({1.0, m + 1.0, m + 1.5}, {1.5, 2.0 * m + 2.0}, -1.0), -(2 * m + 1));
    return std::ldexp(pfq({1.0, m + 1.5, m + 2.0}, {1.5, 2.0 * m + 3.0}, -1.0), -2 * (m + 1));
}

void legendre_integrals(std::vector<Identity>& v) {
    v.push_back(make("I-09a", "Cl2(2 atan a) from the Legendre-moment series", "legendre-clausen-series",
                     {{"a", 0.2, 3.0}}, {{1.0}, {2.0 * kSqrt2}, {0.5}}, [](const Point& p) {
                         return Sides{hm::cl2_atan_legendre_series(p[0], 60).value, sf::cl2(2.0 * std::atan(p[0]))};
                     },
                     kQuad));
    v.push_back(make("I-09b", "int_a^inf ln((u+a)/(u-a)) du/(1+u^2) = Cl2(2 atan a)", "legendre-clausen-series",
                     {{"a", 0.1, 3.0}}, {{1.0}, {0.7}}, [](const Point& p) {
                         double a = p[0];
                         auto near = quad::tanh_sinh_ends([a](double u, double da, double) {
                             return da <= 0.0 ? 0.0 : (std::log(u + a) - std::log(da)) / (1.0 + u * u);
                         }, a, a + 1.0, 1e-12);
                         if (!near.converged) throw DomainError("quadrature did not converge");
                         double far = qinf([a](double u) {
                             return std::isfinite(u) ? std::log((u + a) / (u - a)) / (1.0 + u * u) : 0.0;
                         },
                                           a + 1.0);
                         return Sides{near.value + far, sf::cl2(2.0 * std::atan(a))};
                     },
                     kQuad));
    v.push_back(make("I-09c", "sum x^{k+1} P_k(x)/(k+1) = atanh x", "atan-legendre-series", {{"x", -0.9, 0.9}},
                     {{0.5}}, [](const Point& p) {
                         double x = p[0], p0 = 1.0, p1 = x, xk = x;
                         Accumulator acc;
                         acc.add(x);
                         for (int k = 1; k < 2000; ++k) {
                             xk *= x;
                             acc.add(xk * p1 / (k + 1.0));
                             double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                             p0 = p1;
                             p1 = p2;
                         }
                         return Sides{acc.value(), std::atanh(x)};
                     },
                     kSeries));
    v.push_back(make("I-09d", "exact rational-plus-pi/ln2 values of int_0^1 v^{k+j} P_k/(1+v^2)",
                     "legendre-rational-integrals", {{"j", 0, 1, true}, {"k", 0, 12, true}},
                     {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 12}, {1, 12}}, [](const Point& p) {
                         int j = static_cast<int>(p[0]), k = static_cast<int>(p[1]);
                         double q = quad::qgk([=](double x) {
                             return std::pow(x, k + j) * sf::legendre_p(k, x) / (1.0 + x * x);
                         }, 0.0, 1.0, 1e-14);
                         return Sides{q, hm::ik_exact(j, k).value()};
                     },
                     kSeries, 4));
    v.push_back(cases(
        "I-09e", "exact initial conditions and int_0^1 v^{k+1} P_k = 2^{-(k+1)}", "legendre-rational-integrals",
        {[] {
             auto r = hm::ik_exact(0, 0);
             return Sides{double(r.a != 0 || r.b != numkit::make_rational(1, 4) ||
                                 r.basis != hm::RationalPair::Basis::pi),
                          0.0};
         },
         [] {
             auto r = hm::ik_exact(0, 1);
             return Sides{double(r.a != 1 || r.b != numkit::make_rational(-1, 4) ||
                                 r.basis != hm::RationalPair::Basis::pi),
                          0.0};
         },
         [] {
             auto r = hm::ik_exact(1, 0);
             return Sides{double(r.a != 0 || r.b != numkit::make_rational(1, 2) ||
                                 r.basis != hm::RationalPair::Basis::ln2),
                          0.0};
         },
         [] {
             auto r = hm::ik_exact(1, 1);
             return Sides{double(r.a != numkit::make_rational(1, 2) || r.b != numkit::make_rational(-1, 2) ||
                                 r.basis != hm::RationalPair::Basis::ln2),
                          0.0};
         },
         [] {
             int bad = 0;
             for (int k = 0; k <= 12; ++k)
                 bad += hm::legendre_moment(k + 1, k) != numkit::make_rational(1, 1L << (k + 1));
             return Sides{double(bad), 0.0};
         }},
        1e-15));
    v.push_back(make("I-09f", "int_0^1 v^{k+1} P_k/(1+v^2) as a 3F2 at -1", "legendre-rational-integrals",
                     {{"k", 0, 11, true}}, {{0}, {1}, {2}, {3}, {4}},
                     [](const Point& p) {
                         int k = static_cast<int>(p[0]);
                         return Sides{half_pfq_at_one(k), hm::ik_exact(1, k).value()};
                     },
                     kSeries, 2));
    v.push_back(make("I-09g", "v^m P_k/(a^2+v^2) moments: K(m+2) + a^2 K(m) = int_0^1 v^m P_k",
                     "legendre-moment-recursion", {{"k", 0, 10, true}, {"m", 0, 6, true}, {"a", 0.3, 3.0}},
                     {{2, 3, 1.0}, {0, 0, 0.5}}, [](const Point& p) {
                         int k = static_cast<int>(p[0]), m = static_cast<int>(p[1]);
                         double a2 = p[2] * p[2];
                         auto K = [=](int e) {
                             return qgk([=](double x) {
                                 return std::pow(x, e) * sf::legendre_p(k, x) / (a2 + x * x);
                             }, 0.0, 1.0);
                         };
                         return Sides{K(m + 2) + a2 * K(m), hm::legendre_moment(m, k).get_d()};
                     },
                     kQuad));
}

double logsine_quadrature(double x, double u) {
    return qts([x](double t) {
        double s = 2.0 * std::sin(0.5 * t);
        return s <= 0.0 ? 0.0 : std::pow(s, x);
    }, 0.0, u);
}

void logsine_generating(std::vector<Identity>& v) {
    v.push_back(make("I-10a", "Cl2(u) from the central-binomial series in cos(u/2)",
                     "clausen-central-binomial-series", {{"u", 0.8, 2.0 * kPi - 0.8}}, {{kPi / 2}, {2.0}, {4.0}},
                     [](const Point& p) { return Sides{hm::cl2_logsine_series(p[0], 400).value, sf::cl2(p[0])}; },
                     kSeries));
    v.push_back(make("I-10b", "Cl2(u) from the elliptic-type integral", "clausen-elliptic-integral",
                     {{"u", 0.1, 2.0 * kPi - 0.1}}, {{kPi / 2}, {kPi / 3}, {5.0}},
                     [](const Point& p) { return Sides{hm::cl2_elliptic_integral(p[0]).value, sf::cl2(p[0])}; },
                     kQuad));
    v.push_back(cases("I-10c", "Catalan and Cl2(pi/3) through the two Clausen representations",
                      "clausen-central-binomial-series",
                      {[] { return Sides{hm::cl2_logsine_series(kPi / 2, 400).value, G()}; },
                       [] { return Sides{cl2_pi3_digamma(), sf::cl2(kPi / 3)}; },
                       [] { return Sides{hm::cl2_elliptic_integral(kPi / 2).value, G()}; },
                       [] { return Sides{hm::cl2_elliptic_integral(kPi / 3).value, cl2_pi3_digamma()}; },
                       [] {
                           return Sides{hm::cl2_logsine_series(2 * kPi / 3, 400).value,
                                        2.0 / 3.0 * cl2_pi3_digamma()};
                       }},
                      kQuad));
    const std::vector<Param> us{{"u", 0.2, 2.0 * kPi - 0.2}};
    v.push_back(make("I-10d", "d I(x,u)/dx at x = 0 equals -Cl2(u), central difference", "logsine-generating-function",
                     us, {{kPi / 2}, {1.0}, {3.0}, {5.0}, {kPi}}, [](const Point& p) {
                         const double h = 1e-4;
                         double d = (sf::i_xu(h, p[0]) - sf::i_xu(-h, p[0])) / (2.0 * h);
                         return Sides{d, -sf::cl2(p[0])};
                     },
                     1e-6, 5));
    v.push_back(make("I-10e", "I(x,u) = int_0^u (2 sin t/2)^x dt in Gamma and 2F1 values",
                     "logsine-generating-function", {{"x", -0.9, 1.0}, {"u", 0.6, 2.0 * kPi - 0.6}},
                     {{0.37, 2.1}, {1.0, kPi}, {-0.5, 1.0}},
                     [](const Point& p) { return Sides{logsine_quadrature(p[0], p[1]), sf::i_xu(p[0], p[1])}; },
                     kQuad));
    v.push_back(make("I-10f", "I(x,u) = -sum x^n/n! Ls_{n+1}(u), six terms at small x",
                     "logsine-generating-function", {{"x", -0.02, 0.02}, {"u", 0.3, 2.0 * kPi - 0.3}},
                     {{0.01, 2.0}}, [](const Point& p) {
                         double x = p[0], u = p[1];
                         Accumulator acc;
                         acc.add(u);  // Ls_1(u) = -u
                         double c = 1.0;
                         for (int n = 1; n <= 5; ++n) {
                             c *= x / n;
                             acc.add(-c * sf::lsn(n + 1, u).value);
                         }
                         return Sides{acc.value(), sf::i_xu(x, u)};
                     },
                     kQuad));
    v.push_back(make("I-10g", "2 sum_{k<j} 1/(2k+1) in digamma, harmonic and integral form", "digamma-half-integer",
                     {{"j", 1, 40, true}}, {{1}, {2}, {5}}, [](const Point& p) {
                         int j = static_cast<int>(p[0]);
                         Accumulator acc;
                         for (int k = 0; k < j; ++k) acc.add(2.0 / (2 * k + 1.0));
                         double d = sf::polygamma(0, j + 0.5) - sf::polygamma(0, 0.5);
                         double h = 2.0 * hm::harm(2 * j - 1) - hm::harm(j - 1);
                         double q = qts([j](double t) {
                             if (t <= 0.0) return 0.0;
                             double g = 0.0, tk = 1.0;  // (t^j - 1)/(t - 1)
                             for (int k = 0; k < j; ++k, tk *= t) g += tk;
                             return g / std::sqrt(t);
                         }, 0.0, 1.0);
                         return worst(acc.value(), {d, h, q});
                     },
                     kQuad, 2));
    v.push_back(make("I-10h", "2 psi(2x) = 2 ln 2 + psi(x) + psi(x + 1/2)", "digamma-half-integer",
                     {{"x", 0.1, 6.0}}, {{0.5}}, [](const Point& p) {
                         double x = p[0];
                         return Sides{2.0 * sf::polygamma(0, 2.0 * x),
                                      2.0 * kLn2 + sf::polygamma(0, x) + sf::polygamma(0, x + 0.5)};
                     },
                     kSeries));
    v.push_back(make("I-10i", "z 2F1(1/2,1/2;3/2;z^2) = asin z", "digamma-half-integer", {{"z", -0.95, 0.95}},
                     {{0.5}}, [](const Point& p) {
                         double z = p[0];
                         return Sides{z * pfq({0.5, 0.5}, {1.5}, z * z), std::asin(z)};
                     },
                     kSeries));
}

void log_trig(std::vector<Identity>& v) {
    v.push_back(make("I-11a", "kappa int_0^u ln(sin kappa x + sin alpha) dx in Clausen values", "log-trig-integrals",
                     {{"kappa", 0.5, 2.0}, {"alpha", 0.1, 1.5}, {"f", 0.0, 1.0}}, {{1.0, 0.5, 1.0}, {2.0, 1.2, 0.7 / 1.2}},
                     [](const Point& p) { return of(ct::sin_shift_log(p[0], p[1], p[2] * p[1])); }, kQuad));
    v.push_back(make("I-11b", "int_0^x ln|cos A - cos kt| dt in Clausen values", "log-trig-integrals",
                     {{"A", 0.1, 3.0}, {"k", 0.5, 2.0}, {"x", 0.1, 3.0}}, {{1.0, 1.0, 2.0}},
                     [](const Point& p) { return of(ct::cos_diff_log(p[0], p[1], p[2])); }, kQuad));
    v.push_back(make("I-11c", "int_0^x ln|sin kt - cosh A| dt in complex Clausen values", "log-trig-integrals",
                     {{"A", 0.1, 2.0}, {"k", 0.2, 2.0}, {"x", 0.1, 2.0}, {"sign", 0, 1, true}}, {{0.5, 1.0, 1.0, 0}},
                     [](const Point& p) {
                         double k = p[3] > 0.5 ? -p[1] : p[1];
                         return of(ct::sin_cosh_log(p[0], k, p[2]));
                     },
                     kQuad));
    const char* names[] = {"a/sin a", "a/tan a", "a^2/sin^2 a", "a^2/tan^2 a"};
    const ct::TrigKernel kinds[] = {ct::TrigKernel::a_over_sin, ct::TrigKernel::a_over_tan,
                                    ct::TrigKernel::a2_over_sin2, ct::TrigKernel::a2_over_tan2};
    const char* sub[] = {"I-11d", "I-11e", "I-11f", "I-11g"};
    for (int i = 0; i < 4; ++i) {
        auto kind = kinds[i];
        v.push_back(make(sub[i], std::string("int_0^b ") + names[i] + " in Clausen values", "trig-kernel-integrals",
                         {{"b", 0.0, 0.75 * kPi}}, {{kPi / 2}, {0.5}, {2.3}},
                         [kind](const Point& p) { return of(ct::trig_kernel(kind, p[0])); }, kQuad));
    }
    v.push_back(make("I-11h", "int_0^b x/(sin x + a) dx in Clausen values", "trig-kernel-integrals",
                     {{"a", -0.95, 0.95}, {"b", 0.1, 3.0}}, {{0.5, 1.0}, {-0.4, 0.3}},
                     [](const Point& p) { return of(ct::x_over_sin_plus(p[0], p[1])); }, kQuad,
                     3));
    v.back().accept = [](const Point& p) { return ct::sin_plus_pole_gap(p[0], p[1]) > 0.05; };
    v.push_back(make("I-11i", "int_0^b x/(sin x + a) dx in dilogarithms", "trig-kernel-integrals",
                     {{"a", -0.95, 0.95}, {"b", 0.1, 3.0}}, {{0.5, 1.0}, {-0.4, 0.3}},
                     [](const Point& p) { return of(ct::x_over_sin_plus_dilog(p[0], p[1])); }, kQuad, 3));
    v.back().accept = [](const Point& p) { return ct::sin_plus_pole_gap(p[0], p[1]) > 0.05; };
    v.push_back(make("I-11j", "int_0^b x/(tan x + a) dx in Clausen values", "trig-kernel-integrals",
                     {{"a", 0.1, 3.0}, {"b", 0.1, 3.0}}, {{0.7, 1.2}, {1.0, 1.0}},
                     [](const Point& p) { return of(ct::x_over_tan_plus(p[0], p[1])); }, kQuad, 3));
    v.back().accept = [](const Point& p) { return p[1] + std::atan(p[0]) < kPi - 0.05; };

    Identity d = make("I-11k", "int_0^b x/(tan x + a) dx: stated right side under its readings",
                      "tan-shift-readings", {{"a", 0.1, 3.0}, {"b", 0.1, 3.0}}, {{0.7, 1.2}, {1.0, 1.0}},
                      [](const Point& p) {
                          auto r = ct::x_over_tan_plus_stated(p[0], p[1]);
                          return Sides{r.quadrature, r.quadrature};
                      },
                      kQuad, 3);
    d.accept = [](const Point& p) { return p[1] + std::atan(p[0]) < kPi - 0.05; };
    d.policy = Policy::discrepancy;
    d.candidates = [](const Point& p) {
        auto r = ct::x_over_tan_plus_stated(p[0], p[1]);
        auto rd = ct::x_over_tan_plus(p[0], p[1]);
        return std::vector<Candidate>{{"stated sum, principal atan", r.sum[0].real()},
                                      {"stated sum, atan in [0,2pi)", r.sum[1].real()},
                                      {"stated product, principal atan", r.product[0].real()},
                                      {"stated product, atan in [0,2pi)", r.product[1].real()},
                                      {"re-derived Clausen form", rd.rhs}};
    };
    v.push_back(std::move(d));

    v.push_back(make("I-11l", "int_0^u ln|sin^2 x - sin^2 alpha| dx in Clausen values", "log-trig-integrals",
                     {{"alpha", 0.1, 1.5}, {"f", 0.0, 1.0}}, {{1.0, 0.5}, {0.5, 1.0}},
                     [](const Point& p) { return of(ct::sin_sq_diff_log(p[0], p[1] * p[0])); }, kQuad));
    v.push_back(make("I-11m", "int_0^b x/sin(x + a) dx by shifting into x/sin x", "trig-kernel-integrals",
                     {{"a", 0.05, 2.0}, {"b", 0.05, 2.0}}, {{0.5, 1.0}}, [](const Point& p) {
                         return of(ct::x_over_sin_shift(p[0], p[1]));
                     },
                     kQuad, 4));
    v.back().accept = [](const Point& p) { return p[0] + p[1] < kPi - 0.05; };
    v.push_back(cases("I-11n", "special values of the trig-kernel integrals", "trig-kernel-integrals",
                      {[] {
                           return Sides{qgk([](double a) { return a == 0.0 ? 1.0 : a / std::sin(a); }, 0.0, kPi / 2),
                                        2.0 * G()};
                       },
                       [] {
                           return Sides{qgk([](double a) { return a == 0.0 ? 1.0 : a / std::tan(a); }, 0.0, kPi / 2),
                                        0.5 * kPi * kLn2};
                       },
                       [] {
                           double s = qgk([](double a) {
                               double t = std::sin(a);
                               return a == 0.0 ? 1.0 : a * a / (t * t);
                           }, 0.0, kPi / 4);
                           return Sides{s, G() - kPi / 16 * (kPi - 4.0 * kLn2)};
                       },
                       [] {
                           double s = qgk([](double a) {
                               double t = std::tan(a);
                               return a == 0.0 ? 1.0 : a * a / (t * t);
                           }, 0.0, kPi / 4);
                           return Sides{s, G() - kPi / 16 * (kPi - 4.0 * kLn2) - kPi * kPi * kPi / 192};
                       },
                       [] {
                           double s = qgk([](double a) { return a == 0.0 ? 1.0 : a / std::tan(a); }, 0.0, 1.0);
                           return Sides{s, std::log(2.0 * std::sin(1.0)) + 0.5 * sf::cl2(2.0)};
                       }},
                      1e-10));
    v.push_back(make("I-11o", "Bernoulli expansions of int a/sin a and int a/tan a", "bernoulli-trig-series",
                     {{"b", 0.1, 3.0}}, {{1.0}, {kPi / 2}}, [](const Point& p) {
                         double b = p[0];
                         auto s = hm::bernoulli_trig_sums(b);
                         double qs = qgk([](double a) { return a == 0.0 ? 1.0 : a / std::sin(a); }, 0.0, b);
                         double qt = qgk([](double a) { return a == 0.0 ? 1.0 : a / std::tan(a); }, 0.0, b);
                         double ds = std::fabs(s.first.value - qs), dt = std::fabs(s.second.value - qt);
                         return ds >= dt ? Sides{s.first.value, qs} : Sides{s.second.value, qt};
                     },
                     kQuad));
    v.push_back(make("I-11p", "2 sum zeta(2k) t^{2k+1}/((2k+1)(2pi)^{2k}) = t - t ln(2 sin t/2) - Cl2(t)",
                     "bernoulli-trig-series", {{"t", 0.1, 5.0}}, {{2.5}, {1.0}}, [](const Point& p) {
                         double t = p[0], q = t / (2.0 * kPi);
                         double qk = t;
                         double s = direct_sum([&](long k) {
                             qk *= q * q;
                             return 2.0 * zeta2k(static_cast<int>(k)) * qk / (2.0 * k + 1.0);
                         }, 1, 2000);
                         return Sides{s, t - t * std::log(2.0 * std::sin(0.5 * t)) - sf::cl2(t)};
                     },
                     kSeries));
}

double lobachevsky_quadrature(double x) {
    auto f = [](double t) {
        double c = std::fabs(std::cos(t));
        return c > 0.0 ? std::log(c) : 0.0;
    };
    double h = 0.5 * kPi;
    if (x <= h) return -qts(f, 0.0, x);
    return -(qts(f, 0.0, h) + qts(f, h, x));
}

void lobachevsky(std::vector<Identity>& v) {
    v.push_back(make("I-12a", "L(x) = -int_0^x ln|cos t| dt against its Clausen form", "lobachevsky",
                     {{"x", 0.1, 3.0}}, {{kPi / 6}, {kPi / 4}}, [](const Point& p) {
                         return Sides{lobachevsky_quadrature(p[0]), sf::lobachevsky(p[0])};
                     },
                     kQuad));
    v.push_back(make("I-12b", "L(pi/2 +- theta) = (pi/2 +- theta) ln 2 +- Cl2(2 theta)/2", "lobachevsky",
                     {{"theta", 0.0, kPi / 2}, {"sign", 0, 1, true}}, {{0.4, 0}, {0.4, 1}}, [](const Point& p) {
                         double s = p[1] > 0.5 ? -1.0 : 1.0, x = kPi / 2 + s * p[0];
                         return Sides{lobachevsky_quadrature(x), x * kLn2 + s * 0.5 * sf::cl2(2.0 * p[0])};
                     },
                     kQuad));
    v.push_back(make("I-12c", "L(x + pi) = L(x) + pi ln 2", "lobachevsky", {{"x", -3.0, 3.0}}, {{0.5}},
                     [](const Point& p) {
                         return Sides{sf::lobachevsky(p[0] + kPi), sf::lobachevsky(p[0]) + kPi * kLn2};
                     },
                     kSeries));
    v.push_back(cases(
        "I-12d", "L at pi/6, pi/4 and pi/2 and the entropy-type combination", "lobachevsky",
        {[] {
             return Sides{sf::lobachevsky(kPi / 6),
                          kPi / 6 * kLn2 - (psi1_third() - 2.0 * kPi * kPi / 3.0) / (6.0 * std::sqrt(3.0))};
         },
         [] {
             return Sides{0.5 * kLn2 - 3.0 / kPi * sf::lobachevsky(kPi / 6),
                          (1.5 / kPi * psi1_third() - kPi) / (3.0 * std::sqrt(3.0))};
         },
         [] { return Sides{kPi / 6 * kLn2 - sf::lobachevsky(kPi / 6), sf::cl2(kPi / 3) / 3.0}; },
         [] { return Sides{sf::lobachevsky(kPi / 2), 0.5 * kPi * kLn2}; },
         [] { return Sides{sf::lobachevsky(kPi / 4), 0.25 * kPi * kLn2 - 0.5 * G()}; }},
        kSeries));
}

void log_ratio(std::vector<Identity>& v) {
    v.push_back(make("I-13a", "int_b^inf ln((u+a)/(u-a)) du/(1+u^2) in Clausen values", "log-ratio-integrals",
                     {{"a", 0.1, 3.0}, {"f", 1.1, 5.0}}, {{1.0, 2.0}, {0.5, 6.0}},
                     [](const Point& p) { return of(ct::log_ratio_tail(p[0], p[0] * p[1])); }, kQuad));
    v.push_back(make("I-13b", "-sin theta int_0^r ln y dy/(1 - 2y cos theta + y^2)", "log-ratio-integrals",
                     {{"theta", 0.1, 3.0}, {"r", 0.1, 5.0}}, {{kPi / 2, 1.0}},
                     [](const Point& p) { return of(ct::log_kernel_clausen(p[0], p[1])); }, kQuad));
    v.push_back(make("I-13c", "the log-ratio integral after u = tan phi, b = 0 allowed", "log-ratio-integrals",
                     {{"a", 0.1, 3.0}, {"b", 0.0, 3.0}}, {{1.0, 0.0}, {0.5, 0.0}, {1.0, 2.0}},
                     [](const Point& p) { return of(ct::log_ratio_angle(p[0], p[1])); }, kQuad, 3));
    v.back().accept = [](const Point& p) { return std::fabs(p[0] - p[1]) > 0.05; };
    v.push_back(make("I-13d", "sum z^n sin(nx)(n ln z - 1)/n^2 = sin x int_0^z ln y dy/(1 - 2y cos x + y^2)",
                     "log-ratio-integrals", {{"z", 0.05, 0.95}, {"x", 0.1, 3.0}}, {{0.6, 1.1}},
                     [](const Point& p) {
                         double z = p[0], x = p[1], lz = std::log(z), zn = 1.0;
                         double s = direct_sum([&](long n) {
                             zn *= z;
                             return zn * std::sin(n * x) * (n * lz - 1.0) / (double(n) * n);
                         }, 1);
                         double c = std::cos(x);
                         double q = qts([c](double y) {
                             return y <= 0.0 ? 0.0 : std::log(y) / (1.0 - 2.0 * y * c + y * y);
                         }, 0.0, z);
                         return Sides{s, std::sin(x) * q};
                     },
                     kQuad));
}

double f32_half(double z) { return pfq({0.5, 0.5, 0.5}, {1.5, 1.5}, z); }

double f32_clausen(double z) {
    double s = std::asin(std::sqrt(z));
    return (sf::cl2(2.0 * s) + 2.0 * s * kLn2 + 0.5 * std::log(z) * (kPi - 2.0 * std::asin(std::sqrt(1.0 - z)))) /
           (2.0 * std::sqrt(z));
}

void pfq_clausen(std::vector<Identity>& v) {
    v.push_back(make("I-14a", "int_0^x asin t/t dt as a 3F2 and in Clausen form", "pfq-clausen",
                     {{"x", 0.05, 1.0}}, {{1.0 / 3}, {1.0 / kSqrt2}, {1.0}},
                     [](const Point& p) { return of(ct::asin_over_t(p[0])); }, kSeries));
    v.push_back(make("I-14b", "3F2(1/2,1/2,1/2;3/2,3/2;z) in Clausen form", "pfq-clausen", {{"z", 0.05, 0.99}},
                     {{0.25}, {0.5}, {0.75}}, [](const Point& p) { return Sides{f32_half(p[0]), f32_clausen(p[0])}; },
                     kSeries));
    v.push_back(make("I-14c", "(k+1)F(k)(1/2,...;3/2,...;z) as log-sine integrals", "pfq-clausen",
                     {{"k", 2, 4, true}, {"z", 0.05, 0.95}}, {{2, 0.25}, {3, 0.5}},
                     [](const Point& p) { return of(ct::half_pfq_logsine(static_cast<int>(p[0]), p[1])); }, kQuad));
    v.push_back(make("I-14d", "3F2(1/2,1/2,1/2;3/2,3/2;z) = int_0^inf x dx/sqrt(e^{2x} - z)", "pfq-clausen",
                     {{"z", 0.05, 1.0}}, {{0.6}, {1.0}}, [](const Point& p) {
                         double z = p[0];
                         double q = qinf([z](double x) {
                             double d = z == 1.0 ? std::expm1(2.0 * x) : std::exp(2.0 * x) - z;
                             return d <= 0.0 ? 0.0 : x / std::sqrt(d);
                         }, 0.0);
                         return Sides{q, f32_half(z)};
                     },
                     kQuad));
    v.push_back(make("I-14e", "Cl2(theta) = -theta ln 2 + 2 int_{-ln sin(theta/2)}^inf x dx/sqrt(e^{2x} - 1)",
                     "pfq-clausen", {{"theta", 0.1, kPi}}, {{1.9}, {kPi / 2}}, [](const Point& p) {
                         double t = p[0];
                         double a = -std::log(std::sin(0.5 * t));
                         double q = qinf([](double x) {
                             double d = std::expm1(2.0 * x);
                             return d <= 0.0 ? 0.0 : x / std::sqrt(d);
                         }, a);
                         return Sides{-t * kLn2 + 2.0 * q, sf::cl2(t)};
                     },
                     kQuad));
    v.push_back(cases("I-14f", "special values of 3F2(1/2,1/2,1/2;3/2,3/2;z)", "pfq-clausen",
                      {[] { return Sides{kSqrt2 * f32_half(0.5) - 0.25 * kPi * kLn2, G()}; },
                       [] { return Sides{f32_half(1.0), 0.5 * kPi * kLn2}; },
                       [] { return Sides{f32_half(0.25), sf::cl2(kPi / 3)}; },
                       [] {
                           double rhs = (sf::cl2(2 * kPi / 3) + 2 * kPi / 3 * kLn2 + std::log(0.75) * kPi / 3) /
                                        std::sqrt(3.0);
                           return Sides{f32_half(0.75), rhs};
                       },
                       [] { return Sides{ct::asin_over_t(1.0).lhs, 0.5 * kPi * kLn2}; }},
                      kSeries));
}

void rajantie(std::vector<Identity>& v) {
    v.push_back(cases("I-15a", "C(1,1) from the one-dimensional log integral and its pieces", "rajantie-integral",
                      {[] { return Sides{ct::ctet_rajantie().value, ct::ctet_clausen().value}; },
                       [] { return Sides{ct::rajantie_split().total, ct::ctet_clausen().value}; },
                       [] {
                           auto s = ct::rajantie_split();
                           return Sides{s.elementary, s.elementary_closed};
                       },
                       [] { return of(ct::j_integral(3.0, std::sqrt(3.0))); },
                       [] { return of(ct::j_integral(2.0, std::sqrt(3.0))); }},
                      kQuad));
    v.push_back(make("I-15b", "J(c,d) = int_0^1 ln(x+c)/sqrt(d^2-x^2) dx in Clausen values", "rajantie-integral",
                     {{"d", 1.05, 3.0}, {"f", 1.05, 3.0}}, {{2.0, 2.5}},
                     [](const Point& p) { return of(ct::j_integral(p[0] * p[1], p[0])); }, kQuad));
}

void three_electron(std::vector<Identity>& v) {
    v.push_back(cases("I-16a", "C(1,1) from the three-electron integral at the symmetric point",
                      "three-electron-integral",
                      {[] { return Sides{ct::ctet_srp().value, ct::ctet_series().value}; },
                       [] { return Sides{ct::ctet_srp_collected(), ct::ctet_series().value}; },
                       [] { return Sides{ct::ctet_srp().value, ct::ctet_clausen().value}; },
                       [] { return Sides{ct::ctet_srp_collected(), ct::ctet_srp().value}; },
                       [] {
                           ct::SrpParameters q;
                           return Sides{ct::srp_integral(q) / (8.0 * kPi * kPi * kPi), ct::ctet_clausen().value};
                       }},
                      1e-11));
    v.push_back(make("I-16b", "vbar(z) from its odd Taylor series", "harris-expansion", {{"z", -0.6, 0.6}},
                     {{0.5}, {-0.3}}, [](const Point& p) {
                         return Sides{hm::harris_vbar(p[0], 60).value, hm::harris_v(p[0]) + 2.0 * p[0] * kLn2};
                     },
                     kSeries));
    v.push_back(cases("I-16c", "leading Taylor coefficients of vbar", "harris-expansion",
                      {[] { return Sides{hm::harris_coefficients(4)[0], 2.0 * kLn2}; },
                       [] { return Sides{hm::harris_coefficients(4)[1], 2.0 / 3.0}; },
                       [] { return Sides{hm::harris_coefficients(4)[2], 8.0 / 15.0}; },
                       [] { return Sides{hm::harris_coefficients(4)[3], 46.0 / 105.0}; },
                       [] { return Sides{hm::harris_vbar(-0.4, 60).value, -hm::harris_vbar(0.4, 60).value}; }},
                      kSeries));
}

void ramanujan(std::vector<Identity>& v) {
    const std::vector<Param> xs{{"x", 0.05, 0.9}};
    v.push_back(make("I-17a", "H(x) = sum H_k x^{2k-1}/(2k-1) in closed form", "ramanujan-h", xs, {{0.5}},
                     [](const Point& p) { return Sides{hm::ramanujan_h_series(p[0], 600), hm::ramanujan_h(p[0])}; },
                     kSeries));
    v.push_back(make("I-17b", "H((1-x)/(1+x)) from the functional equation", "ramanujan-h", {{"x", 0.05, 0.95}},
                     {{0.5}}, [](const Point& p) {
                         double x = p[0];
                         return Sides{hm::ramanujan_h_functional(x), hm::ramanujan_h((1.0 - x) / (1.0 + x))};
                     },
                     kSeries));
    v.push_back(make("I-17c", "H(x) - 2 atanh x - ln(1-x^2)/x = sum H_k x^{2k+1}/(2k+1)", "ramanujan-h", xs,
                     {{0.6}}, [](const Point& p) {
                         double x = p[0], H = 0.0, xk = x;
                         double s = direct_sum([&](long k) {
                             H += 1.0 / k;
                             xk *= x * x;
                             return H * xk / (2.0 * k + 1.0);
                         }, 1);
                         return Sides{hm::ramanujan_h(x) - 2.0 * std::atanh(x) - std::log1p(-x * x) / x, s};
                     },
                     kSeries));
    v.push_back(make("I-17d", "sum H_k x^{2k}/(k+1/2) in closed form", "ramanujan-h", {{"x", -0.9, 0.9}}, {{0.5}},
                     [](const Point& p) {
                         double x = p[0], H = 0.0, xk = 1.0;
                         double s = direct_sum([&](long k) {
                             H += 1.0 / k;
                             xk *= x * x;
                             return H * xk / (k + 0.5);
                         }, 1);
                         return worst_c(cplx(s, 0.0), hm::ramanujan_half_sum(cplx(x, 0.0)));
                     },
                     kSeries, 4));
    v.back().accept = [](const Point& p) { return std::fabs(p[0]) > 0.01; };
    v.push_back(cases("I-17e", "dilog and log values at x = i/(2 sqrt 2)", "ramanujan-h",
                      {[] {
                           cplx x(0.0, 1.0 / (2.0 * kSqrt2));
                           double tp = numkit::constants().theta_plus;
                           return Sides{sf::li2((x - 1.0) / (x + 1.0)).real(),
                                        kPi * kPi / 6 - 0.25 * (kPi * kPi - tp * tp)};
                       },
                       [] {
                           cplx x(0.0, 1.0 / (2.0 * kSqrt2));
                           double tp = numkit::constants().theta_plus;
                           return Sides{sf::li2((x - 1.0) / (x + 1.0)).imag(), sf::cl2(tp + kPi)};
                       },
                       [] {
                           cplx x(0.0, 1.0 / (2.0 * kSqrt2));
                           return worst_c(std::log((1.0 - x) / (1.0 + x)), cplx(0.0, -2.0 * omega()));
                       },
                       [] { return Sides{numkit::constants().theta_plus, -2.0 * omega()}; },
                       [] { return Sides{omega(), std::asin(1.0 / 3.0)}; }},
                      kSeries));
}

void lerch_appendix(std::vector<Identity>& v) {
    v.push_back(make("I-18a", "Phi(z,s,a) = int_0^1 u^{a-1} (-ln u)^{s-1}/(1 - zu) du / Gamma(s)",
                     "lerch-integral-representations", {{"z", -0.9, 0.9}, {"s", 2, 3, true}, {"a", 0.2, 2.0}},
                     {{-0.125, 2, 0.5}, {0.5, 3, 1.0}}, [](const Point& p) {
                         double z = p[0], a = p[2];
                         int s = static_cast<int>(p[1]);
                         double q = qts([=](double u) {
                             return u <= 0.0 || u >= 1.0 ? 0.0
                                                         : std::pow(u, a - 1.0) * std::pow(-std::log(u), s - 1) /
                                                               (1.0 - z * u);
                         }, 0.0, 1.0);
                         return Sides{q / std::tgamma(s), sf::lerch_phi(cplx(z, 0), s, a).real()};
                     },
                     kQuad));
    v.push_back(make("I-18b", "Phi(z,k,a) = a^{-k} (k+1)F(k)(1,a,...;a+1,...;z)", "lerch-integral-representations",
                     {{"z", -0.9, 0.9}, {"k", 1, 3, true}, {"a", 0.2, 2.0}}, {{-0.125, 2, 0.5}},
                     [](const Point& p) {
                         double z = p[0], a = p[2];
                         int k = static_cast<int>(p[1]);
                         std::vector<double> num{1.0}, den;
                         for (int i = 0; i < k; ++i) {
                             num.push_back(a);
                             den.push_back(a + 1.0);
                         }
                         double f = sf::pfq_series(num, den, z).value;
                         return Sides{std::pow(a, -k) * f, sf::lerch_phi(cplx(z, 0), k, a).real()};
                     },
                     kSeries));
    v.push_back(make("I-18c", "3F2(1,1/2,1/2;3/2,3/2;z) = [4 Li2(sqrt z) - Li2(z)]/(4 sqrt z)", "rainville-integral",
                     {{"z", 0.05, 0.95}}, {{0.4}}, [](const Point& p) {
                         double z = p[0], r = std::sqrt(z);
                         double rhs = (4.0 * sf::li2(cplx(r, 0)).real() - sf::li2(cplx(z, 0)).real()) / (4.0 * r);
                         return Sides{pfq({1.0, 0.5, 0.5}, {1.5, 1.5}, z), rhs};
                     },
                     kSeries));
    v.push_back(make("I-18d", "sum z^j/(2j+1)^2 in chi2, Phi, 3F2 and integral form", "lerch-integral-representations",
                     {{"z", 0.05, 0.95}}, {{0.5}}, [](const Point& p) {
                         double z = p[0], r = std::sqrt(z), zj = 1.0;
                         double s = direct_sum([&](long j) {
                             if (j > 0) zj *= z;
                             return zj / ((2.0 * j + 1.0) * (2.0 * j + 1.0));
                         });
                         double a = sf::chi2(cplx(r, 0)).real() / r;
                         double b = 0.25 * sf::lerch_phi(cplx(z, 0), 2, 0.5).real();
                         double c = 0.5 * (pfq({1, 1, 1}, {2, 2}, r) + pfq({1, 1, 1}, {2, 2}, -r));
                         double d = -0.25 * qts([z](double u) {
                             return u <= 0.0 ? 0.0 : std::log(u) / (std::sqrt(u) * (1.0 - z * u));
                         }, 0.0, 1.0);
                         return worst(s, {a, b, c, d});
                     },
                     kQuad));
    v.push_back(make("I-18e", "3F2(1,1/2,alpha;3/2,alpha+beta;ct) as a beta-weighted integral of 2F1(1,1/2;3/2;cx)",
                     "rainville-integral",
                     {{"alpha", 0.3, 2.0}, {"beta", 0.3, 2.0}, {"c", -0.9, 0.9}, {"t", 0.1, 1.0}},
                     {{0.5, 1.0, -0.6, 0.7}, {0.5, 1.0, 0.5, 1.0}}, [](const Point& p) {
                         double al = p[0], be = p[1], c = p[2], t = p[3];
                         auto F = [](double y) {
                             if (std::fabs(y) < 1e-300) return 1.0;
                             double s = std::sqrt(std::fabs(y));
                             return y > 0.0 ? std::atanh(s) / s : std::atan(s) / s;
                         };
                         auto q = quad::tanh_sinh_ends([=](double x, double dx0, double dx1) {
                             if (dx0 <= 0.0 || dx1 <= 0.0) return 0.0;
                             return std::pow(dx0, al - 1.0) * std::pow(dx1, be - 1.0) * F(c * x);
                         }, 0.0, t, 1e-12);
                         if (!q.converged) throw DomainError("quadrature did not converge");
                         double B = std::exp(std::lgamma(al) + std::lgamma(be) - std::lgamma(al + be));
                         double rhs = std::pow(t, 1.0 - al - be) / B * q.value;
                         return Sides{pfq({1.0, 0.5, al}, {1.5, al + be}, c * t), rhs};
                     },
                     kQuad));
    v.push_back(make("I-18f", "int_0^1 ln x ln(1 - z x^2) dx in atanh and Phi(z,2,3/2)", "log-dilog-generalization",
                     {{"z", 0.05, 0.95}}, {{0.6}}, [](const Point& p) {
                         double z = p[0], r = std::sqrt(z);
                         double q = qts([z](double x) {
                             return x <= 0.0 ? 0.0 : std::log(x) * std::log1p(-z * x * x);
                         }, 0.0, 1.0);
                         double p32 = sf::lerch_phi(cplx(z, 0), 2, 1.5).real();
                         double p12 = (sf::lerch_phi(cplx(z, 0), 2, 0.5).real() - 4.0) / z;
                         double base = 2.0 - 2.0 / r * std::atanh(r) - std::log1p(-z);
                         return worst(q, {base - 0.5 * z * p32, base - 0.5 * z * p12});
                     },
                     kQuad));
    v.push_back(make("I-18g", "Ti2(y) = -i chi2(iy) = int_0^y atan t/t dt", "lerch-integral-representations",
                     {{"y", -1.0, 1.0}}, {{0.5}, {1.0}}, [](const Point& p) {
                         double y = p[0];
                         double c = (cplx(0, -1) * sf::chi2(cplx(0, y))).real();
                         double q = qgk([](double t) { return t == 0.0 ? 1.0 : std::atan(t) / t; }, 0.0, y);
                         return worst(sf::ti2(y), {c, q});
                     },
                     kQuad));
}

void cubic_sums(std::vector<Identity>& v) {
    const std::vector<Param> bs{{"beta", 1.1, 6.0}};
    v.push_back(make("I-19a", "S(2,beta) = 2 beta^{3/2}[Cl2(theta) - 2 acot(beta^{3/2}) ln 2]", "cubic-sum-clausen", bs,
                     {{2.0}}, [](const Point& p) { return Sides{hm::s_family(spec_of({2.0, p[0]})).value, hm::s2beta_closed(p[0])}; },
                     kSeries));
    v.push_back(make("I-19b", "S(2,beta) by the Clausen, log-kernel and hypergeometric-sum routes",
                     "cubic-sum-clausen", bs, {{2.0}}, [](const Point& p) {
                         return route_check(spec_of({2.0, p[0]}), {"Clausen closed form", "log kernel", "hypergeometric sum"});
                     },
                     kQuad));
    v.push_back(make("I-19c", "2 beta^3 int_0^1 atanh v/(v^2 + beta^3) dv = sum 2F1(1,k;k+1;-1/beta^3)/(k(2k-1))",
                     "cubic-sum-clausen", bs, {{2.0}}, [](const Point& p) {
                         double b3 = p[0] * p[0] * p[0];
                         double q = qts([b3](double x) { return x >= 1.0 ? 0.0 : std::atanh(x) / (x * x + b3); }, 0.0, 1.0);
                         return Sides{2.0 * b3 * q, hm::s2beta_hypergeometric_sum(p[0]).value};
                     },
                     kQuad));
    v.push_back(make("I-19d", "H_n = -n int_0^1 x^{n-1} ln(1-x) dx", "cubic-sum-clausen", {{"n", 1, 40, true}},
                     {{1}, {2}, {10}}, [](const Point& p) {
                         int n = static_cast<int>(p[0]);
                         double q = qts([n](double x) { return x >= 1.0 ? 0.0 : std::pow(x, n - 1) * std::log1p(-x); },
                                        0.0, 1.0);
                         return Sides{-n * q, hm::harm(n)};
                     },
                     kQuad));
    v.push_back(make("I-19e", "S(alpha,beta) as a sum over k of 2F1(1,a;a+1;w) differences", "cubic-sum-clausen",
                     {{"alpha", 1.5, 4.0}, {"beta", 1.3, 5.0}}, {{3.0, 2.0}, {2.0, 2.0}}, [](const Point& p) {
                         double al = p[0], b3 = p[1] * p[1] * p[1], w = -1.0 / b3;
                         auto f21 = [w](double a) { return a * sf::lerch_phi(cplx(w, 0), 1, a).real(); };
                         const double c0 = f21(1.0 + 1.0 / al) / (1.0 + al);
                         auto s = numkit::algebraic_series_limit([&](long n) {
                             double k = n + 1.0;
                             return static_cast<long double>(1.0 / (k * (al * k - 1.0)) * (c0 - k / (k + 1.0) * f21(k + 1.0)));
                         }, 1.0, 16, 7);
                         return Sides{al / b3 * s.value, hm::s_family(spec_of(p)).value};
                     },
                     kQuad));
}

void cosh_kernel(std::vector<Identity>& v) {
    const std::vector<Param> yt{{"y", 0.1, 5.0}, {"t", 0.1, kPi - 0.1}};
    const std::vector<Point> f0{{1.3, 0.8}, {2.0, kPi / 4}};
    v.push_back(make("I-20a", "int_0^y x cosh x/(cosh 2x - cos 2t) dx in Clausen values", "cosh-kernel-integrals", yt,
                     f0, [](const Point& p) { return of(ct::cosh_integrals(p[0], p[1]).full); }, kQuad));
    v.push_back(make("I-20b", "int_0^y x/(cosh x + cos t) dx in Clausen values", "cosh-kernel-integrals", yt, f0,
                     [](const Point& p) { return of(ct::cosh_integrals(p[0], p[1]).plus); }, kQuad));
    v.push_back(make("I-20c", "int_0^y x/(cosh x - cos t) dx in Clausen values", "cosh-kernel-integrals", yt, f0,
                     [](const Point& p) { return of(ct::cosh_integrals(p[0], p[1]).minus); }, kQuad));
    const std::vector<Param> ts{{"t", 0.1, kPi - 0.1}};
    v.push_back(make("I-20d", "closed form at y = 40 against the infinite-range limit", "cosh-kernel-integrals", ts,
                     {{kPi / 4}, {1.0}}, [](const Point& p) { return of(ct::cosh_limit(p[0])); }, kQuad));
    v.push_back(make("I-20e", "int_0^inf x cosh x/(cosh 2x - cos 2t) dx = csc t [Cl2(t) - Cl2(2t)/4]",
                     "cosh-kernel-integrals", ts, {{kPi / 4}, {1.0}},
                     [](const Point& p) { return of(ct::cosh_infinite(p[0])); }, kQuad));
    v.push_back(make("I-20f", "x/(cosh x +- cos t) integrals over the angle acos(sech y)", "cosh-kernel-integrals",
                     {{"y", 0.1, 5.0}, {"t", 0.1, kPi - 0.1}, {"sign", 0, 1, true}}, {{1.3, 0.8, 0}, {1.3, 0.8, 1}},
                     [](const Point& p) {
                         double y = p[0], t = p[1], s = p[2] > 0.5 ? -1.0 : 1.0;
                         double A = std::acos(1.0 / std::cosh(y)), ct_ = std::cos(t);
                         double q = qts([=](double th) {
                             return (std::log1p(std::sin(th)) - std::log(std::cos(th))) / (1.0 + s * ct_ * std::cos(th));
                         }, 0.0, A);
                         auto tri = ct::cosh_integrals(y, t);
                         return Sides{q, s > 0 ? tri.plus.rhs : tri.minus.rhs};
                     },
                     kQuad));
}

std::vector<Identity> build() {
    std::vector<Identity> v;
    clausen_definitions(v);
    tetrahedron(v);
    sum_routes(v);
    lerch_forms(v);
    subsum(v);
    sum_family(v);
    half_index(v);
    legendre_series(v);
    legendre_integrals(v);
    logsine_generating(v);
    log_trig(v);
    lobachevsky(v);
    log_ratio(v);
    pfq_clausen(v);
    rajantie(v);
    three_electron(v);
    ramanujan(v);
    lerch_appendix(v);
    cubic_sums(v);
    cosh_kernel(v);
    return v;
}

}  // namespace

const std::vector<Identity>& catalog() {
    static const std::vector<Identity> c = build();
    return c;
}

const std::vector<std::string>& topic_manifest() {
    static const std::vector<std::string> m{
        "clausen-definitions", "clausen-special-values", "tetrahedron-series-clausen",
        "tetrahedron-decomposition", "sum-closed-forms", "sum-routes", "lerch-legendre-chi",
        "dilog-imaginary-part", "legendre-chi-integrals", "log-integral-negative-argument",
        "eighth-power-subsum", "clausen-duplication", "harmonic-sum-family", "harmonic-polygamma",
        "harmonic-generating-functions", "half-index-sums", "legendre-clausen-series", "legendre-constant-sums",
        "legendre-arcsine-moments", "legendre-dilog-series", "elliptic-k-sums", "atan-legendre-series",
        "legendre-rational-integrals", "legendre-moment-recursion", "clausen-central-binomial-series",
        "clausen-elliptic-integral", "logsine-generating-function", "digamma-half-integer",
        "log-trig-integrals", "trig-kernel-integrals", "tan-shift-readings", "bernoulli-trig-series",
        "lobachevsky", "log-ratio-integrals", "pfq-clausen", "rajantie-integral", "three-electron-integral",
        "harris-expansion", "ramanujan-h", "lerch-integral-representations", "rainville-integral",
        "log-dilog-generalization", "cubic-sum-clausen", "cosh-kernel-integrals"};
    return m;
}

}  // namespace clausen::identities
