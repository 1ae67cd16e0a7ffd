#include "clausen/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>

#include "clausen/quad.hpp"
#include "clausen/specfun.hpp"

namespace clausen::harmonic {

using numkit::Accumulator;
using numkit::kEps;
using specfun::cl2;
using specfun::li2;

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kLn2 = 0.6931471805599453;
constexpr double kInfBound = std::numeric_limits<double>::infinity();

const char* kPiDigits = "3.14159265358979323846264338327950288419716939937510582097494459";
const char* kLn2Digits = "0.69314718055994530941723212145817656807550013436025525412068000949";

// sum z^n/(n+a)^s for |z| <= 1/2
double lerch_small(double z, int s, double a) {
    Accumulator acc;
    double zn = 1.0;
    for (int n = 0; n < 400; ++n) {
        double term = zn / std::pow(n + a, s);
        acc.add(term);
        if (std::fabs(term) < 1e-19 * std::fabs(acc.value())) break;
        zn *= z;
    }
    return acc.value();
}

// 2F1(1, a; 1+a; z) = a Phi(z, 1, a)
double f21_unit(double z, double a) { return a * lerch_small(z, 1, a); }

Route make_route(std::string name, std::initializer_list<quad::QuadResult> parts,
                 std::function<double(std::span<const double>)> combine, double extra_scale = 1.0) {
    std::vector<double> vals;
    double err = 0.0;
    bool ok = true;
    for (const auto& p : parts) {
        vals.push_back(p.value);
        err += p.err_estimate;
        ok = ok && p.converged;
    }
    double v = combine(vals);
    return {std::move(name), {v, err * extra_scale + 8.0 * kEps * std::fabs(v)}, ok};
}

quad::QuadResult ts(const quad::Integrand& f, double a, double b, double tol) {
    return quad::tanh_sinh(f, a, b, tol);
}
quad::QuadResult gk(const quad::Integrand& f, double a, double b, double tol) {
    return quad::gauss_kronrod(f, a, b, tol);
}

double imag_checked(cplx z, double scale, const char* what) {
    if (std::fabs(z.imag()) > 1e-11 * std::max(1.0, scale))
        throw DomainError(std::string("imaginary residue too large in ") + what);
    return z.real();
}

}  // namespace

// ---------------------------------------------------------------- harmonic numbers

BigRational harm_exact(int n, int r) {
    if (n < 0 || r < 1) throw DomainError("harm_exact: need n >= 0, r >= 1");
    BigRational s = 0;
    for (int j = 1; j <= n; ++j) {
        mpz_class d = 1;
        for (int i = 0; i < r; ++i) d *= j;
        s += BigRational(1, d);
    }
    s.canonicalize();
    return s;
}

double harm(long n, int r) {
    if (n < 0 || r < 1) throw DomainError("harm: need n >= 0, r >= 1");
    if (n <= 64) return harm_exact(static_cast<int>(n), r).get_d();
    Accumulator acc;
    acc.add(harm_exact(64, r).get_d());
    for (long j = n; j > 64; --j) acc.add(std::pow(static_cast<double>(j), -r));
    return acc.value();
}

double harm_polygamma(long n, int r) {
    if (r < 1 || r > 5) throw DomainError("harm_polygamma: 1 <= r <= 5");
    double fact = std::tgamma(r);
    double sign = (r % 2 == 1) ? 1.0 : -1.0;
    double d = specfun::polygamma(r - 1, n + 1.0) - specfun::polygamma(r - 1, 1.0);
    return sign / fact * d;
}

// ---------------------------------------------------------------- S family

void validate(const SumSpec& s) {
    if (!(s.alpha > 0.0)) throw DomainError("SumSpec: alpha must be positive");
    if (!(std::fabs(s.beta) > 1.0)) throw DomainError("SumSpec: |beta| must exceed 1");
    if (s.j < 1 || s.r < 1 || s.p < 1 || s.q < 0) throw DomainError("SumSpec: bad integer index");
}

ExtReal s_family(const SumSpec& spec, double tol) {
    validate(spec);
    const double w = -1.0 / (spec.beta * spec.beta * spec.beta);
    const double rho = std::fabs(w);
    const double ia = 1.0 / spec.alpha;
    Accumulator acc, hacc;
    long hidx = 0;
    auto advance_h = [&](long target) {
        while (hidx < target) {
            ++hidx;
            hacc.add(std::pow(static_cast<double>(hidx), -spec.r));
        }
    };
    double wn = 1.0;
    double tail = 0.0;
    for (long n = 0; n < 100000; ++n) {
        advance_h(spec.p * n + spec.q);
        double term = wn * hacc.value() / std::pow(n + ia, spec.j);
        acc.add(term);
        if (hidx > 0) {
            tail = std::fabs(term) * rho * (1.0 + std::log(n + 2.0)) / (1.0 - rho);
            if (tail <= tol * std::max(1.0, std::fabs(acc.value()))) break;
        }
        wn *= w;
    }
    return {acc.value(), tail + acc.rounding_bound()};
}

double s2beta_closed(double beta) {
    if (!(beta > 1.0)) throw DomainError("s2beta_closed: real form needs beta > 1");
    double b3 = beta * beta * beta;
    double b32 = std::pow(beta, 1.5);
    double theta = std::acos((1.0 - b3) / (1.0 + b3));
    return 2.0 * b32 * (cl2(theta) - 2.0 * std::atan(1.0 / b32) * kLn2);
}

ExtReal s2beta_hypergeometric_sum(double beta) {
    if (!(beta > 1.0)) throw DomainError("s2beta_hypergeometric_sum: needs beta > 1");
    double x = -1.0 / (beta * beta * beta);
    auto term = [x](long i) -> long double {
        double k = static_cast<double>(i + 1);
        return 1.0L / (k * (2.0 * k - 1.0)) * f21_unit(x, k);
    };
    auto lim = numkit::algebraic_series_limit(term, 1.0);
    return {lim.value, lim.err_estimate};
}

std::vector<double> s22_closed_forms() {
    const auto& c = numkit::constants();
    const double tp = c.theta_plus;
    const double r2 = std::sqrt(2.0);
    std::vector<double> out;
    // Clausen form
    out.push_back(4.0 * r2 * (cl2(tp + kPi) + tp * kLn2));
    // dilogarithms on the unit circle
    {
        cplx e(std::cos(tp), std::sin(tp));
        cplx d = li2(-e) - li2(-std::conj(e));
        cplx v = 2.0 * r2 * (2.0 * tp * kLn2 - cplx(0, 1) * d);
        out.push_back(imag_checked(v, 1.0, "S(2,2) unit-circle dilog form"));
    }
    // dilogarithms at (4 -+ i sqrt2)/8
    {
        cplx d = li2(cplx(0.5, -r2 / 8.0)) - li2(cplx(0.5, r2 / 8.0));
        cplx v = r2 * (-5.0 * (kPi - 2.0 * std::atan(2.0 * r2)) * kLn2 +
                       4.0 * c.omega * std::log(8.0 / 3.0) + 2.0 * cplx(0, 1) * d);
        out.push_back(imag_checked(v, 1.0, "S(2,2) complex dilog form"));
    }
    // Ramanujan-sum route at x = i/(2 sqrt 2)
    out.push_back(imag_checked(ramanujan_half_sum(cplx(0.0, 1.0 / (2.0 * r2))), 1.0,
                               "S(2,2) Ramanujan route"));
    return out;
}

namespace {

// Nielsen kernel f(x) = sum (j+1)^2/(j+3/2) x^j
double nielsen_f(double x) {
    if (std::fabs(x) < 0.05) {
        Accumulator acc;
        double xp = 1.0;
        for (int j = 0; j < 60; ++j) {
            double term = (j + 1.0) * (j + 1.0) / (j + 1.5) * xp;
            acc.add(term);
            if (std::fabs(term) < 1e-18) break;
            xp *= x;
        }
        return acc.value();
    }
    double a;
    if (x < 0.0) {
        double y = std::sqrt(-x);
        a = std::atan(y) / y;
    } else {
        double y = std::sqrt(x);
        a = std::atanh(y) / y;
    }
    return ((3.0 * x - 1.0) / ((x - 1.0) * (x - 1.0)) + a) / (2.0 * x);
}

}  // namespace

std::vector<Route> s_integral_reps(const SumSpec& spec, double tol) {
    validate(spec);
    std::vector<Route> out;
    const double al = spec.alpha, be = spec.beta;
    const double b3 = be * be * be;
    const double w = -1.0 / b3;
    const double ia = 1.0 / al;
    const bool plain = spec.j == 1 && spec.r == 1 && spec.p == 1 && spec.q == 0;
    const bool basic_pq = spec.p == 1 && spec.q == 0;

    auto guard = [&](auto fn) {
        try {
            fn();
        } catch (const DomainError& e) {
            out.push_back({std::string("failed: ") + e.what(), {NAN, kInfBound}, false});
        }
    };

    if (spec.j == 1 && spec.r == 1) {
        guard([&] {
            const int p = spec.p, q = spec.q;
            const double fw = f21_unit(w, ia);
            auto f = [=](double t) {
                return (std::pow(t, q) * f21_unit(w * std::pow(t, p), ia) - fw) / (t - 1.0);
            };
            auto r = gk(f, 0.0, 1.0, tol);
            out.push_back(make_route("hypergeometric kernel", {r},
                                     [al](auto v) { return al * v[0]; }, al));
        });
    }
    if (plain) {
        // incomplete Beta form, inner integral done by quadrature
        guard([&] {
            auto inner = [=](double X) {
                double top = std::pow(X, ia);
                return al * quad::gauss_kronrod(
                                [al](double v) { return 1.0 / (1.0 + std::pow(v, al)); }, 0.0,
                                top, 1e-15)
                                .value;
            };
            const double bw = inner(1.0 / std::fabs(b3));
            const double sgn = b3 > 0 ? 1.0 : -1.0;
            // for beta < 0 the argument -t/beta^3 is positive: use the series directly
            auto incomplete = [=](double t) {
                if (sgn > 0) return inner(t / b3);
                double X = t / std::fabs(b3);
                return std::pow(X, ia) * f21_unit(X, ia) * al;
            };
            const double b0 = sgn > 0 ? bw : incomplete(1.0);
            auto f = [=](double t) { return (std::pow(t, -ia) * incomplete(t) - b0) / (t - 1.0); };
            auto r = gk(f, 0.0, 1.0, tol);
            double pre = std::pow(std::fabs(b3), ia);
            out.push_back(make_route("incomplete beta", {r},
                                     [pre](auto v) { return pre * v[0]; }, pre));
        });
        guard([&] {
            auto f = [=](double u) {
                return std::pow(u, ia - 1.0) / (u + b3) * std::log1p(u / b3);
            };
            auto r = ts(f, 0.0, 1.0, tol);
            out.push_back(make_route("exponential kernel", {r},
                                     [b3](auto v) { return -b3 * v[0]; }, std::fabs(b3)));
        });
        guard([&] {
            auto f = [=](double s) {
                if (s <= 0.0) return 0.0;
                double l = std::log1p(-w * s) / s;
                return std::pow(s, ia) * l * l;
            };
            auto r = ts(f, 0.0, 1.0, tol);
            double l0 = std::log1p(-w);
            out.push_back(make_route("log-squared kernel", {r}, [=](auto v) {
                return (l0 * l0 + (1.0 - ia) * v[0]) / (2.0 * w);
            }, std::fabs(1.0 / (2.0 * w))));
        });
        // free-parameter harmonic representation at two values of t
        for (double t : {1.0, 2.0}) {
            guard([&, t] {
                auto g = [=](double x) {
                    return std::log(x) / ((x + t) * (x + t)) * f21_unit(-t / (b3 * (x + t)), ia);
                };
                auto r1 = ts(g, 0.0, t, tol);
                auto r2 = quad::integrate_semi_infinite(g, t, tol);
                double fw = f21_unit(w, ia);
                double l1 = std::log(b3 / (t * (b3 + 1.0)));
                double l2 = std::log(1.0 / t);
                out.push_back(make_route(t == 1.0 ? "free parameter t=1" : "free parameter t=2",
                                         {r1, r2}, [=](auto v) {
                                             return al * std::log(t) * fw -
                                                    (b3 / 2.0 * (l1 * l1 - l2 * l2) +
                                                     (al - 1.0) * t * (v[0] + v[1]));
                                         }, std::fabs(al - 1.0) * t));
            });
        }
    }
    if (basic_pq) {
        guard([&] {
            const int j = spec.j, r = spec.r;
            const double phw = lerch_small(w, j, ia);
            auto f = [=](double t) {
                if (t <= 0.0 || t >= 1.0) return 0.0;
                double k = (lerch_small(w * t, j, ia) - phw) / (t - 1.0);
                return r == 1 ? k : k * std::pow(std::log(t), r - 1);
            };
            auto q = ts(f, 0.0, 1.0, tol);
            double pre = ((r - 1) % 2 == 0 ? 1.0 : -1.0) / std::tgamma(r);
            out.push_back(make_route("Lerch kernel", {q}, [pre](auto v) { return pre * v[0]; },
                                     std::fabs(pre)));
        });
    }
    if (spec.j == 1 && basic_pq) {
        guard([&] {
            const int r = spec.r;
            auto f = [=](double s) {
                double ws = w * s;
                double li = (r == 1) ? -std::log1p(-ws) : specfun::polylog(r, ws);
                return std::pow(s, ia - 1.0) * li / (1.0 - ws);
            };
            auto q = ts(f, 0.0, 1.0, tol);
            out.push_back(make_route("polylog kernel", {q}, [](auto v) { return v[0]; }));
        });
    }
    if (plain && al == 2.0) {
        guard([&] {
            // closed dilog form of int_0^w ln(1-z)/(sqrt z (1-z)) dz
            cplx s = std::sqrt(cplx(w, 0.0));
            cplx one(1.0, 0.0);
            cplx l1 = std::log(one + s), l2 = std::log(one - s);
            cplx e = li2((one - s) / 2.0) - li2((one + s) / 2.0) + 0.5 * (l1 * l1 - l2 * l2) +
                     kLn2 * (l1 - l2);
            cplx v = -e / s;
            double val = imag_checked(v, std::abs(v), "sqrt-dilog route");
            out.push_back({"sqrt dilog", {val, 64.0 * kEps * std::max(1.0, std::fabs(val))}, true});
        });
        guard([&] {
            auto rF = gk(nielsen_f, std::min(0.0, w), std::max(0.0, w), tol);
            double sgn = w < 0 ? -1.0 : 1.0;
            auto rL = gk([=](double t) { return nielsen_f(t * w) * li2(cplx(t, 0.0)).real(); }, 0.0,
                         1.0, tol);
            const double z2 = numkit::constants().zeta2;
            out.push_back(make_route("Nielsen", {rF, rL},
                                     [=](auto v) { return z2 * sgn * v[0] - w * v[1]; }, z2));
        });
        guard([&] {
            cplx x = (be > 0) ? cplx(0.0, std::pow(be, -1.5)) : cplx(std::pow(-be, -1.5), 0.0);
            cplx v = ramanujan_half_sum(x);
            double val = imag_checked(v, std::abs(v), "Ramanujan route");
            out.push_back({"Ramanujan sum", {val, 64.0 * kEps * std::max(1.0, std::fabs(val))}, true});
        });
        if (be > 1.0) {
            guard([&] {
                double v = s2beta_closed(be);
                out.push_back({"Clausen closed form", {v, 32.0 * kEps * std::max(1.0, std::fabs(v))},
                               true});
            });
            guard([&] {
                double x = 1.0 / b3, sx = std::sqrt(x);
                auto f = [=](double t) {
                    if (t <= 0.0 || t >= 1.0) return 0.0;
                    double y = x * t;
                    double k;
                    if (y < 1e-4) {
                        k = x * (-2.0 / 3.0 + y * (0.8 - y * (6.0 / 7.0 - y * 8.0 / 9.0)));
                    } else {
                        double st = std::sqrt(y);
                        k = 1.0 / (t * (1.0 + y)) - std::atan(st) / (sx * t * std::sqrt(t));
                    }
                    return std::log1p(-t) * k;
                };
                auto r = ts(f, 0.0, 1.0, tol);
                out.push_back(make_route("log kernel", {r}, [](auto v) { return -v[0]; }));
            });
            guard([&] {
                auto hs = s2beta_hypergeometric_sum(be);
                double b32 = std::pow(be, 1.5);
                double v = -4.0 * b32 * kLn2 * std::atan(1.0 / b32) + 2.0 * hs.value;
                out.push_back({"hypergeometric sum", {v, 2.0 * hs.bound + 1e-15}, true});
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------- s(x), t(x)

std::pair<cplx, cplx> st_closed(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("st_closed: need 0 < x <= 1");
    double a = std::atan(std::sqrt(x)) * std::log1p(x);
    cplx s(0.0, -a);
    cplx d = li2(cplx(0.0, std::sqrt(x))) - li2(cplx(0.0, -std::sqrt(x)));
    cplx t = cplx(0.0, -1.0) * (a + cplx(0.0, 1.0) * d);
    return {s, t};
}

cplx t_clausen(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("t_clausen: need 0 < x <= 1");
    double om = std::atan(std::sqrt(x));
    double a = om * std::log1p(x);
    double r = om * std::log(x) + cl2(2.0 * om) - cl2(2.0 * om + kPi);
    return {0.0, r - a};
}

std::pair<cplx, cplx> st_series(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("st_series: need 0 < x <= 1");
    // (-x)^{n+1/2} = i sqrt(x) (-x)^n
    auto sum = [x](int shift) {
        auto term = [x, shift, h = 0.0L, k = 0L, xn = shift == 0 ? -x : 1.0L](long n) mutable -> long double {
            n += (shift == 0);
            long target = 2 * n + shift;
            while (k < target) {
                ++k;
                h += 1.0L / k;
            }
            long double v = xn * h / (n + 0.5L);
            xn *= -x;
            return v;
        };
        if (x <= 0.5) {
            Accumulator acc;
            for (long n = 0; n < 2000; ++n) {
                double v = static_cast<double>(term(n));
                acc.add(v);
                if (n > 2 && std::fabs(v) < 1e-18) break;
            }
            return acc.value();
        }
        return numkit::levin_u_limit(term, 40).value;
    };
    double sx = std::sqrt(x);
    return {cplx(0.0, sx * sum(0)), cplx(0.0, sx * sum(1))};
}

// ---------------------------------------------------------------- Ramanujan's H

double ramanujan_h_series(double x, int nterms) {
    Accumulator acc;
    double h = 0.0;
    double xp = x;
    for (int k = 1; k <= nterms; ++k) {
        h += 1.0 / k;
        acc.add(h / (2.0 * k - 1.0) * xp);
        xp *= x * x;
    }
    return acc.value();
}

double ramanujan_h(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("ramanujan_h: need 0 < x < 1");
    double l = std::log((1.0 - x) / (1.0 + x));
    return (kLn2 - 1.0) * l + std::log1p(-x * x) / x + 0.25 * l * l + kPi * kPi / 12.0 +
           li2(cplx((x - 1.0) / (x + 1.0), 0.0)).real();
}

double ramanujan_h_functional(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("ramanujan_h_functional: need 0 < x < 1");
    double lx = std::log(x);
    return (kLn2 - 1.0) * lx + (1.0 + x) / (1.0 - x) * std::log(4.0 * x / ((1.0 + x) * (1.0 + x))) +
           0.25 * lx * lx + kPi * kPi / 12.0 + li2(cplx(-x, 0.0)).real();
}

cplx ramanujan_half_sum(cplx x) {
    if (std::abs(x) >= 1.0 || x == cplx(0.0, 0.0))
        throw DomainError("ramanujan_half_sum: need 0 < |x| < 1");
    cplx one(1.0, 0.0);
    cplx l = std::log((one - x) / (one + x));
    return 2.0 / x * (kLn2 * l + 0.25 * l * l + kPi * kPi / 12.0 + li2((x - one) / (x + one)));
}

// ---------------------------------------------------------------- Harris expansion

double harris_v(double z) {
    if (!(std::fabs(z) < 1.0)) throw DomainError("harris_v: need |z| < 1");
    double lm = std::log((1.0 - z) / 2.0), lp = std::log((1.0 + z) / 2.0);
    return 0.5 * (li2(cplx((1.0 - z) / 2.0, 0.0)).real() - li2(cplx((1.0 + z) / 2.0, 0.0)).real()) +
           0.25 * (lm * lm - lp * lp);
}

std::vector<double> harris_coefficients(int N) {
    if (N < 0 || N > 200) throw DomainError("harris_coefficients: 0 <= N <= 200");
    // a_l = sum_{n>=l} H_n^{(2)} binom(n,l)/2^n; C_n = (a_{2n}-a_{2n+1})/2 + (H_{2n}+ln2)/(2n+1)
    const int lmax = 2 * N + 1;
    const int nmax = 4 * lmax + 400;
    std::vector<long double> h2(nmax + 1, 0.0L);
    for (int n = 1; n <= nmax; ++n) h2[n] = h2[n - 1] + 1.0L / (static_cast<long double>(n) * n);
    auto a = [&](int l) {
        long double t = std::pow(0.5L, l);  // binom(l,l)/2^l
        long double s = 0.0L;
        for (int n = l; n <= nmax; ++n) {
            s += h2[n] * t;
            if (n > 2 * l + 20 && t < 1e-24L) break;
            t *= static_cast<long double>(n + 1) / (n + 1 - l) / 2.0L;
        }
        return s;
    };
    std::vector<double> c(N + 1);
    long double h = 0.0L;
    int hk = 0;
    for (int n = 0; n <= N; ++n) {
        while (hk < 2 * n) h += 1.0L / ++hk;
        long double v = 0.5L * (a(2 * n) - a(2 * n + 1)) + (h + kLn2) / (2 * n + 1);
        if (n == 0) v += 2.0L * kLn2;
        c[n] = static_cast<double>(v);
    }
    return c;
}

ExtReal harris_vbar(double z, int N) {
    if (!(std::fabs(z) < 1.0)) throw DomainError("harris_vbar: need |z| < 1");
    auto c = harris_coefficients(N);
    Accumulator acc;
    double zp = z, z2 = z * z;
    for (int n = 0; n <= N; ++n) {
        acc.add(c[n] * zp);
        zp *= z2;
    }
    double tail = 2.0 * std::fabs(c[N] * zp) / (1.0 - z2);
    return {acc.value(), tail + acc.rounding_bound()};
}

// ---------------------------------------------------------------- Legendre series

namespace {

// sum_{n=1}^{N} w_n P_n(x), Bonnet recurrence
double legendre_weighted(double x, int N, const std::function<double(int)>& weight) {
    double p0 = 1.0, p1 = x, s = 0.0;
    for (int n = 1; n <= N; ++n) {
        s += weight(n) * p1;
        double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return s;
}

double legendre_weight(int n) { return 0.5 * (1.0 / n + 1.0 / (n + 1.0)); }

}  // namespace

double cl2_legendre_partial(double theta, int N) {
    if (!(theta > 0.0 && theta <= kPi)) throw DomainError("cl2_legendre: need 0 < theta <= pi");
    if (N < 1 || N > 200) throw DomainError("cl2_legendre: 1 <= N <= 200");
    auto f = [N](double t) { return legendre_weighted(std::cos(t), N, legendre_weight); };
    return (0.5 - kLn2) * theta + quad::qgk(f, 0.0, theta, 1e-13);
}

ExtReal cl2_legendre_series(double theta, int N) {
    double part = cl2_legendre_partial(theta, N);
    // int_0^theta P_n(cos t) dt ~ 1/(n+1/2) + sqrt(2/(pi n sin theta)) sin((n+1/2)theta - pi/4)/(n+1/2),
    // and sum_{n>N} w_n/(n+1/2) = 1/(N+1) exactly
    double smooth = 1.0 / (N + 1.0);
    double osc = 0.0;
    double st = std::sin(theta);
    if (st > 0.05) {
        Accumulator acc;
        for (int n = N + 1; n <= 40000; ++n) {
            double h = n + 0.5;
            acc.add(legendre_weight(n) * std::sqrt(2.0 / (kPi * n * st)) *
                    std::sin(h * theta - 0.25 * kPi) / h);
        }
        osc = acc.value();
    }
    double bound = 10.0 * std::fabs(osc) / N + 1.0 / (static_cast<double>(N) * N * N) + 1e-13;
    return {part + smooth + osc, bound};
}

ExtReal li2_legendre_series(double z, int N) {
    if (!(z >= -1.0 && z < 1.0) || z == 0.0) throw DomainError("li2_legendre: need -1 <= z < 1, z != 0");
    if (N < 8 || N > 400) throw DomainError("li2_legendre: 8 <= N <= 400");
    // P_k(0) removed termwise; the constants sum to zero
    auto partial = [z](int n) {
        auto f = [n](double x) {
            double p0 = 1.0, p1 = x, q0 = 1.0, q1 = 0.0, s = 0.0;
            for (int k = 1; k <= n; ++k) {
                double c = (2.0 * k + 1.0) / (k * (k + 1.0));
                s += c * (p1 - q1);
                double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                double q2 = -k * q0 / (k + 1.0);
                p0 = p1;
                p1 = p2;
                q0 = q1;
                q1 = q2;
            }
            return s / x;
        };
        double v = quad::qgk(f, std::min(0.0, z), std::max(0.0, z), 1e-13);
        return z < 0 ? -v : v;
    };
    // partial sums at stride 2 alternate; average neighbours three times
    const int levels = std::min(12, (N - 1) / 2);
    std::vector<double> row;
    for (int i = levels - 1; i >= 0; --i) row.push_back(partial(N - 2 * i));
    std::vector<double> last;
    for (int it = 0; it < 3; ++it) {
        last.push_back(row.back());
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
    }
    return {row.back(), std::fabs(last[1] - last[2]) + 1e-12};
}

numkit::SeriesLimit legendre_even_sum() {
    auto term = [r = 1.0L](long i) mutable -> long double {
        long double m = i + 1;
        r *= (m - 0.5L) / m;
        return (1.0L / (2.0L * m) + 1.0L / (2.0L * m + 1.0L)) * r * r;
    };
    return numkit::algebraic_series_limit(term, 1.0);
}

numkit::SeriesLimit legendre_zero_sum() {
    auto term = [r = 1.0L](long i) mutable -> long double {
        long double n = i + 1;
        r *= -(n - 0.5L) / n;
        return (4.0L * n + 1.0L) / (2.0L * n * (2.0L * n + 1.0L)) * r;
    };
    return numkit::levin_u_limit(term, 30);
}

ExtReal cl2_atan_legendre_series(double a, int N) {
    if (!(a > 0.0)) throw DomainError("cl2_atan_legendre_series: need a > 0");
    if (N < 2 || N > 400) throw DomainError("cl2_atan_legendre_series: 2 <= N <= 400");
    Accumulator acc;
    double last = 0.0, prev = 0.0;
    for (int k = 0; k < N; ++k) {
        auto f = [a, k](double x) {
            return a * std::pow(x, k + 1) * specfun::legendre_p(k, x) / (a * a + x * x);
        };
        double term = 2.0 / (k + 1.0) * quad::qgk(f, 0.0, 1.0, 1e-13);
        acc.add(term);
        prev = last;
        last = term;
    }
    double ratio = prev != 0.0 ? std::fabs(last / prev) : 1.0;
    double tail = ratio < 0.9 ? std::fabs(last) * ratio / (1.0 - ratio) : std::fabs(last) * N;
    return {acc.value(), tail + acc.rounding_bound()};
}

// ---------------------------------------------------------------- exact Legendre integrals

double RationalPair::value() const {
    mpf_class c(basis == Basis::pi ? kPiDigits : kLn2Digits, 256);
    mpf_class v(a, 256);
    mpf_class w(b, 256);
    v += w * c;
    return v.get_d();
}

namespace {

// exact coefficients of P_k, index = power
std::vector<BigRational> legendre_coeffs(int k) {
    std::vector<BigRational> c(k + 1, BigRational(0));
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    for (int m = 0; 2 * m <= k; ++m) {
        mpz_class num, d1, d2, d3;
        mpz_fac_ui(num.get_mpz_t(), 2 * k - 2 * m);
        mpz_fac_ui(d1.get_mpz_t(), m);
        mpz_fac_ui(d2.get_mpz_t(), k - m);
        mpz_fac_ui(d3.get_mpz_t(), k - 2 * m);
        BigRational v(num, two_k * d1 * d2 * d3);
        v.canonicalize();
        c[k - 2 * m] = (m % 2 == 0) ? v : BigRational(-v);
    }
    return c;
}

}  // namespace

BigRational legendre_moment(int m, int k) {
    if (m < 0 || k < 0) throw DomainError("legendre_moment: negative index");
    auto c = legendre_coeffs(k);
    BigRational s = 0;
    for (int i = 0; i <= k; ++i) {
        if (c[i] == 0) continue;
        s += c[i] / BigRational(m + i + 1);
    }
    s.canonicalize();
    return s;
}

RationalPair ik_exact(int j, int k) {
    if ((j != 0 && j != 1) || k < 0 || k > 64) throw DomainError("ik_exact: j in {0,1}, 0 <= k <= 64");
    // K_m = int_0^1 v^m/(1+v^2) dv obeys K_m + K_{m-2} = 1/(m-1)
    // with K_0 = pi/4 and K_1 = ln2/2; only one parity occurs for a given j
    const int top = 2 * k + j;
    std::vector<BigRational> ka(top + 1), kb(top + 1);
    for (int m = j; m <= top; m += 2) {
        if (m < 2) {
            ka[m] = 0;
            kb[m] = (m == 0) ? BigRational(1, 4) : BigRational(1, 2);
        } else {
            ka[m] = BigRational(1, m - 1) - ka[m - 2];
            kb[m] = -kb[m - 2];
        }
        ka[m].canonicalize();
    }
    auto c = legendre_coeffs(k);
    RationalPair out{0, 0, j == 0 ? RationalPair::Basis::pi : RationalPair::Basis::ln2};
    for (int i = 0; i <= k; ++i) {
        if (c[i] == 0) continue;
        int m = i + k + j;
        out.a += c[i] * ka[m];
        out.b += c[i] * kb[m];
    }
    out.a.canonicalize();
    out.b.canonicalize();
    return out;
}

// ---------------------------------------------------------------- generating function I(x,u)

ExtReal cl2_logsine_series(double u, int N) {
    if (!(u > 0.0 && u < 2.0 * kPi)) throw DomainError("cl2_logsine_series: need 0 < u < 2pi");
    if (N < 1) throw DomainError("cl2_logsine_series: N >= 1");
    const double z = std::cos(0.5 * u), z2 = z * z;
    Accumulator acc;
    double coef = 1.0;  // (1/2)_j^2 / ((3/2)_j j!)
    double inner = 0.0;
    double zp = z;
    double last = 0.0;
    for (int j = 1; j <= N; ++j) {
        coef *= (j - 0.5) * (j - 0.5) / ((j + 0.5) * j);
        inner += 1.0 / (2.0 * j - 1.0);
        zp *= z2;
        last = coef * inner * zp;
        acc.add(last);
    }
    double tail = z2 < 1.0 ? 2.0 * std::fabs(last) * z2 / (1.0 - z2) : kInfBound;
    double v = 2.0 * (std::asin(z) * kLn2 - acc.value());
    return {v, 2.0 * (tail + acc.rounding_bound())};
}

ExtReal cl2_elliptic_integral(double u, double tol) {
    if (!(u > 0.0 && u < 2.0 * kPi)) throw DomainError("cl2_elliptic_integral: need 0 < u < 2pi");
    const double c = std::cos(0.5 * u), s = std::sin(0.5 * u);
    const double z = c * c;
    const double sgn = c >= 0.0 ? 1.0 : -1.0;
    // sqrt(1 - sin(u/2)) written without cancellation
    const double k = std::asin(std::fabs(c) / std::sqrt(1.0 + s) / std::sqrt(2.0));
    auto g = [=](double t) {
        double tz = t * z;
        double inner = tz / (1.0 + std::sqrt(1.0 - tz));  // 1 - sqrt(1 - tz)
        double a = std::asin(std::sqrt(inner / 2.0));
        return (a - std::sqrt(t) * k) / (t * (t - 1.0));
    };
    auto r1 = quad::tanh_sinh(g, 0.0, 0.5, tol);
    auto r2 = quad::gauss_kronrod(g, 0.5, 1.0, tol);
    if (!r1.converged || !r2.converged) throw DomainError("cl2_elliptic_integral quadrature did not converge");
    double v = 2.0 * (std::asin(c) * kLn2 - sgn * (r1.value + r2.value));
    return {v, 2.0 * (r1.err_estimate + r2.err_estimate) + 8.0 * kEps};
}

// ---------------------------------------------------------------- Bernoulli sums

std::pair<ExtReal, ExtReal> bernoulli_trig_sums(double b) {
    if (!(std::fabs(b) < kPi)) throw DomainError("bernoulli_trig_sums: need |b| < pi");
    // |B_2k| 2^{2k}/(2k+1)! b^{2k+1} = 2 zeta(2k) (b/pi)^{2k} b/(2k+1)
    auto zeta = [](int k) {
        if (k <= 30) return numkit::zeta_even(2 * k);
        double s = 1.0;
        for (int n = 2; n < 12; ++n) s += std::pow(static_cast<double>(n), -2.0 * k);
        return s;
    };
    const double q = (b / kPi) * (b / kPi);
    Accumulator as, at;
    as.add(b);
    at.add(b);
    double qp = 1.0, tail = 0.0;
    for (int k = 1; k < 200000; ++k) {
        qp *= q;
        double base = 2.0 * zeta(k) * qp * b / (2 * k + 1);
        at.add(-base);
        as.add((1.0 - std::pow(4.0, 1 - k) / 2.0) * base);
        tail = 2.0 * std::fabs(base) * q / (1.0 - q);
        if (tail < 1e-17 * std::max(1.0, std::fabs(b))) break;
    }
    return {{as.value(), tail + as.rounding_bound()}, {at.value(), tail + at.rounding_bound()}};
}

}  // namespace clausen::harmonic
