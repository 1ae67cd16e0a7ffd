#include "clausen/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "clausen/numkit.hpp"

namespace clausen::quad {

namespace {

constexpr int kMaxLevel = 12;
constexpr int kMaxDepth = 40;
constexpr double kEps = numkit::kEps;

double checked(const Integrand& f, double x) {
    double y = f(x);
    if (std::isnan(y)) throw DomainError("integrand undefined");
    if (!std::isfinite(y)) throw DomainError("integrand undefined");
    return y;
}

double mixed_scale(double v) { return std::max(1.0, std::fabs(v)); }

}  // namespace

// Abscissae x = c +- h*tanh(pi/2 sinh t). Distances to the endpoints are formed
// directly from exp so points near a singular endpoint keep full relative accuracy.
QuadResult tanh_sinh_ends(const EndpointIntegrand& f, double a, double b, double tol) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double halfpi = 0.5 * std::acos(-1.0);
    const double tmax = 6.6;  // weights underflow long before this
    QuadResult r;

    auto eval = [&](double x, double da, double db) {
        double y = f(x, da, db);
        if (!std::isfinite(y)) throw DomainError("integrand undefined");
        ++r.evals;
        return y;
    };
    // adds the node pair at +-t; false once weights or distances underflow
    auto pair = [&](double t, numkit::Accumulator& acc, numkit::Accumulator& absacc) {
        if (t == 0.0) {
            double y = eval(c, h, h) * h * halfpi;
            acc.add(y);
            absacc.add(std::fabs(y));
            return true;
        }
        double s = halfpi * std::sinh(t);
        double ch = halfpi * std::cosh(t);
        double e = std::exp(-2.0 * s);
        double d = h * 2.0 * e / (1.0 + e);
        double w = h * ch * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (w == 0.0 || d == 0.0) return false;
        double far = 2.0 * h - d;
        double y = eval(a + d, d, far) * w + eval(b - d, far, d) * w;
        acc.add(y);
        absacc.add(std::fabs(y));
        return true;
    };

    double step = 1.0;
    numkit::Accumulator acc, absacc;
    for (int k = 0; step * k <= tmax; ++k)
        if (!pair(step * k, acc, absacc)) break;
    double prev = acc.value() * step;
    double prev_diff = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= kMaxLevel; ++level) {
        step *= 0.5;
        for (int k = 1; step * k <= tmax; k += 2)
            if (!pair(step * k, acc, absacc)) break;
        double cur = acc.value() * step;
        double diff = std::fabs(cur - prev);
        double floor = 16.0 * kEps * absacc.value() * step;
        // |cur - prev| bounds the error of prev; taken as the estimate for cur
        // while the level differences keep shrinking
        double est = (diff < prev_diff) ? diff : std::max(diff, prev_diff);
        est = std::max(est, floor);
        r.value = cur;
        r.err_estimate = est;
        if (level >= 3 && est <= tol * mixed_scale(cur)) {
            r.converged = true;
            return r;
        }
        prev_diff = diff;
        prev = cur;
    }
    return r;
}

QuadResult tanh_sinh(const Integrand& f, double a, double b, double tol) {
    // a node that rounded onto an endpoint carries a negligible weight and may sit on the singularity
    return tanh_sinh_ends([&](double x, double, double) { return x == a || x == b ? 0.0 : f(x); }, a, b, tol);
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, err;
    int depth;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const Integrand& f, double a, double b, int depth, long& evals) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = checked(f, c);
    double rk = fc * kWgk[7], rg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = h * kXgk[j];
        double f1 = checked(f, c - dx), f2 = checked(f, c + dx);
        rk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    double vk = rk * h, vg = rg * h;
    double err = std::fabs(vk - vg) + 50.0 * kEps * std::fabs(vk);
    return {a, b, vk, err, depth};
}

}  // namespace

QuadResult gauss_kronrod(const Integrand& f, double a, double b, double tol) {
    QuadResult r;
    std::priority_queue<Segment> heap;
    Segment s0 = gk15(f, a, b, 0, r.evals);
    heap.push(s0);
    double total = s0.value, err = s0.err;
    std::vector<Segment> done;  // segments at max depth
    while (!heap.empty()) {
        if (err <= tol * mixed_scale(total)) {
            r.converged = true;
            break;
        }
        Segment s = heap.top();
        heap.pop();
        if (s.depth >= kMaxDepth || r.evals > 200000) {
            done.push_back(s);
            if (r.evals > 200000) break;
            continue;
        }
        double m = 0.5 * (s.a + s.b);
        Segment l = gk15(f, s.a, m, s.depth + 1, r.evals);
        Segment h = gk15(f, m, s.b, s.depth + 1, r.evals);
        total += l.value + h.value - s.value;
        err += l.err + h.err - s.err;
        heap.push(l);
        heap.push(h);
    }
    // re-sum to drop accumulated update noise
    numkit::Accumulator v, e;
    for (auto* q : {&done}) for (auto& s : *q) v.add(s.value), e.add(s.err);
    while (!heap.empty()) {
        v.add(heap.top().value);
        e.add(heap.top().err);
        heap.pop();
    }
    r.value = v.value();
    r.err_estimate = e.value();
    r.converged = r.converged && r.err_estimate <= tol * mixed_scale(r.value) * 1.0000001;
    return r;
}

QuadResult integrate(const QuadProblem& p) {
    if (!p.integrand) throw DomainError("no integrand");
    if (!(p.target_tol > 0.0)) throw DomainError("target_tol must be positive");
    double a = p.lower, b = p.upper;
    if (!(a < b)) throw DomainError("lower must be below upper");
    const Integrand& f = p.integrand;
    if (std::isinf(a) && std::isinf(b)) {
        QuadResult l = integrate_semi_infinite([&](double u) { return f(-u); }, 0.0, p.target_tol);
        QuadResult rr = integrate_semi_infinite(f, 0.0, p.target_tol);
        return {l.value + rr.value, l.err_estimate + rr.err_estimate, l.evals + rr.evals,
                l.converged && rr.converged};
    }
    if (std::isinf(b)) return integrate_semi_infinite(f, a, p.target_tol);
    if (std::isinf(a)) return integrate_semi_infinite([&](double u) { return f(-u); }, -b, p.target_tol);
    if (p.singular_lower || p.singular_upper) return tanh_sinh(f, a, b, p.target_tol);
    return gauss_kronrod(f, a, b, p.target_tol);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, double tol) {
    // the distance to t = 1 is exact, so large u stays accurate
    auto g = [&](double, double, double om) {
        double u = a + (1.0 - om) / om;
        if (std::isinf(u)) return 0.0;
        double y = f(u);
        if (y == 0.0) return 0.0;
        return y / (om * om);
    };
    return tanh_sinh_ends(g, 0.0, 1.0, tol);
}

double qts(const Integrand& f, double a, double b, double tol) {
    QuadResult r = tanh_sinh(f, a, b, tol);
    if (!r.converged) throw DomainError("quadrature did not converge");
    return r.value;
}

double qgk(const Integrand& f, double a, double b, double tol) {
    QuadResult r = gauss_kronrod(f, a, b, tol);
    if (!r.converged) throw DomainError("quadrature did not converge");
    return r.value;
}

}  // namespace clausen::quad
