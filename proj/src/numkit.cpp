#include "clausen/numkit.hpp"

#include <array>

namespace clausen::numkit {

ExtReal comp_sum(std::span<const double> terms, double truncation) {
    Accumulator acc;
    for (double t : terms) acc.add(t);
    return {acc.value(), acc.rounding_bound() + truncation};
}

namespace {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

}  // namespace

DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

DD operator-(DD a, DD b) { return a + (-b); }

DD operator*(DD a, DD b) {
    double p = a.hi * b.hi;
    double e = std::fma(a.hi, b.hi, -p);
    e += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p, e);
}

DD operator/(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    return DD(q1) + DD(q2) + DD(q3);
}

BigRational make_rational(long num, long den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

const ConstantTable& constants() {
    static const ConstantTable t = [] {
        ConstantTable c{};
        c.pi = std::acos(-1.0);
        c.omega = std::atan(1.0 / (2.0 * std::sqrt(2.0)));
        c.alpha = std::asin(1.0 / 3.0);
        c.theta_plus = -std::atan(4.0 * std::sqrt(2.0) / 7.0);
        c.ln2 = std::log(2.0);
        c.zeta2 = c.pi * c.pi / 6.0;
        c.catalan = catalan_alternating();
        // digamma(1) = -gamma; asymptotic series at 1+N with the downward recurrence
        {
            double x = 17.0, s = std::log(x) - 0.5 / x;
            double x2 = x * x, p = x2;
            const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
            for (int k = 1; k <= 6; ++k) {
                s -= b[k - 1] / (2.0 * k * p);
                p *= x2;
            }
            Accumulator acc;
            acc.add(s);
            for (int j = 1; j <= 16; ++j) acc.add(-1.0 / j);
            c.euler_gamma = -acc.value();
        }
        return c;
    }();
    return t;
}

namespace {

std::array<BigRational, 61> build_bernoulli() {
    // B_n via sum_{k=0}^{n} C(n+1,k) B_k = 0
    std::array<BigRational, 61> b;
    b[0] = 1;
    for (int n = 1; n <= 60; ++n) {
        BigRational s = 0;
        mpz_class binom = 1;  // C(n+1, k)
        for (int k = 0; k < n; ++k) {
            s += BigRational(binom) * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -s / BigRational(n + 1);
        b[n].canonicalize();
    }
    for (auto& q : b) q = abs(q);
    return b;
}

}  // namespace

const BigRational& bernoulli_abs_exact(int two_k) {
    static const std::array<BigRational, 61> table = build_bernoulli();
    if (two_k < 2 || two_k > 60 || two_k % 2 != 0)
        throw DomainError("bernoulli index must be even in [2, 60]");
    return table[two_k];
}

double bernoulli_abs(int two_k) { return bernoulli_abs_exact(two_k).get_d(); }

double zeta_even(int two_k) {
    // zeta(2k) = |B_2k| (2 pi)^{2k} / (2 (2k)!)
    const long double pi2 = 6.283185307179586476925286766559L;
    long double v = bernoulli_abs_exact(two_k).get_d() / 2.0L;
    for (int j = 1; j <= two_k; ++j) v *= pi2 / j;
    return static_cast<double>(v);
}

double catalan_alternating() {
    const int n = 30;
    long double d = std::pow(3.0L + std::sqrt(8.0L), n);
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L, c = -d, s = 0.0L;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        long double a = 1.0L / ((2.0L * k + 1.0L) * (2.0L * k + 1.0L));
        s += c * a;
        b = b * (k + n) * (k - n) / ((k + 0.5L) * (k + 1.0L));
    }
    return static_cast<double>(s / d);
}

SeriesLimit algebraic_series_limit(const std::function<long double(long)>& term, double s,
                                   long n0, int levels) {
    std::vector<long double> t(static_cast<size_t>(levels) + 1);
    long double sum = 0.0L, comp = 0.0L;
    long k = 0;
    for (int j = 0; j <= levels; ++j) {
        long n = n0 << j;
        for (; k < n; ++k) {
            long double y = term(k) - comp;
            long double u = sum + y;
            comp = (u - sum) - y;
            sum = u;
        }
        t[static_cast<size_t>(j)] = sum;
    }
    long double prev_top = t.back();
    for (int m = 0; m < levels; ++m) {
        long double f = std::pow(2.0L, static_cast<long double>(s + m));
        prev_top = t[t.size() - 1];
        for (size_t i = 0; i + 1 < t.size(); ++i) t[i] = (f * t[i + 1] - t[i]) / (f - 1.0L);
        t.pop_back();
    }
    double v = static_cast<double>(t.back());
    double err = std::fabs(static_cast<double>(t.back() - prev_top));
    return {v, err + 8.0 * kEps * std::fabs(v)};
}

SeriesLimit levin_u_limit(const std::function<long double(long)>& term, int nterms) {
    std::vector<long double> a(static_cast<size_t>(nterms)), S(static_cast<size_t>(nterms));
    long double s = 0.0L;
    for (int j = 0; j < nterms; ++j) {
        a[j] = term(j);
        s += a[j];
        S[j] = s;
    }
    auto transform = [&](int k) {
        long double num = 0.0L, den = 0.0L, binom = 1.0L;
        for (int j = 0; j <= k; ++j) {
            long double c = ((j % 2) ? -binom : binom) *
                            std::pow((1.0L + j) / (1.0L + k), static_cast<long double>(k - 1));
            long double om = (j + 1.0L) * a[j];
            if (om == 0.0L) return S[j];
            num += c * S[j] / om;
            den += c / om;
            binom = binom * (k - j) / (j + 1);
        }
        return num / den;
    };
    long double hi = transform(nterms - 1), lo = transform(nterms - 2);
    double v = static_cast<double>(hi);
    return {v, std::fabs(static_cast<double>(hi - lo)) + 8.0 * kEps * std::fabs(v)};
}

}  // namespace clausen::numkit
