#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace clausen {

// Thrown for arguments outside a function's domain. The CLI maps it to exit 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace numkit {

// value with an absolute error bound
struct ExtReal {
    double value = 0.0;
    double bound = 0.0;
};

inline constexpr double kEps = 2.220446049250313e-16;

// Neumaier's variant of Kahan summation. Tracks sum|x| for the rounding bound.
class Accumulator {
public:
    void add(double x) {
        if (!std::isfinite(x)) throw DomainError("non-finite input");
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::fabs(x);
    }
    Accumulator& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_; }
    double rounding_bound() const { return 2.0 * kEps * abs_; }

private:
    double sum_ = 0.0, comp_ = 0.0, abs_ = 0.0;
};

ExtReal comp_sum(std::span<const double> terms, double truncation = 0.0);

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DD {
    double hi = 0.0, lo = 0.0;
    DD() = default;
    DD(double x) : hi(x), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}
    explicit operator double() const { return hi + lo; }
};

DD operator+(DD a, DD b);
DD operator-(DD a, DD b);
DD operator*(DD a, DD b);
DD operator/(DD a, DD b);
inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }

using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
std::string to_string(const BigRational& q);

struct ConstantTable {
    double omega;       // atan(1/(2 sqrt 2))
    double alpha;       // asin(1/3)
    double theta_plus;  // -atan(4 sqrt 2 / 7)
    double catalan;
    double ln2;
    double pi;
    double zeta2;
    double euler_gamma;
};

const ConstantTable& constants();

// |B_{2k}| as an exact rational, 2 <= two_k <= 60, two_k even.
const BigRational& bernoulli_abs_exact(int two_k);
double bernoulli_abs(int two_k);

// zeta(2k) from the Bernoulli table
double zeta_even(int two_k);

// Catalan's constant from sum (-1)^n/(2n+1)^2 with Cohen-Villegas-Zagier acceleration.
double catalan_alternating();

// Limit of a series whose tail after n terms behaves as n^{-s}(c0 + c1/n + ...).
// Partial sums at n0*2^j are combined by Richardson extrapolation.
struct SeriesLimit {
    double value;
    double err_estimate;
};
SeriesLimit algebraic_series_limit(const std::function<long double(long)>& term, double s,
                                   long n0 = 16, int levels = 9);

// Alternating-type series sum_{k>=0} term(k) accelerated by the Levin u transform.
SeriesLimit levin_u_limit(const std::function<long double(long)>& term, int nterms = 30);

}  // namespace numkit
}  // namespace clausen
