#pragma once

// Generalized (p,q)-trigonometric functions.
//
//   arcsin_{p,q}(x) = int_0^x (1 - t^q)^(-1/p) dt,   x in [0,1]
//   sin_{p,q} = arcsin_{p,q}^{-1} on [0, pi_{p,q}/2], extended to R by
//   sin(pi - x) = sin(x), oddness, and 2 pi_{p,q}-periodicity.
//   cos_{p,q} = (1 - sin^q)^(1/p) on the first quarter period, even,
//   2 pi_{p,q}-periodic and odd about pi_{p,q}/2.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace pqell {

/// Exponent pair (p,q). The standard constructor enforces p, q > 1.
class PQParams {
public:
    PQParams(double p, double q) : PQParams(p, q, 1.0) {}

    /// Wider domain p > 1, q > 0 on which K_{p,q}, E_{p,q} and pi_{p,q}
    /// still converge; the Turán and corollary checks step q down to 1 and below.
    static PQParams relaxed(double p, double q) { return PQParams(p, q, 0.0); }

    double p() const { return p_; }
    double q() const { return q_; }
    /// pi_{p,q}, computed eagerly at construction.
    double half_period() const { return pi_pq_; }

    friend bool operator==(const PQParams& a, const PQParams& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

private:
    PQParams(double p, double q, double q_floor) : p_(p), q_(q)
    {
        if (!std::isfinite(p) || !std::isfinite(q) || !(p > 1.0) || !(q > q_floor))
            detail::domain_fail("PQParams", "need finite p > 1 and q > " + std::to_string(q_floor) +
                                                " (got p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
        pi_pq_ = 2.0 / q_ * beta(1.0 - 1.0 / p_, 1.0 / q_);
    }

    double p_;
    double q_;
    double pi_pq_ = 0.0;
};

/// The generalized half-period constant pi_{p,q} = (2/q) B(1 - 1/p, 1/q).
struct HalfPeriod {
    double pi_pq;
};

inline HalfPeriod pi_pq(const PQParams& params)
{
    return HalfPeriod{params.half_period()};
}

namespace detail {

inline QuadratureSpec gtrig_quad_spec()
{
    QuadratureSpec spec;
    spec.target_abs_tol = 1e-15;
    spec.target_rel_tol = 1e-14;
    return spec;
}

// log(x^q s^q) and 1 - x^q s^q for s in (0,1) given its complement sc.
inline double one_minus_power(double log_base, double q)
{
    return -std::expm1(q * log_base);
}

inline double log_unit(double s, double sc)
{
    return (s < 0.5) ? std::log(s) : std::log1p(-sc);
}

// int_0^x dt / ((1-t^q)(1-r^q t^q))^(1/p), via t = x s.
inline double incomplete_first_kind(const PQParams& pq, double x, double r)
{
    if (x == 0.0) return 0.0;
    const double p = pq.p();
    const double q = pq.q();
    const double log_x = std::log(x);
    const double log_r = (r > 0.0) ? std::log(r) : -std::numeric_limits<double>::infinity();
    auto integrand = [=](double s, double sc) {
        const double log_t = log_x + log_unit(s, sc);
        const double a = one_minus_power(log_t, q);
        const double b = (r > 0.0) ? one_minus_power(log_r + log_t, q) : 1.0;
        return std::exp(-(std::log(a) + std::log(b)) / p);
    };
    return x * integrate_01(integrand, gtrig_quad_spec()).value;
}

// Reduces x to y in [-pi, pi] (pi = pi_{p,q}).
inline double reduce_full_period(double x, double pi)
{
    double y = std::fmod(x, 2.0 * pi);
    if (y > pi) y -= 2.0 * pi;
    if (y < -pi) y += 2.0 * pi;
    return y;
}

inline constexpr double kAbscissaTol = 4.0 * std::numeric_limits<double>::epsilon();

// Solves F(s) = target for s in [0,1], F increasing with F' = deriv(s);
// safeguarded Newton inside a shrinking bracket.
template <class F, class D>
double invert_increasing(F&& func, D&& deriv, double target, double guess)
{
    double lo = 0.0;
    double hi = 1.0;
    double s = std::clamp(guess, 0.0, 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        const double residual = func(s) - target;
        if (residual == 0.0) return s;
        if (residual < 0.0)
            lo = s;
        else
            hi = s;
        const double d = deriv(s);
        double next = (std::isfinite(d) && d > 0.0) ? s - residual / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - s);
        s = next;
        if (step <= kAbscissaTol || hi - lo <= kAbscissaTol) return s;
    }
    throw NonConvergenceError("invert_increasing: no convergence in 200 iterations");
}

} // namespace detail

/// arcsin_{p,q}(x) for x in [0,1].
inline double arcsin_pq(const PQParams& pq, double x)
{
    if (!(x >= 0.0 && x <= 1.0)) detail::domain_fail("arcsin_pq", "x must lie in [0,1]");
    return detail::incomplete_first_kind(pq, x, 0.0);
}

/// sin_{p,q}(x) for any real x.
inline double sin_pq(const PQParams& pq, double x)
{
    if (!std::isfinite(x)) detail::domain_fail("sin_pq", "x must be finite");
    const double pi = pq.half_period();
    const double half = 0.5 * pi;
    double y = detail::reduce_full_period(x, pi);
    const double sign = (y < 0.0) ? -1.0 : 1.0;
    y = std::abs(y);
    if (y > half) y = pi - y;
    if (y == 0.0) return 0.0;
    if (y >= half) return sign;

    const double p = pq.p();
    const double q = pq.q();
    auto f = [&](double s) { return arcsin_pq(pq, s); };
    auto df = [&](double s) { return std::pow(-std::expm1(q * std::log(s)), -1.0 / p); };
    return sign * detail::invert_increasing(f, df, y, std::min(y, 1.0));
}

/// cos_{p,q}(x) for any real x.
inline double cos_pq(const PQParams& pq, double x)
{
    if (!std::isfinite(x)) detail::domain_fail("cos_pq", "x must be finite");
    const double pi = pq.half_period();
    const double half = 0.5 * pi;
    double y = std::abs(detail::reduce_full_period(x, pi));
    double sign = 1.0;
    if (y > half) {
        y = pi - y;
        sign = -1.0;
    }
    const double s = sin_pq(pq, y);
    if (s >= 1.0) return 0.0;
    return sign * std::pow(-std::expm1(pq.q() * std::log(s)), 1.0 / pq.p());
}

/// tan_{p,q}(x) = sin_{p,q}(x) / cos_{p,q}(x); throws PoleError within 1e-9
/// of an odd multiple of pi_{p,q}/2.
inline double tan_pq(const PQParams& pq, double x)
{
    const double pi = pq.half_period();
    const double y = std::fmod(std::abs(x), pi);
    if (std::abs(y - 0.5 * pi) < 1e-9)
        throw PoleError("tan_pq: argument within 1e-9 of a pole");
    return sin_pq(pq, x) / cos_pq(pq, x);
}

/// Generalized inverse Jacobian elliptic function arcsn_{p,q}(x, r).
inline double arcsn_pq(const PQParams& pq, double x, double r)
{
    if (!(x >= 0.0 && x <= 1.0)) detail::domain_fail("arcsn_pq", "x must lie in [0,1]");
    if (!(r >= 0.0 && r < 1.0)) detail::domain_fail("arcsn_pq", "r must lie in [0,1)");
    return detail::incomplete_first_kind(pq, x, r);
}

/// sn_{p,q}(u, r), the inverse of arcsn_{p,q}(., r) on [0, K_{p,q}(r)].
inline double sn_pq(const PQParams& pq, double u, double r)
{
    if (!(r >= 0.0 && r < 1.0)) detail::domain_fail("sn_pq", "r must lie in [0,1)");
    const double k = arcsn_pq(pq, 1.0, r);
    if (!(u >= 0.0 && u <= k * (1.0 + 1e-14))) detail::domain_fail("sn_pq", "u must lie in [0, K_{p,q}(r)]");
    if (u == 0.0) return 0.0;
    if (u >= k) return 1.0;
    const double p = pq.p();
    const double q = pq.q();
    auto f = [&](double x) { return arcsn_pq(pq, x, r); };
    auto df = [&](double x) {
        const double tq = std::pow(x, q);
        return std::pow((1.0 - tq) * (1.0 - std::pow(r, q) * tq), -1.0 / p);
    };
    return detail::invert_increasing(f, df, u, std::min(u, 1.0));
}

} // namespace pqell
