#pragma once

// Generalized complete elliptic integrals
//
//   K_{p,q}(r) = int_0^1 ((1 - t^q)(1 - r^q t^q))^(-1/p) dt
//              = (pi_{p,q}/2) 2F1(1/p, 1/q; 1 - 1/p + 1/q; r^q)
//   E_{p,q}(r) = int_0^1 (1 - t^q)^(-1/p) (1 - r^q t^q)^(1/p) dt
//              = (pi_{p,q}/2) 2F1(-1/p, 1/q; 1 - 1/p + 1/q; r^q)
//
// with quadrature, 2F1-series, lambda-series and (for p = q = 2) AGM backends,
// the r-derivative formulas, and the K_p/E_p and K_{a,b,c}/E_{a,b,c} families.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "eval_result.hpp"
#include "gtrig.hpp"
#include "hypergeom.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace pqell {

/// A modulus r in [0,1] bound to the q of its parameter pair, together with
/// the complement r' = (1 - r^q)^(1/q).
class Modulus {
public:
    Modulus(const PQParams& pq, double r) : r_(r), q_(pq.q())
    {
        if (!(r >= 0.0 && r <= 1.0)) detail::domain_fail("Modulus", "r must lie in [0,1]");
        r_pow_ = (r == 0.0) ? 0.0 : std::exp(q_ * std::log(r));
        comp_pow_ = (r == 0.0) ? 1.0 : -std::expm1(q_ * std::log(r));
        r_comp_ = (comp_pow_ == 0.0) ? 0.0 : std::exp(std::log(comp_pow_) / q_);
    }

    double r() const { return r_; }
    double q() const { return q_; }
    double r_comp() const { return r_comp_; }
    /// r^q
    double r_pow() const { return r_pow_; }
    /// (r')^q = 1 - r^q
    double comp_pow() const { return comp_pow_; }

private:
    double r_;
    double q_;
    double r_pow_;
    double comp_pow_;
    double r_comp_;
};

enum class Backend { automatic, quadrature, series, lambda, agm };

struct EllipticOptions {
    Backend backend = Backend::automatic;
    QuadratureSpec quad{};
    SeriesSpec series{};
    double lambda = 0.25;
};

/// Parameters of K_{a,b,c}, E_{a,b,c}: 0 < a < min(c,1), 0 < b < c <= a + b.
struct ABCParams {
    double a;
    double b;
    double c;

    ABCParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_)
    {
        if (!(a > 0.0 && a < std::min(c, 1.0) && b > 0.0 && b < c && c <= a + b))
            detail::domain_fail("ABCParams", "need 0 < a < min(c,1) and 0 < b < c <= a+b");
    }
};

namespace detail {

enum class Kind { first, second };

// Exponent of the (1 - r^q t^q) factor: -1/p for K, +1/p for E.
inline double modular_exponent(const PQParams& pq, Kind kind)
{
    return kind == Kind::first ? -1.0 / pq.p() : 1.0 / pq.p();
}

inline EvalResult quadrature_backend(const PQParams& pq, const Modulus& m, Kind kind, const QuadratureSpec& spec)
{
    const double p = pq.p();
    const double q = pq.q();
    const double e_mod = modular_exponent(pq, kind);
    const double log_r = (m.r() > 0.0) ? std::log(m.r()) : -std::numeric_limits<double>::infinity();
    auto integrand = [=](double t, double tc) {
        const double log_t = log_unit(t, tc);
        const double a = one_minus_power(log_t, q);
        const double b = (m.r() > 0.0) ? one_minus_power(log_r + log_t, q) : 1.0;
        return std::exp(-std::log(a) / p + e_mod * std::log(b));
    };
    const auto r = integrate_01(integrand, spec);
    return EvalResult{r.value, Method::quadrature, r.error_estimate};
}

inline EvalResult series_backend(const PQParams& pq, const Modulus& m, Kind kind, const SeriesSpec& spec)
{
    const double p = pq.p();
    const double q = pq.q();
    const double a = kind == Kind::first ? 1.0 / p : -1.0 / p;
    const auto f = hyp2f1(a, 1.0 / q, 1.0 - 1.0 / p + 1.0 / q, m.r_pow(), spec);
    const double scale = 0.5 * pq.half_period();
    return EvalResult{scale * f.value, Method::hyp_series,
                      scale * f.error_estimate + 2.0 * std::numeric_limits<double>::epsilon() * std::abs(scale * f.value)};
}

// Normalized moments mu_j = b_j / b_0 = alpha^j (1/q)_j / (1/q + 1 - 1/p)_j,
// generated by their exact ratio recurrence in the working precision.
template <class Real>
EvalResult lambda_backend_in(const PQParams& pq, const Modulus& m, Kind kind, double lambda, const SeriesSpec& spec)
{
    const Real inv_q = Real(1) / Real(pq.q());
    const Real inv_p = Real(1) / Real(pq.p());
    const Real alpha = Real(m.r_pow());
    Real mu = Real(1);
    auto moments = [&, j = std::uint32_t{0}](std::uint32_t) mutable {
        const Real out = mu;
        mu *= alpha * (Real(j) + inv_q) / (Real(j) + inv_q + Real(1) - inv_p);
        ++j;
        return out;
    };
    LambdaSpec ls;
    ls.lambda = lambda;
    ls.alpha = m.r_pow();
    ls.eta = pq.q();
    ls.xi = -modular_exponent(pq, kind);
    const auto res = lambda_series<Real>(moments, ls, spec);
    const double scale = 0.5 * pq.half_period();
    return EvalResult{scale * res.value, Method::lambda_series,
                      scale * res.error_estimate + 2.0 * std::numeric_limits<double>::epsilon() * std::abs(scale * res.value)};
}

// Decimal digits the inner binomial sum cancels before the series reaches
// double precision.
inline double lambda_digits_needed(double alpha, double lambda)
{
    if (lambda == 0.0) return 0.0;
    const double worst = std::max(std::abs(alpha - lambda), lambda);
    const double decay = worst / (1.0 - lambda);
    const double terms = std::log(1e-18) / std::log(decay);
    return terms * std::log10((alpha + lambda) / worst);
}

template <unsigned Digits>
using bin_float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                                boost::multiprecision::et_off>;

inline EvalResult lambda_backend(const PQParams& pq, const Modulus& m, Kind kind, double lambda, const SeriesSpec& spec)
{
    if (lambda < 0.0) domain_fail("lambda series", "lambda < 0 is unsupported");
    if (!(lambda < 0.5)) domain_fail("lambda series", "lambda must be < 1/2");
    if (m.r() == 0.0) {
        // alpha = 0: only b_0 survives and the shifted series sums to b_0.
        return EvalResult{0.5 * pq.half_period(), Method::lambda_series, 0.0};
    }
    const double need = lambda_digits_needed(m.r_pow(), lambda) + 20.0;
    if (need <= 15.0) return lambda_backend_in<double>(pq, m, kind, lambda, spec);
    if (need <= 40.0) return lambda_backend_in<bin_float<40>>(pq, m, kind, lambda, spec);
    if (need <= 80.0) return lambda_backend_in<bin_float<80>>(pq, m, kind, lambda, spec);
    if (need <= 160.0) return lambda_backend_in<bin_float<160>>(pq, m, kind, lambda, spec);
    throw NonConvergenceError("lambda series: cancellation would need " + std::to_string(static_cast<int>(need)) +
                              " digits at r^q = " + std::to_string(m.r_pow()) + ", lambda = " + std::to_string(lambda));
}

struct AgmPair {
    double k;
    double e;
    double err;
};

// K = pi / (2 AGM(1, r')), E = K (1 - sum_n 2^(n-1) c_n^2).
inline AgmPair agm_complete(double r)
{
    double a = 1.0;
    double b = std::sqrt((1.0 - r) * (1.0 + r));
    double c = r;
    double weight = 0.5;
    double sum = weight * c * c;
    for (int i = 0; i < 64 && std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        weight *= 2.0;
        sum += weight * c * c;
    }
    const double k = std::numbers::pi / (a + b);
    const double e = k * (1.0 - sum);
    return AgmPair{k, e, 8.0 * std::numeric_limits<double>::epsilon() * k};
}

inline EvalResult evaluate(const PQParams& pq, const Modulus& m, Kind kind, const EllipticOptions& opt)
{
    const double half = 0.5 * pq.half_period();
    const char* name = kind == Kind::first ? "K_pq" : "E_pq";

    if (m.r() == 1.0) {
        if (kind == Kind::second) return EvalResult{1.0, Method::closed_form, 0.0};
        if (pq.p() > 2.0)
            return EvalResult{beta(1.0 / pq.q(), 1.0 - 2.0 / pq.p()) / pq.q(), Method::closed_form,
                              1e-14 * half};
        if (opt.backend == Backend::quadrature) {
            quadrature_backend(pq, m, kind, opt.quad);  // the divergence detector is expected to fire
            throw DivergenceError("K_pq: quadrature accepted a divergent integral at r = 1");
        }
        throw DivergenceError("K_pq: K_{p,q}(1) diverges for p <= 2");
    }

    switch (opt.backend) {
    case Backend::quadrature: return quadrature_backend(pq, m, kind, opt.quad);
    case Backend::series: return series_backend(pq, m, kind, opt.series);
    case Backend::lambda: return lambda_backend(pq, m, kind, opt.lambda, opt.series);
    case Backend::agm: {
        if (!(pq.p() == 2.0 && pq.q() == 2.0)) domain_fail(name, "the AGM backend requires p = q = 2");
        const auto pair = agm_complete(m.r());
        return EvalResult{kind == Kind::first ? pair.k : pair.e, Method::agm, pair.err};
    }
    case Backend::automatic:
        break;
    }
    if (m.r() == 0.0) return EvalResult{half, Method::closed_form, 2.0 * std::numeric_limits<double>::epsilon() * half};
    if (m.r() <= 0.9) {
        try {
            SeriesSpec capped = opt.series;
            capped.n_max = std::min<std::uint32_t>(capped.n_max, 20000);
            return series_backend(pq, m, kind, capped);
        } catch (const NonConvergenceError&) {
        }
    }
    return quadrature_backend(pq, m, kind, opt.quad);
}

} // namespace detail

/// K_{p,q}(r). r = 1 is finite (closed form) only for p > 2.
inline EvalResult K_pq(const PQParams& pq, const Modulus& m, const EllipticOptions& opt = {})
{
    return detail::evaluate(pq, m, detail::Kind::first, opt);
}

inline EvalResult K_pq(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    return K_pq(pq, Modulus(pq, r), opt);
}

/// E_{p,q}(r); E_{p,q}(1) = 1.
inline EvalResult E_pq(const PQParams& pq, const Modulus& m, const EllipticOptions& opt = {})
{
    return detail::evaluate(pq, m, detail::Kind::second, opt);
}

inline EvalResult E_pq(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    return E_pq(pq, Modulus(pq, r), opt);
}

/// K via the lambda-shifted series with g(x) = (1-x^q)^(-1/p), alpha = r^q,
/// eta = q, xi = 1/p and moments b_j = alpha^j (1/q) B(j + 1/q, 1 - 1/p).
inline EvalResult K_pq_lambda(const PQParams& pq, double r, double lambda, const SeriesSpec& spec = {})
{
    const Modulus m(pq, r);
    if (r == 1.0) detail::domain_fail("K_pq_lambda", "r must be < 1");
    return detail::lambda_backend(pq, m, detail::Kind::first, lambda, spec);
}

/// E via the lambda-shifted series, xi = -1/p, same moments as K_pq_lambda.
inline EvalResult E_pq_lambda(const PQParams& pq, double r, double lambda, const SeriesSpec& spec = {})
{
    const Modulus m(pq, r);
    if (r == 1.0) detail::domain_fail("E_pq_lambda", "r must be < 1");
    return detail::lambda_backend(pq, m, detail::Kind::second, lambda, spec);
}

inline EvalResult K_p(double p, double r, const EllipticOptions& opt = {})
{
    return K_pq(PQParams(p, p), r, opt);
}

inline EvalResult E_p(double p, double r, const EllipticOptions& opt = {})
{
    return E_pq(PQParams(p, p), r, opt);
}

/// Classical K(r) = pi / (2 AGM(1, sqrt(1-r^2))).
inline EvalResult classical_K_agm(double r)
{
    if (!(r >= 0.0 && r < 1.0)) detail::domain_fail("classical_K_agm", "r must lie in [0,1)");
    const auto pair = detail::agm_complete(r);
    return EvalResult{pair.k, Method::agm, pair.err};
}

inline EvalResult classical_E_agm(double r)
{
    if (!(r >= 0.0 && r <= 1.0)) detail::domain_fail("classical_E_agm", "r must lie in [0,1]");
    if (r == 1.0) return EvalResult{1.0, Method::closed_form, 0.0};
    const auto pair = detail::agm_complete(r);
    return EvalResult{pair.e, Method::agm, pair.err};
}

inline EvalResult K_abc(const ABCParams& abc, double r, const SeriesSpec& spec = {})
{
    if (!(r >= 0.0 && r < 1.0)) detail::domain_fail("K_abc", "r must lie in [0,1)");
    const double scale = 0.5 * beta(abc.a, abc.b);
    const auto f = hyp2f1(abc.a, abc.b, abc.c, r * r, spec);
    return EvalResult{scale * f.value, Method::hyp_series, scale * f.error_estimate};
}

inline EvalResult E_abc(const ABCParams& abc, double r, const SeriesSpec& spec = {})
{
    if (!(r >= 0.0 && r < 1.0)) detail::domain_fail("E_abc", "r must lie in [0,1)");
    const double scale = 0.5 * beta(abc.a, abc.b);
    const auto f = hyp2f1(abc.a - 1.0, abc.b, abc.c, r * r, spec);
    return EvalResult{scale * f.value, Method::hyp_series, scale * f.error_estimate};
}

// ---------------------------------------------------------------------------
// Derivatives in r. The first-derivative formulas and the E'' formula below are
// exact for p = 2 (any q); for p != 2 the identity
// E' = (q/(p r)) (E - K) no longer holds because the E-integrand's modular
// factor has exponent 1/p - 1 after differentiation, not -1/p.

namespace detail {

inline void interior_modulus(const char* name, double r)
{
    if (!(r > 0.0 && r < 1.0)) domain_fail(name, "r must lie in (0,1)");
}

struct KE {
    double k;
    double e;
    double s;  // (r')^q
    double rq; // r^q
};

inline KE ke_at(const PQParams& pq, double r, const EllipticOptions& opt)
{
    const Modulus m(pq, r);
    return KE{K_pq(pq, m, opt).value, E_pq(pq, m, opt).value, m.comp_pow(), m.r_pow()};
}

} // namespace detail

/// dK/dr = (E - r'^q K) / (r r'^q).
inline double dK_dr(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    detail::interior_modulus("dK_dr", r);
    const auto v = detail::ke_at(pq, r, opt);
    return (v.e - v.s * v.k) / (r * v.s);
}

/// dE/dr = (q / (p r)) (E - K).
inline double dE_dr(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    detail::interior_modulus("dE_dr", r);
    const auto v = detail::ke_at(pq, r, opt);
    return pq.q() / (pq.p() * r) * (v.e - v.k);
}

/// d^2E/dr^2 = (q / (p r^2)) [ (q/p - 1/r'^q - 1) E + (2 - q/p) K ].
inline double d2E_dr2(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    detail::interior_modulus("d2E_dr2", r);
    const auto v = detail::ke_at(pq, r, opt);
    const double qp = pq.q() / pq.p();
    return qp / (r * r) * ((qp - 1.0 / v.s - 1.0) * v.e + (2.0 - qp) * v.k);
}

/// d^2K/dr^2 obtained by differentiating dK/dr = N/D, N = E - sK, D = r s,
/// s = 1 - r^q, with s' = -q r^(q-1) and dE/dr from above:
///   K'' = (N' - K' D') / D,  N' = E' + q r^(q-1) K - s K',  D' = s - q r^q.
inline double d2K_dr2(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    detail::interior_modulus("d2K_dr2", r);
    const auto v = detail::ke_at(pq, r, opt);
    const double q = pq.q();
    const double d = r * v.s;
    const double k1 = (v.e - v.s * v.k) / d;
    const double e1 = q / (pq.p() * r) * (v.e - v.k);
    const double n1 = e1 + q * (v.rq / r) * v.k - v.s * k1;
    const double d1 = v.s - q * v.rq;
    return (n1 - k1 * d1) / d;
}

/// Printed variant of the K'' expression, without the 1/(r^2 r'^{2q})
/// denominators. Errata reporting only.
inline double d2K_dr2_printed(const PQParams& pq, double r, const EllipticOptions& opt = {})
{
    detail::interior_modulus("d2K_dr2_printed", r);
    const auto v = detail::ke_at(pq, r, opt);
    const double q = pq.q();
    const double qp = q / pq.p();
    return (qp * v.s + q * v.rq - 2.0 * v.s) * v.e + (2.0 * v.s * v.s - qp * v.s) * v.k;
}

/// Perimeter of the p-ellipse with semi-axes a >= b: 4 a E_p(r), r^p = 1 - (b/a)^p.
inline double p_ellipse_perimeter(double a, double b, double p, const EllipticOptions& opt = {})
{
    if (!(a > 0.0 && b > 0.0 && b <= a)) detail::domain_fail("p_ellipse_perimeter", "need 0 < b <= a");
    if (!(p > 1.0)) detail::domain_fail("p_ellipse_perimeter", "need p > 1");
    const double ratio_pow = std::pow(b / a, p);
    const double r = std::pow(1.0 - ratio_pow, 1.0 / p);
    return 4.0 * a * E_p(p, r, opt).value;
}

} // namespace pqell

namespace pqell {

// Exact r-derivatives for all p,q by termwise differentiation of the 2F1
// representation: with z = r^q, F' = (ab/c) F(a+1,b+1;c+1;z) and
// F'' = (a(a+1) b(b+1) / (c(c+1))) F(a+2,b+2;c+2;z).
namespace detail {

struct SeriesDerivatives {
    double d1;
    double d2;
};

inline SeriesDerivatives series_derivatives(const PQParams& pq, double r, Kind kind, const SeriesSpec& spec)
{
    interior_modulus("series_derivatives", r);
    const double p = pq.p();
    const double q = pq.q();
    const double a = kind == Kind::first ? 1.0 / p : -1.0 / p;
    const double b = 1.0 / q;
    const double c = 1.0 - 1.0 / p + 1.0 / q;
    const double z = std::pow(r, q);
    const double f1 = a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z, spec).value;
    const double f2 = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0)) * hyp2f1(a + 2.0, b + 2.0, c + 2.0, z, spec).value;
    const double dz = q * std::pow(r, q - 1.0);
    const double d2z = q * (q - 1.0) * std::pow(r, q - 2.0);
    const double scale = 0.5 * pq.half_period();
    return SeriesDerivatives{scale * f1 * dz, scale * (f2 * dz * dz + f1 * d2z)};
}

} // namespace detail

/// dK/dr for any p,q > 1 from the hypergeometric series.
inline double dK_dr_series(const PQParams& pq, double r, const SeriesSpec& spec = {})
{
    return detail::series_derivatives(pq, r, detail::Kind::first, spec).d1;
}

inline double d2K_dr2_series(const PQParams& pq, double r, const SeriesSpec& spec = {})
{
    return detail::series_derivatives(pq, r, detail::Kind::first, spec).d2;
}

inline double dE_dr_series(const PQParams& pq, double r, const SeriesSpec& spec = {})
{
    return detail::series_derivatives(pq, r, detail::Kind::second, spec).d1;
}

inline double d2E_dr2_series(const PQParams& pq, double r, const SeriesSpec& spec = {})
{
    return detail::series_derivatives(pq, r, detail::Kind::second, spec).d2;
}

} // namespace pqell
