#pragma once

// Truncated hypergeometric series: Gauss 2F1, 3F2, and the lambda-shifted
// resummation of moment integrals
//
//   int_0^1 g(x) (1 - alpha x^eta)^(-xi) dx
//     = sum_n (xi)_n / (n! (1-lambda)^(n+xi)) sum_{j<=n} C(n,j) (-lambda)^(n-j) b_j,
//   b_j = alpha^j int_0^1 x^(j eta) g(x) dx.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "eval_result.hpp"

namespace pqell {

struct SeriesSpec {
    double tol = 1e-17;        // stop once |term| <= tol * |partial sum| twice in a row
    std::uint32_t n_min = 2;
    std::uint32_t n_max = 200000;

    void validate() const
    {
        if (!(tol > 0.0)) detail::domain_fail("SeriesSpec", "tol must be positive");
        if (n_min < 2 || n_min > n_max) detail::domain_fail("SeriesSpec", "need 2 <= n_min <= n_max");
    }
};

struct LambdaSpec {
    double lambda = 0.0;
    double alpha = 1.0;  // in (0,1]
    double eta = 1.0;    // > 0
    double xi = 0.0;

    void validate() const
    {
        if (lambda < 0.0)
            detail::domain_fail("LambdaSpec", "lambda < 0 is unsupported");
        if (!(lambda < 0.5)) detail::domain_fail("LambdaSpec", "lambda must be < 1/2");
        if (!(alpha > 0.0 && alpha <= 1.0)) detail::domain_fail("LambdaSpec", "alpha must lie in (0,1]");
        if (!(eta > 0.0)) detail::domain_fail("LambdaSpec", "eta must be positive");
        if (!std::isfinite(xi)) detail::domain_fail("LambdaSpec", "xi must be finite");
    }
};

namespace detail {

inline bool is_nonpositive_integer(double c)
{
    return c <= 0.0 && c == std::floor(c);
}

// Generic pFq summation at real z, |z| < 1.
inline EvalResult sum_hypergeometric(std::span<const double> upper, std::span<const double> lower,
                                     double z, const SeriesSpec& spec, const char* name)
{
    spec.validate();
    for (double b : lower)
        if (is_nonpositive_integer(b))
            domain_fail(name, "lower parameter is a non-positive integer");
    if (!(std::abs(z) < 1.0)) domain_fail(name, "requires |z| < 1");

    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto ratio_at = [&](std::uint32_t n) {
        const double nn = static_cast<double>(n);
        double r = z / (nn + 1.0);
        for (double a : upper) r *= a + nn;
        for (double b : lower) r /= b + nn;
        return r;
    };

    double sum = 1.0;
    double abs_sum = 1.0;
    double term = 1.0;
    int small_run = 0;
    for (std::uint32_t n = 0; n < spec.n_max; ++n) {
        term *= ratio_at(n);
        sum += term;
        abs_sum += std::abs(term);
        small_run = (std::abs(term) <= spec.tol * std::abs(sum)) ? small_run + 1 : 0;
        if (n + 1 < spec.n_min || small_run < 2) continue;

        const double next_ratio = std::abs(ratio_at(n + 1));
        if (term != 0.0 && next_ratio >= 1.0) continue;
        const double tail = (term == 0.0) ? 0.0 : std::abs(term) * next_ratio / (1.0 - next_ratio);
        return EvalResult{sum, Method::hyp_series, tail + 16.0 * eps * abs_sum};
    }
    throw NonConvergenceError(std::string(name) + ": n_max = " + std::to_string(spec.n_max) +
                              " reached before convergence");
}

} // namespace detail

/// Gauss hypergeometric 2F1(a,b;c;z) by direct summation, |z| < 1.
inline EvalResult hyp2f1(double a, double b, double c, double z, const SeriesSpec& spec = {})
{
    const double up[] = {a, b};
    const double lo[] = {c};
    return detail::sum_hypergeometric(up, lo, z, spec, "hyp2f1");
}

/// 3F2(a1,a2,a3;b1,b2;z) by direct summation, |z| < 1.
inline EvalResult hyp3f2(double a1, double a2, double a3, double b1, double b2, double z,
                         const SeriesSpec& spec = {})
{
    const double up[] = {a1, a2, a3};
    const double lo[] = {b1, b2};
    return detail::sum_hypergeometric(up, lo, z, spec, "hyp3f2");
}

/// Lambda-shifted moment series. `b(j)` yields the moment coefficient b_j and
/// is invoked exactly once per j, in increasing order, so it may be stateful.
/// All arithmetic runs in `Real`; the inner alternating binomial sum loses
/// roughly n*log10((alpha+lambda)/max(|alpha-lambda|, lambda)) digits, so a
/// multiprecision `Real` is needed when alpha is close to 1.
///
/// The tail estimate assumes b_j = alpha^j * (moments of a positive measure on
/// [0,1]), for which the n-th term decays like (max(|alpha-lambda|,lambda)/(1-lambda))^n.
template <class Real = double, class Moments>
    requires std::invocable<Moments&, std::uint32_t>
EvalResult lambda_series(Moments&& b, const LambdaSpec& ls, const SeriesSpec& spec = {})
{
    ls.validate();
    spec.validate();
    using std::abs;
    using std::pow;

    const Real lambda = Real(ls.lambda);
    const Real one_minus_lambda = Real(1) - lambda;
    const Real shrink = Real(1) / one_minus_lambda;
    const Real xi = Real(ls.xi);
    const Real tol = Real(spec.tol);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    const double decay = std::max(std::abs(ls.alpha - ls.lambda), ls.lambda) / (1.0 - ls.lambda);

    std::vector<Real> moments;
    Real outer = Real(pow(one_minus_lambda, -xi));  // (xi)_n / (n! (1-lambda)^(n+xi))
    Real sum = Real(0);
    double abs_sum = 0.0;
    int small_run = 0;

    for (std::uint32_t n = 0; n < spec.n_max; ++n) {
        moments.push_back(Real(b(n)));

        Real inner = moments[n];
        if (ls.lambda != 0.0) {
            // sum_{j=0}^{n} C(n,j) (-lambda)^(n-j) b_j, accumulated from j = n down.
            Real coef = Real(1);
            for (std::uint32_t j = n; j-- > 0;) {
                coef *= -lambda * Real(j + 1) / Real(n - j);
                inner += coef * moments[j];
            }
        }
        const Real term = outer * inner;
        sum += term;
        const double term_d = static_cast<double>(term);
        abs_sum += std::abs(term_d);
        outer *= (xi + Real(n)) / Real(n + 1) * shrink;

        small_run = (abs(term) <= tol * abs(sum)) ? small_run + 1 : 0;
        if (n + 1 >= spec.n_min && small_run >= 2) {
            const double tail = (decay < 1.0) ? std::abs(term_d) * decay / (1.0 - decay)
                                              : std::abs(term_d);
            return EvalResult{static_cast<double>(sum), Method::lambda_series, tail + 4.0 * eps * abs_sum};
        }
    }
    throw NonConvergenceError("lambda_series: n_max = " + std::to_string(spec.n_max) +
                              " reached before convergence");
}

/// Finite coefficient sequence, zero-extended past its end.
template <class Real = double>
EvalResult lambda_series(std::span<const double> b, const LambdaSpec& ls, const SeriesSpec& spec = {})
{
    auto gen = [b](std::uint32_t j) { return j < b.size() ? b[j] : 0.0; };
    return lambda_series<Real>(gen, ls, spec);
}

} // namespace pqell
