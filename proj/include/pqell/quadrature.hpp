#pragma once

// Double-exponential (tanh-sinh) quadrature on (0,1).
//
// Nodes cluster doubly exponentially at both endpoints, so integrands with
// power-type endpoint singularities t^{-b}, (1-t)^{-b}, b < 1, converge at
// the same rate as smooth ones. Every node is strictly inside (0,1) and the
// complement 1-t is carried exactly, so integrands that depend on (1-t)
// never see catastrophic cancellation near t = 1.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pqell {

struct QuadratureSpec {
    double target_abs_tol = 1e-12;
    double target_rel_tol = 1e-12;
    int max_level = 12;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // last inter-level difference
    int levels_used = 0;
};

namespace detail {

inline constexpr int kQuadMaxLevel = 12;
inline constexpr double kQuadBaseStep = 0.5;
// At u = 6 the nearest node to an endpoint is ~1e-275 away from it.
inline constexpr double kQuadMaxAbscissa = 6.0;

struct QuadNode {
    double t;   // abscissa in (0, 1/2]
    double tc;  // 1 - t, exact
    double w;   // dt/du
};

struct QuadTable {
    // levels[0] holds u = 0, h, 2h, ...; levels[k] the odd multiples of h/2^k.
    std::vector<std::vector<QuadNode>> levels;
};

inline QuadNode make_quad_node(double u)
{
    const double s = 0.5 * std::numbers::pi * std::sinh(u);
    const double e = std::exp(-2.0 * s);
    const double denom = 1.0 + e;
    QuadNode n{};
    n.t = e / denom;
    n.tc = 1.0 / denom;
    n.w = std::numbers::pi * std::cosh(u) * e / (denom * denom);
    return n;
}

inline QuadTable build_quad_table()
{
    QuadTable table;
    table.levels.resize(kQuadMaxLevel + 1);
    for (int k = 0;; ++k) {
        const double u = k * kQuadBaseStep;
        if (u > kQuadMaxAbscissa) break;
        table.levels[0].push_back(make_quad_node(u));
    }
    for (int level = 1; level <= kQuadMaxLevel; ++level) {
        const double h = kQuadBaseStep / static_cast<double>(1 << level);
        auto& nodes = table.levels[static_cast<std::size_t>(level)];
        for (int k = 1;; k += 2) {
            const double u = k * h;
            if (u > kQuadMaxAbscissa) break;
            nodes.push_back(make_quad_node(u));
        }
    }
    return table;
}

// Built once, on first use; thread-safe static initialization.
inline const QuadTable& quad_table()
{
    static const QuadTable table = build_quad_table();
    return table;
}

template <class F>
double eval_integrand(F& f, double t, double tc)
{
    if constexpr (std::invocable<F&, double, double>)
        return static_cast<double>(f(t, tc));
    else
        return static_cast<double>(f(t));
}

} // namespace detail

inline void QuadratureSpec::validate() const
{
    if (!(target_abs_tol > 0.0) || !(target_rel_tol > 0.0))
        detail::domain_fail("QuadratureSpec", "tolerances must be positive");
    if (max_level < 1 || max_level > detail::kQuadMaxLevel)
        detail::domain_fail("QuadratureSpec",
                            "max_level must lie in [1, " + std::to_string(detail::kQuadMaxLevel) + "]");
}

/// Integrates f over (0,1). `f` is called either as f(t) or, if it accepts two
/// arguments, as f(t, 1-t) with the complement computed without cancellation.
///
/// Throws DivergenceError when the refinement differences stop shrinking (by at
/// least a factor two over three consecutive levels) or the sum overflows, and
/// NonConvergenceError when max_level is reached first.
template <class F>
    requires std::invocable<F&, double> || std::invocable<F&, double, double>
QuadratureResult integrate_01(F&& f, const QuadratureSpec& spec = {})
{
    spec.validate();
    const auto& table = detail::quad_table();
    constexpr double eps = 2.220446049250313e-16;

    double sum = 0.0;
    double abs_sum = 0.0;
    auto accumulate = [&](const std::vector<detail::QuadNode>& nodes, bool include_centre) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            if (include_centre && i == 0) {
                const double v = n.w * detail::eval_integrand(f, n.t, n.tc);
                sum += v;
                abs_sum += std::abs(v);
                continue;
            }
            const double v1 = n.w * detail::eval_integrand(f, n.t, n.tc);
            const double v2 = n.w * detail::eval_integrand(f, n.tc, n.t);
            sum += v1 + v2;
            abs_sum += std::abs(v1) + std::abs(v2);
        }
    };
    auto check_finite = [&](int level) {
        if (std::isnan(sum))
            throw DomainError("integrate_01: integrand produced NaN at level " + std::to_string(level));
        if (!std::isfinite(sum))
            throw DivergenceError("integrate_01: integrand sum overflowed (divergent integral)");
    };

    accumulate(table.levels[0], true);
    check_finite(0);
    double h = detail::kQuadBaseStep;
    double previous = h * sum;
    double last_diff = 0.0;
    int stalled = 0;

    for (int level = 1; level <= spec.max_level; ++level) {
        accumulate(table.levels[static_cast<std::size_t>(level)], false);
        check_finite(level);
        h *= 0.5;
        const double current = h * sum;
        const double diff = std::abs(current - previous);
        const double noise = 64.0 * eps * h * abs_sum;
        const double target = std::max(spec.target_abs_tol, spec.target_rel_tol * std::abs(current));

        if (level >= 3 && (diff <= target || diff <= noise)) {
            QuadratureResult result;
            result.value = current;
            result.error_estimate = std::max(diff, noise);
            result.levels_used = level;
            return result;
        }
        if (level >= 2) {
            stalled = (diff > 0.5 * last_diff) ? stalled + 1 : 0;
            if (stalled >= 3)
                throw DivergenceError("integrate_01: refinement differences stopped shrinking at level " +
                                      std::to_string(level) + " (divergent or too-singular integrand)");
        }
        last_diff = diff;
        previous = current;
    }
    throw NonConvergenceError("integrate_01: tolerance not met by max_level " +
                              std::to_string(spec.max_level));
}

/// Integrates f over [a,b] by the affine map onto (0,1). A two-argument `f`
/// receives (x, b-x).
template <class F>
    requires std::invocable<F&, double> || std::invocable<F&, double, double>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {})
{
    const double len = b - a;
    auto mapped = [&](double t, double tc) {
        const double x = (t <= 0.5) ? a + len * t : b - len * tc;
        if constexpr (std::invocable<F&, double, double>)
            return len * static_cast<double>(f(x, len * tc));
        else
            return len * static_cast<double>(f(x));
    };
    auto r = integrate_01(mapped, spec);
    return r;
}

} // namespace pqell
