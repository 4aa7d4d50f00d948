#pragma once

// Grid-based numerical adjudication of inequality and convexity claims for
// K_{p,q}, E_{p,q}: monotonicity and (geometric) convexity in r, Turán-type
// inequalities in p and q, and the K/E double inequalities at p = q = 2.
//
// A point is decided only when its margin exceeds 10x the summed error
// estimates of the values involved; otherwise it is counted indeterminate.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "elliptic.hpp"
#include "errors.hpp"
#include "gtrig.hpp"
#include "quadrature.hpp"

namespace pqell {

enum class Status { holds, fails, sign_reversed, contradicted, indeterminate };

constexpr std::string_view to_string(Status s)
{
    switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::sign_reversed: return "sign-reversed";
    case Status::contradicted: return "contradicted";
    case Status::indeterminate: return "indeterminate";
    }
    return "unknown";
}

// printed_claim: a printed statement under test; a negative outcome is an
// erratum. invariant: a property of this library; a negative outcome is a bug.
enum class ClaimKind { printed_claim, invariant };

enum class Direction { p, q };

struct GridSpec {
    std::vector<double> p_values;
    std::vector<double> q_values;
    std::vector<double> r_values;
    std::vector<double> deltas;  // parameter steps for Turán ratios
    double margin = 1e-3;

    static GridSpec defaults()
    {
        GridSpec g;
        g.p_values = {1.25, 1.5, 2.0, 2.25, 3.0, 4.0};
        g.q_values = {1.25, 1.5, 2.0, 2.25, 3.0, 4.0};
        g.r_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        g.deltas = {0.25, 0.5};
        return g;
    }

    void validate() const
    {
        auto check_list = [](const std::vector<double>& v, const char* name) {
            if (v.empty()) detail::domain_fail("GridSpec", std::string(name) + " must be non-empty");
            if (!std::is_sorted(v.begin(), v.end()))
                detail::domain_fail("GridSpec", std::string(name) + " must be ascending");
        };
        check_list(p_values, "p_values");
        check_list(q_values, "q_values");
        check_list(r_values, "r_values");
        if (p_values.front() <= 1.0 + margin || q_values.front() <= 1.0 + margin)
            detail::domain_fail("GridSpec", "p and q values must exceed 1 + margin");
        if (r_values.front() <= margin || r_values.back() >= 1.0 - margin)
            detail::domain_fail("GridSpec", "r values must lie in (margin, 1 - margin)");
        for (double d : deltas)
            if (!(d >= 0.0)) detail::domain_fail("GridSpec", "deltas must be non-negative");
    }
};

struct Witness {
    std::string point;
    double margin = 0.0;
};

struct ClaimReport {
    std::string claim_id;
    std::string location;   // where the claim comes from, e.g. "Turan inequalities in p"
    std::string statement;  // the claim in words/formula
    ClaimKind kind = ClaimKind::invariant;
    Status status = Status::holds;
    std::optional<Witness> witness;  // worst point; always set unless status == holds
    double min_margin = std::numeric_limits<double>::infinity();
    int points_checked = 0;
    int points_indeterminate = 0;
    std::string detail;
    GridSpec grid;
};

namespace detail {

inline std::string fmt_g(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string point_label(double p, double q, double r)
{
    return "p=" + fmt_g(p) + " q=" + fmt_g(q) + " r=" + fmt_g(r);
}

// Accumulates signed margins (positive = claim satisfied) over grid points.
class ClaimTally {
public:
    void add(const std::string& point, double margin, double noise, bool equality_case = false)
    {
        ++checked_;
        if (!equality_case && !(std::abs(margin) > 10.0 * noise)) {
            ++indeterminate_;
            if (!first_indeterminate_) first_indeterminate_ = Witness{point, margin};
            return;
        }
        if (equality_case && std::abs(margin) <= 10.0 * noise) margin = 0.0;
        if (margin >= 0.0)
            ++positive_;
        else
            ++negative_;
        if (margin < min_margin_ || !worst_) {
            min_margin_ = margin;
            worst_ = Witness{point, margin};
        }
        if (margin > max_margin_ || !best_) {
            max_margin_ = margin;
            best_ = Witness{point, margin};
        }
    }

    // Tolerance-style check: |error| <= tol.
    void add_tolerance(const std::string& point, double error, double tol)
    {
        add(point, tol - std::abs(error), 0.0, true);
        if (std::abs(error) > max_error_) max_error_ = std::abs(error);
    }

    void fail_point(const std::string& point, const std::string& why)
    {
        ++checked_;
        ++negative_;
        min_margin_ = -std::numeric_limits<double>::infinity();
        worst_ = Witness{point + " (" + why + ")", min_margin_};
    }

    int positive() const { return positive_; }
    int negative() const { return negative_; }
    double max_error() const { return max_error_; }

    // directional: a uniformly negative outcome means the claimed direction is
    // reversed rather than merely false.
    ClaimReport finish(std::string id, std::string location, std::string statement, ClaimKind kind,
                       bool directional, const GridSpec& grid, std::string detail_text = {}) const
    {
        ClaimReport rep;
        rep.claim_id = std::move(id);
        rep.location = std::move(location);
        rep.statement = std::move(statement);
        rep.kind = kind;
        rep.grid = grid;
        rep.points_checked = checked_;
        rep.points_indeterminate = indeterminate_;
        rep.detail = std::move(detail_text);
        rep.min_margin = worst_ ? min_margin_ : std::numeric_limits<double>::quiet_NaN();

        const Status negative_status = kind == ClaimKind::invariant ? Status::fails : Status::contradicted;
        if (negative_ == 0 && indeterminate_ == 0 && positive_ > 0) {
            rep.status = Status::holds;
            rep.witness = worst_;
        } else if (negative_ == 0) {
            rep.status = Status::indeterminate;
            rep.witness = first_indeterminate_ ? first_indeterminate_ : worst_;
        } else if (directional && positive_ == 0 && kind == ClaimKind::printed_claim) {
            rep.status = Status::sign_reversed;
            rep.witness = best_;  // the point closest to satisfying the claim
            rep.min_margin = max_margin_;
        } else {
            rep.status = negative_status;
            rep.witness = worst_;
        }
        return rep;
    }

private:
    int checked_ = 0;
    int indeterminate_ = 0;
    int positive_ = 0;
    int negative_ = 0;
    double min_margin_ = std::numeric_limits<double>::infinity();
    double max_margin_ = -std::numeric_limits<double>::infinity();
    double max_error_ = 0.0;
    std::optional<Witness> worst_;
    std::optional<Witness> best_;
    std::optional<Witness> first_indeterminate_;
};

// K or E at relaxed parameters (p > 1, q > 0), default backend selection.
inline EvalResult eval_relaxed(Kind kind, double p, double q, double r)
{
    const auto pq = PQParams::relaxed(p, q);
    return kind == Kind::first ? K_pq(pq, r) : E_pq(pq, r);
}

struct LogValue {
    double log;
    double err;  // absolute error of the log
};

inline LogValue log_eval(Kind kind, double p, double q, double r)
{
    const auto v = eval_relaxed(kind, p, q, r);
    return LogValue{std::log(v.value), v.error_estimate / v.value};
}

inline const char* kind_name(Kind kind)
{
    return kind == Kind::first ? "K" : "E";
}

} // namespace detail

/// Shape checks in r on every (p,q) of the grid:
/// K increasing, log-convex (midpoint), geometrically convex; E decreasing,
/// geometrically concave. Uses the pairs (r_{i-1}, r_{i+1}) of consecutive triples.
inline std::vector<ClaimReport> check_r_monotone_convex(const GridSpec& grid)
{
    grid.validate();
    using detail::Kind;
    detail::ClaimTally k_inc, k_logconv, k_geoconv, e_dec, e_geoconc;
    const auto& rs = grid.r_values;

    for (double p : grid.p_values) {
        for (double q : grid.q_values) {
            std::vector<detail::LogValue> lk, le;
            std::vector<EvalResult> vk, ve;
            for (double r : rs) {
                const auto pq = PQParams(p, q);
                vk.push_back(K_pq(pq, r));
                ve.push_back(E_pq(pq, r));
                lk.push_back({std::log(vk.back().value), vk.back().error_estimate / vk.back().value});
                le.push_back({std::log(ve.back().value), ve.back().error_estimate / ve.back().value});
            }
            for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
                const auto label = detail::point_label(p, q, rs[i]) + ".." + detail::fmt_g(rs[i + 1]);
                const bool same = rs[i] == rs[i + 1];
                k_inc.add(label, vk[i + 1].value - vk[i].value, vk[i].error_estimate + vk[i + 1].error_estimate, same);
                e_dec.add(label, ve[i].value - ve[i + 1].value, ve[i].error_estimate + ve[i + 1].error_estimate, same);
            }
            for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
                const double lo = rs[i - 1];
                const double hi = rs[i + 1];
                const auto label = detail::point_label(p, q, lo) + ".." + detail::fmt_g(hi);
                const bool same = lo == hi;
                const auto mid = detail::log_eval(Kind::first, p, q, 0.5 * (lo + hi));
                const auto gk = detail::log_eval(Kind::first, p, q, std::sqrt(lo * hi));
                const auto ge = detail::log_eval(Kind::second, p, q, std::sqrt(lo * hi));
                const double k_avg = 0.5 * (lk[i - 1].log + lk[i + 1].log);
                const double k_noise = 0.5 * (lk[i - 1].err + lk[i + 1].err);
                const double e_avg = 0.5 * (le[i - 1].log + le[i + 1].log);
                const double e_noise = 0.5 * (le[i - 1].err + le[i + 1].err);
                k_logconv.add(label, k_avg - mid.log, k_noise + mid.err, same);
                k_geoconv.add(label, k_avg - gk.log, k_noise + gk.err, same);
                e_geoconc.add(label, ge.log - e_avg, e_noise + ge.err, same);
            }
        }
    }
    std::vector<ClaimReport> out;
    out.push_back(k_inc.finish("r-shape.K.increasing", "monotonicity and convexity of K in r", "r -> K_{p,q}(r) strictly increasing",
                               ClaimKind::printed_claim, true, grid));
    out.push_back(k_logconv.finish("r-shape.K.log-convex", "monotonicity and convexity of K in r",
                                   "log K((r1+r2)/2) <= (log K(r1) + log K(r2))/2", ClaimKind::printed_claim, true, grid));
    out.push_back(k_geoconv.finish("r-shape.K.geometrically-convex", "monotonicity and convexity of K in r",
                                   "K(sqrt(r1 r2)) <= sqrt(K(r1) K(r2))", ClaimKind::printed_claim, true, grid));
    out.push_back(e_dec.finish("r-shape.E.decreasing", "monotonicity and concavity of E in r", "r -> E_{p,q}(r) strictly decreasing",
                               ClaimKind::printed_claim, true, grid));
    out.push_back(e_geoconc.finish("r-shape.E.geometrically-concave", "monotonicity and concavity of E in r",
                                   "E(sqrt(r1 r2)) >= sqrt(E(r1) E(r2))", ClaimKind::printed_claim, true, grid));
    return out;
}

/// Sign of a quantity over a sample set.
enum class Sign { positive, negative, mixed, zero };

constexpr std::string_view to_string(Sign s)
{
    switch (s) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::mixed: return "mixed";
    case Sign::zero: return "zero";
    }
    return "unknown";
}

namespace detail {

// x^q (ln x)^2 / (1 - x^q)^2 = d^2/dq^2 [-log(1 - x^q)]
inline double q_curvature(double x, double q)
{
    const double lx = std::log(x);
    const double xq = std::exp(q * lx);
    const double om = -std::expm1(q * lx);
    return xq * lx * lx / (om * om);
}

} // namespace detail

/// Closed-form second derivative, in p or q, of the log of the K-integrand
/// f = ((1-t^q)(1-r^q t^q))^(-1/p) or the E-integrand
/// g = (1-t^q)^(-1/p) (1-r^q t^q)^(1/p) at a single t.
inline double integrand_log_curvature(double p, double q, double r, double t, Direction dir, detail::Kind kind)
{
    const double a = std::log1p(-std::pow(t, q));      // log(1 - t^q)
    const double b = std::log1p(-std::pow(r * t, q));  // log(1 - r^q t^q)
    if (dir == Direction::p) {
        // log f = -(a+b)/p, log g = (b-a)/p; (c/p)'' = 2c/p^3
        const double c = kind == detail::Kind::first ? -(a + b) : (b - a);
        return 2.0 * c / (p * p * p);
    }
    const double jt = detail::q_curvature(t, q);
    const double jrt = detail::q_curvature(r * t, q);
    return (kind == detail::Kind::first ? jt + jrt : jt - jrt) / p;
}

/// Uniform sign of the integrand log-curvature over t_grid, or mixed.
inline Sign integrand_log_convexity_oracle(double p, double q, double r, const std::vector<double>& t_grid,
                                           Direction dir, detail::Kind kind = detail::Kind::first)
{
    int pos = 0, neg = 0;
    for (double t : t_grid) {
        if (!(t > 0.0 && t < 1.0)) detail::domain_fail("integrand_log_convexity_oracle", "t must lie in (0,1)");
        const double v = integrand_log_curvature(p, q, r, t, dir, kind);
        if (v > 0.0) ++pos;
        if (v < 0.0) ++neg;
    }
    if (pos > 0 && neg > 0) return Sign::mixed;
    if (pos > 0) return Sign::positive;
    if (neg > 0) return Sign::negative;
    return Sign::zero;
}

inline std::vector<double> default_t_grid()
{
    std::vector<double> t;
    for (int i = 1; i < 20; ++i) t.push_back(0.05 * i);
    return t;
}

/// Turán ratios T = F(x)^2 / (F(x-d) F(x+d)) in the p or q direction for
/// F in {K, E}, over every grid point and step d where the neighbours are
/// defined (p - d > 1 or q - d > 0). Returns, per F: the printed Turán claim
/// (">=" in p, "<=" in q), the printed monotonicity claim, and an invariant
/// requiring uniform sign of log T matching the integrand-curvature oracle.
inline std::vector<ClaimReport> check_parameter_turan(const GridSpec& grid, Direction dir)
{
    grid.validate();
    using detail::Kind;
    const auto t_grid = default_t_grid();
    const bool in_p = dir == Direction::p;
    const std::string axis = in_p ? "p" : "q";
    std::vector<ClaimReport> out;

    for (Kind kind : {Kind::first, Kind::second}) {
        const std::string F = detail::kind_name(kind);
        detail::ClaimTally turan, mono, consistency;
        int neg_sign = 0, pos_sign = 0;
        for (double p : grid.p_values)
            for (double q : grid.q_values)
                for (double r : grid.r_values) {
                    const double x = in_p ? p : q;
                    const auto at = [&](double v) {
                        return in_p ? detail::log_eval(kind, v, q, r) : detail::log_eval(kind, p, v, r);
                    };
                    const auto mid = at(x);
                    const Sign oracle = integrand_log_convexity_oracle(p, q, r, t_grid, dir, kind);
                    for (double d : grid.deltas) {
                        const double lo_x = x - d;
                        if (in_p ? !(lo_x > 1.0) : !(lo_x > 0.0)) continue;
                        const auto label = detail::point_label(p, q, r) + " delta=" + detail::fmt_g(d);
                        if (d == 0.0) {
                            turan.add(label, 0.0, 0.0, true);
                            consistency.add(label, 0.0, 0.0, true);
                            continue;
                        }
                        const auto lo = at(lo_x);
                        const auto hi = at(x + d);
                        const double log_t = 2.0 * mid.log - lo.log - hi.log;
                        const double noise = 2.0 * mid.err + lo.err + hi.err;
                        // printed: p-direction log-concave (log T >= 0), q-direction log-convex (log T <= 0)
                        turan.add(label, in_p ? log_t : -log_t, noise);
                        if (std::abs(log_t) > 10.0 * noise) (log_t < 0.0 ? neg_sign : pos_sign)++;
                        // positive integrand log-curvature predicts log T < 0
                        if (oracle == Sign::positive)
                            consistency.add(label, -log_t, noise);
                        else if (oracle == Sign::negative)
                            consistency.add(label, log_t, noise);
                        else
                            consistency.add(label, 0.0, 1.0);  // oracle undecided
                        // printed monotonicity: p increasing, q decreasing
                        const double slope = hi.log - mid.log;
                        mono.add(label, in_p ? slope : -slope, mid.err + hi.err);
                    }
                }
        const std::string sign_note = "log T < 0 at " + std::to_string(neg_sign) + " points, > 0 at " +
                                      std::to_string(pos_sign) + " points";
        const std::string loc = "Turan inequalities in " + axis;
        out.push_back(turan.finish(
            "turan." + axis + "." + F, loc,
            in_p ? F + "_{p,q}(r)^2 >= " + F + "_{p-d,q}(r) " + F + "_{p+d,q}(r)"
                 : F + "_{p,q}(r)^2 <= " + F + "_{p,q-d}(r) " + F + "_{p,q+d}(r)",
            ClaimKind::printed_claim, true, grid, sign_note));
        out.push_back(mono.finish("param-monotone." + axis + "." + F, loc,
                                  axis + " -> " + F + "_{p,q}(r) strictly " + (in_p ? "increasing" : "decreasing"),
                                  ClaimKind::printed_claim, true, grid,
                                  F + " " + (in_p ? "increasing" : "decreasing") + " at " +
                                      std::to_string(mono.positive()) + " points, " +
                                      (in_p ? "decreasing" : "increasing") + " at " +
                                      std::to_string(mono.negative()) + " points"));
        out.push_back(consistency.finish(
            "turan." + axis + "." + F + ".oracle-consistency", "integrand log-curvature",
            "sign of log T is uniform and matches the closed-form integrand log-curvature", ClaimKind::invariant,
            false, grid, sign_note));
    }
    return out;
}

namespace detail {

// Divergence probe for the p = 1 members of the corollary: quadrature of the
// defining integrand at p = 1, which the detector must reject.
inline std::string probe_p1(Kind kind, double q, double r)
{
    auto f = [=](double t, double tc) {
        const double a = -std::expm1(q * log_unit(t, tc));
        const double b = -std::expm1(q * (std::log(r) + log_unit(t, tc)));
        return kind == Kind::first ? 1.0 / (a * b) : b / a;
    };
    try {
        const auto res = integrate_01(f);
        return "quadrature returned " + fmt_g(res.value) + " (detector did not fire)";
    } catch (const DivergenceError&) {
        return "diverges (quadrature divergence detector)";
    } catch (const NonConvergenceError&) {
        return "diverges (no convergence by max_level)";
    }
}

} // namespace detail

/// The double inequalities
///   sqrt(K_{1,2} K_{3,2}) <= K <= sqrt(K_{2,1} K_{2,3}),
///   sqrt(E_{1,2} E_{3,2}) <= E <= sqrt(E_{2,1} E_{2,3}).
/// Upper bounds are evaluated (q = 1 is inside the relaxed domain). The lower
/// bounds involve p = 1, where both integrals diverge at t = 1; they are
/// reported indeterminate together with the divergence probe result.
inline std::vector<ClaimReport> check_corollary(const std::vector<double>& r_grid)
{
    GridSpec grid = GridSpec::defaults();
    grid.r_values = r_grid;
    grid.p_values = {2.0};
    grid.q_values = {2.0};
    grid.validate();
    using detail::Kind;
    std::vector<ClaimReport> out;
    for (Kind kind : {Kind::first, Kind::second}) {
        const std::string F = detail::kind_name(kind);
        detail::ClaimTally upper, lower;
        std::string probe;
        for (double r : r_grid) {
            const auto label = "r=" + detail::fmt_g(r);
            const auto mid = detail::log_eval(kind, 2.0, 2.0, r);
            const auto a = detail::log_eval(kind, 2.0, 1.0, r);
            const auto b = detail::log_eval(kind, 2.0, 3.0, r);
            upper.add(label, 0.5 * (a.log + b.log) - mid.log, mid.err + 0.5 * (a.err + b.err));
            probe = detail::probe_p1(kind, 2.0, r);
            lower.add(label + " " + F + "_{1,2}: " + probe, 0.0, 1.0);
        }
        out.push_back(upper.finish("bound.upper." + F, "bounds from the Turan inequality",
                                   F + "(r) <= sqrt(" + F + "_{2,1}(r) " + F + "_{2,3}(r))", ClaimKind::printed_claim,
                                   true, grid));
        out.push_back(lower.finish("bound.lower." + F, "bounds from the Turan inequality",
                                   "sqrt(" + F + "_{1,2}(r) " + F + "_{3,2}(r)) <= " + F + "(r)",
                                   ClaimKind::printed_claim, true, grid,
                                   "not evaluable: " + F + "_{1,2} " + probe));
    }
    return out;
}

} // namespace pqell
