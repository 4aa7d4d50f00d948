#pragma once

// Verification suites: collections of ClaimReports that back `pqell verify`.

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "elliptic.hpp"
#include "gtrig.hpp"
#include "harness.hpp"
#include "hypergeom.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace pqell {

inline const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names = {"derivatives", "trig",   "turan", "r-convexity",
                                                         "corollary",   "series", "all"};
    return names;
}

namespace detail {

inline QuadratureSpec tight_quad()
{
    QuadratureSpec spec;
    spec.target_abs_tol = 1e-15;
    spec.target_rel_tol = 1e-15;
    return spec;
}

inline EllipticOptions quad_options()
{
    EllipticOptions opt;
    opt.backend = Backend::quadrature;
    opt.quad = tight_quad();
    return opt;
}

inline std::vector<double> derivative_r_grid()
{
    std::vector<double> r;
    for (int i = 1; i <= 19; ++i) r.push_back(0.05 * i);
    return r;
}

// Central differences with step h, Richardson-extrapolated against h/2 so the
// truncation error is O(h^4) instead of O(h^2).
template <class F>
double richardson_d1(F&& f, double x, double h)
{
    auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

template <class F>
double richardson_d2(F&& f, double x, double h)
{
    const double f0 = f(x);
    auto d = [&](double s) { return (f(x + s) - 2.0 * f0 + f(x - s)) / (s * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

struct FiniteDiff {
    double d1;
    double d2;
};

// First and second r-derivatives of K or E (quadrature backend).
inline FiniteDiff central_differences(const PQParams& pq, double r, Kind kind, double h)
{
    const auto opt = quad_options();
    auto f = [&](double x) { return kind == Kind::first ? K_pq(pq, x, opt).value : E_pq(pq, x, opt).value; };
    return FiniteDiff{richardson_d1(f, r, h), richardson_d2(f, r, h)};
}

inline double rel_err(double value, double reference)
{
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

} // namespace detail

/// r-derivative formulas against central differences (h = 1e-4) of the
/// quadrature backend, the printed second derivative of K, and the E ODE.
inline std::vector<ClaimReport> verify_derivatives(const GridSpec& grid)
{
    grid.validate();
    using detail::Kind;
    constexpr double h = 1e-4;
    const auto rs = detail::derivative_r_grid();

    detail::ClaimTally kd_all, ed_all, edd_all, kdd_derived_all, kdd_printed_all;
    detail::ClaimTally kd_p2, ed_p2, edd_p2, kdd_p2, ode;

    auto run = [&](double p, double q, bool p2_slice) {
        const PQParams pq(p, q);
        for (double r : rs) {
            const auto label = detail::point_label(p, q, r);
            const auto fk = detail::central_differences(pq, r, Kind::first, h);
            const auto fe = detail::central_differences(pq, r, Kind::second, h);
            const double e_kd = detail::rel_err(dK_dr(pq, r), fk.d1);
            const double e_ed = detail::rel_err(dE_dr(pq, r), fe.d1);
            const double e_edd = detail::rel_err(d2E_dr2(pq, r), fe.d2);
            const double e_kdd = detail::rel_err(d2K_dr2(pq, r), fk.d2);
            if (p2_slice) {
                kd_p2.add_tolerance(label, e_kd, 1e-6);
                ed_p2.add_tolerance(label, e_ed, 1e-6);
                edd_p2.add_tolerance(label, e_edd, 1e-4);
                kdd_p2.add_tolerance(label, e_kdd, 1e-4);
                continue;
            }
            kd_all.add_tolerance(label, e_kd, 1e-6);
            ed_all.add_tolerance(label, e_ed, 1e-6);
            edd_all.add_tolerance(label, e_edd, 1e-4);
            kdd_derived_all.add_tolerance(label, e_kdd, 1e-4);
            kdd_printed_all.add_tolerance(label, detail::rel_err(d2K_dr2_printed(pq, r), fk.d2), 1e-4);

            // E'' + (1/r)(2 - q/p) E' + (q/p) r^(q-2) / (1 - r^q) E = 0, exact series derivatives
            const double e = E_pq(pq, r).value;
            const double e1 = dE_dr_series(pq, r);
            const double e2 = d2E_dr2_series(pq, r);
            const double qp = q / p;
            const double residual = e2 + (2.0 - qp) / r * e1 + qp * std::pow(r, q - 2.0) / (1.0 - std::pow(r, q)) * e;
            ode.add_tolerance(label, residual / std::abs(e2), 1e-6);
        }
    };
    for (double p : grid.p_values)
        for (double q : grid.q_values) run(p, q, false);
    for (double q : grid.q_values) run(2.0, q, true);

    // Printed K'' at the classical point, quantified.
    const PQParams classical(2.0, 2.0);
    const double printed = d2K_dr2_printed(classical, 0.5);
    const double fd = detail::central_differences(classical, 0.5, Kind::first, h).d2;
    detail::ClaimTally kdd_point;
    kdd_point.add_tolerance("p=2 q=2 r=0.5", detail::rel_err(printed, fd), 1e-4);
    const std::string kdd_detail = "printed=" + detail::fmt_g(printed) + " finite-difference=" + detail::fmt_g(fd) +
                                   " derived=" + detail::fmt_g(d2K_dr2(classical, 0.5));

    std::vector<ClaimReport> out;
    auto note = [](const detail::ClaimTally& t) { return "max relative error " + detail::fmt_g(t.max_error()); };
    out.push_back(kd_all.finish("deriv.Kd", "dK/dr formula", "dK/dr = (E - r'^q K)/(r r'^q) for all p,q > 1",
                                ClaimKind::printed_claim, false, grid, note(kd_all)));
    out.push_back(ed_all.finish("deriv.Ed", "dE/dr formula", "dE/dr = (q/(p r))(E - K) for all p,q > 1",
                                ClaimKind::printed_claim, false, grid, note(ed_all)));
    out.push_back(edd_all.finish("deriv.Edd", "d2E/dr2 formula",
                                 "d2E/dr2 = (q/(p r^2))((q/p - 1/r'^q - 1)E + (2 - q/p)K) for all p,q > 1",
                                 ClaimKind::printed_claim, false, grid, note(edd_all)));
    out.push_back(kdd_printed_all.finish("deriv.Kdd.printed", "d2K/dr2 formula",
                                         "d2K/dr2 = (q r'^q/p + q r^q - 2 r'^q)E + (2 r'^{2q} - (q/p) r'^q)K",
                                         ClaimKind::printed_claim, false, grid, note(kdd_printed_all)));
    out.push_back(kdd_point.finish("deriv.Kdd.printed.classical", "d2K/dr2 formula",
                                   "printed d2K/dr2 at (p,q,r) = (2,2,0.5)", ClaimKind::printed_claim, false, grid,
                                   kdd_detail));
    out.push_back(kdd_derived_all.finish("deriv.Kdd.rederived.all", "d2K/dr2 by differentiating dK/dr",
                                         "K'' obtained by differentiating the dK/dr formula for all p,q > 1",
                                         ClaimKind::printed_claim, false, grid, note(kdd_derived_all)));
    out.push_back(ode.finish("deriv.E-ode", "second-order ODE for E",
                             "E'' + (1/r)(2 - q/p)E' + (q/p) r^{q-2}/(1 - r^q) E = 0", ClaimKind::printed_claim, false,
                             grid, note(ode)));
    out.push_back(kd_p2.finish("deriv.Kd.p2", "p = 2 slice", "dK/dr formula at p = 2", ClaimKind::invariant, false,
                               grid, note(kd_p2)));
    out.push_back(ed_p2.finish("deriv.Ed.p2", "p = 2 slice", "dE/dr formula at p = 2", ClaimKind::invariant, false,
                               grid, note(ed_p2)));
    out.push_back(edd_p2.finish("deriv.Edd.p2", "p = 2 slice", "d2E/dr2 formula at p = 2", ClaimKind::invariant, false,
                                grid, note(edd_p2)));
    out.push_back(kdd_p2.finish("deriv.Kdd.rederived.p2", "p = 2 slice", "re-derived K'' at p = 2",
                                ClaimKind::invariant, false, grid, note(kdd_p2)));
    return out;
}

namespace detail {

inline std::vector<double> sample_periods(double pi, int per_period, int periods)
{
    // offset keeps samples off the quarter-period nodes
    std::vector<double> xs;
    const double step = 2.0 * pi / per_period;
    for (int i = 0; i < per_period * periods; ++i) xs.push_back(-pi * periods + (i + 0.37) * step);
    return xs;
}

} // namespace detail

/// Generalized trigonometric identities: the Pythagorean identity, derivative
/// identities by finite differences, periodicity/oddness, the eigenvalue ODE
/// residual, and the arcsn/sn and theta-form consistency checks.
inline std::vector<ClaimReport> verify_trig(const GridSpec& grid)
{
    grid.validate();
    detail::ClaimTally pyth, l1, l2, l3, l4, period, roundtrip, arcsn_k, eig_derived, eig_printed, theta_k,
        theta_e, epq_printed;
    constexpr double h = 1e-5;
    const std::vector<double> pq_grid = {1.25, 1.5, 2.0, 3.0, 4.0};

    auto rel_fd = [](double fd, double exact) { return std::abs(fd - exact) / std::max(std::abs(exact), 1e-3); };

    for (double p : pq_grid) {
        for (double q : pq_grid) {
            const PQParams pq(p, q);
            const double pi = pq.half_period();
            const double half = 0.5 * pi;
            for (double x : detail::sample_periods(pi, 8, 3)) {
                const double s = sin_pq(pq, x);
                const double c = cos_pq(pq, x);
                const auto label = detail::point_label(p, q, 0.0) + " x=" + detail::fmt_g(x);
                pyth.add_tolerance(label, std::pow(std::abs(c), p) + std::pow(std::abs(s), q) - 1.0, 1e-10);
                const double s_shift = sin_pq(pq, x + 2.0 * pi);
                const double s_neg = sin_pq(pq, -x);
                period.add_tolerance(label, std::max(std::abs(s_shift - s), std::abs(s_neg + s)), 1e-12);
            }
            for (int i = 1; i <= 5; ++i) {
                const double x = half * (0.1 + 0.15 * i);  // interior of the first quarter period
                const auto label = detail::point_label(p, q, 0.0) + " x=" + detail::fmt_g(x);
                const double s = sin_pq(pq, x), c = cos_pq(pq, x);
                auto sin_f = [&](double y) { return sin_pq(pq, y); };
                auto cos_f = [&](double y) { return cos_pq(pq, y); };
                l1.add_tolerance(label, rel_fd(detail::richardson_d1(sin_f, x, h), c), 1e-6);
                const double dcos = -(q / p) * std::pow(c, 2.0 - p) * std::pow(s, q - 1.0);
                l2.add_tolerance(label, rel_fd(detail::richardson_d1(cos_f, x, h), dcos), 1e-6);
                // d/dx [-(cos)^(p-1)] = ((p-1)q/p) sin^(q-1)
                auto flux = [&](double y) { return std::pow(cos_pq(pq, y), p - 1.0); };
                const double d3 = -detail::richardson_d1(flux, x, h);
                const double rhs3 = (p - 1.0) * q / p * std::pow(s, q - 1.0);
                l3.add_tolerance(label, rel_fd(d3, rhs3), 1e-6);
                auto sinq = [&](double y) { return std::pow(sin_pq(pq, y), q); };
                l4.add_tolerance(label, rel_fd(detail::richardson_d1(sinq, x, h), q * std::pow(s, q - 1.0) * c), 1e-6);

                // (phi_p(u'))' + lambda phi_q(u) = 0 with u = sin_pq: the residual per candidate eigenvalue
                const double flux_derivative = -d3;
                const double forcing = std::pow(s, q - 1.0);
                const double lam_derived = q * (p - 1.0) / p;
                const double lam_literal = p / q * (p - 1.0);
                eig_derived.add_tolerance(label, flux_derivative + lam_derived * forcing, 1e-5);
                eig_printed.add_tolerance(label, flux_derivative + lam_literal * forcing, 1e-5);
            }
            for (double r : {0.3, 0.7}) {
                const auto label = detail::point_label(p, q, r);
                const double k_arcsn = arcsn_pq(pq, 1.0, r);
                arcsn_k.add_tolerance(label, detail::rel_err(k_arcsn, K_pq(pq, r).value), 1e-10);
                for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                    const double back = sn_pq(pq, arcsn_pq(pq, x, r), r);
                    roundtrip.add_tolerance(label + " x=" + detail::fmt_g(x), back - x, 1e-9);
                }
            }
        }
    }

    // theta-form of K and E: substitution t = sin_{p,q}(theta); the printed E
    // form uses sin_p in place of sin_{p,q}.
    for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{1.5, 2.25}, std::pair{3.0, 1.5}}) {
        const PQParams pq(p, q);
        const PQParams pp(p, p);
        const double half = 0.5 * pq.half_period();
        QuadratureSpec spec;
        spec.target_abs_tol = 1e-11;
        spec.target_rel_tol = 1e-11;
        for (double r : {0.3, 0.7}) {
            const auto label = detail::point_label(p, q, r);
            const double rq = std::pow(r, q);
            const double kt = integrate(
                [&](double th) { return std::pow(1.0 - rq * std::pow(sin_pq(pq, th), q), -1.0 / p); }, 0.0, half, spec)
                                  .value;
            const double et = integrate(
                [&](double th) { return std::pow(1.0 - rq * std::pow(sin_pq(pq, th), q), 1.0 / p); }, 0.0, half, spec)
                                  .value;
            theta_k.add_tolerance(label, detail::rel_err(kt, K_pq(pq, r).value), 1e-8);
            theta_e.add_tolerance(label, detail::rel_err(et, E_pq(pq, r).value), 1e-8);
            const double e_printed = integrate(
                [&](double th) { return std::pow(1.0 - rq * std::pow(std::abs(sin_pq(pp, th)), q), 1.0 / p); }, 0.0,
                half, spec)
                                         .value;
            epq_printed.add_tolerance(label, detail::rel_err(e_printed, E_pq(pq, r).value), 1e-8);
        }
    }

    GridSpec echo = grid;
    echo.p_values = pq_grid;
    echo.q_values = pq_grid;
    auto note = [](const detail::ClaimTally& t) { return "max deviation " + detail::fmt_g(t.max_error()); };
    std::vector<ClaimReport> out;
    out.push_back(pyth.finish("trig.pythagorean", "Pythagorean identity", "|cos_{p,q}(x)|^p + |sin_{p,q}(x)|^q = 1",
                              ClaimKind::printed_claim, false, echo, note(pyth)));
    out.push_back(l1.finish("trig.d-sin", "derivative identities", "d/dx sin_{p,q} = cos_{p,q}", ClaimKind::printed_claim, false, echo,
                            note(l1)));
    out.push_back(l2.finish("trig.d-cos", "derivative identities", "d/dx cos_{p,q} = -(q/p) cos^{2-p} sin^{q-1}",
                            ClaimKind::printed_claim, false, echo, note(l2)));
    out.push_back(l3.finish("trig.d-cos-power", "derivative identities", "d/dx [-(cos_{p,q})^{p-1}] = ((p-1)q/p) sin^{q-1}",
                            ClaimKind::printed_claim, false, echo, note(l3)));
    out.push_back(l4.finish("trig.d-sin-power", "derivative identities", "d/dx sin^q = q sin^{q-1} cos", ClaimKind::printed_claim, false,
                            echo, note(l4)));
    out.push_back(eig_derived.finish("trig.eigen-ode.q(p-1)/p", "p,q-Laplacian eigenvalue problem",
                                     "(phi_p(u'))' + lambda phi_q(u) = 0 for u = sin_{p,q}, lambda = q(p-1)/p",
                                     ClaimKind::invariant, false, echo, note(eig_derived)));
    out.push_back(eig_printed.finish("trig.eigen-ode.printed", "p,q-Laplacian eigenvalue problem",
                                     "lambda = p/q(p-1) read as (p/q)(p-1)", ClaimKind::printed_claim, false, echo,
                                     note(eig_printed) + "; lambda = q(p-1)/p zeroes the residual"));
    out.push_back(period.finish("trig.period-odd", "extension to the real line",
                                "sin(x + 2 pi_{p,q}) = sin(x), sin(-x) = -sin(x)", ClaimKind::invariant, false, echo,
                                note(period)));
    out.push_back(arcsn_k.finish("trig.arcsn-K", "arcsn definition", "arcsn_{p,q}(1, r) = K_{p,q}(r)", ClaimKind::printed_claim,
                                 false, echo, note(arcsn_k)));
    out.push_back(roundtrip.finish("trig.sn-roundtrip", "sn = arcsn^{-1}", "sn(arcsn(x, r), r) = x",
                                   ClaimKind::invariant, false, echo, note(roundtrip)));
    out.push_back(theta_k.finish("trig.theta-form.K", "integral definition of K, E",
                                 "int_0^{pi_{p,q}/2} (1 - r^q sin_{p,q}^q)^{-1/p} = K_{p,q}(r)",
                                 ClaimKind::printed_claim, false, echo, note(theta_k)));
    out.push_back(theta_e.finish("trig.theta-form.E", "theta-form of E",
                                 "int_0^{pi_{p,q}/2} (1 - r^q sin_{p,q}^q)^{1/p} = E_{p,q}(r)", ClaimKind::invariant,
                                 false, echo, note(theta_e)));
    out.push_back(epq_printed.finish("trig.theta-form.E.printed", "theta-form of E",
                                     "int_0^{pi_{p,q}/2} (1 - r^q sin_p^q)^{1/p} = E_{p,q}(r) (sin_p as printed)",
                                     ClaimKind::printed_claim, false, echo, note(epq_printed)));
    return out;
}

namespace detail {

// Printed lambda-series displays, summed literally: the K display uses
// xi = 1 - 1/p and b_j = (pi/2) r^{qj} C(-1/q, j) C(1/p - 1 - 1/q, j); the E
// display additionally pairs lambda^{n-j} with r^{qn} and indexes the last
// binomial by n.
inline double printed_lambda_display(const PQParams& pq, double r, double lambda, Kind kind, int n_terms = 400)
{
    const double p = pq.p();
    const double q = pq.q();
    const double rq = std::pow(r, q);
    double total = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        const auto un = static_cast<std::uint32_t>(n);
        double inner = 0.0;
        for (int j = 0; j <= n; ++j) {
            const auto uj = static_cast<std::uint32_t>(j);
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            const double c = gen_binomial(n, uj) * gen_binomial(-1.0 / q, uj);
            if (kind == Kind::first)
                inner += sign * c * gen_binomial(1.0 / p - 1.0 - 1.0 / q, uj) * std::pow(lambda, n - j) *
                         std::pow(rq, j);
            else
                inner += sign * c * gen_binomial(1.0 / p - 1.0 - 1.0 / q, un) * std::pow(lambda, n - j) *
                         std::pow(rq, n);
        }
        const double outer = kind == Kind::first
                                 ? gen_binomial(1.0 / p - 1.0, un) / std::pow(1.0 - lambda, n + 1.0 - 1.0 / p)
                                 : gen_binomial(1.0 / p, un) / std::pow(1.0 - lambda, n - 1.0 / p);
        total += outer * inner;
    }
    return 0.5 * pq.half_period() * total;
}

} // namespace detail

/// Backend agreement, lambda invariance, boundary values, and the printed
/// series/closed-form statements.
inline std::vector<ClaimReport> verify_series(const GridSpec& grid)
{
    grid.validate();
    using detail::Kind;
    detail::ClaimTally agree, lam_inv, boundary0, e_at_1, caption_k1, fig_const, f32_p2, f32_pq, kse_printed,
        eqse_printed, euler_printed, euler_std;

    for (double p : grid.p_values)
        for (double q : grid.q_values) {
            const PQParams pq(p, q);
            for (double r : grid.r_values) {
                const auto label = detail::point_label(p, q, r);
                EllipticOptions quad;
                quad.backend = Backend::quadrature;
                EllipticOptions ser;
                ser.backend = Backend::series;
                for (Kind kind : {Kind::first, Kind::second}) {
                    const auto eval = [&](const EllipticOptions& o) {
                        return kind == Kind::first ? K_pq(pq, r, o).value : E_pq(pq, r, o).value;
                    };
                    const double vq = eval(quad);
                    const double vs = eval(ser);
                    const double vl = kind == Kind::first ? K_pq_lambda(pq, r, 0.25).value
                                                          : E_pq_lambda(pq, r, 0.25).value;
                    const double worst = std::max({detail::rel_err(vq, vs), detail::rel_err(vl, vs),
                                                   detail::rel_err(vl, vq)});
                    agree.add_tolerance(label + " " + detail::kind_name(kind), worst, 1e-8);
                }
            }
            const double half = 0.5 * pq.half_period();
            const auto label = detail::point_label(p, q, 0.0);
            boundary0.add_tolerance(label + " K", detail::rel_err(K_pq(pq, 0.0).value, half), 1e-12);
            boundary0.add_tolerance(label + " E", detail::rel_err(E_pq(pq, 0.0).value, half), 1e-12);
            // printed E_{p,q}(1) = 0
            e_at_1.add_tolerance(detail::point_label(p, q, 1.0), E_pq(pq, 1.0).value - 0.0, 1e-12);
        }

    const PQParams fig(1.5, 2.25);
    for (double lambda : {0.0, 0.25, 0.4}) {
        const double ref = K_pq(fig, 0.6, detail::quad_options()).value;
        const double eref = E_pq(fig, 0.6, detail::quad_options()).value;
        const auto label = "p=1.5 q=2.25 r=0.6 lambda=" + detail::fmt_g(lambda);
        lam_inv.add_tolerance(label + " K", detail::rel_err(K_pq_lambda(fig, 0.6, lambda).value, ref), 1e-8);
        lam_inv.add_tolerance(label + " E", detail::rel_err(E_pq_lambda(fig, 0.6, lambda).value, eref), 1e-8);
    }

    // plotted endpoint values: K_{1.5,2.25}(1) = E_{1.5,2.25}(1) = pi_{1.5,2.25}/2 ~ 1.9937
    const double fig_half = 0.5 * fig.half_period();
    fig_const.add_tolerance("p=1.5 q=2.25", fig_half - 1.9937, 5e-4);
    std::string caption_note;
    try {
        K_pq(fig, 1.0, detail::quad_options());
        caption_note = "K_{1.5,2.25}(1) evaluated finite";
    } catch (const DivergenceError&) {
        caption_note = "K_{1.5,2.25}(1) diverges";
        caption_k1.fail_point("p=1.5 q=2.25 r=1 K", "diverges");
    }
    caption_k1.add_tolerance("p=1.5 q=2.25 r=1 E", E_pq(fig, 1.0).value - fig_half, 1e-8);
    caption_note += "; E_{1.5,2.25}(1) = " + detail::fmt_g(E_pq(fig, 1.0).value);

    // 3F2 reduction of the lambda = 0 series
    auto k_3f2 = [](const PQParams& pq, double r) {
        const double p = pq.p(), q = pq.q();
        return 0.5 * pq.half_period() *
               hyp3f2(1.0 - 1.0 / p, 1.0 / q, 1.0 + 1.0 / q - 1.0 / p, 1.0, 1.0, std::pow(r, q)).value;
    };
    const PQParams classical(2.0, 2.0);
    for (double r : {0.3, 0.6})
        f32_p2.add_tolerance("p=2 q=2 r=" + detail::fmt_g(r),
                             detail::rel_err(k_3f2(classical, r), K_pq(classical, r, {Backend::series}).value), 1e-10);
    const double c_2f1 = (1.0 / 1.5) * (1.0 / 2.25) / (1.0 - 1.0 / 1.5 + 1.0 / 2.25);
    const double c_3f2 = (1.0 - 1.0 / 1.5) * (1.0 / 2.25) * (1.0 + 1.0 / 2.25 - 1.0 / 1.5);
    f32_pq.add_tolerance("p=1.5 q=2.25 first-order coefficient", detail::rel_err(c_3f2, c_2f1), 1e-10);
    for (double r : {0.3, 0.6})
        f32_pq.add_tolerance("p=1.5 q=2.25 r=" + detail::fmt_g(r),
                             detail::rel_err(k_3f2(fig, r), K_pq(fig, r).value), 1e-10);
    const std::string f32_note = "r^q coefficient: 2F1 " + detail::fmt_g(c_2f1) + " (8/21), 3F2 " +
                                 detail::fmt_g(c_3f2) + " (28/243)";

    // printed lambda-series displays
    std::string kse_note, eqse_note;
    for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{1.5, 2.25}}) {
        const PQParams pq(p, q);
        for (double lambda : {0.0, 0.25}) {
            const double r = 0.5;
            const auto label = detail::point_label(p, q, r) + " lambda=" + detail::fmt_g(lambda);
            const double kp = detail::printed_lambda_display(pq, r, lambda, Kind::first);
            const double ep = detail::printed_lambda_display(pq, r, lambda, Kind::second);
            const double kt = K_pq(pq, r).value;
            const double et = E_pq(pq, r).value;
            const double ek = detail::rel_err(kp, kt);
            const double ee = detail::rel_err(ep, et);
            if (ek >= kse_printed.max_error())
                kse_note = label + ": printed " + detail::fmt_g(kp) + " vs K " + detail::fmt_g(kt);
            if (ee >= eqse_printed.max_error())
                eqse_note = label + ": printed " + detail::fmt_g(ep) + " vs E " + detail::fmt_g(et);
            kse_printed.add_tolerance(label, ek, 1e-8);
            eqse_printed.add_tolerance(label, ee, 1e-8);
        }
    }

    // Euler integral: printed prefactor Gamma(c)/(Gamma(c)(c-b)) vs 1/B(b, c-b), at z = 0 where F = 1
    for (auto [b, c] : {std::pair{0.5, 1.0}, std::pair{1.0 / 3.0, 1.25}}) {
        const double integral = beta(b, c - b);  // int t^{b-1}(1-t)^{c-b-1} dt
        const auto label = "b=" + detail::fmt_g(b) + " c=" + detail::fmt_g(c) + " z=0";
        euler_printed.add_tolerance(label, integral / (c - b) - 1.0, 1e-10);
        const double a = 0.5;
        const double z = 0.25;
        const auto quad = integrate_01([&](double t, double tc) {
            return std::pow(t, b - 1.0) * std::pow(tc, c - b - 1.0) * std::pow(1.0 - z * t, -a);
        });
        euler_std.add_tolerance("a=0.5 " + label.substr(0, label.size() - 4) + " z=0.25",
                                detail::rel_err(quad.value / beta(b, c - b), hyp2f1(a, b, c, z).value), 1e-10);
    }

    GridSpec fixed = grid;
    std::vector<ClaimReport> out;
    auto note = [](const detail::ClaimTally& t) { return "max deviation " + detail::fmt_g(t.max_error()); };
    out.push_back(agree.finish("series.backend-agreement", "2F1 representations of K, E",
                               "quadrature, 2F1 series and lambda series (lambda = 0.25) agree to 1e-8",
                               ClaimKind::invariant, false, grid, note(agree)));
    out.push_back(lam_inv.finish("series.lambda-invariance", "lambda-series",
                                 "lambda-series value independent of lambda in {0, 0.25, 0.4}", ClaimKind::invariant,
                                 false, fixed, note(lam_inv)));
    out.push_back(boundary0.finish("boundary.r0", "integral definition of K, E", "K_{p,q}(0) = E_{p,q}(0) = pi_{p,q}/2",
                                   ClaimKind::printed_claim, false, grid, note(boundary0)));
    out.push_back(e_at_1.finish("boundary.E1", "integral definition of K, E", "E_{p,q}(1) = 0", ClaimKind::printed_claim, false, grid,
                                "closed form E_{p,q}(1) = 1 (integrand collapses to 1)"));
    out.push_back(caption_k1.finish("plot.endpoint-r1", "plot of K, E at (p,q) = (1.5,2.25)",
                                    "K_{1.5,2.25}(1) = E_{1.5,2.25}(1) = pi_{1.5,2.25}/2", ClaimKind::printed_claim,
                                    false, fixed, caption_note));
    out.push_back(fig_const.finish("plot.half-period-constant", "plot of K, E at (p,q) = (1.5,2.25)", "pi_{1.5,2.25}/2 ~ 1.9937",
                                   ClaimKind::printed_claim, false, fixed, "computed " + detail::fmt_g(fig_half)));
    out.push_back(f32_p2.finish("reduction.3F2.p2", "3F2 reduction",
                                "K = (pi_{p,q}/2) 3F2(1-1/p, 1/q, 1+1/q-1/p; 1, 1; r^q) at p = q = 2",
                                ClaimKind::printed_claim, false, fixed, note(f32_p2)));
    out.push_back(f32_pq.finish("reduction.3F2.general", "3F2 reduction",
                                "K = (pi_{p,q}/2) 3F2(1-1/p, 1/q, 1+1/q-1/p; 1, 1; r^q) at (p,q) = (1.5,2.25)",
                                ClaimKind::printed_claim, false, fixed, f32_note));
    out.push_back(kse_printed.finish("lambda-series.K.printed", "lambda-series for K", "printed lambda-series for K",
                                     ClaimKind::printed_claim, false, fixed, kse_note));
    out.push_back(eqse_printed.finish("lambda-series.E.printed", "lambda-series for E", "printed lambda-series for E",
                                      ClaimKind::printed_claim, false, fixed, eqse_note));
    out.push_back(euler_printed.finish("euler-integral.prefactor.printed", "Euler integral",
                                       "F(a,b;c;z) = Gamma(c)/(Gamma(c)(c-b)) int t^{b-1}(1-t)^{c-b-1}(1-zt)^{-a}",
                                       ClaimKind::printed_claim, false, fixed, "checked at z = 0 where F = 1"));
    out.push_back(euler_std.finish("euler-integral.prefactor.standard", "Euler integral, standard prefactor",
                                   "F(a,b;c;z) B(b,c-b) = int t^{b-1}(1-t)^{c-b-1}(1-zt)^{-a}", ClaimKind::invariant,
                                   false, fixed, note(euler_std)));
    return out;
}

/// Runs a named suite; "all" concatenates every suite in a fixed order.
inline std::vector<ClaimReport> run_suite(std::string_view name, const GridSpec& grid)
{
    std::vector<ClaimReport> out;
    auto append = [&](std::vector<ClaimReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    const bool all = name == "all";
    bool known = all;
    if (all || name == "derivatives") {
        known = true;
        append(verify_derivatives(grid));
    }
    if (all || name == "trig") {
        known = true;
        append(verify_trig(grid));
    }
    if (all || name == "turan") {
        known = true;
        append(check_parameter_turan(grid, Direction::p));
        append(check_parameter_turan(grid, Direction::q));
    }
    if (all || name == "r-convexity") {
        known = true;
        append(check_r_monotone_convex(grid));
    }
    if (all || name == "corollary") {
        known = true;
        append(check_corollary(grid.r_values));
    }
    if (all || name == "series") {
        known = true;
        append(verify_series(grid));
    }
    if (!known) detail::domain_fail("run_suite", "unknown suite '" + std::string(name) + "'");
    return out;
}

} // namespace pqell
