#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "pqell/report.hpp"
#include "pqell/suites.hpp"

using namespace pqell;

namespace {

const ClaimReport& find(const std::vector<ClaimReport>& reps, const std::string& id)
{
    auto it = std::find_if(reps.begin(), reps.end(), [&](const ClaimReport& r) { return r.claim_id == id; });
    if (it == reps.end()) throw std::runtime_error("missing claim " + id);
    return *it;
}

GridSpec small_grid()
{
    auto g = GridSpec::defaults();
    g.p_values = {1.5, 2.0, 3.0};
    g.q_values = {1.5, 2.25};
    g.r_values = {0.2, 0.5, 0.8};
    return g;
}

} // namespace

TEST(ClaimTally, StatusRules)
{
    const auto grid = GridSpec::defaults();
    detail::ClaimTally all_pos;
    all_pos.add("a", 1.0, 0.01);
    all_pos.add("b", 0.5, 0.01);
    const auto holds = all_pos.finish("x", "loc", "s", ClaimKind::printed_claim, true, grid);
    EXPECT_EQ(holds.status, Status::holds);
    EXPECT_EQ(holds.min_margin, 0.5);
    EXPECT_EQ(holds.witness->point, "b");

    detail::ClaimTally all_neg;
    all_neg.add("a", -1.0, 0.01);
    all_neg.add("b", -0.2, 0.01);
    EXPECT_EQ(all_neg.finish("x", "", "", ClaimKind::printed_claim, true, grid).status, Status::sign_reversed);
    EXPECT_EQ(all_neg.finish("x", "", "", ClaimKind::printed_claim, false, grid).status, Status::contradicted);
    EXPECT_EQ(all_neg.finish("x", "", "", ClaimKind::invariant, true, grid).status, Status::fails);

    detail::ClaimTally mixed;
    mixed.add("a", 1.0, 0.0);
    mixed.add("b", -1.0, 0.0);
    EXPECT_EQ(mixed.finish("x", "", "", ClaimKind::printed_claim, true, grid).status, Status::contradicted);

    detail::ClaimTally noisy;
    noisy.add("a", 1e-3, 1e-3);
    const auto ind = noisy.finish("x", "", "", ClaimKind::printed_claim, true, grid);
    EXPECT_EQ(ind.status, Status::indeterminate);
    EXPECT_EQ(ind.points_indeterminate, 1);
}

TEST(ClaimTally, ToleranceChecks)
{
    detail::ClaimTally t;
    t.add_tolerance("a", 1e-9, 1e-8);
    t.add_tolerance("b", -5e-9, 1e-8);
    EXPECT_DOUBLE_EQ(t.max_error(), 5e-9);
    EXPECT_EQ(t.finish("x", "", "", ClaimKind::invariant, false, GridSpec::defaults()).status, Status::holds);
    t.add_tolerance("c", 2e-8, 1e-8);
    EXPECT_EQ(t.finish("x", "", "", ClaimKind::invariant, false, GridSpec::defaults()).status, Status::fails);
}

TEST(GridSpec, Validation)
{
    auto g = GridSpec::defaults();
    EXPECT_NO_THROW(g.validate());
    g.p_values = {1.0005};
    EXPECT_THROW(g.validate(), DomainError);
    g = GridSpec::defaults();
    g.r_values = {0.5, 0.2};
    EXPECT_THROW(g.validate(), DomainError);
    g = GridSpec::defaults();
    g.r_values = {};
    EXPECT_THROW(g.validate(), DomainError);
}

TEST(Oracle, IntegrandLogCurvatureMatchesFiniteDifferences)
{
    using detail::Kind;
    const double h = 1e-4;
    for (double p : {1.5, 3.0})
        for (double q : {1.5, 2.25})
            for (double t : {0.2, 0.7})
                for (Kind kind : {Kind::first, Kind::second}) {
                    const double r = 0.6;
                    auto log_f = [&](double pp, double qq) {
                        const double a = std::log1p(-std::pow(t, qq));
                        const double b = std::log1p(-std::pow(r * t, qq));
                        return kind == Kind::first ? -(a + b) / pp : (b - a) / pp;
                    };
                    const double fd_p = (log_f(p + h, q) - 2 * log_f(p, q) + log_f(p - h, q)) / (h * h);
                    const double fd_q = (log_f(p, q + h) - 2 * log_f(p, q) + log_f(p, q - h)) / (h * h);
                    EXPECT_NEAR(integrand_log_curvature(p, q, r, t, Direction::p, kind), fd_p, 1e-5 * (1 + std::abs(fd_p)));
                    EXPECT_NEAR(integrand_log_curvature(p, q, r, t, Direction::q, kind), fd_q, 1e-5 * (1 + std::abs(fd_q)));
                }
}

TEST(Oracle, UniformSigns)
{
    const auto t = default_t_grid();
    EXPECT_EQ(integrand_log_convexity_oracle(2, 2, 0.5, t, Direction::p), Sign::positive);
    EXPECT_EQ(integrand_log_convexity_oracle(2, 2, 0.5, t, Direction::q), Sign::positive);
    EXPECT_EQ(integrand_log_convexity_oracle(2, 2, 0.5, t, Direction::p, detail::Kind::second), Sign::positive);
    EXPECT_THROW(integrand_log_convexity_oracle(2, 2, 0.5, {0.0}, Direction::p), DomainError);
}

TEST(Suites, ShapeInRHolds)
{
    for (const auto& rep : check_r_monotone_convex(small_grid())) {
        EXPECT_EQ(rep.status, Status::holds) << rep.claim_id;
        EXPECT_GT(rep.min_margin, 0.0) << rep.claim_id;
    }
}

TEST(Suites, TuranDirections)
{
    const auto q = check_parameter_turan(small_grid(), Direction::q);
    EXPECT_EQ(find(q, "turan.q.K").status, Status::holds);
    EXPECT_EQ(find(q, "turan.q.E").status, Status::holds);
    EXPECT_EQ(find(q, "turan.q.K.oracle-consistency").status, Status::holds);
    const auto p = check_parameter_turan(small_grid(), Direction::p);
    EXPECT_EQ(find(p, "turan.p.K").status, Status::sign_reversed);
    EXPECT_EQ(find(p, "param-monotone.p.K").status, Status::sign_reversed);
    EXPECT_EQ(find(p, "turan.p.E.oracle-consistency").status, Status::holds);
}

TEST(Suites, BoundsUpperHoldsLowerIsNotEvaluable)
{
    const auto reps = check_corollary({0.3, 0.6});
    EXPECT_EQ(find(reps, "bound.upper.K").status, Status::holds);
    EXPECT_EQ(find(reps, "bound.upper.E").status, Status::holds);
    EXPECT_EQ(find(reps, "bound.lower.K").status, Status::indeterminate);
    EXPECT_NE(find(reps, "bound.lower.E").detail.find("diverges"), std::string::npos);
}

TEST(Suites, UnknownSuiteIsRejected) { EXPECT_THROW(run_suite("nope", GridSpec::defaults()), DomainError); }

TEST(Report, NumberFormatting)
{
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333333333");
    EXPECT_EQ(format_number(1e-300), "1e-300");
    EXPECT_EQ(format_number(1.5), "1.5");
    EXPECT_EQ(format_number(-INFINITY), "-inf");
    EXPECT_EQ(format_number(std::nan("")), "nan");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Report, OutputRows)
{
    OutputRow row{"K", 2.0, 2.0, 0.5, "auto", EvalResult{1.25, Method::hyp_series, 1e-16}};
    EXPECT_EQ(row.csv(), "K,2,2,0.5,hyp-series,1.25,1e-16");
    row.result.reset();
    EXPECT_EQ(row.csv(), "K,2,2,0.5,auto,DIVERGES,DIVERGES");
}

TEST(Report, ErrataAndExitCode)
{
    ClaimReport ok;
    ok.claim_id = "ok";
    ClaimReport reversed;
    reversed.claim_id = "rev";
    reversed.kind = ClaimKind::printed_claim;
    reversed.status = Status::sign_reversed;
    reversed.location = "somewhere";
    ClaimReport broken;
    broken.claim_id = "broken";
    broken.status = Status::fails;

    EXPECT_TRUE(is_erratum(reversed));
    EXPECT_FALSE(is_erratum(ok));
    EXPECT_EQ(verify_exit_code({ok, reversed}), 0);
    EXPECT_EQ(verify_exit_code({ok, broken}), 1);

    const auto text = render_text({ok, reversed});
    const auto errata_pos = text.find("ERRATA");
    ASSERT_NE(errata_pos, std::string::npos);
    EXPECT_NE(text.find("rev  [sign-reversed]  at somewhere", errata_pos), std::string::npos);
    EXPECT_NE(text.find("SUMMARY holds=1 fails=0 sign-reversed=1"), std::string::npos);

    const auto csv = render_csv({ok, reversed});
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_NE(csv.find("rev,printed,sign-reversed,yes,somewhere"), std::string::npos);
}
