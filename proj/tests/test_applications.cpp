#include "scalekit/applications.hpp"
#include "scalekit/scale_catalog.hpp"
#include "scalekit/scale_gtsc.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace scalekit;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ScaleFunction case_scale(char label, double alpha, double q) { return gtsc_scale(gtsc_case(label, alpha), q); }

}  // namespace

TEST(Exit, StandardBrownianIsLinear)
{
    const auto w = w_brownian(1.0, 0.0, 0.0).scale;
    EXPECT_NEAR(two_sided_exit(w, 0.5, 1.0), 0.5, 1e-15);
    EXPECT_EQ(two_sided_exit(w, 1.0, 1.0), 1.0);
    EXPECT_EQ(two_sided_exit(ExitProblem{w, 0.0, 1.0}), 0.0);
}

// tests/oracles/applications_oracle.py
TEST(Exit, InverseGaussian)
{
    const auto w = w_ig(1.0, 1.0, 0.0);
    EXPECT_LT(rel(two_sided_exit(w, 1.0, 2.0), 0.57641097680089231841), 1e-12);
}

TEST(Exit, MonotoneAndBounded)
{
    const auto w = case_scale('B', 0.5, 0.3);
    double prev = -1.0;
    for (double x = 0.0; x <= 3.0; x += 0.1) {
        const double p = two_sided_exit(w, x, 3.0);
        EXPECT_GE(p, prev);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
        prev = p;
    }
    EXPECT_THROW(two_sided_exit(w, 4.0, 3.0), ParameterError);
    EXPECT_THROW(two_sided_exit(w, 0.5, 0.0), ParameterError);
}

TEST(Ruin, CramerLundberg)
{
    const auto cl = w_cramer_lundberg(2.0, 1.0, 1.0);
    for (double x : {0.0, 1.0, 4.0}) EXPECT_NEAR(ruin_probability(cl.scale, cl.psi, x), 0.5 * std::exp(-0.5 * x), 1e-15);
}

TEST(Ruin, BrownianClassical)
{
    const auto bm = w_brownian(1.3, 0.4, 0.0);
    for (double x : {0.2, 2.0}) EXPECT_LT(rel(ruin_probability(bm.scale, bm.psi, x), std::exp(-2 * 0.4 * x / 1.69)), 1e-13);
}

TEST(Ruin, UnboundedVariationStartsAtOne)
{
    const auto p = gtsc_case('B', 0.5);
    const auto w = gtsc_scale(p, 0.0);
    const auto psi = gtsc_exponent(p);
    EXPECT_EQ(ruin_probability(w, psi, 0.0), 1.0);
    double prev = 1.0;
    for (double x : {0.1, 1.0, 5.0, 20.0, 60.0}) {
        const double r = ruin_probability(w, psi, x);
        EXPECT_LE(r, prev);
        prev = r;
    }
    EXPECT_LT(prev, 1e-3);
}

TEST(Ruin, WorkloadIsComplement)
{
    const auto p = gtsc_case('E', 1.0 / 3.0);
    const auto w = gtsc_scale(p, 0.0);
    const auto psi = gtsc_exponent(p);
    const auto cdf = mpi1_workload(w, psi);
    EXPECT_EQ(cdf(-1.0), 0.0);
    double prev = 0.0;
    for (double x : {0.0, 0.3, 1.0, 3.0, 10.0, 40.0}) {
        EXPECT_NEAR(ruin_probability(w, psi, x) + cdf(x), 1.0, 1e-14);
        EXPECT_GE(cdf(x), prev);
        prev = cdf(x);
    }
    EXPECT_GT(prev, 1.0 - 1e-3);
    // bounded variation: jumps from psi'(0+) W(0+) at the origin
    const auto cl = w_cramer_lundberg(2.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(mpi1_workload(cl.scale, cl.psi)(0.0), 0.5);
}

TEST(Ruin, RejectsNonPositiveDrift)
{
    const auto p = gtsc_case('A', 0.5);  // oscillating
    EXPECT_THROW(ruin_probability(gtsc_scale(p, 0.0), gtsc_exponent(p), 1.0), NotApplicableError);
    const auto c = gtsc_case('C', 0.5);  // drifts to -infinity
    EXPECT_THROW(mpi1_workload(gtsc_scale(c, 0.0), gtsc_exponent(c)), NotApplicableError);
    const auto bm = w_brownian(1.0, 0.5, 0.5);
    EXPECT_THROW(ruin_probability(bm.scale, bm.psi, 1.0), ParameterError);
}

TEST(RiskModel, MatchesTransformInversion)
{
    RiskModel m{1.0, 1.0, 1.0, 0.5};
    EXPECT_LT(rel(risk_model_ruin(m, 1.0), 0.17213861663770885443), 1e-10);
    RiskModel m2{2.0, 0.5, 1.5, 0.3};
    EXPECT_LT(rel(risk_model_ruin(m2, 2.0), 0.12579546467038825397), 1e-10);
}

TEST(RiskModel, AgreesWithTemperedLadderRoute)
{
    RiskModel m{2.0, 0.5, 1.5, 0.3};
    const auto p = m.gtsc();
    const auto w = gtsc_scale(p, 0.0);
    const auto psi = gtsc_exponent(p);
    EXPECT_NEAR(mean_drift(psi), m.kappa, 1e-14);
    for (double x : {0.0, 0.5, 2.0, 6.0}) {
        EXPECT_LT(rel(risk_model_scale(m, x, m.rho()), w(x)), 1e-10) << x;
        EXPECT_NEAR(risk_model_ruin(m, x), ruin_probability(w, psi, x), 1e-10) << x;
    }
}

TEST(RiskModel, PrintedExpressionNeedsUnitKappa)
{
    RiskModel unit{1.0, 1.0, 1.0, 0.5};
    EXPECT_NEAR(risk_model_ruin_printed(unit, 1.5, unit.rho()), risk_model_ruin(unit, 1.5), 1e-14);
    RiskModel other{1.0, 2.0, 1.0, 0.5};
    EXPECT_GT(std::abs(risk_model_ruin_printed(other, 1.5, other.rho()) - risk_model_ruin(other, 1.5)), 1e-2);
}

TEST(Integrated, TrivialCases)
{
    const auto w = case_scale('A', 0.5, 0.0);
    EXPECT_EQ(z_q(w, 3.0), 1.0);
    EXPECT_EQ(z_q(case_scale('A', 0.5, 1.0), 0.0), 1.0);
}

TEST(Integrated, BrownianCosh)
{
    const auto w = w_brownian(std::sqrt(2.0), 0.0, 1.0).scale;
    for (double x : {0.1, 1.0, 3.5, 8.0}) EXPECT_LT(rel(z_q(w, x), std::cosh(x)), 1e-12) << x;
}

TEST(Integrated, CaseAOracle)
{
    EXPECT_LT(rel(z_q(case_scale('A', 0.5, 1.0), 2.0), 2.8330485055343826538), 1e-10);
}

TEST(Integrated, DerivativeIsQW)
{
    for (char label : {'A', 'D', 'F'}) {
        const auto w = case_scale(label, 1.0 / 3.0, 0.7);
        for (double x : {0.4, 2.0, 5.5}) {
            const double h = 1e-4;
            const double fd = (z_q(w, x + h) - z_q(w, x - h)) / (2.0 * h);
            EXPECT_LT(rel(fd, 0.7 * w(x)), 1e-6) << label << " x=" << x;
        }
    }
    // kinked integrand
    const auto fj = w_fixed_jumps(2.0, 1.0, 1.0).scale;
    auto fjq = fj;
    fjq.q = 0.5;  // only the integral is exercised
    const double h = 1e-4;
    EXPECT_LT(rel((z_q(fjq, 2.3 + h) - z_q(fjq, 2.3 - h)) / (2.0 * h), 0.5 * fj(2.3)), 1e-6);
}

TEST(Barrier, IncreasingDerivativeGivesZero)
{
    const auto w = w_brownian(std::sqrt(2.0), 0.0, 1.0).scale;
    const auto b = dividend_barrier(w);
    EXPECT_EQ(b.a_star, 0.0);
    EXPECT_FALSE(b.degenerate);
    EXPECT_NEAR(b.wprime_at_a_star, 1.0, 1e-12);
}

TEST(Barrier, CaseEOracle)
{
    const auto w = case_scale('E', 0.5, 1.0);
    const auto b = dividend_barrier(w);
    EXPECT_NEAR(b.a_star, 0.8884958606895809909, 1e-7);
    EXPECT_LT(rel(b.wprime_at_a_star, 0.3079087090898056571), 1e-10);
    EXPECT_LE(b.bracket_lo, b.a_star);
    EXPECT_GE(b.bracket_hi, b.a_star);
    // a* is a global minimum of W'
    for (double x : {0.0, 0.1, 0.5, 0.85, 0.95, 2.0, 6.0}) EXPECT_GE(w.derivative(x), b.wprime_at_a_star - 1e-13) << x;
}

TEST(Barrier, EveryCaseTurnsOnce)
{
    for (char label : {'A', 'B', 'C', 'D', 'E', 'F'}) {
        const auto w = case_scale(label, 0.5, 1.0);
        const auto b = dividend_barrier(w);
        EXPECT_FALSE(b.degenerate) << label;
        const double h = 1e-3;
        if (b.a_star > h) {
            EXPECT_GT(w.derivative(b.a_star - h), b.wprime_at_a_star) << label;
        }
        EXPECT_GT(w.derivative(b.a_star + h), b.wprime_at_a_star) << label;
    }
    EXPECT_THROW(dividend_barrier(case_scale('A', 0.5, 0.0)), ParameterError);
}

TEST(DividendValue, CaseEOracleAndShape)
{
    const auto w = case_scale('E', 0.5, 1.0);
    const double a = dividend_barrier(w).a_star;
    EXPECT_LT(rel(dividend_value(w, a, 0.5 * a), 0.60175540057794855175), 1e-7);
    EXPECT_EQ(dividend_value(w, a, 0.0), 0.0);
    // continuous at a, slope one beyond it
    EXPECT_NEAR(dividend_value(w, a, a), dividend_value(w, a, a + 1e-12), 1e-11);
    EXPECT_NEAR(dividend_value(w, a, a + 2.0) - dividend_value(w, a, a + 1.0), 1.0, 1e-10);
    double prev = 0.0;
    for (double x = 0.0; x < 3.0 * a; x += 0.05 * a) {
        const double v = dividend_value(w, a, x);
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_THROW(dividend_value(w, a, -1.0), ParameterError);
}
