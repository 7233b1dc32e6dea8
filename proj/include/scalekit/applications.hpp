#pragma once

// Quantities of applied probability read off a scale function: two-sided exit, ruin,
// the integrated scale function, the stationary M/Pi/1 workload and the De Finetti barrier.

#include "scalekit/error.hpp"
#include "scalekit/gtsc.hpp"
#include "scalekit/levy_core.hpp"
#include "scalekit/quadrature.hpp"
#include "scalekit/scale_function.hpp"
#include "scalekit/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace scalekit {

struct ExitProblem {
    ScaleFunction scale;
    double x = 0.0;
    double a = 1.0;
};

/// E_x[e^{-q tau_a^+}; tau_a^+ < tau_0^-] = W(x)/W(a).
inline double two_sided_exit(const ScaleFunction& w, double x, double a)
{
    if (!(a > 0.0)) throw ParameterError("two_sided_exit: a must be positive");
    if (x < 0.0 || x > a) throw ParameterError("two_sided_exit: need 0 <= x <= a");
    if (x == a) return 1.0;
    return w(x) / w(a);
}

inline double two_sided_exit(const ExitProblem& p) { return two_sided_exit(p.scale, p.x, p.a); }

namespace detail {

inline double positive_drift(const LaplaceExponent& psi)
{
    const double d = mean_drift(psi);
    if (!(d > 0.0))
        throw NotApplicableError("psi'(0+) = " + std::to_string(d) +
                                 " <= 0: the process does not drift to +infinity, ruin is certain");
    return d;
}

inline void require_zero_rate(const ScaleFunction& w, const char* who)
{
    if (w.q != 0.0) throw ParameterError(std::string(who) + ": needs the 0-scale function");
}

}  // namespace detail

/// Stationary workload distribution of the queue fed by the jumps of X, psi'(0+) W(x).
inline std::function<double(double)> mpi1_workload(const ScaleFunction& w, const LaplaceExponent& psi)
{
    detail::require_zero_rate(w, "mpi1_workload");
    const double d = detail::positive_drift(psi);
    return [w, d](double x) {
        if (x < 0.0) return 0.0;
        return std::clamp(d * w(x), 0.0, 1.0);
    };
}

/// P_x(tau_0^- < inf) = 1 - psi'(0+) W(x).
inline double ruin_probability(const ScaleFunction& w, const LaplaceExponent& psi, double x)
{
    if (x < 0.0) throw ParameterError("ruin_probability: x must be nonnegative");
    return 1.0 - mpi1_workload(w, psi)(x);
}

/// Z^(q)(x) = 1 + q int_0^x W^(q).
inline double z_q(const ScaleFunction& w, double x)
{
    if (x <= 0.0 || w.q == 0.0) return 1.0;
    // W' may blow up at 0, so the first stretch uses tanh-sinh; pieces of unit length (or one
    // kink spacing) after that, with no sliver at the end
    const double step = w.kink_spacing ? *w.kink_spacing : 1.0;
    std::vector<double> cuts{0.0};
    for (double k = step; k < x - 0.25 * step; k += step) cuts.push_back(k);
    cuts.push_back(x);
    if (w.kink_spacing && cuts.size() > 2 && std::abs(x / step - std::round(x / step)) > 1e-9) {
        // keep the last kink as a cut even when it sits close to x
        const double last = std::floor(x / step) * step;
        if (cuts[cuts.size() - 2] < last && last < x) cuts.insert(cuts.end() - 1, last);
    }
    auto f = [&](double y) { return w(y); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += (i == 0) ? quad::endpoint_singular(f, cuts[0], cuts[1], 1e-12).value
                          : quad::gk(f, cuts[i], cuts[i + 1], 1e-11, 8).value;
    return 1.0 + w.q * total;
}

struct BarrierResult {
    double a_star = 0.0;
    double wprime_at_a_star = 0.0;
    // grid points enclosing the minimiser of W'
    double bracket_lo = 0.0, bracket_hi = 0.0;
    bool degenerate = false;  // W' flat at its minimum; a_star is the left end
};

/// The De Finetti barrier: the smallest global minimiser of W^(q)' on [0, inf).
/// W' is decreasing then increasing for parents whose dual has a completely monotone
/// Levy density, so a geometric scan finds the turn and golden section refines it.
inline BarrierResult dividend_barrier(const ScaleFunction& w, double x_tol = 1e-8)
{
    if (!(w.q > 0.0)) throw ParameterError("dividend_barrier: needs q > 0");
    auto d = [&](double x) { return w.derivative(x); };
    std::vector<double> xs{0.0}, gs;
    for (double x = 1e-6; x < 1e4; x *= std::pow(2.0, 0.25)) xs.push_back(x);
    double g0 = NAN;
    try {
        g0 = d(0.0);
    } catch (const Error&) {
    }
    if (!std::isfinite(g0)) g0 = std::numeric_limits<double>::infinity();  // unbounded variation, no Gaussian part
    gs.push_back(g0);
    BarrierResult r;
    // first index whose difference is not clearly negative, then the first clear increase;
    // differences within 1e-12 relative are rounding noise
    std::size_t j = 0;
    for (std::size_t k = 1; k < xs.size(); ++k) {
        gs.push_back(d(xs[k]));
        const double diff = gs[k] - gs[k - 1];
        const double flat = 1e-12 * std::abs(gs[k]);
        if (j == 0 && diff >= -flat) j = k;
        if (j == 0 || diff <= flat) continue;
        double lo = xs[j >= 2 ? j - 2 : 0], hi = xs[k];
        r.bracket_lo = lo;
        r.bracket_hi = hi;
        // a plateau over more than a factor 4 in x is reported as degenerate
        r.degenerate = k > j && xs[k - 1] > 4.0 * xs[std::max<std::size_t>(j - 1, 1)];
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
        double fa = d(a), fb = d(b);
        while (hi - lo > x_tol) {
            if (fa <= fb) {  // ties move left: the leftmost minimiser
                hi = b;
                b = a;
                fb = fa;
                a = hi - g * (hi - lo);
                fa = d(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + g * (hi - lo);
                fb = d(b);
            }
        }
        r.a_star = 0.5 * (lo + hi);
        r.wprime_at_a_star = d(r.a_star);
        if (r.bracket_lo == 0.0 && gs[0] <= r.wprime_at_a_star * (1.0 + 1e-12)) {
            r.a_star = 0.0;
            r.wprime_at_a_star = gs[0];
        }
        return r;
    }
    throw NumericalError("dividend_barrier: W' still decreasing at x = 1e4");
}

/// Value of the barrier strategy at level a started from x.
inline double dividend_value(const ScaleFunction& w, double a, double x)
{
    if (a < 0.0 || x < 0.0) throw ParameterError("dividend_value: a and x must be nonnegative");
    const double da = w.derivative(a);
    if (!(da > 0.0)) throw ParameterError("dividend_value: W'(a) must be positive");
    if (x <= a) return w(x) / da;
    return x - a + w(a) / da;
}

/// Premiums at rate lambda + kappa against gamma-distributed claims at rate lambda and an
/// infinite-activity stream of small claims; the Levy measure is
/// lambda gamma^nu/Gamma(nu) (gamma x^{nu-1} + (1 - nu) x^{nu-2}) e^{-gamma x}, 0 < nu < 1.
struct RiskModel {
    double lambda = 1.0;
    double kappa = 1.0;
    double gamma = 1.0;
    double nu = 0.5;

    void validate() const
    {
        if (!(lambda > 0.0) || !(kappa > 0.0) || !(gamma > 0.0))
            throw ParameterError("risk model: lambda, kappa, gamma must be positive");
        if (!(nu > 0.0 && nu < 1.0)) throw ParameterError("risk model: nu must lie in (0, 1)");
    }

    /// The same process as a tempered-stable ladder model: alpha = -nu, c = lambda gamma^nu/Gamma(nu).
    GtscParams gtsc() const
    {
        validate();
        GtscParams p;
        p.alpha = -nu;
        p.gamma = gamma;
        p.c = lambda * std::pow(gamma, nu) / std::tgamma(nu);
        p.kappa = kappa;
        return p;
    }

    /// The ratio appearing in the series for the ladder potential: 1/phi(theta) =
    /// (1/(kappa + lambda)) sum_n (rho (gamma/(gamma + theta))^nu)^n, so rho = lambda/(kappa + lambda).
    double rho() const { return lambda / (kappa + lambda); }
};

/// W(x) = (1 + rho gamma^nu int_0^x y^{nu-1} e^{-gamma y} E_{nu,nu}(rho gamma^nu y^nu) dy)/(kappa + lambda).
inline double risk_model_scale(const RiskModel& m, double x, double rho)
{
    m.validate();
    if (x < 0.0) return 0.0;
    const double k = rho * std::pow(m.gamma, m.nu);
    auto f = [&](double y) {
        if (y <= 0.0) return 0.0;
        return std::pow(y, m.nu - 1.0) * std::exp(-m.gamma * y) *
               special::mittag_leffler(m.nu, m.nu, k * std::pow(y, m.nu)).real();
    };
    double integral = 0.0;
    if (x > 0.0) {
        integral = quad::endpoint_singular(f, 0.0, std::min(x, 1.0), 1e-13).value;
        if (x > 1.0) integral += quad::gk(f, 1.0, x, 1e-13, 10).value;
    }
    return (1.0 + k * integral) / (m.kappa + m.lambda);
}

/// Ruin probability 1 - psi'(0+) W(x) with psi'(0+) = kappa.
inline double risk_model_ruin(const RiskModel& m, double x) { return 1.0 - m.kappa * risk_model_scale(m, x, m.rho()); }

/// The commonly printed expression 1 - W(x) with a free rho. It equals the ruin probability
/// only when kappa = 1 and rho = lambda/(kappa + lambda).
inline double risk_model_ruin_printed(const RiskModel& m, double x, double rho)
{
    return 1.0 - risk_model_scale(m, x, rho);
}

}  // namespace scalekit
