#pragma once

// Laplace exponents of spectrally negative Levy processes, the right inverse
// Phi, and the construction of a parent process from a prescribed descending
// ladder height process.

#include "scalekit/error.hpp"
#include "scalekit/quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>

namespace scalekit {

using cplx = std::complex<double>;

enum class Descriptor { gtsc, catalog_family, custom };

/// psi(theta) = log E exp(theta X_1) with its derivative and, when available, its
/// analytic continuation to C minus (-inf, domain_edge].
struct LaplaceExponent {
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    std::function<cplx(cplx)> eval_complex;
    double domain_edge = 0.0;
    Descriptor descriptor = Descriptor::custom;
    // psi'(0+) when a closed form is known.
    std::optional<double> drift_at_zero;
    // |psi(s + i y)| grows like |y|^tail_power; > 1 means 1/psi is integrable on vertical lines.
    double tail_power = 2.0;
    std::string name;

    double operator()(double theta) const { return eval(theta); }
    cplx operator()(cplx theta) const
    {
        if (!eval_complex) throw CapabilityError(name + ": no complex continuation of psi");
        return eval_complex(theta);
    }
    bool has_complex() const { return static_cast<bool>(eval_complex); }

    double derivative(double theta) const
    {
        if (deriv) return deriv(theta);
        const double h = 1e-6 * std::max(1.0, std::abs(theta));
        return (eval(theta + h) - eval(theta - h)) / (2.0 * h);
    }

    double second_derivative(double theta) const
    {
        const double h = 1e-4 * std::max(1.0, std::abs(theta));
        return (derivative(theta + h) - derivative(theta - h)) / (2.0 * h);
    }
};

/// psi'(0+); closed form when the exponent carries one, otherwise a one-sided
/// fourth-order difference with step 1e-6.
inline double mean_drift(const LaplaceExponent& psi)
{
    if (psi.drift_at_zero) return *psi.drift_at_zero;
    const double h = 1e-6;
    const double f0 = psi(0.0), f1 = psi(h), f2 = psi(2 * h), f3 = psi(3 * h), f4 = psi(4 * h);
    return (-25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4) / (12.0 * h);
}

/// Phi(q): the largest theta >= 0 with psi(theta) = q.
inline double big_phi(const LaplaceExponent& psi, double q)
{
    if (!(q >= 0.0)) throw ParameterError("big_phi: q must be nonnegative");
    if (q == 0.0 && mean_drift(psi) >= 0.0) return 0.0;
    double hi = 1.0;
    for (int i = 0; psi(hi) <= q; ++i) {
        hi *= 2.0;
        if (i > 1100 || !std::isfinite(hi))
            throw NumericalError("big_phi: psi never exceeds q; exponent malformed?");
    }
    double lo = 0.0;
    // Newton from the right converges monotonically by convexity; bisection guards it.
    double theta = hi;
    for (int it = 0; it < 200; ++it) {
        const double f = psi(theta) - q;
        if (f > 0.0)
            hi = theta;
        else
            lo = theta;
        if (hi - lo <= 4e-16 * hi) break;
        const double d = psi.derivative(theta);
        double next = (d > 0.0) ? theta - f / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - theta) <= 1e-15 * std::max(1.0, theta)) {
            theta = next;
            break;
        }
        theta = next;
    }
    return theta;
}

/// Descending ladder height process: killed subordinator with drift.
struct LadderParams {
    double kappa = 0.0;
    double zeta = 0.0;
    std::function<double(double)> density;        // dUpsilon/dx on (0, inf), nonincreasing
    std::function<double(double)> density_deriv;  // optional
    std::function<double(double)> tail;           // Upsilon(x, inf)
    std::function<double(double)> exponent;       // phi(theta)
    std::function<double(double)> exponent_deriv;
    std::function<cplx(cplx)> exponent_complex;   // optional
    double total_mass = std::numeric_limits<double>::infinity();  // Upsilon(0, inf)
    double domain_edge = 0.0;
    double tail_power = 1.0;  // growth power of phi along vertical lines
};

/// Levy triple (a, sigma, Pi) of a spectrally negative process. Pi is described
/// through nu(x, inf) = Pi(-inf, -x) on jump sizes x > 0.
struct LevyTriple {
    double a = 0.0;
    double sigma = 0.0;
    std::function<double(double)> pi_tail;
    std::function<double(double)> pi_density;  // optional
    // Draws a jump size y > eps from nu restricted to (eps, inf), normalised.
    std::function<double(double, std::mt19937_64&)> sample_jump;
    double total_rate = std::numeric_limits<double>::infinity();  // nu(0, inf)
};

struct ParentProcess {
    LevyTriple triple;
    LaplaceExponent psi;
};

namespace detail {

// int_{(1, inf)} y nu(dy) = nu(1, inf) + int_1^inf nu(y, inf) dy
inline double large_jump_mean(const std::function<double(double)>& tail)
{
    return tail(1.0) + quad::half_line(tail, 1.0, 1e-12).value;
}

}  // namespace detail

/// psi(theta) recomputed from the triple by quadrature of the jump integral,
/// integrated by parts against nu(y, inf) and split at y = 1.
inline double psi_from_triple(const LevyTriple& t, double theta)
{
    const auto& tail = t.pi_tail;
    auto near = [&](double y) {
        const double v = theta * (-std::expm1(-theta * y)) * tail(y);
        return std::isfinite(v) ? v : 0.0;  // only reached for y ~ 1e-200, where the integrand is negligible
    };
    auto far = [&](double y) { return theta * std::exp(-theta * y) * tail(y); };
    const double jumps = -theta * tail(1.0) + quad::endpoint_singular(near, 0.0, 1.0, 1e-12).value -
                         quad::half_line(far, 1.0, 1e-12).value;
    return -t.a * theta + 0.5 * t.sigma * t.sigma * theta * theta + jumps;
}

/// The parent process whose descending ladder height process is `ladder` and
/// for which P(tau_x^+ < inf) = exp(-varphi x).
inline ParentProcess build_parent(const LadderParams& ladder, double varphi)
{
    if (varphi < 0.0 || ladder.kappa < 0.0 || ladder.zeta < 0.0)
        throw ParameterError("build_parent: kappa, zeta, varphi must be nonnegative");
    if (varphi > 0.0 && ladder.kappa > 0.0)
        throw ParameterError("kappa*varphi must be 0 (both ladder processes killed)");

    ParentProcess p;
    LevyTriple& t = p.triple;
    t.sigma = std::sqrt(2.0 * ladder.zeta);
    auto dens = ladder.density;
    auto tail = ladder.tail;
    t.pi_tail = [=](double x) {
        if (x <= 0.0) return std::numeric_limits<double>::infinity();
        return varphi * (tail ? tail(x) : 0.0) + (dens ? dens(x) : 0.0);
    };
    if (dens) {
        auto dd = ladder.density_deriv;
        t.pi_density = [=](double x) {
            double d1;
            if (dd) {
                d1 = dd(x);
            } else {
                const double h = 1e-6 * x;
                d1 = (dens(x + h) - dens(x - h)) / (2.0 * h);
            }
            return varphi * dens(x) - d1;
        };
    }
    t.total_rate = ladder.total_mass;
    if (std::isfinite(ladder.total_mass)) {
        t.total_rate = t.pi_tail(1e-300);
        if (!(t.total_rate < 1e30)) t.total_rate = std::numeric_limits<double>::infinity();
    }

    LaplaceExponent& psi = p.psi;
    auto phi = ladder.exponent;
    auto dphi = ladder.exponent_deriv;
    psi.eval = [=](double th) { return (th - varphi) * phi(th); };
    if (dphi) psi.deriv = [=](double th) { return phi(th) + (th - varphi) * dphi(th); };
    if (ladder.exponent_complex) {
        auto phic = ladder.exponent_complex;
        psi.eval_complex = [=](cplx th) { return (th - varphi) * phic(th); };
    }
    psi.domain_edge = ladder.domain_edge;
    psi.descriptor = Descriptor::custom;
    psi.tail_power = ladder.tail_power + 1.0;
    if (dphi) psi.drift_at_zero = phi(0.0) - varphi * dphi(0.0);
    psi.name = "parent";

    if (dens || tail) {
        const double m1 = (t.pi_tail(1.0) > 0.0) ? detail::large_jump_mean(t.pi_tail) : 0.0;
        t.a = -m1 - mean_drift(psi);
    } else {
        t.a = -mean_drift(psi);
    }
    return p;
}

enum class Variation { bounded, unbounded };

struct VariationReport {
    Variation variation = Variation::unbounded;
    // Filled when Upsilon(0, inf) is finite: X_t = drift t + gaussian B_t - S_t.
    std::optional<double> drift;
    double gaussian = 0.0;
    std::function<double(double)> subordinator_tail;
};

inline VariationReport classify_variation(const LadderParams& ladder, double varphi = 0.0)
{
    VariationReport r;
    const bool infinite_mass = !std::isfinite(ladder.total_mass);
    r.variation = (infinite_mass || ladder.zeta > 0.0) ? Variation::unbounded : Variation::bounded;
    r.gaussian = std::sqrt(2.0 * ladder.zeta);
    if (!infinite_mass) {
        r.drift = ladder.kappa + ladder.total_mass - ladder.zeta * varphi;
        auto dens = ladder.density;
        auto tail = ladder.tail;
        r.subordinator_tail = [=](double x) {
            return varphi * (tail ? tail(x) : 0.0) + (dens ? dens(x) : 0.0);
        };
    }
    return r;
}

}  // namespace scalekit
