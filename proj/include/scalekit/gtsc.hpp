#pragma once

// The GTSC model class: a killed tempered stable subordinator with drift as the
// descending ladder height process, and its parent process.
//
//   phi(theta) = kappa + zeta theta + c Gamma(-alpha) (gamma^alpha - (gamma + theta)^alpha)
//   psi(theta) = (theta - varphi) phi(theta),     kappa varphi = 0
//
// alpha = 0 is the gamma-subordinator limit phi = kappa + zeta theta + c log(1 + theta/gamma).

#include "scalekit/error.hpp"
#include "scalekit/levy_core.hpp"
#include "scalekit/special_fn.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace scalekit {

struct GtscParams {
    double alpha = 0.5;
    double gamma = 1.0;
    double c = 1.0;
    double zeta = 0.0;
    double kappa = 0.0;
    double varphi = 0.0;

    void validate() const
    {
        if (!(alpha >= -1.0 && alpha < 1.0)) throw ParameterError("alpha must lie in [-1, 1)");
        if (!(c > 0.0)) throw ParameterError("c must be positive");
        if (gamma < 0.0 || zeta < 0.0 || kappa < 0.0 || varphi < 0.0)
            throw ParameterError("gamma, zeta, kappa, varphi must be nonnegative");
        if (kappa * varphi != 0.0) throw ParameterError("kappa*varphi must be 0");
        if (alpha <= 0.0 && !(gamma > 0.0)) throw ParameterError("gamma must be positive when alpha <= 0");
    }

    // c Gamma(-alpha); the alpha = 0 limit is handled separately by every caller.
    double c_gamma() const { return c * std::tgamma(-alpha); }
};

/// The six parameter sets used for the figure grid (c = gamma = 1).
inline GtscParams gtsc_case(char label, double alpha)
{
    GtscParams p;
    p.alpha = alpha;
    switch (label) {
        case 'A': break;
        case 'B': p.kappa = 1.0; break;
        case 'C': p.varphi = 1.0; break;
        case 'D': p.zeta = 1.0; break;
        case 'E': p.kappa = 1.0; p.zeta = 1.0; break;
        case 'F': p.varphi = 1.0; p.zeta = 1.0; break;
        default: throw ParameterError(std::string("unknown case label ") + label);
    }
    return p;
}

/// Ladder exponent phi(theta) on the complex plane cut along (-inf, -gamma].
inline cplx gtsc_ladder_exponent(const GtscParams& p, cplx theta)
{
    if (p.alpha == 0.0) return p.kappa + p.zeta * theta + p.c * std::log((p.gamma + theta) / p.gamma);
    return p.kappa + p.zeta * theta +
           p.c_gamma() * (std::pow(p.gamma, p.alpha) - std::pow(p.gamma + theta, p.alpha));
}

inline double gtsc_ladder_exponent(const GtscParams& p, double theta)
{
    if (p.alpha == 0.0) return p.kappa + p.zeta * theta + p.c * std::log1p(theta / p.gamma);
    return p.kappa + p.zeta * theta +
           p.c_gamma() * (std::pow(p.gamma, p.alpha) - std::pow(p.gamma + theta, p.alpha));
}

// phi'(theta) = zeta + c Gamma(1 - alpha) (gamma + theta)^(alpha - 1)
inline double gtsc_ladder_exponent_deriv(const GtscParams& p, double theta)
{
    return p.zeta + p.c * std::tgamma(1.0 - p.alpha) * std::pow(p.gamma + theta, p.alpha - 1.0);
}

/// psi'(0+) = kappa - varphi (zeta + c gamma^(alpha-1) Gamma(1 - alpha)).
inline double gtsc_mean_drift(const GtscParams& p)
{
    if (p.varphi == 0.0) return p.kappa;
    return p.kappa - p.varphi * gtsc_ladder_exponent_deriv(p, 0.0);
}

inline LadderParams gtsc_ladder(const GtscParams& p)
{
    p.validate();
    LadderParams l;
    l.kappa = p.kappa;
    l.zeta = p.zeta;
    const double a = p.alpha, g = p.gamma, c = p.c;
    l.density = [=](double x) { return c * std::pow(x, -a - 1.0) * std::exp(-g * x); };
    l.density_deriv = [=](double x) {
        return -c * std::pow(x, -a - 1.0) * std::exp(-g * x) * ((a + 1.0) / x + g);
    };
    // Upsilon(x, inf) = c gamma^alpha Gamma(-alpha, gamma x)
    l.tail = [=](double x) {
        if (g == 0.0) return c * std::pow(x, -a) / a;
        const double s = g * x;
        if (a == 0.0) return c * boost::math::expint(1, s);
        if (a < 0.0) return c * std::pow(g, a) * boost::math::tgamma(-a, s);
        // Gamma(-a, s) = (Gamma(1 - a, s) - s^(-a) e^(-s)) / (-a)
        const double upper = (boost::math::tgamma(1.0 - a, s) - std::pow(s, -a) * std::exp(-s)) / (-a);
        return c * std::pow(g, a) * upper;
    };
    l.exponent = [=](double th) { return gtsc_ladder_exponent(p, th); };
    l.exponent_deriv = [=](double th) { return gtsc_ladder_exponent_deriv(p, th); };
    l.exponent_complex = [=](cplx th) { return gtsc_ladder_exponent(p, th); };
    l.total_mass = (a < 0.0) ? c * std::tgamma(-a) * std::pow(g, a) : std::numeric_limits<double>::infinity();
    l.domain_edge = -g;
    l.tail_power = (p.zeta > 0.0) ? 1.0 : std::max(a, 0.0);
    return l;
}

/// Parent-process Laplace exponent with closed-form derivative and psi'(0+).
inline LaplaceExponent gtsc_exponent(const GtscParams& p)
{
    p.validate();
    LaplaceExponent psi;
    psi.eval = [p](double th) { return (th - p.varphi) * gtsc_ladder_exponent(p, th); };
    psi.deriv = [p](double th) {
        return gtsc_ladder_exponent(p, th) + (th - p.varphi) * gtsc_ladder_exponent_deriv(p, th);
    };
    psi.eval_complex = [p](cplx th) { return (th - p.varphi) * gtsc_ladder_exponent(p, th); };
    psi.domain_edge = -p.gamma;
    psi.descriptor = Descriptor::gtsc;
    psi.drift_at_zero = gtsc_mean_drift(p);
    psi.tail_power = (p.zeta > 0.0) ? 2.0 : 1.0 + std::max(p.alpha, 0.0);
    psi.name = "gtsc";
    return psi;
}

/// Parent process with the GTSC exponent and Levy measure
/// Pi(dx) = c (varphi + gamma) |x|^(-alpha-1) e^(gamma x) + c (alpha + 1) |x|^(-alpha-2) e^(gamma x).
inline ParentProcess gtsc_parent(const GtscParams& p)
{
    ParentProcess parent = build_parent(gtsc_ladder(p), p.varphi);
    parent.psi = gtsc_exponent(p);
    return parent;
}

}  // namespace scalekit
