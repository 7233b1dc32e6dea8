#pragma once

// Numerical Laplace inversion of 1/(psi(theta) - q), and the forward check
// int_0^inf e^{-theta x} W(x) dx = 1/(psi(theta) - q).
//
// Shifted line: W(x) = e^{rx}/(2 pi) int_R e^{iyx} F(r + iy) dy.  The y-axis is cut
// into half periods pi/x; the partial sums are accelerated by Wynn's epsilon
// algorithm, which also sums the slowly decaying (principal value) cases.
// Talbot: Weideman's optimised cotangent contour with the trapezoid rule.

#include "scalekit/error.hpp"
#include "scalekit/levy_core.hpp"
#include "scalekit/quadrature.hpp"
#include "scalekit/scale_function.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

namespace scalekit {

enum class Contour { shifted_line, talbot };
enum class Integrability { lebesgue, principal_value };

struct InversionConfig {
    Contour contour = Contour::shifted_line;
    std::optional<double> r;  // abscissa of the line; chosen from Phi(q) and x when empty
    double margin = 0.5;     // clearance of the Talbot contour to the right of Phi(q)
    // > 0: plain integral over |y| <= truncation, error from halving it.
    // 0: cycle-by-cycle integration with extrapolation.
    double truncation = 0.0;
    int nodes = 64;          // extrapolated half periods on the line, at least 64
    int talbot_nodes = 32;   // trapezoid points on the Talbot contour
    double tolerance = 1e-8; // relative target for the reported error
    std::optional<Integrability> integrability;  // classified from psi when empty

    void validate() const
    {
        if (nodes < 64) throw ParameterError("bromwich: nodes must be >= 64");
        if (talbot_nodes < 8 || talbot_nodes % 2) throw ParameterError("bromwich: talbot_nodes must be even and >= 8");
        if (!(margin > 0.0)) throw ParameterError("bromwich: margin must be positive");
    }
};

struct InversionResult {
    double value = 0.0;
    double error = 0.0;
    double imag_residue = 0.0;
    double r = 0.0;
    Integrability mode = Integrability::lebesgue;
    int cycles = 0;
};

/// Lebesgue when |1/psi| is integrable along vertical lines (growth power > 1).
inline Integrability classify_integrability(const LaplaceExponent& psi)
{
    return psi.tail_power > 1.0 ? Integrability::lebesgue : Integrability::principal_value;
}

namespace detail {

// Wynn epsilon extrapolation of the last few partial sums.
inline double wynn_epsilon(const std::vector<double>& s, std::size_t window = 24)
{
    const std::size_t n = std::min(window, s.size());
    // eps_{k+1}^(i) = eps_{k-1}^(i+1) + 1/(eps_k^(i+1) - eps_k^(i)); even k are estimates.
    std::vector<double> em1(n + 1, 0.0);
    std::vector<double> e0(s.end() - static_cast<long>(n), s.end());
    double best = e0.back();
    for (std::size_t k = 1; e0.size() > 1; ++k) {
        std::vector<double> next(e0.size() - 1);
        for (std::size_t i = 0; i < next.size(); ++i) {
            const double d = e0[i + 1] - e0[i];
            if (d == 0.0 || !std::isfinite(d)) return best;
            next[i] = em1[i + 1] + 1.0 / d;
        }
        em1 = std::move(e0);
        e0 = std::move(next);
        if (k % 2 == 0 && std::isfinite(e0.back())) best = e0.back();
    }
    return best;
}

inline double default_abscissa(const InversionConfig& cfg, double phi_q, double x)
{
    if (cfg.r) {
        if (!(*cfg.r > phi_q)) throw ParameterError("bromwich: r must exceed Phi(q)");
        return *cfg.r;
    }
    // max(1, Phi/2) above Phi, pulled to Phi + 1/x for large x so that e^{(r - Phi) x}
    // (the cancellation factor of the oscillatory integral) stays below e.
    const double base = std::max(1.0, 0.5 * phi_q);
    return phi_q + std::min(base, 1.0 / x);
}

inline InversionResult invert_line(const std::function<cplx(cplx)>& transform, double x, double r,
                                   double scale_hint, const InversionConfig& cfg)
{
    auto g = [&](double y) {
        const cplx e = std::polar(1.0, y * x);
        return e * transform(cplx(r, y)) + std::conj(e) * transform(cplx(r, -y));
    };
    const double amp = std::exp(r * x) / (2.0 * std::numbers::pi);
    const double period = std::numbers::pi / x;
    InversionResult out;
    out.r = r;

    if (cfg.truncation > 0.0) {
        const int cycles = std::max(2, static_cast<int>(std::ceil(cfg.truncation / (2.0 * period))) * 2);
        cplx half = 0.0, full = 0.0;
        double qerr = 0.0;
        for (int k = 0; k < cycles; ++k) {
            auto piece = quad::gk(g, k * period, (k + 1) * period, 1e-12, 12);
            full += piece.value;
            qerr += piece.error;
            if (k + 1 == cycles / 2) half = full;
        }
        out.value = amp * full.real();
        out.imag_residue = amp * std::abs(full.imag());
        out.error = amp * (std::abs(full.real() - half.real()) + qerr);
        out.cycles = cycles;
        return out;
    }

    const double y_min = 10.0 * (1.0 + std::abs(r) + scale_hint);
    const double periods = std::ceil(y_min / period);
    if (periods > 50000.0)
        throw NumericalError("bromwich: x = " + std::to_string(x) +
                             " needs more than 50000 periods on the line; use the asymptote at infinity");
    const int start = std::max(1, static_cast<int>(periods));
    cplx sum = 0.0;
    double qerr = 0.0, l1 = 0.0;
    // The first stretch holds all the structure; integrate it in pieces of one period,
    // refined geometrically near 0 where a long period would hide the transform's scale.
    std::vector<double> cuts{0.0};
    for (double y = 0.25 * (1.0 + std::abs(r) + scale_hint); y < period; y *= 2.0) cuts.push_back(y);
    for (int k = 1; k <= start; ++k) cuts.push_back(k * period);
    // Half periods are smooth: deep recursion there only chases roundoff.
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const bool near_zero = cuts[i + 1] < period;
        auto piece = quad::gk(g, cuts[i], cuts[i + 1], near_zero ? 1e-13 : 1e-12, near_zero ? 12 : 5);
        sum += piece.value;
        qerr += piece.error;
        l1 += std::abs(piece.value);
    }
    std::vector<double> partial{sum.real()};
    double imag_sum = sum.imag();
    double est = sum.real(), prev_est = est, ext_err = std::numeric_limits<double>::infinity();
    int calm = 0, k = start;
    for (; k < start + cfg.nodes; ++k) {
        auto piece = quad::gk(g, k * period, (k + 1) * period, 1e-12, 4);
        sum += piece.value;
        qerr += piece.error;
        l1 += std::abs(piece.value);
        imag_sum = sum.imag();
        partial.push_back(sum.real());
        if (partial.size() < 6) continue;
        prev_est = est;
        est = wynn_epsilon(partial);
        const double diff = std::abs(est - prev_est);
        const double target = std::max(0.01 * cfg.tolerance * std::abs(est), 1e-15 * l1);
        ext_err = diff;
        calm = (diff <= target) ? calm + 1 : 0;
        if (calm >= 3) break;
    }
    out.value = amp * est;
    out.error = amp * (ext_err + qerr + 1e-16 * l1);
    out.imag_residue = amp * std::abs(imag_sum);
    out.cycles = k - start;
    return out;
}

inline InversionResult invert_talbot(const std::function<cplx(cplx)>& transform, double x, double phi_q,
                                     const InversionConfig& cfg)
{
    double l1 = 0.0;
    auto run = [&](int n) {
        const double mu = n / x;
        const double sigma = phi_q + std::max(0.0, cfg.margin - 0.1709 * mu);
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) {
            const double ph = -std::numbers::pi + (k + 0.5) * 2.0 * std::numbers::pi / n;
            const double c = 0.6407 * ph;
            const double cot = std::cos(c) / std::sin(c);
            const cplx th = sigma + mu * cplx(-0.6122 + 0.5017 * ph * cot, 0.2645 * ph);
            const cplx dth = mu * cplx(0.5017 * (cot - c / (std::sin(c) * std::sin(c))), 0.2645);
            const cplx term = std::exp(th * x) * transform(th) * dth;
            acc += term;
            l1 += std::abs(term) / n;
        }
        return acc / (cplx(0.0, 1.0) * static_cast<double>(n));
    };
    const cplx half = run(cfg.talbot_nodes / 2);
    l1 = 0.0;
    const cplx full = run(cfg.talbot_nodes);
    InversionResult out;
    out.value = full.real();
    out.imag_residue = std::abs(full.imag());
    // Geometric convergence: the N-point error is about the square of the relative N/2 gap.
    const double gap = std::abs(full.real() - half.real());
    out.error = gap * std::min(1.0, gap / (std::abs(full.real()) + 1e-300)) + 4e-16 * l1;
    out.r = phi_q;
    out.cycles = cfg.talbot_nodes;
    return out;
}

// Abscissa a < Phi(q) with psi(a) < q.  Since Re psi(a + iy) <= psi(a) for a Laplace
// exponent, the line Re theta = a meets no zero of psi - q.
inline std::optional<double> left_abscissa(const LaplaceExponent& psi, double q, double phi_q)
{
    const double edge = std::isfinite(psi.domain_edge) ? psi.domain_edge : -std::numeric_limits<double>::infinity();
    // Ask for a clear gap below q: by convexity it keeps the line off any second real zero.
    const double slope = psi.derivative(phi_q);
    double d = std::min(1.0, 0.5 * (phi_q - edge));
    for (int i = 0; i < 12 && d > 0.0; ++i, d *= 0.5)
        if (psi(phi_q - d) - q < -0.25 * slope * d) return phi_q - d;
    return std::nullopt;
}

// pole_numerator: the transform behaves like pole_numerator / (psi'(Phi) (theta - Phi)) at Phi.
inline InversionResult invert_transform(const LaplaceExponent& psi, double q, double x,
                                        const std::function<cplx(cplx)>& transform, double pole_numerator,
                                        const InversionConfig& cfg)
{
    cfg.validate();
    if (!(x > 0.0)) throw ParameterError("bromwich: x must be positive");
    if (!psi.has_complex()) throw CapabilityError(psi.name + ": inversion needs the complex continuation of psi");
    const double phi_q = big_phi(psi, q);
    const double hint = std::isfinite(psi.domain_edge) ? std::abs(psi.domain_edge) : 0.0;
    InversionResult res;
    // For tiny x one period pi/x of the line is far too long for GK; the Talbot contour,
    // scaled by N/x, then encloses every singularity and is the better choice.
    const bool tiny = cfg.truncation == 0.0 && x * (1.0 + std::abs(phi_q) + hint) < 1e-3;
    if (cfg.contour == Contour::talbot || tiny) {
        res = invert_talbot(transform, x, phi_q, cfg);
    } else {
        // Large x: move the line left across the simple pole at Phi and add its residue;
        // what is left on the line is damped by e^{(a - Phi) x} against W.
        const double slope = psi.derivative(phi_q);
        const auto a = (x >= 1.0 && !cfg.r && cfg.truncation == 0.0 && slope > 1e-8)
                           ? left_abscissa(psi, q, phi_q)
                           : std::nullopt;
        if (a) {
            res = invert_line(transform, x, *a, hint, cfg);
            res.value += pole_numerator / slope * std::exp(phi_q * x);
        } else {
            res = invert_line(transform, x, default_abscissa(cfg, phi_q, x), hint, cfg);
        }
    }
    res.mode = cfg.integrability.value_or(classify_integrability(psi));
    if (!std::isfinite(res.value) || res.error > cfg.tolerance * (std::abs(res.value) + 1e-300) + 1e-14)
        throw NumericalError("bromwich: error estimate " + std::to_string(res.error) + " above tolerance at x = " +
                                 std::to_string(x),
                             res.value);
    return res;
}

}  // namespace detail

/// W^(q)(x) by inversion of 1/(psi - q).
inline InversionResult invert(const LaplaceExponent& psi, double q, double x, const InversionConfig& cfg = {})
{
    auto transform = [&](cplx th) { return 1.0 / (psi(th) - q); };
    return detail::invert_transform(psi, q, x, transform, 1.0, cfg);
}

/// W^(q)'(x) by inversion of theta/(psi - q) - W(0+).
inline InversionResult invert_derivative(const LaplaceExponent& psi, double q, double x, double w_at_zero,
                                         const InversionConfig& cfg = {})
{
    auto transform = [&](cplx th) { return th / (psi(th) - q) - w_at_zero; };
    return detail::invert_transform(psi, q, x, transform, big_phi(psi, q), cfg);
}

/// ScaleFunction whose values come from numerical inversion.  w_at_zero is W(0+),
/// needed for the derivative of bounded-variation processes.
inline ScaleFunction bromwich_scale(const LaplaceExponent& psi, double q, const InversionConfig& cfg = {},
                                    double w_at_zero = 0.0)
{
    ScaleFunction s;
    s.q = q;
    s.route = Route::bromwich;
    s.phi_q = big_phi(psi, q);
    s.at_zero = w_at_zero;
    s.description = "bromwich inversion of 1/(psi - q) for " + psi.name;
    s.eval = [=](double x) { return x <= 0.0 ? (x == 0.0 ? w_at_zero : 0.0) : invert(psi, q, x, cfg).value; };
    s.eval_deriv = [=](double x) { return invert_derivative(psi, q, x, w_at_zero, cfg).value; };
    return s;
}

struct LaplaceCheck {
    double theta = 0.0;
    double lhs = 0.0;  // int_0^inf e^{-theta x} W(x) dx
    double rhs = 0.0;  // 1/(psi(theta) - q)
    double rel_err = 0.0;
    bool stagnated = false;
};

struct LaplaceReport {
    std::vector<LaplaceCheck> checks;
    double max_rel_err = 0.0;
    bool stagnated = false;
};

/// Forward quadrature of the Laplace transform of W against 1/(psi(theta) - q).
inline LaplaceReport verify_laplace_identity(const ScaleFunction& w, const LaplaceExponent& psi,
                                             const std::vector<double>& thetas, double rel_tol = 1e-10)
{
    LaplaceReport rep;
    // exp-sinh reuses its abscissae for every theta, so cache W.
    std::map<double, double> cache;
    auto wc = [&](double x) {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        const double v = w(x);
        cache.emplace(x, v);
        return v;
    };
    for (double th : thetas) {
        if (!(th > w.phi_q)) throw ParameterError("verify_laplace_identity: theta must exceed Phi(q)");
        LaplaceCheck c;
        c.theta = th;
        c.rhs = 1.0 / (psi(th) - w.q);
        auto f = [&](double x) {
            // W grows at most like e^{Phi x} times a power; past this the tail is below e^{-50}.
            if ((th - w.phi_q) * x > 50.0) return 0.0;
            const double v = std::exp(-th * x) * wc(x);
            return std::isfinite(v) ? v : 0.0;
        };
        double err = 0.0;
        if (w.kink_spacing) {
            // Piecewise smooth: integrate between kinks until the tail is negligible.
            const double h = *w.kink_spacing;
            double total = 0.0;
            for (int k = 0; k < 1000000; ++k) {
                auto piece = quad::gk(f, k * h, (k + 1) * h, rel_tol, 12);
                total += piece.value;
                err += piece.error;
                if (k > 2 && std::abs(piece.value) < 1e-17 * std::abs(total) && th * (k + 1) * h > 40.0) break;
            }
            c.lhs = total;
        } else {
            auto r = quad::half_line(f, 0.0, rel_tol);
            c.lhs = r.value;
            err = r.error;
        }
        c.stagnated = !(err <= 1e-3 * std::abs(c.lhs));
        c.rel_err = std::abs(c.lhs - c.rhs) / std::abs(c.rhs);
        rep.max_rel_err = std::max(rep.max_rel_err, c.rel_err);
        rep.stagnated = rep.stagnated || c.stagnated;
        rep.checks.push_back(c);
    }
    return rep;
}

/// The four standard abscissae Phi(q) + {0.5, 1, 2, 5}.
inline std::vector<double> standard_thetas(double phi_q) { return {phi_q + 0.5, phi_q + 1.0, phi_q + 2.0, phi_q + 5.0}; }

}  // namespace scalekit
