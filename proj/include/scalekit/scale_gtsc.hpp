#pragma once

// Scale functions of the GTSC class.
//
//   rational alpha = m/n : partial fractions of z^{m_-}/f_q(z) and tilted
//                          Mittag-Leffler derivatives
//   q = 0, zeta = 0      : one-dimensional integrals of E_{|alpha|,|alpha|}
//   alpha = 1/2          : inverse Gaussian ladder, erfc closed forms
//   alpha = 0            : gamma ladder, via the Fransen transform
//   anything else        : Bromwich inversion

#include "scalekit/bromwich.hpp"
#include "scalekit/error.hpp"
#include "scalekit/gtsc.hpp"
#include "scalekit/levy_core.hpp"
#include "scalekit/poly_pfd.hpp"
#include "scalekit/quadrature.hpp"
#include "scalekit/scale_function.hpp"
#include "scalekit/special_fn.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace scalekit {

inline constexpr int max_rational_denominator = 12;

/// kappa + c Gamma(-alpha) gamma^alpha, the ladder exponent at infinity minus the drift part.
inline double gtsc_k_prime(const GtscParams& p) { return p.kappa + p.c_gamma() * std::pow(p.gamma, p.alpha); }

/// W^(q) for alpha = m/n evaluated through the partial fraction decomposition.
class RationalGtscScale {
public:
    RationalGtscScale(const GtscParams& p, const RationalAlpha& al, double q) : p_(p), al_(al), q_(q)
    {
        if (al.n > max_rational_denominator)
            throw CapabilityError("rational route: n = " + std::to_string(al.n) +
                                  " is too large for stable evaluation; use the bromwich route");
        f_ = build_fq(p, al, q);
        pf_ = partial_fractions(f_, roots_with_multiplicity(f_), al.m_minus());
        for (const cplx& r : pf_.roots) radius_ = std::max(radius_, std::abs(r));
        for (int mu : pf_.multiplicities)
            if (mu - 1 > special::max_ml_derivative)
                throw CapabilityError("rational route: root multiplicity above the supported derivative order");
        laurent_ = laurent_at_infinity(f_, al.m_minus(), 400);
        const double r1 = pf_.roots[0].real();
        phi_q_ = std::pow(r1, al.n) - p.gamma;
    }

    const PartialFraction& partial_fraction() const { return pf_; }
    const Polynomial& polynomial() const { return f_; }
    double phi_q() const { return phi_q_; }

    /// The sum of all root terms without discarding the imaginary part.
    cplx eval_complex(double x) const { return sum_terms(x, false, false); }

    double eval(double x) const
    {
        if (x < 0.0) return 0.0;
        if (x == 0.0) return at_zero();
        if (small(x)) return series(x, false);
        return sum_terms(x, true, false).real();
    }

    double deriv(double x) const
    {
        if (x <= 0.0) throw ParameterError("rational route: derivative needs x > 0");
        if (small(x)) return series(x, true);
        return sum_terms(x, true, true).real();
    }

    double at_zero() const
    {
        if (p_.zeta == 0.0 && al_.m < 0) return 1.0 / gtsc_k_prime(p_);
        return 0.0;
    }

private:
    bool small(double x) const { return radius_ * std::pow(x, 1.0 / al_.n) <= 1.0; }

    // Term-wise inverse of z^{m_-}/f_q(z) = sum c_i z^{-(i+1)} with z = (theta + gamma)^{1/n}.
    double series(double x, bool derivative) const
    {
        const double a = 1.0 / al_.n;
        const double xa = std::pow(x, a);
        double sum = 0.0, dsum = 0.0, xp = 1.0 / x;  // x^{(i+1)/n - 1} built up from x^{-1}
        int quiet = 0;
        for (std::size_t i = 0; i < laurent_.size(); ++i) {
            xp *= xa;
            if (laurent_[i] == 0.0) continue;
            const double b = (i + 1) * a;
            const double t = laurent_[i] * xp * special::rgamma(b);
            sum += t;
            if (derivative) dsum += laurent_[i] * xp / x * special::rgamma(b - 1.0);
            quiet = (std::abs(t) < 1e-18 * std::abs(sum)) ? quiet + 1 : 0;
            if (quiet > al_.n + 2) break;
        }
        const double tilt = std::exp(-p_.gamma * x);
        if (!derivative) return tilt * sum;
        return tilt * (dsum - p_.gamma * sum);
    }

    cplx sum_terms(double x, bool pair_conjugates, bool derivative) const
    {
        const double a = 1.0 / al_.n;
        const double xa = std::pow(x, a);
        const double log_scale = p_.gamma * x;
        cplx w = 0.0, dw = 0.0;
        for (std::size_t k = 0; k < pf_.roots.size(); ++k) {
            const cplx r = pf_.roots[k];
            double weight = 1.0;
            if (pair_conjugates && r.imag() != 0.0) {
                if (r.imag() < 0.0) continue;
                weight = 2.0;
            }
            const cplx z = r * xa;
            double pw = std::pow(x, a - 1.0);  // x^{(j+1)/n - 1}
            for (std::size_t j = 0; j < pf_.coeffs[k].size(); ++j) {
                const cplx c = weight * pf_.coeffs[k][j] / special::detail::factorial(static_cast<int>(j));
                w += c * pw * special::mittag_leffler_deriv_scaled(a, a, static_cast<int>(j), z, log_scale);
                if (derivative)
                    dw += c * pw / x *
                          special::mittag_leffler_deriv_scaled(a, a - 1.0, static_cast<int>(j), z, log_scale);
                pw *= xa;
            }
        }
        if (pair_conjugates) {
            w = w.real();
            dw = dw.real();
        }
        return derivative ? dw - p_.gamma * w : w;
    }

    GtscParams p_;
    RationalAlpha al_;
    double q_;
    Polynomial f_;
    PartialFraction pf_;
    std::vector<double> laurent_;
    double radius_ = 0.0;
    double phi_q_ = 0.0;
};

inline ScaleFunction w_rational(const GtscParams& p, const RationalAlpha& al, double q)
{
    auto impl = std::make_shared<const RationalGtscScale>(p, al, q);
    ScaleFunction s;
    s.q = q;
    s.route = Route::rational_ml;
    s.phi_q = impl->phi_q();
    s.at_zero = impl->at_zero();
    s.eval = [impl](double x) { return impl->eval(x); };
    s.eval_deriv = [impl](double x) { return impl->deriv(x); };
    s.description = "gtsc rational alpha=" + std::to_string(al.m) + "/" + std::to_string(al.n);
    return s;
}

namespace detail {

// The q = 0, zeta = 0 closed form W(x) = A e^{varphi x} + B e^{varphi x} int_0^x g(y) dy with
// g(y) = e^{-(gamma+varphi) y} y^{a-1} E_{a,a}(lambda y^a), a = |alpha|.
struct ClosedFormPieces {
    double a = 0.0, lambda = 0.0, constant = 0.0, factor = 0.0, tilt = 0.0;
};

inline ClosedFormPieces closed_form_pieces(const GtscParams& p)
{
    p.validate();
    if (p.zeta != 0.0) throw CapabilityError("closed form needs zeta = 0; use the rational or bromwich route");
    if (p.alpha == 0.0 || p.alpha <= -1.0) throw CapabilityError("closed form needs alpha in (-1, 1) without 0");
    const double cg = p.c_gamma();
    const double kp = gtsc_k_prime(p);
    ClosedFormPieces c;
    c.tilt = p.gamma + p.varphi;
    if (p.alpha > 0.0) {
        c.a = p.alpha;
        c.lambda = kp / cg;
        c.factor = -1.0 / cg;
    } else {
        c.a = -p.alpha;
        c.lambda = cg / kp;
        c.constant = 1.0 / kp;
        c.factor = cg / (kp * kp);
    }
    return c;
}

inline double closed_integrand(const ClosedFormPieces& c, double y)
{
    if (y <= 0.0) return 0.0;
    const cplx e = special::mittag_leffler_deriv_scaled(c.a, c.a, 0, c.lambda * std::pow(y, c.a), c.tilt * y);
    return std::pow(y, c.a - 1.0) * e.real();
}

}  // namespace detail

/// q = 0 and zeta = 0: W(x) from the one-dimensional Mittag-Leffler integral.
inline double w0_closed(const GtscParams& p, double x)
{
    if (x < 0.0) return 0.0;
    const auto c = detail::closed_form_pieces(p);
    const double grow = std::exp(p.varphi * x);
    if (!std::isfinite(grow)) throw SaturationError("closed form: e^{varphi x} overflows");
    if (x == 0.0) return c.constant;
    auto g = [&](double y) { return detail::closed_integrand(c, y); };
    // The series/contour switch of E sits at |lambda y^a| = 1; split there and at |z| = 5.
    // Past the switch E carries ~1e-12 relative noise, so GK asks for 1e-10.
    std::vector<double> cuts{0.0};
    for (double zabs : {1.0, 5.0}) {
        if (c.lambda == 0.0) break;
        const double y = std::pow(zabs / std::abs(c.lambda), 1.0 / c.a);
        if (y > cuts.back() && y < x) cuts.push_back(y);
    }
    cuts.push_back(x);
    double integral = quad::endpoint_singular(g, cuts[0], cuts[1], 1e-13).value;
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i) integral += quad::gk(g, cuts[i], cuts[i + 1], 1e-10, 8).value;
    const double w = grow * (c.constant + c.factor * integral);
    if (!std::isfinite(w)) throw SaturationError("closed form: W overflows");
    return w;
}

inline ScaleFunction w_closed(const GtscParams& p)
{
    const auto c = detail::closed_form_pieces(p);
    ScaleFunction s;
    s.q = 0.0;
    s.route = Route::closed_form;
    s.phi_q = p.varphi;
    s.at_zero = c.constant;
    s.eval = [p](double x) { return w0_closed(p, x); };
    // W' = varphi W + e^{varphi x} B g(x)
    s.eval_deriv = [p, c](double x) {
        return p.varphi * w0_closed(p, x) + std::exp(p.varphi * x) * c.factor * detail::closed_integrand(c, x);
    };
    s.description = "gtsc closed form (q = 0, zeta = 0)";
    return s;
}

/// Inverse Gaussian IG(delta, gamma) ladder with zeta = varphi = kappa = 0.
class InverseGaussianScale {
public:
    InverseGaussianScale(double delta, double gamma, double q) : delta_(delta), gamma_(gamma), q_(q)
    {
        if (!(delta > 0.0) || !(gamma > 0.0)) throw ParameterError("ig: delta and gamma must be positive");
        if (q < 0.0) throw ParameterError("ig: q must be nonnegative");
        q0_ = 16.0 / 27.0 * delta * gamma * gamma * gamma;
        if (q == 0.0) {
            kind_ = Kind::zero;
            phi_q_ = 0.0;
        } else if (std::abs(q - q0_) <= 1e-9 * q0_) {
            kind_ = Kind::critical;
            // growth rate of the e^{8 gamma^2 x / 9} term
            phi_q_ = 8.0 / 9.0 * gamma * gamma;
        } else {
            kind_ = Kind::simple;
            const double s2 = std::sqrt(2.0);
            f_.c = {0.5 * delta * gamma * gamma * gamma - q, -delta * gamma * gamma / s2, -delta * gamma, s2 * delta};
            const RootInfo ri = roots_with_multiplicity(f_);
            for (int mu : ri.multiplicities)
                if (mu != 1) throw ConditioningError("ig: roots cluster although q is away from q0; loosen cluster_tol");
            roots_ = ri.roots;
            for (const cplx& r : roots_) {
                const cplx d = 3.0 * f_.c[3] * r * r + 2.0 * f_.c[2] * r + f_.c[1];
                weights_.push_back(r / d);
            }
            phi_q_ = roots_[0].real() * roots_[0].real() - 0.5 * gamma * gamma;
        }
    }

    double phi_q() const { return phi_q_; }
    double q0() const { return q0_; }
    const std::vector<cplx>& roots() const { return roots_; }

    double eval(double x) const
    {
        if (x <= 0.0) return 0.0;
        const double g = gamma_, d = delta_;
        switch (kind_) {
            case Kind::zero:
                return ((1.0 + g * g * x) * std::erfc(-g * std::sqrt(0.5 * x)) +
                        g * std::sqrt(2.0 * x / special::pi) * std::exp(-0.5 * g * g * x) - 1.0) /
                       (2.0 * d * g);
            case Kind::critical: {
                const double s = std::sqrt(0.5 * x);
                return (6.0 * g * std::sqrt(2.0 * x / special::pi) * std::exp(-0.5 * g * g * x) +
                        15.0 * std::exp(8.0 / 9.0 * g * g * x) * std::erfc(-5.0 * g / 3.0 * s) -
                        std::exp(-4.0 / 9.0 * g * g * x) * (15.0 + 2.0 * g * g * x) * std::erfc(g / 3.0 * s)) /
                       (36.0 * d * g);
            }
            case Kind::simple: {
                cplx w = 0.0;
                for (std::size_t k = 0; k < roots_.size(); ++k)
                    w += weights_[k] * special::erfc_scaled_product(roots_[k], x, 0.5 * g * g * x);
                return w.real();
            }
        }
        return 0.0;
    }

    double deriv(double x) const
    {
        if (x <= 0.0) throw ParameterError("ig: derivative needs x > 0");
        const double g = gamma_, d = delta_;
        const double e = std::exp(-0.5 * g * g * x);
        switch (kind_) {
            case Kind::zero:
                return 0.5 * g / d * std::erfc(-g * std::sqrt(0.5 * x)) + e / (d * std::sqrt(2.0 * special::pi * x));
            case Kind::critical: {
                const double s = std::sqrt(0.5 * x), rx = std::sqrt(x);
                const double e89 = std::exp(8.0 / 9.0 * g * g * x), e49 = std::exp(-4.0 / 9.0 * g * g * x);
                const double c1 = 1.0 / std::sqrt(special::pi * 2.0 * x);  // (2/sqrt(pi)) / (2 sqrt(2x))
                const double t1 = 6.0 * g * std::sqrt(2.0 / special::pi) * e * (0.5 / rx - 0.5 * g * g * rx);
                const double t2 = 15.0 * (8.0 / 9.0) * g * g * e89 * std::erfc(-5.0 * g / 3.0 * s) +
                                  15.0 * (5.0 * g / 3.0) * c1 * e;
                const double t3 = -(-4.0 / 9.0 * g * g * (15.0 + 2.0 * g * g * x) + 2.0 * g * g) * e49 *
                                      std::erfc(g / 3.0 * s) +
                                  (15.0 + 2.0 * g * g * x) * (g / 3.0) * c1 * e;
                return (t1 + t2 + t3) / (36.0 * d * g);
            }
            case Kind::simple: {
                cplx w = 0.0;
                const double tail = e / std::sqrt(special::pi * x);
                for (std::size_t k = 0; k < roots_.size(); ++k) {
                    const cplx r = roots_[k];
                    w += weights_[k] * (r * r * special::erfc_scaled_product(r, x, 0.5 * g * g * x) + r * tail);
                }
                return w.real() - 0.5 * g * g * eval(x);
            }
        }
        return 0.0;
    }

private:
    enum class Kind { zero, critical, simple };
    double delta_, gamma_, q_;
    double q0_ = 0.0, phi_q_ = 0.0;
    Kind kind_ = Kind::zero;
    Polynomial f_;
    std::vector<cplx> roots_, weights_;
};

inline ScaleFunction w_ig(double delta, double gamma, double q)
{
    auto impl = std::make_shared<const InverseGaussianScale>(delta, gamma, q);
    ScaleFunction s;
    s.q = q;
    s.route = Route::ig;
    s.phi_q = impl->phi_q();
    s.at_zero = 0.0;
    s.eval = [impl](double x) { return impl->eval(x); };
    s.eval_deriv = [impl](double x) { return impl->deriv(x); };
    s.description = "inverse gaussian ladder";
    return s;
}

/// GTSC parameters of the IG(delta, gamma) ladder: alpha = 1/2, c = delta/sqrt(2 pi), gamma -> gamma^2/2.
inline GtscParams ig_to_gtsc(double delta, double gamma)
{
    GtscParams p;
    p.alpha = 0.5;
    p.c = delta / std::sqrt(2.0 * special::pi);
    p.gamma = 0.5 * gamma * gamma;
    return p;
}

/// W'(x) = (1/c) x^{-1} e^{-gamma x} F(-log(gamma x)) for the gamma ladder.
inline double w_gamma_case_deriv(double c, double gamma, double x)
{
    if (!(c > 0.0) || !(gamma > 0.0)) throw ParameterError("gamma case: c and gamma must be positive");
    if (!(x > 0.0)) throw ParameterError("gamma case: derivative needs x > 0");
    const double f = special::fransen_transform(-std::log(gamma * x));
    const double v = f * std::exp(-gamma * x) / (c * x);
    if (!std::isfinite(v)) throw SaturationError("gamma case: F(-log(gamma x)) overflows");
    return v;
}

/// Gamma ladder (alpha = 0, q = kappa = zeta = varphi = 0), by integrating W'.
/// With u = -log(gamma y) the integral becomes (1/c) int_{u0}^inf exp(-e^{-u}) F(u) du.
/// Past U = u0 + 36 the factor exp(-e^{-u}) is 1 to double precision and
/// int_U^inf F(u) du = int_0^inf e^{-U t}/Gamma(t + 1) dt.
inline double w_gamma_case(double c, double gamma, double x)
{
    if (!(c > 0.0) || !(gamma > 0.0)) throw ParameterError("gamma case: c and gamma must be positive");
    if (x <= 0.0) return 0.0;
    const double u0 = -std::log(gamma * x);
    const double u1 = std::max(u0, 0.0) + 36.0;
    auto f = [](double u) { return std::exp(-std::exp(-u)) * special::fransen_transform(u, 1e-13); };
    std::vector<double> cuts;
    for (double u = u0; u < u1; u += 4.0) cuts.push_back(u);
    cuts.push_back(u1);
    // F itself comes from quadrature; deeper GK levels would only resolve its noise.
    const auto body = quad::gk_pieces(f, cuts, 1e-12, 6);
    auto g = [u1](double t) { return std::exp(-u1 * t) * special::rgamma(t + 1.0); };
    const auto tail = quad::gk(g, 0.0, 2.0, 1e-13, 12).value + quad::half_line(g, 2.0, 1e-13).value;
    const double w = (body.value + tail) / c;
    if (!std::isfinite(w))
        throw NumericalError("gamma case: quadrature failed; the integrand near y = 0 behaves like 1/(y log^2 y), "
                             "split the range at y = 1/gamma and integrate in u = -log(gamma y)",
                             w);
    return w;
}

/// The same W(x) as int_0^inf P(c t, gamma x) dt.
inline double w_gamma_case_p_integral(double c, double gamma, double x)
{
    if (!(c > 0.0) || !(gamma > 0.0)) throw ParameterError("gamma case: c and gamma must be positive");
    if (x <= 0.0) return 0.0;
    auto f = [&](double t) { return t <= 0.0 ? 1.0 : special::reg_lower_gamma(c * t, gamma * x); };
    // P(ct, gamma x) falls off once c t exceeds gamma x; split there.
    const double knee = std::max(1.0, 2.0 * gamma * x) / c;
    return quad::gk(f, 0.0, knee, 1e-12, 10).value + quad::half_line(f, knee, 1e-12).value;
}

inline ScaleFunction w_gamma(double c, double gamma)
{
    ScaleFunction s;
    s.q = 0.0;
    s.route = Route::gamma_case;
    s.phi_q = 0.0;
    s.at_zero = 0.0;
    s.eval = [c, gamma](double x) { return w_gamma_case(c, gamma, x); };
    s.eval_deriv = [c, gamma](double x) { return w_gamma_case_deriv(c, gamma, x); };
    s.description = "gamma ladder";
    return s;
}

struct ZeroAsymptote {
    double w0 = 0.0;          // W(0+)
    double wprime0 = 0.0;     // W'(0+), may be +inf
    double coefficient = 0.0; // W(x) - W(0+) ~ coefficient x^power (gamma ladder: coefficient / log(1/(gamma x)))
    double power = 0.0;
    std::string leading_term;
};

/// Behaviour of W^(q) at 0+ from the growth of psi at infinity.
inline ZeroAsymptote asymptote_zero(const GtscParams& p, double q)
{
    p.validate();
    ZeroAsymptote z;
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (p.zeta > 0.0) {
        z.wprime0 = 1.0 / p.zeta;
        z.coefficient = 1.0 / p.zeta;
        z.power = 1.0;
        z.leading_term = "x/zeta";
    } else if (p.alpha > 0.0) {
        z.wprime0 = inf;
        z.coefficient = -1.0 / (p.c_gamma() * std::tgamma(1.0 + p.alpha));
        z.power = p.alpha;
        z.leading_term = "-x^alpha/(c Gamma(-alpha) Gamma(1+alpha))";
    } else if (p.alpha == 0.0) {
        z.wprime0 = inf;
        z.coefficient = 1.0 / p.c;
        z.power = 0.0;
        z.leading_term = "1/(c log(1/(gamma x)))";
    } else {
        const double kp = gtsc_k_prime(p);
        z.w0 = 1.0 / kp;
        z.leading_term = "1/(kappa + c gamma^alpha Gamma(-alpha))";
        if (p.alpha > -1.0) {
            z.wprime0 = inf;
            z.coefficient = p.c / (kp * kp * -p.alpha);  // integral of c x^{-alpha-1}/K'^2
            z.power = -p.alpha;
        } else {
            // finite Levy measure: (q + Pi(-inf, 0)) / drift^2
            const double pi_mass = p.c + p.varphi * p.c / p.gamma;
            z.wprime0 = (q + pi_mass) / (kp * kp);
            z.coefficient = z.wprime0;
            z.power = 1.0;
        }
    }
    return z;
}

/// Exponents j(1 - alpha) + k > 0 in increasing order: the powers of h in W^(q)'(h) - W'(0+)
/// when zeta > 0 (the transform of W' expands in theta^{-(1-alpha)} and theta^{-1}).
inline std::vector<double> zero_correction_exponents(double alpha, int count)
{
    std::vector<double> ex;
    for (int j = 0; j <= count; ++j)
        for (int k = 0; k <= count; ++k) {
            const double e = j * (1.0 - alpha) + k;
            if (!(e > 0.0)) continue;
            if (std::none_of(ex.begin(), ex.end(), [&](double v) { return std::abs(v - e) < 1e-9; })) ex.push_back(e);
        }
    std::sort(ex.begin(), ex.end());
    ex.resize(std::min<std::size_t>(ex.size(), count));
    return ex;
}

/// Richardson extrapolation of f(h) to h = 0 when f(h) - f(0) = sum_k a_k h^{e_k} + ...;
/// uses the steps h0 2^{-i}, i = 0..exponents.size().
inline double richardson_at_zero(const std::function<double(double)>& f, const std::vector<double>& exponents, double h0)
{
    const int n = static_cast<int>(exponents.size()) + 1;
    Eigen::MatrixXd m(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        const double h = h0 * std::pow(0.5, i);
        m(i, 0) = 1.0;
        for (int k = 1; k < n; ++k) m(i, k) = std::pow(h, exponents[k - 1]);
        rhs(i) = f(h);
    }
    return m.colPivHouseholderQr().solve(rhs)(0);
}

/// W'(0+) by extrapolation, for zeta > 0. The j-series has ratio about
/// |c Gamma(-alpha)/zeta| h^{1-alpha}, so the ladder starts at h = 1e-5.
inline double wprime_at_zero_extrapolated(const ScaleFunction& w, const GtscParams& p)
{
    if (!(p.zeta > 0.0)) throw NotApplicableError("W'(0+) extrapolation needs zeta > 0");
    return richardson_at_zero([&](double h) { return w.derivative(h); }, zero_correction_exponents(p.alpha, 8), 1e-5);
}

enum class InfinityRegime { bounded, linear, power, exponential };

struct InfinityAsymptote {
    InfinityRegime regime = InfinityRegime::bounded;
    double constant = 0.0;  // limit, slope, power coefficient or exponential prefactor
    double rate = 0.0;      // exponential rate (or the power for the stable limit)
};

/// Behaviour of W^(q) as x -> inf.
inline InfinityAsymptote asymptote_infinity(const GtscParams& p, double q)
{
    p.validate();
    InfinityAsymptote a;
    const auto psi = gtsc_exponent(p);
    if (q > 0.0) {
        const double phi = big_phi(psi, q);
        a.regime = InfinityRegime::exponential;
        a.rate = phi;
        a.constant = 1.0 / psi.derivative(phi);
        return a;
    }
    const double drift = gtsc_mean_drift(p);
    if (std::abs(drift) <= 1e-10 * std::max({1.0, p.kappa, p.c})) {
        if (p.gamma == 0.0 && p.zeta == 0.0) {
            a.regime = InfinityRegime::power;
            a.rate = p.alpha;
            a.constant = -1.0 / (p.c_gamma() * std::tgamma(1.0 + p.alpha));
            return a;
        }
        a.regime = InfinityRegime::linear;
        a.constant = 1.0 / gtsc_ladder_exponent_deriv(p, 0.0);
        return a;
    }
    if (drift > 0.0) {
        a.regime = InfinityRegime::bounded;
        a.constant = 1.0 / drift;
        return a;
    }
    a.regime = InfinityRegime::exponential;
    a.rate = p.varphi;
    a.constant = 1.0 / gtsc_ladder_exponent(p, p.varphi);
    return a;
}

enum class GtscRoute { automatic, rational, closed, ig, gamma, bromwich };

inline std::optional<GtscRoute> parse_gtsc_route(const std::string& s)
{
    if (s == "auto") return GtscRoute::automatic;
    if (s == "rational") return GtscRoute::rational;
    if (s == "closed") return GtscRoute::closed;
    if (s == "ig") return GtscRoute::ig;
    if (s == "gamma") return GtscRoute::gamma;
    if (s == "bromwich") return GtscRoute::bromwich;
    return std::nullopt;
}

inline bool is_ig_shape(const GtscParams& p) { return p.alpha == 0.5 && p.kappa == 0.0 && p.zeta == 0.0 && p.varphi == 0.0; }

inline ScaleFunction gtsc_bromwich(const GtscParams& p, double q, const InversionConfig& cfg = {})
{
    const double w0 = (p.zeta == 0.0 && p.alpha < 0.0) ? 1.0 / gtsc_k_prime(p) : 0.0;
    ScaleFunction s = bromwich_scale(gtsc_exponent(p), q, cfg, w0);
    s.description = "gtsc bromwich";
    return s;
}

namespace detail {

inline ScaleFunction gtsc_scale_route(const GtscParams& p, double q, GtscRoute route, const InversionConfig& cfg)
{
    p.validate();
    if (q < 0.0) throw ParameterError("q must be nonnegative");
    const auto rational = (p.alpha != 0.0) ? RationalAlpha::from_double(p.alpha, max_rational_denominator)
                                           : std::optional<RationalAlpha>{};
    const bool gamma_ok = p.alpha == 0.0 && q == 0.0 && p.kappa == 0.0 && p.zeta == 0.0 && p.varphi == 0.0;
    switch (route) {
        case GtscRoute::ig:
            if (!is_ig_shape(p)) throw CapabilityError("ig route needs alpha = 1/2 and kappa = zeta = varphi = 0");
            return w_ig(p.c * std::sqrt(2.0 * special::pi), std::sqrt(2.0 * p.gamma), q);
        case GtscRoute::gamma:
            if (!gamma_ok) throw CapabilityError("gamma route needs alpha = 0 and q = kappa = zeta = varphi = 0");
            return w_gamma(p.c, p.gamma);
        case GtscRoute::closed:
            if (q != 0.0) throw CapabilityError("closed form needs q = 0");
            return w_closed(p);
        case GtscRoute::rational:
            if (!rational) throw CapabilityError("alpha is not m/n with n <= 12; use the bromwich route");
            return w_rational(p, *rational, q);
        case GtscRoute::bromwich:
            return gtsc_bromwich(p, q, cfg);
        case GtscRoute::automatic:
            break;
    }
    if (is_ig_shape(p) && p.gamma > 0.0) return gtsc_scale_route(p, q, GtscRoute::ig, cfg);
    if (gamma_ok) return w_gamma(p.c, p.gamma);
    if (rational) return w_rational(p, *rational, q);
    if (q == 0.0 && p.zeta == 0.0 && p.alpha > -1.0 && p.alpha != 0.0) return w_closed(p);
    return gtsc_bromwich(p, q, cfg);
}

}  // namespace detail

/// W^(q) of a GTSC process through the requested route; `automatic` prefers the
/// closed forms, then the rational formula, then numerical inversion.
inline ScaleFunction gtsc_scale(const GtscParams& p, double q, GtscRoute route = GtscRoute::automatic,
                                const InversionConfig& cfg = {})
{
    ScaleFunction s = detail::gtsc_scale_route(p, q, route, cfg);
    s.deriv_at_zero = asymptote_zero(p, q).wprime0;
    return s;
}

}  // namespace scalekit
