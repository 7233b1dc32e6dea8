#pragma once

// The polynomial f_q for rational alpha = m/n, its roots with multiplicities,
// and the partial fraction decomposition of z^{m_-} / f_q(z).
//
// With theta = z^n - gamma the GTSC exponent becomes
//   f_q(z) = z^{m_-} (psi(z^n - gamma) - q)
//          = (z^n - gamma - varphi) [K z^{m_-} + zeta z^{n+m_-} - C z^{m_+}] - q z^{m_-},
//   K = kappa - zeta gamma + C gamma^alpha,  C = c Gamma(-alpha).

#include "scalekit/error.hpp"
#include "scalekit/gtsc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace scalekit {

struct RationalAlpha {
    int m = 1;
    int n = 2;

    void validate() const
    {
        if (n <= 0 || m == 0 || std::abs(m) >= n || std::gcd(std::abs(m), n) != 1)
            throw ParameterError("alpha must be m/n with 0 < |m| < n and gcd(|m|, n) = 1");
    }
    double value() const { return static_cast<double>(m) / n; }
    int m_plus() const { return std::max(m, 0); }
    int m_minus() const { return std::max(-m, 0); }

    /// Exact rational with denominator <= max_den within tol of x, if any.
    static std::optional<RationalAlpha> from_double(double x, int max_den = 12, double tol = 1e-9)
    {
        for (int n = 2; n <= max_den; ++n) {
            const int m = static_cast<int>(std::lround(x * n));
            if (std::abs(x - static_cast<double>(m) / n) <= tol && m != 0 && std::abs(m) < n &&
                std::gcd(std::abs(m), n) == 1)
                return RationalAlpha{m, n};
        }
        return std::nullopt;
    }
};

/// Real polynomial, coefficients in ascending powers.
struct Polynomial {
    std::vector<double> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    double leading() const { return c.back(); }

    template <class T>
    T eval(T z) const
    {
        T acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<T>(*it);
        return acc;
    }

    // k-th derivative evaluated in extended precision.
    std::complex<long double> eval_deriv(std::complex<long double> z, int k = 1) const
    {
        std::complex<long double> acc = 0;
        for (int i = degree(); i >= k; --i) {
            long double f = 1;
            for (int s = 0; s < k; ++s) f *= static_cast<long double>(i - s);
            acc = acc * z + f * static_cast<long double>(c[i]);
        }
        return acc;
    }

    void trim()
    {
        while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    }
};

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

inline Polynomial build_fq(const GtscParams& p, const RationalAlpha& al, double q)
{
    al.validate();
    p.validate();
    if (std::abs(p.alpha - al.value()) > 1e-12)
        throw ParameterError("alpha does not match the rational m/n");
    if (q < 0.0) throw ParameterError("q must be nonnegative");
    const int n = al.n, mm = al.m_minus(), mp = al.m_plus();
    const double cg = p.c_gamma();
    const double k0 = p.kappa - p.zeta * p.gamma + cg * std::pow(p.gamma, p.alpha);

    Polynomial left;  // z^n - gamma - varphi
    left.c.assign(n + 1, 0.0);
    left.c[0] = -p.gamma - p.varphi;
    left.c[n] = 1.0;

    Polynomial bracket;
    bracket.c.assign(n + mm + 1, 0.0);
    bracket.c[mm] += k0;
    bracket.c[n + mm] += p.zeta;
    bracket.c[mp] -= cg;

    Polynomial f = poly_mul(left, bracket);
    f.c[mm] -= q;
    f.trim();
    return f;
}

struct RootInfo {
    std::vector<cplx> roots;
    std::vector<int> multiplicities;
    std::vector<std::string> warnings;
};

struct PartialFraction {
    std::vector<cplx> roots;
    std::vector<int> multiplicities;
    std::vector<std::vector<cplx>> coeffs;  // coeffs[k][j] = A_kj
    std::vector<std::string> warnings;
    static constexpr int largest_real_root_index = 0;

    /// sum_k sum_j A_kj / (z - r_k)^(j+1)
    cplx evaluate(cplx z) const
    {
        cplx s = 0.0;
        for (std::size_t k = 0; k < roots.size(); ++k) {
            const cplx d = 1.0 / (z - roots[k]);
            cplx p = d;
            for (const cplx& a : coeffs[k]) {
                s += a * p;
                p *= d;
            }
        }
        return s;
    }
};

namespace detail {

using cld = std::complex<long double>;

inline cld newton_polish(const Polynomial& p, cld z, int order, int iters = 40)
{
    long double best = std::abs(p.eval_deriv(z, order));
    for (int i = 0; i < iters && best > 0; ++i) {
        const cld f = p.eval_deriv(z, order);
        const cld d = p.eval_deriv(z, order + 1);
        if (std::abs(d) == 0) break;
        const cld next = z - f / d;
        const long double r = std::abs(p.eval_deriv(next, order));
        if (!(r < best)) break;
        best = r;
        z = next;
    }
    return z;
}

}  // namespace detail

/// All complex roots, clustered into multiple roots; the largest real root first.
inline RootInfo roots_with_multiplicity(Polynomial p, double cluster_tol = 1e-6)
{
    p.trim();
    const int deg = p.degree();
    if (deg < 1) throw ParameterError("roots_with_multiplicity: degree must be >= 1");

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(0, i) = -p.c[deg - 1 - i] / p.leading();
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) throw NumericalError("companion eigenvalue solve failed");
    std::vector<detail::cld> raw;
    for (int i = 0; i < deg; ++i) {
        const cplx e = es.eigenvalues()[i];
        raw.push_back(detail::newton_polish(p, detail::cld(e.real(), e.imag()), 0, 8));
    }

    // Greedy clustering within cluster_tol (1 + |r|).
    std::vector<bool> used(raw.size(), false);
    RootInfo info;
    std::vector<detail::cld> centers;
    std::vector<int> mult;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> members{i};
        used[i] = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t j = 0; j < raw.size(); ++j) {
                if (used[j]) continue;
                for (std::size_t m : members) {
                    if (std::abs(raw[j] - raw[m]) <= cluster_tol * (1.0 + std::abs(raw[m]))) {
                        members.push_back(j);
                        used[j] = true;
                        grew = true;
                        break;
                    }
                }
            }
        }
        detail::cld center = 0;
        for (auto m : members) center += raw[m];
        center /= static_cast<long double>(members.size());
        const int mu = static_cast<int>(members.size());
        if (mu > 1) center = detail::newton_polish(p, center, mu - 1);
        centers.push_back(center);
        mult.push_back(mu);
    }

    // Snap near-real centres onto the axis.
    for (auto& c : centers)
        if (std::abs(c.imag()) <= 1e-10L * (1.0L + std::abs(c.real()))) c.imag(0);

    std::vector<std::size_t> order(centers.size());
    std::iota(order.begin(), order.end(), 0);
    auto is_real = [&](std::size_t i) { return centers[i].imag() == 0; };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (is_real(a) != is_real(b)) return is_real(a);
        if (centers[a].real() != centers[b].real()) return centers[a].real() > centers[b].real();
        return centers[a].imag() > centers[b].imag();
    });
    if (!is_real(order[0]))
        throw InconsistencyError("f_q has no real root; parameters invalid or solver failed");
    for (auto i : order) {
        info.roots.emplace_back(static_cast<double>(centers[i].real()), static_cast<double>(centers[i].imag()));
        info.multiplicities.push_back(mult[i]);
    }
    const double r1 = info.roots[0].real();
    for (std::size_t k = 1; k < info.roots.size(); ++k)
        if (info.roots[k].imag() != 0.0 && info.roots[k].real() >= r1 - 1e-12 * (1.0 + std::abs(r1)))
            info.warnings.push_back("non-real root with real part >= r1: " +
                                    std::to_string(info.roots[k].real()) + " + " +
                                    std::to_string(info.roots[k].imag()) + "i");
    return info;
}

/// A_kj with z^{m_minus}/p(z) = sum_k sum_j A_kj / (z - r_k)^(j+1).
inline PartialFraction partial_fractions(const Polynomial& p, const RootInfo& ri, int m_minus)
{
    if (m_minus >= p.degree()) throw ParameterError("partial_fractions: numerator degree too high");
    using detail::cld;
    PartialFraction pf;
    pf.roots = ri.roots;
    pf.multiplicities = ri.multiplicities;
    pf.warnings = ri.warnings;
    const std::size_t l = ri.roots.size();
    pf.coeffs.resize(l);
    for (std::size_t k = 0; k < l; ++k) {
        const int mu = ri.multiplicities[k];
        const cld r(ri.roots[k].real(), ri.roots[k].imag());
        if (mu == 1) {
            cld num = 1;
            for (int i = 0; i < m_minus; ++i) num *= r;
            pf.coeffs[k] = {static_cast<cplx>(num / p.eval_deriv(r, 1))};
            continue;
        }
        // Taylor coefficients in t = z - r of h(z) = z^{m_-} / (lead prod_{l != k} (z - r_l)^{mu_l}).
        std::vector<cld> h(mu, 0);
        {
            // (r + t)^{m_-}
            cld binom = 1;
            for (int i = 0; i < mu && i <= m_minus; ++i) {
                cld pw = 1;
                for (int s = 0; s < m_minus - i; ++s) pw *= r;
                h[i] = binom * pw;
                binom = binom * static_cast<long double>(m_minus - i) / static_cast<long double>(i + 1);
            }
        }
        for (std::size_t o = 0; o < l; ++o) {
            if (o == k) continue;
            const cld d = r - cld(ri.roots[o].real(), ri.roots[o].imag());
            // 1/(d + t) = sum_i (-1)^i t^i / d^(i+1)
            std::vector<cld> g(mu);
            cld pw = 1.0L / d;
            for (int i = 0; i < mu; ++i) {
                g[i] = ((i % 2 == 0) ? 1.0L : -1.0L) * pw;
                pw /= d;
            }
            for (int rep = 0; rep < ri.multiplicities[o]; ++rep) {
                std::vector<cld> out(mu, 0);
                for (int a = 0; a < mu; ++a)
                    for (int b = 0; a + b < mu; ++b) out[a + b] += h[a] * g[b];
                h = out;
            }
        }
        for (auto& v : h) v /= static_cast<long double>(p.leading());
        pf.coeffs[k].resize(mu);
        // A_kj = coefficient of t^(mu - 1 - j)
        for (int j = 0; j < mu; ++j) pf.coeffs[k][j] = static_cast<cplx>(h[mu - 1 - j]);
    }
    return pf;
}

inline PartialFraction partial_fractions(const Polynomial& p, int m_minus)
{
    return partial_fractions(p, roots_with_multiplicity(p), m_minus);
}

/// Largest relative mismatch between the decomposition and z^{m_-}/p(z) at the given points.
inline double reconstruction_error(const Polynomial& p, const PartialFraction& pf, int m_minus,
                                   const std::vector<cplx>& points)
{
    double worst = 0.0;
    for (const cplx& z : points) {
        const cplx exact = std::pow(z, m_minus) / p.eval(z);
        worst = std::max(worst, std::abs(pf.evaluate(z) - exact) / std::abs(exact));
    }
    return worst;
}

/// Coefficients c_i of z^{m_-}/p(z) = sum_i c_i z^{-(i+1)} around infinity, i = 0..count-1.
inline std::vector<double> laurent_at_infinity(const Polynomial& p, int m_minus, int count)
{
    const int deg = p.degree();
    const int shift = deg - m_minus - 1;  // first nonzero index
    std::vector<long double> b(std::max(count - shift, 0) + 1, 0);
    const long double lead = p.leading();
    for (std::size_t k = 0; k < b.size(); ++k) {
        long double s = (k == 0) ? 1.0L : 0.0L;
        for (std::size_t l = 1; l <= k && static_cast<int>(l) <= deg; ++l)
            s -= static_cast<long double>(p.c[deg - l]) * b[k - l];
        b[k] = s / lead;
    }
    std::vector<double> c(count, 0.0);
    for (int i = shift; i < count; ++i) c[i] = static_cast<double>(b[i - shift]);
    return c;
}

}  // namespace scalekit
