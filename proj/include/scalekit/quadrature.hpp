#pragma once

// Thin wrappers over Boost.Math quadrature used across the library.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace scalekit::quad {

template <class T>
struct Result {
    T value{};
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod (7/15) on a finite interval; works for real and complex integrands.
template <class F>
auto gk(F&& f, double a, double b, double rel_tol = 1e-12, unsigned max_depth = 15)
{
    using T = decltype(f(a));
    Result<T> r;
    if (a == b) return r;
    double l1 = 0.0;
    r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &r.error, &l1);
    return r;
}

/// Gauss-Kronrod over consecutive pieces [p0,p1], [p1,p2], ...
template <class F>
auto gk_pieces(F&& f, const std::vector<double>& points, double rel_tol = 1e-12,
               unsigned max_depth = 15)
{
    using T = decltype(f(points.front()));
    Result<T> total;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        auto r = gk(f, points[i], points[i + 1], rel_tol, max_depth);
        total.value += r.value;
        total.error += r.error;
    }
    return total;
}

/// tanh-sinh on a finite interval; handles algebraic endpoint singularities.
template <class F>
auto endpoint_singular(F&& f, double a, double b, double rel_tol = 1e-13)
{
    using T = decltype(f(a));
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    Result<T> r;
    if (a == b) return r;
    double l1 = 0.0;
    r.value = rule.integrate(f, a, b, rel_tol, &r.error, &l1);
    return r;
}

/// Double-exponential rule on [a, inf); tolerates algebraic endpoint singularities at a.
template <class F>
Result<double> half_line(F&& f, double a, double rel_tol = 1e-12)
{
    Result<double> r;
    double l1 = 0.0;
    std::size_t levels = 0;
    boost::math::quadrature::exp_sinh<double> rule(12);
    r.value = rule.integrate([&](double t) { return f(a + t); }, rel_tol, &r.error, &l1,
                             &levels);
    return r;
}

}  // namespace scalekit::quad
