#pragma once

// The common result type of every evaluation route.

#include "scalekit/error.hpp"

#include <functional>
#include <optional>
#include <string>

namespace scalekit {

enum class Route { rational_ml, closed_form, ig, gamma_case, catalog, bromwich };

inline std::string to_string(Route r)
{
    switch (r) {
        case Route::rational_ml: return "rational";
        case Route::closed_form: return "closed";
        case Route::ig: return "ig";
        case Route::gamma_case: return "gamma";
        case Route::catalog: return "catalog";
        case Route::bromwich: return "bromwich";
    }
    return "unknown";
}

/// W^(q) on the real line (zero on x < 0) together with its derivative.
struct ScaleFunction {
    double q = 0.0;
    std::function<double(double)> eval;
    std::function<double(double)> eval_deriv;
    Route route = Route::bromwich;
    double phi_q = 0.0;  // Phi(q)
    // Right limit at 0 when known; W(0+) > 0 exactly for bounded variation.
    std::optional<double> at_zero;
    // W'(0+) when known; may be +inf
    std::optional<double> deriv_at_zero;
    // W is piecewise smooth with kinks at integer multiples of this spacing.
    std::optional<double> kink_spacing;
    std::string description;

    double operator()(double x) const
    {
        if (x < 0.0) return 0.0;
        if (x == 0.0 && at_zero) return *at_zero;
        return eval(x);
    }

    double derivative(double x) const
    {
        if (x < 0.0) return 0.0;
        if (x == 0.0 && deriv_at_zero) return *deriv_at_zero;
        if (!eval_deriv) throw CapabilityError(description + ": no derivative available");
        return eval_deriv(x);
    }
};

}  // namespace scalekit
