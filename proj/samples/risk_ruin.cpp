// Ruin in a risk model with gamma claims and infinitely many small claims, against
// a Monte Carlo run of the same process.

#include "scalekit/scalekit.hpp"

#include <cstdio>

int main()
{
    using namespace scalekit;
    RiskModel m{1.0, 0.5, 2.0, 0.4};  // lambda, kappa, gamma, nu
    const auto p = m.gtsc();
    const auto w = gtsc_scale(p, 0.0);
    const auto psi = gtsc_exponent(p);

    std::printf("%6s %14s %14s\n", "x", "series", "ladder route");
    for (double x : {0.0, 0.5, 1.0, 2.0, 4.0})
        std::printf("%6.2f %14.10f %14.10f\n", x, risk_model_ruin(m, x), ruin_probability(w, psi, x));

    SimConfig cfg;
    cfg.n_paths = 20000;
    cfg.dt = 1e-2;
    cfg.eps = 0.01;
    const double x = 1.0;
    const double level = ruin_proxy_level(w, psi, x);
    const auto e = simulate_ruin(gtsc_parent(p).triple, x, level, cfg);
    const double exact = ruin_probability(w, psi, x);
    std::printf("Monte Carlo from x = 1: %.4f +- %.4f (exact %.4f)\n", e.p_hat, e.std_error, exact);
    for (const auto& msg : e.warnings) std::printf("  note: %s\n", msg.c_str());
    return std::abs(e.p_hat - exact) < 4.0 * e.std_error ? 0 : 1;
}
