// Scale function of a tempered stable ladder model through two routes, plus the
// Laplace-transform check against psi.

#include "scalekit/scalekit.hpp"

#include <cstdio>

int main()
{
    using namespace scalekit;
    GtscParams p;
    p.alpha = 1.0 / 3.0;
    p.zeta = 0.5;  // Gaussian part
    p.kappa = 0.2;
    const double q = 0.5;

    const auto w = gtsc_scale(p, q);  // rational alpha: partial fractions
    const auto inv = gtsc_scale(p, q, GtscRoute::bromwich);
    std::printf("route %s, Phi(q) = %.12f\n", to_string(w.route).c_str(), w.phi_q);
    std::printf("%6s %22s %22s %12s\n", "x", "W (rational)", "W (bromwich)", "W'");
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0})
        std::printf("%6.2f %22.15e %22.15e %12.6f\n", x, w(x), inv(x), w.derivative(x));

    const auto rep = verify_laplace_identity(w, gtsc_exponent(p), standard_thetas(w.phi_q));
    std::printf("Laplace identity: max relative error %.2e over %zu abscissae\n", rep.max_rel_err, rep.checks.size());
    return rep.max_rel_err < 1e-8 ? 0 : 1;
}
