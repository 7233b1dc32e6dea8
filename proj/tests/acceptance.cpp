// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include "scalekit/scalekit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace scalekit;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const double alphas[] = {0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75};
const char labels[] = {'A', 'B', 'C', 'D', 'E', 'F'};

std::string tag(char label, double alpha, double q)
{
    std::ostringstream s;
    s << label << " alpha=" << alpha << " q=" << q;
    return s.str();
}

Verdict laplace_master()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int n = 0;
    for (char label : labels)
        for (double alpha : alphas)
            for (double q : {0.0, 1.0}) {
                const auto p = gtsc_case(label, alpha);
                const auto w = gtsc_scale(p, q);
                const auto rep = verify_laplace_identity(w, gtsc_exponent(p), standard_thetas(w.phi_q));
                worst = std::max(worst, rep.max_rel_err);
                v.require(rep.max_rel_err <= 1e-6, tag(label, alpha, q) + fmt(" err %.2e", rep.max_rel_err));
                ++n;
            }
    for (Family f : all_families()) {
        const auto e = catalog_entry(f);
        const auto rep = verify_laplace_identity(e.scale, e.psi, standard_thetas(e.scale.phi_q));
        worst = std::max(worst, rep.max_rel_err);
        v.require(rep.max_rel_err <= 1e-6, to_string(f) + fmt(" err %.2e", rep.max_rel_err));
        ++n;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(secs < 120.0, fmt("runtime %.1f s", secs));
    v.detail = std::to_string(n) + " scale functions, max rel err " + fmt("%.2e", worst) + fmt(", %.1f s", secs);
    return v;
}

Verdict route_agreement()
{
    Verdict v;
    double worst = 0.0;
    for (char label : labels)
        for (double alpha : alphas)
            for (double q : {0.0, 1.0}) {
                const auto p = gtsc_case(label, alpha);
                const auto rat = gtsc_scale(p, q, GtscRoute::rational);
                const auto inv = gtsc_scale(p, q, GtscRoute::bromwich);
                double m = 0.0;
                for (int i = 0; i <= 100; ++i) {
                    const double x = 0.05 + i * (10.0 - 0.05) / 100.0;
                    m = std::max(m, rel(inv(x), rat(x)));
                }
                worst = std::max(worst, m);
                v.require(m <= 1e-6, tag(label, alpha, q) + fmt(" dev %.2e", m));
            }
    double ig_worst = 0.0;
    for (double q : {0.0, 0.3, 16.0 / 27.0, 1.0}) {
        const auto p = ig_to_gtsc(1.0, 1.0);
        const auto ig = gtsc_scale(p, q, GtscRoute::ig);
        const auto rat = gtsc_scale(p, q, GtscRoute::rational);
        for (int i = 0; i <= 100; ++i) {
            const double x = 0.05 + i * (10.0 - 0.05) / 100.0;
            ig_worst = std::max(ig_worst, rel(ig(x), rat(x)));
        }
    }
    v.require(ig_worst <= 1e-8, fmt("ig vs rational %.2e", ig_worst));
    v.detail = "rational vs bromwich max dev " + fmt("%.2e", worst) + ", ig vs rational " + fmt("%.2e", ig_worst);
    return v;
}

Verdict ig_structure()
{
    Verdict v;
    const double q0 = 16.0 / 27.0;
    auto real_count = [](const InverseGaussianScale& s) {
        int n = 0;
        for (const auto& r : s.roots()) n += (r.imag() == 0.0);
        return n;
    };
    const InverseGaussianScale below(1.0, 1.0, 0.9 * q0), above(1.0, 1.0, 1.1 * q0);
    v.require(below.roots().size() == 3 && real_count(below) == 3, "q = 0.9 q0: expected three simple real roots");
    bool pair = above.roots().size() == 3 && real_count(above) == 1;
    if (pair) {
        std::vector<cplx> cx;
        for (const auto& r : above.roots())
            if (r.imag() != 0.0) cx.push_back(r);
        pair = cx.size() == 2 && std::abs(cx[0] - std::conj(cx[1])) <= 1e-12 * std::abs(cx[0]);
    }
    v.require(pair, "q = 1.1 q0: expected one real root and a conjugate pair");
    double jump = 0.0;
    const auto crit = w_ig(1.0, 1.0, q0);
    for (double x : {0.5, 1.0, 2.0})
        for (double side : {-1.0, 1.0}) {
            const auto near = w_ig(1.0, 1.0, q0 * (1.0 + side * 1e-7));
            jump = std::max(jump, rel(near(x), crit(x)));
        }
    v.require(jump <= 1e-6, fmt("discontinuity at q0 %.2e", jump));
    v.detail = "3 real below q0, 1 real + pair above, max jump across q0 " + fmt("%.2e", jump);
    return v;
}

Verdict boundary_behaviour()
{
    Verdict v;
    double d0 = 0.0, b50 = 0.0, crate = 0.0, slope = 0.0;
    for (double alpha : alphas) {
        for (char label : {'D', 'E', 'F'})
            for (double q : {0.0, 1.0}) {
                const auto p = gtsc_case(label, alpha);
                // Richardson extrapolation over the known correction exponents
                const double e = std::abs(wprime_at_zero_extrapolated(gtsc_scale(p, q), p) - 1.0);
                d0 = std::max(d0, e);
                v.require(e <= 1e-3, tag(label, alpha, q) + fmt(" W'(0+) off by %.2e", e));
            }
        const double eb = std::abs(gtsc_scale(gtsc_case('B', alpha), 0.0)(50.0) - 1.0);
        b50 = std::max(b50, eb);
        v.require(eb <= 1e-3, tag('B', alpha, 0) + fmt(" |W(50) - 1| = %.2e", eb));

        const auto wc = gtsc_scale(gtsc_case('C', alpha), 0.0);
        const double rate = (std::log(wc(30.0)) - std::log(wc(20.0))) / 10.0;
        crate = std::max(crate, std::abs(rate - 1.0));
        v.require(std::abs(rate - 1.0) <= 1e-2, tag('C', alpha, 0) + fmt(" fitted rate %.6f", rate));

        for (char label : {'A', 'D'}) {
            const auto p = gtsc_case(label, alpha);
            const double target = asymptote_infinity(p, 0.0).constant;
            const double e = rel(gtsc_scale(p, 0.0).derivative(50.0), target);
            slope = std::max(slope, e);
            v.require(e <= 1e-2, tag(label, alpha, 0) + fmt(" slope rel err %.2e", e));
        }
    }
    v.detail = "W'(0+) err " + fmt("%.1e", d0) + ", |W_B(50)-1| " + fmt("%.1e", b50) + ", C rate err " +
               fmt("%.1e", crate) + ", A/D slope err " + fmt("%.1e", slope);
    return v;
}

struct Shape {
    int convex_to_concave = 0;
    int concave_to_convex = 0;
    double max_d2 = -INFINITY;
    double lo = 0.0, hi = 0.0;  // bracket of the last concave-to-convex turn
};

// Signs of second differences on (0, 10] at spacing h; |d2| below `noise` is no sign.
Shape shape_of(const ScaleFunction& w, double h = 0.01, double noise = 1e-8)
{
    Shape s;
    const int n = static_cast<int>(std::lround(10.0 / h));
    std::vector<double> ws(n + 2);
    for (int i = 0; i <= n + 1; ++i) ws[i] = w(i * h);
    int last = 0;
    double last_x = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double d2 = ws[i + 1] - 2.0 * ws[i] + ws[i - 1];
        s.max_d2 = std::max(s.max_d2, d2);
        const int sg = d2 > noise ? 1 : (d2 < -noise ? -1 : 0);
        if (sg == 0) continue;
        if (last == 1 && sg == -1) ++s.convex_to_concave;
        if (last == -1 && sg == 1) {
            ++s.concave_to_convex;
            s.lo = last_x - h;
            s.hi = i * h + h;
        }
        last = sg;
        last_x = i * h;
    }
    return s;
}

Verdict shape_properties()
{
    Verdict v;
    int concave = 0, convex_concave = 0, turns = 0, inside = 0;
    for (double alpha : alphas) {
        for (char label : labels) {
            const auto p = gtsc_case(label, alpha);
            const auto s0 = shape_of(gtsc_scale(p, 0.0));
            if (label == 'C' || label == 'F') {
                const bool ok = s0.convex_to_concave == 1;
                convex_concave += ok;
                v.require(ok, tag(label, alpha, 0) + ": " + std::to_string(s0.convex_to_concave) + " convex->concave, " +
                                  std::to_string(s0.concave_to_convex) + " concave->convex");
            } else {
                const bool ok = s0.max_d2 <= 1e-8;
                concave += ok;
                v.require(ok, tag(label, alpha, 0) + fmt(" max second difference %.2e", s0.max_d2));
            }
            const auto w1 = gtsc_scale(p, 1.0);
            const auto s1 = shape_of(w1);
            const bool one = s1.concave_to_convex == 1 && s1.convex_to_concave == 0;
            turns += one;
            v.require(one, tag(label, alpha, 1) + ": " + std::to_string(s1.concave_to_convex) + " concave->convex, " +
                               std::to_string(s1.convex_to_concave) + " convex->concave");
            if (s1.concave_to_convex == 1) {
                const double a = dividend_barrier(w1).a_star;
                const bool ok = a >= s1.lo && a <= s1.hi;
                inside += ok;
                v.require(ok, tag(label, alpha, 1) + fmt(" a* = %.6f", a) + fmt(" outside [%.3f, ", s1.lo) +
                                  fmt("%.3f]", s1.hi));
            }
        }
    }
    v.detail = "q=0 concave " + std::to_string(concave) + "/20, q=0 C,F convex->concave " +
               std::to_string(convex_concave) + "/10, q=1 single concave->convex " + std::to_string(turns) +
               "/30, a* inside bracket " + std::to_string(inside) + "/30";
    return v;
}

Verdict monte_carlo()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    SimConfig cfg;
    cfg.n_paths = 100000;
    cfg.dt = 1e-2;
    cfg.eps = 0.01;
    auto check = [&](const char* name, const SimEstimate& e, double target) {
        const double z = std::abs(e.p_hat - target) / e.std_error;
        v.require(z <= 3.0, std::string(name) + fmt(" %.2f standard errors off", z));
        v.detail += std::string(name) + fmt(" %.5f", e.p_hat) + fmt(" vs %.5f", target) + fmt(" (%.2f se); ", z);
    };
    check("brownian exit", simulate_exit(brownian_triple(1.0, 0.0), 0.5, 1.0, cfg), 0.5);
    const auto cl = w_cramer_lundberg(2.0, 1.0, 1.0);
    const double level = ruin_proxy_level(cl.scale, cl.psi, 1.0);
    check("CL ruin", simulate_ruin(cramer_lundberg_triple(2.0, 1.0, 1.0), 1.0, level, cfg),
          ruin_probability(cl.scale, cl.psi, 1.0));
    const auto p = gtsc_case('A', 0.5);
    check("case A exit", simulate_exit(gtsc_parent(p).triple, 1.0, 2.0, cfg), two_sided_exit(gtsc_scale(p, 0.0), 1.0, 2.0));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(secs < 300.0, fmt("runtime %.1f s", secs));
    v.detail += fmt("%.1f s", secs);
    return v;
}

Verdict stable_continuity()
{
    Verdict v;
    GtscParams p;
    p.alpha = 0.5;
    p.gamma = 1e-4;
    p.c = -1.0 / std::tgamma(-0.5);
    const auto w = gtsc_scale(p, 0.0);
    double worst = 0.0;
    for (int i = 0; i <= 49; ++i) {
        const double x = 0.1 + i * 0.1;
        worst = std::max(worst, rel(w(x), std::sqrt(x) / std::tgamma(1.5)));
    }
    v.require(worst <= 1e-3, fmt("max rel dev %.2e", worst));
    // the deviation is O(sqrt(gamma x)); a smaller gamma shows the limit is reached
    p.gamma = 1e-8;
    const auto w8 = gtsc_scale(p, 0.0);
    const double dev8 = rel(w8(5.0), std::sqrt(5.0) / std::tgamma(1.5));
    v.detail = "route " + to_string(w.route) + fmt(", max rel dev from x^{1/2}/Gamma(3/2) %.2e", worst) +
               fmt(" (gamma = 1e-8 at x = 5: %.2e)", dev8);
    return v;
}

Verdict special_functions()
{
    using namespace special;
    Verdict v;
    double ml = 0.0;
    for (double r = 0.0; r <= 20.0; r += 0.5)
        for (double t = 0.0; t < 2.0 * pi; t += pi / 12.0) {
            const cplx z = std::polar(r, t);
            ml = std::max(ml, std::abs(mittag_leffler(1.0, 1.0, z) - std::exp(z)) / std::abs(std::exp(z)));
            const cplx c = std::cosh(std::sqrt(z));
            ml = std::max(ml, std::abs(mittag_leffler(2.0, 1.0, z) - c) / std::max(1.0, std::abs(c)));
        }
    v.require(ml <= 1e-12, fmt("E_{1,1}/E_{2,1} identity err %.2e", ml));

    double fd = 0.0;
    const double h = 1e-5;
    for (double a : {0.25, 0.5, 0.75, 1.5})
        for (double b : {a, 1.0})
            for (cplx z : {cplx(0.4, 0.2), cplx(2.0, 0.0), cplx(-3.0, 1.0)}) {
                const cplx num = (mittag_leffler(a, b, z + h) - mittag_leffler(a, b, z - h)) / (2.0 * h);
                const cplx d = mittag_leffler_deriv(a, b, 1, z);
                fd = std::max(fd, std::abs(num - d) / (1.0 + std::abs(d)));
            }
    v.require(fd <= 1e-6, fmt("ML derivative vs difference %.2e", fd));

    double refl = 0.0;
    for (double x = -6.0; x <= 6.0; x += 0.37)
        for (double y = -6.0; y <= 6.0; y += 0.53) {
            const cplx z(x, y);
            const cplx e = erfc_c(z);
            refl = std::max(refl, std::abs(e + erfc_c(-z) - 2.0) / (2.0 + std::abs(e)));
        }
    v.require(refl <= 4.0 * std::numeric_limits<double>::epsilon(), fmt("erfc reflection %.2e", refl));

    bool mono = true;
    double prev = fransen_transform(-2.0);
    for (double t = -1.5; t <= 100.0; t += 0.5) {
        const double f = fransen_transform(t);
        mono = mono && f < prev && f > 0.0;
        prev = f;
    }
    v.require(mono, "fransen_transform not decreasing");
    const double stab = rel(fransen_transform(0.0, 1e-9), fransen_transform(0.0, 1e-14));
    v.require(stab <= 1e-8, fmt("F unstable under refinement %.2e", stab));
    v.detail = "ML identities " + fmt("%.1e", ml) + ", ML' " + fmt("%.1e", fd) + ", erfc reflection " +
               fmt("%.1e", refl) + ", F refinement " + fmt("%.1e", stab);
    return v;
}

Verdict corrections()
{
    Verdict v;
    struct Pair {
        const char* name;
        CatalogEntry shipped;
        ScaleFunction literal;
    };
    const std::vector<Pair> pairs{
        {"brownian", w_brownian(1.0, 0.5, 0.5), verbatim::brownian(1.0, 0.5, 0.5)},
        {"cramer_lundberg", w_cramer_lundberg(2.0, 1.0, 1.0), verbatim::cramer_lundberg(2.0, 1.0, 1.0)},
        {"fixed_jumps", w_fixed_jumps(2.0, 1.0, 1.0), verbatim::fixed_jumps(2.0, 1.0, 1.0)},
    };
    for (const auto& p : pairs) {
        const auto th = standard_thetas(p.shipped.scale.phi_q);
        const double good = verify_laplace_identity(p.shipped.scale, p.shipped.psi, th).max_rel_err;
        // the literal Brownian root differs from Phi(q), so stay right of both
        const double base = std::max({p.shipped.scale.phi_q, p.literal.phi_q, 1.0});
        const double bad = verify_laplace_identity(p.literal, p.shipped.psi, standard_thetas(base)).max_rel_err;
        v.require(good <= 1e-6, std::string(p.name) + fmt(" shipped err %.2e", good));
        v.require(bad >= 1e-2, std::string(p.name) + fmt(" literal err only %.2e", bad));
        v.detail += std::string(p.name) + fmt(" shipped %.1e", good) + fmt(" literal %.1e; ", bad);
    }
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"Laplace identity", laplace_master},
        {"route agreement", route_agreement},
        {"inverse Gaussian roots", ig_structure},
        {"boundary behaviour", boundary_behaviour},
        {"shape", shape_properties},
        {"Monte Carlo", monte_carlo},
        {"stable limit", stable_continuity},
        {"special functions", special_functions},
        {"corrected formulas", corrections},
    };
    int failed = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", k, name, v.detail.c_str());
        for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        failed += !v.pass;
    }
    return failed;
}
