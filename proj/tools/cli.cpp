#include "cli.hpp"

#include "scalekit/scalekit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace scalekit::cli {

std::string number(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

namespace {

using json = nlohmann::ordered_json;

// "0.25" or "1/4"
double parse_number(const std::string& s)
{
    const auto slash = s.find('/');
    auto one = [](const std::string& t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != t.size()) throw ParameterError("not a number: '" + t + "'");
        return v;
    };
    if (slash == std::string::npos) return one(s);
    const double den = one(s.substr(slash + 1));
    if (den == 0.0) throw ParameterError("zero denominator in '" + s + "'");
    return one(s.substr(0, slash)) / den;
}

std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) v.push_back(parse_number(item));
    if (v.empty()) throw ParameterError("empty list '" + s + "'");
    return v;
}

struct ModelFlags {
    std::string model = "gtsc";
    std::string route = "auto";
    std::string case_label;
    std::string alpha;  // kept as text so that fractions are accepted
    std::optional<double> gamma, c, zeta, kappa, varphi;
    std::optional<double> beta, sigma, mu, lambda, jump;
    double q = 0.0;
};

void add_model_flags(CLI::App* app, ModelFlags& m)
{
    app->add_option("--model", m.model, "gtsc or catalog:<family>");
    app->add_option("--route", m.route, "auto, rational, closed, ig, gamma or bromwich");
    app->add_option("--case", m.case_label, "GTSC case A-F (c = gamma = 1)");
    app->add_option("--alpha", m.alpha, "GTSC stability index, decimal or m/n");
    app->add_option("--gamma", m.gamma, "GTSC tempering");
    app->add_option("--c", m.c, "GTSC intensity, or the premium rate of a catalog family");
    app->add_option("--zeta", m.zeta, "GTSC ladder drift");
    app->add_option("--kappa", m.kappa, "GTSC killing rate");
    app->add_option("--varphi", m.varphi, "GTSC exponential tilt");
    app->add_option("--beta", m.beta, "catalog: stable index");
    app->add_option("--sigma", m.sigma, "catalog: Gaussian coefficient");
    app->add_option("--mu", m.mu, "catalog: drift or claim parameter");
    app->add_option("--lambda", m.lambda, "catalog: jump rate");
    app->add_option("--jump", m.jump, "catalog: fixed jump size");
    app->add_option("--q", m.q, "discount rate q >= 0");
}

struct Model {
    std::string name;
    ScaleFunction w;
    LaplaceExponent psi;
    std::optional<GtscParams> gtsc;
    std::optional<Family> family;
    FamilyParams fparams;
    double q = 0.0;
};

void reject(const std::optional<double>& v, const char* flag, const std::string& model)
{
    if (v) throw ParameterError(std::string("--") + flag + " does not apply to model " + model);
}

Model build_model(const ModelFlags& f)
{
    if (!(f.q >= 0.0)) throw ParameterError("q must be nonnegative");
    Model m;
    m.q = f.q;
    if (f.model == "gtsc") {
        reject(f.beta, "beta", f.model);
        reject(f.sigma, "sigma", f.model);
        reject(f.mu, "mu", f.model);
        reject(f.lambda, "lambda", f.model);
        reject(f.jump, "jump", f.model);
        const auto route = parse_gtsc_route(f.route);
        if (!route) throw ParameterError("unknown route '" + f.route + "'");
        const double alpha = f.alpha.empty() ? 0.5 : parse_number(f.alpha);
        GtscParams p;
        if (!f.case_label.empty()) {
            if (f.case_label.size() != 1) throw ParameterError("case must be one of A-F");
            p = gtsc_case(f.case_label[0], alpha);
        }
        p.alpha = alpha;
        if (f.gamma) p.gamma = *f.gamma;
        if (f.c) p.c = *f.c;
        if (f.zeta) p.zeta = *f.zeta;
        if (f.kappa) p.kappa = *f.kappa;
        if (f.varphi) p.varphi = *f.varphi;
        p.validate();
        m.gtsc = p;
        m.w = gtsc_scale(p, f.q, *route);
        m.psi = gtsc_exponent(p);
        std::ostringstream s;
        s << "gtsc(alpha=" << number(p.alpha) << ", gamma=" << number(p.gamma) << ", c=" << number(p.c)
          << ", zeta=" << number(p.zeta) << ", kappa=" << number(p.kappa) << ", varphi=" << number(p.varphi) << ")";
        m.name = s.str();
        return m;
    }
    const std::string prefix = "catalog:";
    if (f.model.rfind(prefix, 0) != 0) throw ParameterError("model must be gtsc or catalog:<family>");
    const auto fam = parse_family(f.model.substr(prefix.size()));
    if (!fam) throw ParameterError("unknown catalog family '" + f.model.substr(prefix.size()) + "'");
    if (!f.alpha.empty()) throw ParameterError("--alpha does not apply to model " + f.model);
    if (!f.case_label.empty()) throw ParameterError("--case does not apply to model " + f.model);
    reject(f.gamma, "gamma", f.model);
    reject(f.zeta, "zeta", f.model);
    reject(f.kappa, "kappa", f.model);
    reject(f.varphi, "varphi", f.model);
    FamilyParams given;
    const std::pair<const char*, const std::optional<double>*> keys[] = {
        {"beta", &f.beta}, {"sigma", &f.sigma}, {"mu", &f.mu}, {"lambda", &f.lambda}, {"jump", &f.jump}, {"c", &f.c}};
    for (const auto& [k, v] : keys)
        if (*v) given[k] = **v;
    if (default_family_params(*fam).count("q"))
        given["q"] = f.q;
    else if (f.q != 0.0)
        throw ParameterError(to_string(*fam) + " is tabulated at q = 0 only");
    const auto entry = catalog_entry(*fam, given);
    m.family = fam;
    m.fparams = default_family_params(*fam);
    for (const auto& [k, v] : given) m.fparams[k] = v;
    m.psi = entry.psi;
    if (f.route == "auto") {
        m.w = entry.scale;
    } else if (f.route == "bromwich") {
        m.w = bromwich_scale(entry.psi, f.q, {}, entry.scale.at_zero.value_or(0.0));
    } else {
        throw ParameterError("catalog models take --route auto or bromwich");
    }
    std::ostringstream s;
    s << to_string(*fam) << "(";
    bool first = true;
    for (const auto& [k, v] : m.fparams) {
        s << (first ? "" : ", ") << k << "=" << number(v);
        first = false;
    }
    s << ")";
    m.name = s.str();
    return m;
}

struct Grid {
    double x_min = 0.0;
    double x_max = 5.0;
    int points = 101;

    std::vector<double> values() const
    {
        if (!(x_min >= 0.0) || !(x_max >= x_min)) throw ParameterError("need 0 <= x-min <= x-max");
        if (points < 1) throw ParameterError("points must be >= 1");
        std::vector<double> xs;
        for (int i = 0; i < points; ++i)
            xs.push_back(points == 1 ? x_min : x_min + (x_max - x_min) * i / (points - 1));
        return xs;
    }
};

void add_grid_flags(CLI::App* app, Grid& g)
{
    app->add_option("--x-min", g.x_min, "first grid point");
    app->add_option("--x-max", g.x_max, "last grid point");
    app->add_option("--points", g.points, "number of grid points");
}

double safe_derivative(const ScaleFunction& w, double x)
{
    try {
        return w.derivative(x);
    } catch (const CapabilityError&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

int cmd_eval(const ModelFlags& mf, const Grid& g, std::ostream& out)
{
    const Model m = build_model(mf);
    const auto xs = g.values();
    const std::string route = to_string(m.w.route);
    out << "x,W,Wprime,route,q\n";
    for (double x : xs)
        out << number(x) << ',' << number(m.w(x)) << ',' << number(safe_derivative(m.w, x)) << ',' << route << ','
            << number(m.q) << '\n';
    return exit_ok;
}

struct FigureFlags {
    double q = 0.0;
    std::string alphas = "1/4,1/3,1/2,2/3,3/4";
    std::string out;
    double x_max = 5.0;
    int points = 501;
};

int cmd_figures(const FigureFlags& f, std::ostream& out, std::ostream& err)
{
    const auto alphas = parse_list(f.alphas);
    const Grid grid{0.0, f.x_max, f.points};
    const auto xs = grid.values();
    if (!(f.q >= 0.0)) throw ParameterError("q must be nonnegative");
    // build everything first so that a bad alpha leaves no partial output
    std::map<char, std::vector<ScaleFunction>> scales;
    for (char label : std::string("ABCDEF"))
        for (double a : alphas) scales[label].push_back(gtsc_scale(gtsc_case(label, a), f.q));
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(f.out, ec);
    if (ec) {
        err << "scalekit: error: " << f.out << ": " << ec.message() << '\n';
        return exit_failed;
    }
    for (const auto& [label, ws] : scales) {
        const fs::path path = fs::path(f.out) / ("case_" + std::string(1, label) + "_q" + number(f.q) + ".csv");
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "scalekit: error: " << path.string() << ": " << std::strerror(errno) << '\n';
            return exit_failed;
        }
        file << "x,alpha,W\n";
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (double x : xs) file << number(x) << ',' << number(alphas[i]) << ',' << number(ws[i](x)) << '\n';
        file.close();
        if (!file) {
            err << "scalekit: error: " << path.string() << ": " << std::strerror(errno) << '\n';
            return exit_failed;
        }
        out << path.string() << '\n';
    }
    return exit_ok;
}

// ---- verification -------------------------------------------------------------------

struct SimFlags {
    double x = 0.5;
    double a = 1.0;
    std::size_t paths = 100000;
    std::uint64_t seed = SimConfig{}.seed;
    double dt = 1e-2;
    double eps = 0.01;
};

struct Report {
    json checks = json::array();
    json skipped = json::array();

    void add(const std::string& name, double target, double achieved, double tolerance, bool pass, json extra = {})
    {
        json c;
        c["name"] = name;
        c["target"] = target;
        c["achieved"] = achieved;
        c["tolerance"] = tolerance;
        c["pass"] = pass;
        for (auto& [k, v] : extra.items()) c[k] = v;
        checks.push_back(c);
    }
    void skip(const std::string& suite, const std::string& reason) { skipped.push_back({{"suite", suite}, {"reason", reason}}); }
    bool pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["pass"].get<bool>(); });
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void suite_laplace(const Model& m, Report& r)
{
    const double tol = 1e-6;
    const auto rep = verify_laplace_identity(m.w, m.psi, standard_thetas(m.w.phi_q));
    for (const auto& c : rep.checks)
        r.add("laplace theta=" + number(c.theta), c.rhs, c.lhs, tol, c.rel_err <= tol,
              {{"rel_err", c.rel_err}, {"stagnated", c.stagnated}});
}

double max_dev(const ScaleFunction& a, const ScaleFunction& b, const std::vector<double>& xs)
{
    double m = 0.0;
    for (double x : xs) m = std::max(m, rel(a(x), b(x)));
    return m;
}

void suite_routes(const Model& m, Report& r)
{
    std::vector<double> xs;
    for (int i = 0; i <= 100; ++i) xs.push_back(0.05 + i * (10.0 - 0.05) / 100.0);
    if (m.gtsc) {
        const auto& p = *m.gtsc;
        const auto inv = gtsc_scale(p, m.q, GtscRoute::bromwich);
        const bool rational = RationalAlpha::from_double(p.alpha, max_rational_denominator).has_value();
        if (rational) {
            const auto rat = gtsc_scale(p, m.q, GtscRoute::rational);
            const double d = max_dev(rat, inv, xs);
            r.add("routes rational vs bromwich", 0.0, d, 1e-6, d <= 1e-6);
            if (is_ig_shape(p) && p.gamma > 0.0) {
                const double e = max_dev(gtsc_scale(p, m.q, GtscRoute::ig), rat, xs);
                r.add("routes ig vs rational", 0.0, e, 1e-8, e <= 1e-8);
            }
        }
        if (m.q == 0.0 && p.zeta == 0.0 && p.alpha > -1.0 && p.alpha != 0.0) {
            const double d = max_dev(gtsc_scale(p, 0.0, GtscRoute::closed), inv, xs);
            r.add("routes closed vs bromwich", 0.0, d, 1e-6, d <= 1e-6);
        }
        if (!rational && !(m.q == 0.0 && p.zeta == 0.0 && p.alpha != 0.0))
            r.skip("routes", "no second route for these parameters");
        return;
    }
    const auto entry = catalog_entry(*m.family, m.fparams);
    const auto inv = bromwich_scale(entry.psi, m.q, {}, entry.scale.at_zero.value_or(0.0));
    // stay off the kinks of the fixed-jump family, where pointwise inversion converges slowly
    const std::vector<double> pts{0.3, 0.7, 1.3, 2.7, 4.3};
    const double d = max_dev(entry.scale, inv, pts);
    r.add("routes catalog vs bromwich", 0.0, d, 1e-6, d <= 1e-6);
}

void suite_asymptotics(const Model& m, Report& r)
{
    const auto& w = m.w;
    if (m.gtsc) {
        const auto& p = *m.gtsc;
        const auto z = asymptote_zero(p, m.q);
        if (z.w0 > 0.0) {
            const double v = w.eval(1e-10);
            r.add("zero: W(0+)", z.w0, v, 1e-3, rel(v, z.w0) <= 1e-3, {{"leading_term", z.leading_term}});
        } else if (z.power > 0.0 && p.alpha != 0.0) {
            // W(h) ~ coefficient h^power
            const double h = 1e-8, v = w(h) / std::pow(h, z.power);
            r.add("zero: W(h)/h^" + number(z.power), z.coefficient, v, 1e-2, rel(v, z.coefficient) <= 1e-2,
                  {{"leading_term", z.leading_term}});
        }
        if (std::isfinite(z.wprime0) && p.zeta > 0.0) {
            const double v = wprime_at_zero_extrapolated(w, p);
            r.add("zero: W'(0+)", z.wprime0, v, 1e-3, rel(v, z.wprime0) <= 1e-3);
        }
        const auto inf = asymptote_infinity(p, m.q);
        switch (inf.regime) {
            case InfinityRegime::bounded: {
                const double v = w(60.0);
                r.add("infinity: W(60) -> 1/psi'(0+)", inf.constant, v, 1e-3, rel(v, inf.constant) <= 1e-3);
                break;
            }
            case InfinityRegime::linear: {
                const double v = w.derivative(60.0);
                r.add("infinity: W'(60) -> slope", inf.constant, v, 1e-2, rel(v, inf.constant) <= 1e-2);
                break;
            }
            case InfinityRegime::power: {
                const double v = w(60.0) / std::pow(60.0, inf.rate);
                r.add("infinity: W(60)/60^alpha", inf.constant, v, 1e-2, rel(v, inf.constant) <= 1e-2);
                break;
            }
            case InfinityRegime::exponential: {
                const double x = std::min(30.0, 600.0 / inf.rate);
                const double v = w(x) * std::exp(-inf.rate * x);
                r.add("infinity: W(x) e^{-" + number(inf.rate) + " x} at x=" + number(x), inf.constant, v, 1e-3,
                      rel(v, inf.constant) <= 1e-3);
                break;
            }
        }
        return;
    }
    if (w.at_zero && *w.at_zero > 0.0) {
        const double v = w.eval(1e-10);
        const double tol = 1e-6 * std::max(1.0, std::abs(*w.at_zero));
        r.add("zero: W(0+)", *w.at_zero, v, tol, std::abs(v - *w.at_zero) <= tol);
    }
    if (m.q > 0.0) {
        const double phi = w.phi_q, target = 1.0 / m.psi.derivative(phi);
        const double x = std::min(30.0, 600.0 / phi);
        const double v = w(x) * std::exp(-phi * x);
        r.add("infinity: W(x) e^{-Phi(q) x} at x=" + number(x), target, v, 1e-3, rel(v, target) <= 1e-3);
        return;
    }
    const double d = mean_drift(m.psi);
    if (d > 0.0) {
        // slowest case: Abate-Whitt, error of order x^{-1/2}
        const double v = w(1e6);
        r.add("infinity: W(1e6) -> 1/psi'(0+)", 1.0 / d, v, 1e-2, rel(v, 1.0 / d) <= 1e-2);
    } else {
        r.skip("asymptotics", "no limit at infinity checked for psi'(0+) <= 0 catalog families");
    }
}

std::optional<LevyTriple> triple_of(const Model& m)
{
    if (m.gtsc) return gtsc_parent(*m.gtsc).triple;
    const auto& p = m.fparams;
    switch (*m.family) {
        case Family::brownian: return brownian_triple(p.at("sigma"), p.at("mu"));
        case Family::cramer_lundberg: return cramer_lundberg_triple(p.at("c"), p.at("lambda"), p.at("mu"));
        case Family::fixed_jumps: return fixed_jumps_triple(p.at("c"), p.at("lambda"), p.at("jump"));
        default: return std::nullopt;
    }
}

void suite_mc(const Model& m, const SimFlags& s, Report& r, bool explicit_suite)
{
    auto skip = [&](const std::string& why) {
        if (explicit_suite) throw CapabilityError(why);
        r.skip("mc", why);
    };
    if (m.q != 0.0) return skip("the mc suite simulates exit probabilities and needs q = 0");
    const auto t = triple_of(m);
    if (!t) return skip("no simulator for " + m.name);
    SimConfig cfg;
    cfg.n_paths = s.paths;
    cfg.seed = s.seed;
    cfg.dt = s.dt;
    cfg.eps = s.eps;
    const auto e = simulate_exit(*t, s.x, s.a, cfg);
    const double target = two_sided_exit(m.w, s.x, s.a);
    const double tol = 3.0 * e.std_error;
    json extra{{"std_error", e.std_error}, {"n_paths", s.paths}, {"censored_fraction", e.censored_fraction}};
    if (!e.warnings.empty()) extra["warnings"] = e.warnings;
    r.add("mc exit x=" + number(s.x) + " a=" + number(s.a), target, e.p_hat, tol, std::abs(e.p_hat - target) <= tol,
          extra);
}

int cmd_verify(const ModelFlags& mf, const std::string& suite, const SimFlags& sim, std::ostream& out)
{
    static const std::vector<std::string> suites{"laplace", "routes", "asymptotics", "mc", "all"};
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw ParameterError("unknown suite '" + suite + "'");
    const Model m = build_model(mf);
    Report r;
    const bool all = suite == "all";
    if (all || suite == "laplace") suite_laplace(m, r);
    if (all || suite == "routes") suite_routes(m, r);
    if (all || suite == "asymptotics") suite_asymptotics(m, r);
    if (all || suite == "mc") suite_mc(m, sim, r, !all);
    json doc;
    doc["suite"] = suite;
    doc["model"] = m.name;
    doc["q"] = m.q;
    doc["route"] = to_string(m.w.route);
    doc["checks"] = r.checks;
    if (!r.skipped.empty()) doc["skipped"] = r.skipped;
    doc["pass"] = r.pass();
    out << doc.dump(2) << '\n';
    return r.pass() ? exit_ok : exit_failed;
}

// ---- applications -------------------------------------------------------------------

struct AppFlags {
    std::string compute;
    std::optional<double> x, a;
};

int cmd_apps(const ModelFlags& mf, const AppFlags& f, const Grid& g, bool grid_given, std::ostream& out)
{
    static const std::vector<std::string> known{"ruin", "exit", "zq", "barrier", "value", "workload"};
    if (std::find(known.begin(), known.end(), f.compute) == known.end())
        throw ParameterError("--compute must be one of ruin, exit, zq, barrier, value, workload");
    const Model m = build_model(mf);
    if (f.compute == "barrier") {
        const auto b = dividend_barrier(m.w);
        json doc{{"model", m.name},
                 {"q", m.q},
                 {"a_star", b.a_star},
                 {"Wq_prime_at_a_star", b.wprime_at_a_star},
                 {"bracket", {b.bracket_lo, b.bracket_hi}},
                 {"degenerate", b.degenerate}};
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    if (f.x && grid_given) throw ParameterError("give either --x or a grid, not both");
    const std::vector<double> xs = f.x ? std::vector<double>{*f.x} : g.values();
    std::function<double(double)> value;
    if (f.compute == "exit") {
        if (!f.a) throw ParameterError("exit needs --a");
        value = [&](double x) { return two_sided_exit(m.w, x, *f.a); };
    } else if (f.compute == "ruin") {
        value = [&](double x) { return ruin_probability(m.w, m.psi, x); };
    } else if (f.compute == "workload") {
        const auto cdf = mpi1_workload(m.w, m.psi);
        value = cdf;
    } else if (f.compute == "zq") {
        value = [&](double x) { return z_q(m.w, x); };
    } else {
        const double a = f.a ? *f.a : dividend_barrier(m.w).a_star;
        value = [&m, a](double x) { return dividend_value(m.w, a, x); };
    }
    out << "x," << f.compute << '\n';
    for (double x : xs) {
        if (x < 0.0) throw ParameterError("x must be nonnegative");
        out << number(x) << ',' << number(value(x)) << '\n';
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"scalekit: scale functions of spectrally negative Levy processes"};
    app.require_subcommand(1);

    ModelFlags eval_m, verify_m, apps_m;
    Grid eval_g, apps_g;
    auto* eval = app.add_subcommand("eval", "tabulate W^(q) and W^(q)' as CSV");
    add_model_flags(eval, eval_m);
    add_grid_flags(eval, eval_g);

    FigureFlags fig;
    auto* figures = app.add_subcommand("figures", "write the case A-F grids as CSV files");
    figures->add_option("--q", fig.q, "0 or 1");
    figures->add_option("--alphas", fig.alphas, "comma separated, decimals or m/n");
    figures->add_option("--out", fig.out, "output directory")->required();
    figures->add_option("--x-max", fig.x_max, "right end of the x grid");
    figures->add_option("--points", fig.points, "grid points");

    std::string suite = "all";
    SimFlags sim;
    auto* verify = app.add_subcommand("verify", "run verification checks, JSON report");
    add_model_flags(verify, verify_m);
    verify->add_option("--suite", suite, "laplace, routes, asymptotics, mc or all");
    verify->add_option("--x", sim.x, "mc: starting point");
    verify->add_option("--a", sim.a, "mc: upper barrier");
    verify->add_option("--paths", sim.paths, "mc: number of paths");
    verify->add_option("--seed", sim.seed, "mc: seed");
    verify->add_option("--dt", sim.dt, "mc: time step");
    verify->add_option("--eps", sim.eps, "mc: small-jump cutoff");

    AppFlags af;
    auto* apps = app.add_subcommand("apps", "exit, ruin, Z^(q), dividend barrier and value, workload");
    add_model_flags(apps, apps_m);
    add_grid_flags(apps, apps_g);
    apps->add_option("--compute", af.compute, "ruin, exit, zq, barrier, value or workload")->required();
    apps->add_option("--x", af.x, "single point");
    apps->add_option("--a", af.a, "upper barrier (exit) or dividend level (value)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "scalekit: error: " << e.what() << '\n';
        return exit_invalid;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_m, eval_g, out);
        if (figures->parsed()) return cmd_figures(fig, out, err);
        if (verify->parsed()) return cmd_verify(verify_m, suite, sim, out);
        const bool grid_given = apps->count("--x-min") || apps->count("--x-max") || apps->count("--points");
        return cmd_apps(apps_m, af, apps_g, grid_given, out);
    } catch (const ParameterError& e) {
        err << "scalekit: error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const NotApplicableError& e) {
        err << "scalekit: error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const CapabilityError& e) {
        err << "scalekit: error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "scalekit: error: " << e.what() << '\n';
        return exit_failed;
    }
}

}  // namespace scalekit::cli
