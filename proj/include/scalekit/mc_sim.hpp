#pragma once

// Monte Carlo estimates of exit and ruin probabilities, used to check scale-function
// predictions.  Jumps larger than eps are simulated exactly at exponential times; smaller
// jumps are replaced by a Brownian term with the same variance.  Barrier crossings of the
// continuous part between grid points use the Brownian-bridge crossing probability.

#include "scalekit/applications.hpp"
#include "scalekit/error.hpp"
#include "scalekit/levy_core.hpp"
#include "scalekit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace scalekit {

struct SimConfig {
    std::size_t n_paths = 100000;
    double dt = 1e-3;
    double eps = 0.01;  // small-jump cutoff; ignored when the jump rate is finite
    double horizon = 200.0;
    std::uint64_t seed = 20070801;
    unsigned threads = 0;  // 0: SCALEKIT_THREADS or the hardware count
};

struct SimEstimate {
    double p_hat = 0.0;
    double std_error = 0.0;
    std::size_t n_censored = 0;
    double censored_fraction = 0.0;
    double level = 0.0;  // upper level a (or the ruin proxy level)
    std::vector<std::string> warnings;
};

/// Worker count: SCALEKIT_THREADS caps the hardware count.
inline unsigned worker_count(unsigned requested = 0)
{
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SCALEKIT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

namespace detail {

// int_{(lo, 1]} y nu(dy) (negative when lo > 1), through nu(y, inf) by parts
inline double jump_first_moment(const std::function<double(double)>& tail, double lo)
{
    const double boundary = (lo > 0.0 ? lo * tail(lo) : 0.0) - tail(1.0);
    auto f = [&](double y) {
        const double v = tail(y);
        return std::isfinite(v) ? v : 0.0;
    };
    double integral;
    if (lo < 1.0)
        integral = quad::endpoint_singular(f, lo, 1.0, 1e-11).value;
    else
        integral = -quad::gk(tail, 1.0, lo, 1e-11, 10).value;
    return boundary + integral;
}

// int_{(0, eps]} y^2 nu(dy) = -eps^2 nu(eps) + 2 int_0^eps y nu(y) dy
inline double small_jump_variance(const std::function<double(double)>& tail, double eps)
{
    // overflow only at nodes within ~1e-200 of 0, where the integrand's share is nil
    auto f = [&](double y) {
        const double v = y * tail(y);
        return std::isfinite(v) ? v : 0.0;
    };
    return -eps * eps * tail(eps) + 2.0 * quad::endpoint_singular(f, 0.0, eps, 1e-11).value;
}

// Inverse of nu(y, inf) on (y_lo, inf) by log-log interpolation on a fine geometric grid.
class TailSampler {
public:
    TailSampler() = default;
    TailSampler(const std::function<double(double)>& tail, double y_lo)
    {
        const double top = tail(y_lo);
        for (double y = y_lo; y < 1e6; y *= 1.004) {
            const double v = tail(y);
            if (!(v > 1e-15 * top)) break;
            log_y_.push_back(std::log(y));
            log_t_.push_back(std::log(v));
        }
        y_lo_ = y_lo;
    }

    double operator()(std::mt19937_64& rng) const
    {
        const double target = log_t_.front() + std::log(std::uniform_real_distribution<double>(0.0, 1.0)(rng) + 1e-300);
        // log_t_ is decreasing; find the last node with log_t >= target
        auto it = std::upper_bound(log_t_.begin(), log_t_.end(), target, std::greater<double>());
        const std::size_t i = static_cast<std::size_t>(it - log_t_.begin());
        if (i == 0) return y_lo_;
        if (i >= log_t_.size()) return std::exp(log_y_.back());
        const double w = (target - log_t_[i - 1]) / (log_t_[i] - log_t_[i - 1]);
        return std::exp(log_y_[i - 1] + w * (log_y_[i] - log_y_[i - 1]));
    }

private:
    std::vector<double> log_y_, log_t_;
    double y_lo_ = 0.0;
};

struct PreparedProcess {
    double drift = 0.0;     // drift after compensating jumps in (eps, 1]
    double sigma = 0.0;     // Gaussian part plus small-jump variance
    double rate = 0.0;      // intensity of the simulated jumps
    double cutoff = 0.0;    // jumps below this are folded into sigma
    std::function<double(std::mt19937_64&)> jump;
    std::vector<std::string> warnings;
};

inline PreparedProcess prepare(const LevyTriple& t, double eps)
{
    PreparedProcess p;
    double var = t.sigma * t.sigma;
    p.drift = -t.a;
    if (t.pi_tail) {
        const bool finite = std::isfinite(t.total_rate);
        p.cutoff = finite ? 0.0 : eps;
        if (!finite && !(eps > 0.0)) throw ParameterError("simulation: eps must be positive for infinite activity");
        p.rate = finite ? t.total_rate : t.pi_tail(eps);
        p.drift += jump_first_moment(t.pi_tail, p.cutoff);
        if (!finite) {
            const double v1 = small_jump_variance(t.pi_tail, eps);
            const double v2 = small_jump_variance(t.pi_tail, 0.5 * eps);
            var += v1;
            const double change = std::abs((var - v1 + v2) / var - 1.0);
            if (change > 0.05)
                p.warnings.push_back("small-jump variance changes by " + std::to_string(100.0 * change) +
                                     "% when eps halves; the Gaussian approximation may be coarse");
        }
        if (p.rate > 0.0) {
            if (t.sample_jump) {
                auto s = t.sample_jump;
                const double c = p.cutoff;
                p.jump = [s, c](std::mt19937_64& rng) { return s(c, rng); };
            } else {
                auto sampler = std::make_shared<TailSampler>(t.pi_tail, p.cutoff > 0.0 ? p.cutoff : 1e-12);
                p.jump = [sampler](std::mt19937_64& rng) { return (*sampler)(rng); };
            }
        }
    }
    p.sigma = std::sqrt(var);
    return p;
}

inline std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

enum class Outcome : char { up, down, censored };

// One path from x until it leaves (0, a) or runs past the horizon.
inline Outcome run_path(const PreparedProcess& p, double x, double a, double dt, double horizon, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::exponential_distribution<double> expo(p.rate > 0.0 ? p.rate : 1.0);
    const double inf = std::numeric_limits<double>::infinity();
    double t = 0.0, next_jump = p.rate > 0.0 ? expo(rng) : inf;
    const double s2 = p.sigma * p.sigma;
    while (true) {
        if (t >= horizon) return Outcome::censored;
        double h = std::min(next_jump - t, horizon - t);
        if (p.sigma > 0.0) h = std::min(h, dt);
        const bool jumps = next_jump - t <= h;
        double y = x + p.drift * h;
        if (p.sigma > 0.0) {
            y += p.sigma * std::sqrt(h) * normal(rng);
            if (y >= a) return Outcome::up;
            if (y <= 0.0) return Outcome::down;
            const double up = std::exp(-2.0 * (a - x) * (a - y) / (s2 * h));
            const double down = std::exp(-2.0 * x * y / (s2 * h));
            const double u = unif(rng);
            if (u < up) return Outcome::up;
            if (u < up + down) return Outcome::down;
        } else {
            if (y >= a) return Outcome::up;
            if (y <= 0.0) return Outcome::down;
        }
        x = y;
        t = jumps ? next_jump : t + h;
        if (jumps) {
            x -= p.jump(rng);
            if (x < 0.0) return Outcome::down;
            next_jump += expo(rng);
        }
    }
}

inline SimEstimate estimate(const LevyTriple& triple, double x, double a, const SimConfig& cfg, bool count_down)
{
    if (cfg.n_paths == 0 || !(cfg.dt > 0.0) || !(cfg.horizon > 0.0))
        throw ParameterError("simulation: n_paths, dt and horizon must be positive");
    const PreparedProcess p = prepare(triple, cfg.eps);
    std::vector<Outcome> out(cfg.n_paths);
    const unsigned nt = std::min<unsigned>(worker_count(cfg.threads), static_cast<unsigned>(cfg.n_paths));
    auto work = [&](unsigned id) {
        for (std::size_t i = id; i < cfg.n_paths; i += nt) {
            std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(i)));
            out[i] = run_path(p, x, a, cfg.dt, cfg.horizon, rng);
        }
    };
    if (nt == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < nt; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }
    std::size_t hits = 0, censored = 0;
    for (Outcome o : out) {
        if (o == Outcome::censored)
            ++censored;
        else if ((o == Outcome::down) == count_down)
            ++hits;
    }
    SimEstimate e;
    e.warnings = p.warnings;
    e.level = a;
    e.n_censored = censored;
    e.censored_fraction = static_cast<double>(censored) / cfg.n_paths;
    const std::size_t n = cfg.n_paths - censored;
    if (n == 0) throw NumericalError("simulation: every path was censored; raise the horizon");
    e.p_hat = static_cast<double>(hits) / n;
    e.std_error = std::sqrt(std::max(e.p_hat * (1.0 - e.p_hat), 1.0 / n) / n);
    if (e.censored_fraction > 0.01)
        e.warnings.push_back(std::to_string(100.0 * e.censored_fraction) + "% of paths censored at the horizon");
    return e;
}

}  // namespace detail

/// Estimate of P_x(tau_a^+ < tau_0^-).
inline SimEstimate simulate_exit(const LevyTriple& triple, double x, double a, const SimConfig& cfg = {})
{
    if (!(a > 0.0) || x < 0.0 || x > a) throw ParameterError("simulate_exit: need 0 <= x <= a, a > 0");
    return detail::estimate(triple, x, a, cfg, false);
}

/// Level a at which P_x(tau_0^- < tau_a^+) = 1 - W(x)/W(a) is within rel_tol of the ruin probability.
inline double ruin_proxy_level(const ScaleFunction& w, const LaplaceExponent& psi, double x, double rel_tol = 1e-3)
{
    const double d = detail::positive_drift(psi);
    const double target = ruin_probability(w, psi, x);
    for (double a = std::max(2.0 * x, x + 1.0); a < 1e6; a *= 1.25)
        if (w(x) * (1.0 / w(a) - d) < rel_tol * target) return a;  // the proxy overstates ruin by this
    throw NumericalError("ruin_proxy_level: W converges too slowly");
}

/// Estimate of P_x(tau_0^- < inf) through the exit below 0 before `level`; pick `level`
/// with ruin_proxy_level so that the proxy bias is below the reported tolerance.
inline SimEstimate simulate_ruin(const LevyTriple& triple, double x, double level, const SimConfig& cfg = {})
{
    if (x < 0.0 || !(level > x)) throw ParameterError("simulate_ruin: need 0 <= x < level");
    return detail::estimate(triple, x, level, cfg, true);
}

/// Triples of the catalogued processes that are simulated in checks.
inline LevyTriple brownian_triple(double sigma, double mu)
{
    LevyTriple t;
    t.a = -mu;
    t.sigma = sigma;
    t.total_rate = 0.0;
    return t;
}

inline LevyTriple cramer_lundberg_triple(double c, double lambda, double mu)
{
    LevyTriple t;
    t.pi_tail = [=](double y) { return lambda * std::exp(-mu * y); };
    t.pi_density = [=](double y) { return lambda * mu * std::exp(-mu * y); };
    t.sample_jump = [=](double eps, std::mt19937_64& rng) {
        return eps + std::exponential_distribution<double>(mu)(rng);
    };
    t.total_rate = lambda;
    t.a = detail::jump_first_moment(t.pi_tail, 0.0) - c;  // drift of the paths is c
    return t;
}

inline LevyTriple fixed_jumps_triple(double c, double lambda, double h)
{
    LevyTriple t;
    t.pi_tail = [=](double y) { return y < h ? lambda : 0.0; };
    t.sample_jump = [=](double, std::mt19937_64&) { return h; };
    t.total_rate = lambda;
    t.a = (h <= 1.0 ? lambda * h : 0.0) - c;
    return t;
}

}  // namespace scalekit
