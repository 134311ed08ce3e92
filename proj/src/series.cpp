#include "efgrowth/series.hpp"
#include "efgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace efgrowth::series {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

GroupedSeries::GroupedSeries(seqlab::SequenceSpec t) : terms(std::move(t)) {
    double prev = 0.0;
    for (double kn : terms.k) {
        require(kn >= 1.0 && kn == std::floor(kn),
                "GroupedSeries: exponents must be positive integers");
        require(kn > prev, "GroupedSeries: exponents must be strictly increasing");
        prev = kn;
    }
}

PartialSumResult partial_sum(const GroupedSeries& s, const Complex& z, std::size_t N) {
    require(N <= s.size(), "partial_sum: N exceeds available terms");
    PartialSumResult r;
    const double log_z = std::abs(z) > 0.0 ? std::log(std::abs(z)) : -kInf;
    for (std::size_t n = 0; n < N; ++n) {
        const double kn = s.terms.k[n];
        if (std::abs(z) == 0.0) {
            r.term_log_mags.push_back(-kInf); // k_1 >= 1 kills every term at 0
            continue;
        }
        const auto ev = efun::eval(s.terms.functions[n], z);
        const double lm = kn * log_z + ev.log_abs;
        r.term_log_mags.push_back(lm);
        if (lm > kLogOverflow || ev.overflow) {
            r.overflow = true;
            continue;
        }
        if (lm == -kInf) continue;
        r.value += std::exp(Complex(lm, kn * std::arg(z) + ev.arg));
    }
    const std::size_t tail = std::min<std::size_t>(10, r.term_log_mags.size());
    for (std::size_t i = r.term_log_mags.size() - tail; i < r.term_log_mags.size(); ++i)
        r.tail_trend.push_back(std::exp(r.term_log_mags[i]));
    return r;
}

ConvergenceRegion convergence_region(double C, double beta, double gamma,
                                     const Complex& z0, double rho0) {
    require(C >= 0.0 && std::isfinite(C), "convergence_region: C must be >= 0");
    require(beta > 0.0, "convergence_region: beta must be positive");
    require(gamma >= 0.0, "convergence_region: gamma must be >= 0");
    require(rho0 > 0.0, "convergence_region: rho0 must be positive");
    ConvergenceRegion cr;
    cr.center = z0;
    if (C >= 1.0) {
        cr.empty = true;
        cr.radius = 0.0;
        return cr;
    }
    if (gamma == 0.0 || C == 0.0) {
        cr.whole_plane = true;
        cr.radius = kInf;
        return cr;
    }
    cr.radius = rho0 * (std::pow(C, -beta / gamma) - 1.0);
    if (std::isinf(cr.radius)) cr.whole_plane = true;
    return cr;
}

double region_constant(const seqlab::SequenceSpec& s, const Complex& z0, double rho0,
                       const growth::CircleQuadrature& q) {
    require(rho0 > 0.0, "region_constant: rho0 must be positive");
    const auto [lo, hi] = trend::trailing_window(s.size());
    double best = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t n = lo; n < hi; ++n) {
        double acc = 0.0;
        bool singular = false;
        for (int j = 0; j < q.nodes; ++j) {
            const Complex z = z0 + std::polar(rho0, two_pi * j / q.nodes);
            const double la = efun::eval(s.functions[n], z).log_abs;
            if (la == -kInf) {
                singular = true;
                break;
            }
            acc += la;
        }
        if (singular) continue; // rotated by the sample density elsewhere
        best = std::max(best, std::exp(acc / q.nodes / s.k[n]));
    }
    return best;
}

PointwiseUniformReport pointwise_to_uniform_check(const GroupedSeries& s,
                                                  const std::vector<Complex>& E_samples,
                                                  const std::vector<double>& R_grid,
                                                  const growth::CircleQuadrature&,
                                                  const CheckerOptions& opts) {
    require(!E_samples.empty(), "pointwise_to_uniform_check: no samples");
    require(s.size() >= 8, "pointwise_to_uniform_check: need >= 8 terms");
    require(!R_grid.empty(), "pointwise_to_uniform_check: empty R_grid");

    PointwiseUniformReport rep;
    const std::size_t N = s.size();
    const auto [lo, hi] = trend::trailing_window(N);

    // stage (a): |Q_n(z)|^{1/(2k_n)} <= 1 + tol on the samples, trailing n
    rep.stage_a.pass = true;
    double max_sample = 0.0;
    for (const Complex& z : E_samples) {
        max_sample = std::max(max_sample, std::abs(z));
        for (std::size_t n = lo; n < hi; ++n) {
            const double kn = s.terms.k[n];
            double v = 0.0;
            if (std::abs(z) > 0.0) {
                const double lq =
                    kn * std::log(std::abs(z)) + efun::eval(s.terms.functions[n], z).log_abs;
                v = std::exp(lq / (2.0 * kn));
            }
            rep.stage_a.rows.emplace_back(std::abs(z), static_cast<double>(n + 1), v);
            if (v > 1.0 + opts.tol) rep.stage_a.pass = false;
        }
        // Cauchy decay of the partial sums over the last quarter of terms
        bool cauchy = true;
        const auto ps = partial_sum(s, z, N);
        const double scale = std::max(1.0, std::abs(ps.value));
        for (std::size_t n = N - N / 4; n < N; ++n) {
            const double mag = std::exp(std::min(ps.term_log_mags[n], 700.0));
            if (!(mag <= opts.cauchy_tol * scale)) cauchy = false;
        }
        rep.stage_a.pointwise_cauchy.push_back(cauchy);
    }
    rep.stage_a.caveat =
        "finite sample of E (max modulus " + std::to_string(max_sample) +
        "); a bounded sample cannot witness non-thinness at infinity";

    // stage (b): k_n >= d*(P_n) for every n
    rep.stage_b.pass = true;
    for (std::size_t n = 0; n < N; ++n) {
        const double d = efun::hadamard_degree(s.terms.functions[n]);
        rep.stage_b.rows.emplace_back(n + 1, s.terms.k[n], d);
        if (s.terms.k[n] < d * (1.0 - 1e-12) - 1e-12) rep.stage_b.pass = false;
    }

    // stage (c): ||P_n||_R^{1/(2k_n)} <= R^{-1/2} + tol and the decay of
    // ||Q_n||_R^{1/(2k_n)} across the window, per grid radius
    rep.stage_c.pass = true;
    for (double R : R_grid) {
        std::vector<double> q_pows;
        for (std::size_t n = lo; n < hi; ++n) {
            const double kn = s.terms.k[n];
            const double ls = growth::log_sup_norm(s.terms.functions[n], R);
            const double p_pow = std::exp(ls / (2.0 * kn));
            const double q_pow = std::exp((kn * std::log(R) + ls) / (2.0 * kn));
            rep.stage_c.rows.emplace_back(R, static_cast<double>(n + 1), p_pow, q_pow);
            q_pows.push_back(q_pow);
            if (p_pow > std::pow(R, -0.5) + opts.tol) rep.stage_c.pass = false;
        }
        bool decays = true;
        for (std::size_t i = 0; i + 1 < q_pows.size(); ++i)
            if (q_pows[i + 1] > q_pows[i] * (1.0 + 1e-12)) decays = false;
        if (!q_pows.empty() && !(q_pows.back() <= 0.5 * q_pows.front() ||
                                 q_pows.back() <= 0.05))
            decays = false;
        rep.stage_c.q_decay_by_R.emplace_back(R, decays);
        if (!decays) rep.stage_c.pass = false;
    }

    rep.all_pass = rep.stage_a.pass && rep.stage_b.pass && rep.stage_c.pass;
    return rep;
}

} // namespace efgrowth::series
