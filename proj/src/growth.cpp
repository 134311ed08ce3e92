#include "efgrowth/growth.hpp"
#include "efgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace efgrowth::growth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxNodes = 1 << 20;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double min_ring_gap(const FiniteOrderFunction& f, double R) {
    double gap = kInf;
    for (const auto& ze : f.zeros())
        gap = std::min(gap, std::abs(std::abs(ze.location) - R));
    return gap;
}

} // namespace

CircleQuadrature::CircleQuadrature(int n) : nodes(n) {
    if (!power_of_two(n) || n < 64)
        throw std::invalid_argument("CircleQuadrature: nodes must be a power of two >= 64");
}

namespace {

// Mean of log|f| over one rotated equispaced grid; false on a -inf node.
bool grid_mean(const FiniteOrderFunction& f, double R, int nodes, double offset,
               double& out) {
    double acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double la = efun::eval(f, std::polar(R, offset + kTwoPi * k / nodes)).log_abs;
        if (!std::isfinite(la)) {
            if (la == -kInf) return false;
            throw numeric_error("growth.log_mean", "non-finite integrand");
        }
        acc += la;
    }
    out = acc / nodes;
    return true;
}

double rotated_mean(const FiniteOrderFunction& f, double R, int nodes) {
    double offset = 0.0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        double v;
        if (grid_mean(f, R, nodes, offset, v)) return v;
        offset += std::numbers::pi / nodes; // half-step rotation
    }
    throw numeric_error("growth.log_mean",
                        "zero on the circle persists after 3 grid rotations");
}

} // namespace

LogMeanDetail log_mean_detail(const FiniteOrderFunction& f, double R,
                              const CircleQuadrature& q) {
    if (!(R > 0.0)) throw std::invalid_argument("log_mean: R must be positive");
    if (f.is_zero()) throw std::domain_error("log_mean: undefined for the zero function");

    LogMeanDetail d;
    d.near_ring = min_ring_gap(f, R) < 1e-9 * R;
    d.nodes_used = q.nodes;
    d.value = rotated_mean(f, R, q.nodes);
    if (d.near_ring) {
        // Degenerate ring: double until the estimate settles, report the
        // achieved change.
        double prev = d.value;
        int nodes = q.nodes;
        while (nodes < kMaxNodes) {
            nodes *= 2;
            const double cur = rotated_mean(f, R, nodes);
            d.err_estimate = std::abs(cur - prev);
            d.value = cur;
            d.nodes_used = nodes;
            if (d.err_estimate <= 1e-10 * std::max(1.0, std::abs(cur))) break;
            prev = cur;
        }
    }
    return d;
}

double log_mean(const FiniteOrderFunction& f, double R, const CircleQuadrature& q) {
    return log_mean_detail(f, R, q).value;
}

double jensen_log_mean(const FiniteOrderFunction& f, double R) {
    if (f.is_zero()) throw std::domain_error("jensen_log_mean: zero function");
    double s = std::log(std::abs(f.leading())) + f.origin_mult() * std::log(R);
    for (const auto& ze : f.zeros()) {
        const double r = std::abs(ze.location);
        if (r <= R) s += ze.multiplicity * std::log(R / r);
    }
    // The exponential polynomial has zero circle mean: W(0) = 0 and
    // (1/2pi) int Re(c_i R^i e^{iit}) dt = 0 for every i >= 1.
    return s;
}

SupNormResult sup_norm_detail(const FiniteOrderFunction& f, double R, int samples) {
    if (!(R > 0.0)) throw std::invalid_argument("sup_norm: R must be positive");
    if (samples < 256) throw std::invalid_argument("sup_norm: samples must be >= 256");
    SupNormResult res;
    if (f.is_zero()) {
        res.log_value = -kInf;
        res.value = 0.0;
        return res;
    }

    std::vector<double> g(samples);
    for (int k = 0; k < samples; ++k)
        g[k] = efun::eval(f, std::polar(R, kTwoPi * k / samples)).log_abs;

    std::vector<int> order(samples);
    for (int k = 0; k < samples; ++k) order[k] = k;
    const int refine = std::min(8, samples);
    std::partial_sort(order.begin(), order.begin() + refine, order.end(),
                      [&](int a, int b) { return g[a] > g[b]; });

    const double h = kTwoPi / samples;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    auto eval_log = [&](double t) { return efun::eval(f, std::polar(R, t)).log_abs; };
    double best = *std::max_element(g.begin(), g.end());
    for (int c = 0; c < refine; ++c) {
        double a = h * order[c] - h, b = h * order[c] + h;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double g1 = eval_log(x1), g2 = eval_log(x2);
        while (b - a > 1e-12) {
            if (g1 < g2) {
                a = x1; x1 = x2; g1 = g2;
                x2 = a + gr * (b - a); g2 = eval_log(x2);
            } else {
                b = x2; x2 = x1; g2 = g1;
                x1 = b - gr * (b - a); g1 = eval_log(x1);
            }
        }
        best = std::max({best, g1, g2});
    }

    // Bernstein-style bound on |d/dt log|f(Re^{it})|| = |Re(iz f'/f)|:
    //   m + sum mult * R/dist(z_j, ring) + sum i |c_i| R^i.
    double L = f.origin_mult();
    for (const auto& ze : f.zeros()) {
        const double dist = std::abs(std::abs(ze.location) - R);
        L += ze.multiplicity * (dist > 0.0 ? R / dist : kInf);
    }
    for (std::size_t i = 0; i < f.expoly().size(); ++i)
        L += (i + 1) * std::abs(f.expoly()[i]) * std::pow(R, static_cast<double>(i + 1));

    res.log_value = best;
    res.value = best <= kLogOverflow ? std::exp(best) : kInf;
    res.log_err_bound = std::isfinite(L) ? L * h / 2.0 : kInf;
    return res;
}

double sup_norm(const FiniteOrderFunction& f, double R, int samples) {
    return sup_norm_detail(f, R, samples).value;
}

double log_sup_norm(const FiniteOrderFunction& f, double R, int samples) {
    return sup_norm_detail(f, R, samples).log_value;
}

WindingCount argument_principle_count(const FiniteOrderFunction& f, double R,
                                      const CircleQuadrature& q) {
    if (!(R > 0.0)) throw std::invalid_argument("argument_principle_count: R > 0 required");
    if (f.is_zero())
        throw std::domain_error("argument_principle_count: zero function");
    if (min_ring_gap(f, R) < 1e-6 * R)
        throw numeric_error("growth.argument_principle_count",
                            "stored zero within 1e-6*R of the contour");

    int nodes = q.nodes;
    while (true) {
        std::vector<double> theta(nodes);
        for (int k = 0; k < nodes; ++k)
            theta[k] = efun::eval(f, std::polar(R, kTwoPi * k / nodes)).arg;
        double accrued = 0.0;
        bool ok = true;
        for (int k = 0; k < nodes; ++k) {
            double d = theta[(k + 1) % nodes] - theta[k];
            d = std::remainder(d, kTwoPi);
            if (std::abs(d) >= std::numbers::pi / 2.0) {
                ok = false;
                break;
            }
            accrued += d;
        }
        if (ok) {
            WindingCount wc;
            wc.total = std::llround(accrued / kTwoPi);
            wc.eta_comparable = wc.total - f.origin_mult();
            wc.nodes_used = nodes;
            return wc;
        }
        if (nodes >= kMaxNodes)
            throw numeric_error("growth.argument_principle_count",
                                "phase increments not resolved at 2^20 nodes");
        nodes *= 2;
    }
}

GrowthIndicators indicators(const FiniteOrderFunction& f, double R,
                            const CircleQuadrature& q) {
    GrowthIndicators gi;
    gi.R = R;
    gi.log_mean = log_mean(f, R, q);
    const auto sn = sup_norm_detail(f, R);
    gi.sup_norm = sn.value;
    gi.log_sup_norm = sn.log_value;
    gi.zero_count = efun::zero_count(f, R);
    return gi;
}

} // namespace efgrowth::growth
