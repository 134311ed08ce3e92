#include "efgrowth/laplace.hpp"
#include "efgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace efgrowth::laplace {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// (e^w - 1)/w, stable near w = 0.
Complex phi1(const Complex& w) {
    if (std::abs(w) < 0.5) {
        Complex term(1.0, 0.0), sum(1.0, 0.0);
        for (int k = 2; k <= 24; ++k) {
            term *= w / static_cast<double>(k);
            sum += term;
            if (std::abs(term) < 1e-20 * std::abs(sum)) break;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

// int_0^1 u e^{wu} du = (e^w (w-1) + 1)/w^2, stable near w = 0.
Complex psi1(const Complex& w) {
    if (std::abs(w) < 0.5) {
        Complex sum(0.0, 0.0), wk(1.0, 0.0);
        double kfact = 1.0;
        for (int k = 0; k <= 26; ++k) {
            if (k > 0) {
                wk *= w;
                kfact *= k;
            }
            sum += wk / (kfact * (k + 2));
            if (std::abs(wk / (kfact * (k + 2))) < 1e-20) break;
        }
        return sum;
    }
    return (std::exp(w) * (w - 1.0) + 1.0) / (w * w);
}

// int_a^b e^{zt} dt
Complex exp_piece(const Complex& z, double a, double b) {
    const double len = b - a;
    return len * std::exp(z * a) * phi1(z * len);
}

// int_a^b t e^{zt} dt
Complex t_exp_piece(const Complex& z, double a, double b) {
    const double len = b - a;
    const Complex w = z * len;
    return len * std::exp(z * a) * (a * phi1(w) + len * psi1(w));
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
// Legendre recurrence.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n) {
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussLegendre& gl16() {
    static const GaussLegendre g(16);
    return g;
}

double lin_interp(double t, double t0, double t1, double v0, double v1) {
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

} // namespace

Kernel Kernel::piecewise_const(std::vector<double> breaks, std::vector<double> values,
                               std::optional<std::pair<double, double>> support_hint) {
    require(breaks.size() >= 2, "Kernel: need at least one piece");
    require(values.size() + 1 == breaks.size(), "Kernel: values/breaks size mismatch");
    require(breaks.front() >= 0.0, "Kernel: phi(t)=0 for t<=0, breaks must start >= 0");
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        require(breaks[i] < breaks[i + 1], "Kernel: breaks must be increasing");
    for (double v : values) require(std::isfinite(v), "Kernel: values must be finite");
    Kernel k;
    k.rep_ = Rep::piecewise_const;
    k.breaks_ = std::move(breaks);
    k.values_ = std::move(values);
    k.support_hint_ = support_hint;
    return k;
}

Kernel Kernel::samples(std::vector<double> t, std::vector<double> phi,
                       std::optional<std::pair<double, double>> support_hint) {
    require(t.size() >= 2, "Kernel: need at least two samples");
    require(t.size() == phi.size(), "Kernel: t/phi size mismatch");
    require(t.front() >= 0.0, "Kernel: phi(t)=0 for t<=0, samples must start >= 0");
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        require(t[i] < t[i + 1], "Kernel: sample abscissae must be increasing");
    for (double v : phi) require(std::isfinite(v), "Kernel: samples must be finite");
    Kernel k;
    k.rep_ = Rep::samples;
    k.t_ = std::move(t);
    k.phi_ = std::move(phi);
    k.support_hint_ = support_hint;
    return k;
}

double Kernel::support_end() const {
    return rep_ == Rep::piecewise_const ? breaks_.back() : t_.back();
}

namespace {

// Visit the pieces of the kernel clipped to [0, n]; f(a, b, va, vb) with
// the (linear) endpoint values of phi on [a, b].
template <typename F>
void for_each_piece(const Kernel& k, double n, F&& f) {
    if (k.rep() == Kernel::Rep::piecewise_const) {
        const auto& b = k.breaks();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            const double a = std::max(0.0, b[i]);
            const double bb = std::min(n, b[i + 1]);
            if (bb > a) f(a, bb, k.values()[i], k.values()[i]);
        }
    } else {
        const auto& t = k.sample_t();
        const auto& p = k.sample_phi();
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const double a = std::max(0.0, t[i]);
            const double bb = std::min(n, t[i + 1]);
            if (bb > a)
                f(a, bb, lin_interp(a, t[i], t[i + 1], p[i], p[i + 1]),
                  lin_interp(bb, t[i], t[i + 1], p[i], p[i + 1]));
        }
    }
}

void check_overflow(const Kernel& k, const Complex& z, double n, const char* op) {
    const double t_end = std::min(n, k.support_end());
    if (z.real() * t_end > kLogOverflow)
        throw numeric_error(op, "Re(z)*mu_n = " + std::to_string(z.real() * t_end) +
                                    " exceeds the overflow bound");
}

// Composite 16-point Gauss-Legendre of g over [a,b], split so each chunk
// sees at most ~3 radians of e^{zt} phase/growth.
template <typename G>
Complex gl_piece(const Complex& z, double a, double b, G&& g) {
    const int chunks = std::max(1, static_cast<int>(std::ceil(std::abs(z) * (b - a) / 3.0)));
    const auto& q = gl16();
    Complex acc(0.0, 0.0);
    for (int c = 0; c < chunks; ++c) {
        const double ca = a + (b - a) * c / chunks;
        const double cb = a + (b - a) * (c + 1) / chunks;
        const double mid = 0.5 * (ca + cb), half = 0.5 * (cb - ca);
        Complex s(0.0, 0.0);
        for (std::size_t i = 0; i < q.x.size(); ++i)
            s += q.w[i] * g(mid + half * q.x[i]);
        acc += half * s;
    }
    return acc;
}

} // namespace

Complex transform_eval(const Kernel& kernel, const Complex& z, double n) {
    require(n > 0.0, "transform_eval: n must be positive");
    check_overflow(kernel, z, n, "laplace.transform_eval");
    Complex acc(0.0, 0.0);
    if (kernel.rep() == Kernel::Rep::piecewise_const) {
        for_each_piece(kernel, n, [&](double a, double b, double v, double) {
            acc += v * exp_piece(z, a, b);
        });
    } else {
        const auto& t = kernel.sample_t();
        const auto& p = kernel.sample_phi();
        for_each_piece(kernel, n, [&](double a, double b, double, double) {
            // locate the sample interval containing [a,b]
            const auto it = std::upper_bound(t.begin(), t.end(), a);
            const std::size_t i = std::max<std::ptrdiff_t>(0, it - t.begin() - 1);
            acc += gl_piece(z, a, b, [&](double tt) {
                return lin_interp(tt, t[i], t[i + 1], p[i], p[i + 1]) * std::exp(z * tt);
            });
        });
    }
    return acc;
}

Complex transform_deriv(const Kernel& kernel, const Complex& z, double n) {
    require(n > 0.0, "transform_deriv: n must be positive");
    check_overflow(kernel, z, n, "laplace.transform_deriv");
    Complex acc(0.0, 0.0);
    if (kernel.rep() == Kernel::Rep::piecewise_const) {
        for_each_piece(kernel, n, [&](double a, double b, double v, double) {
            acc += v * t_exp_piece(z, a, b);
        });
    } else {
        const auto& t = kernel.sample_t();
        const auto& p = kernel.sample_phi();
        for_each_piece(kernel, n, [&](double a, double b, double, double) {
            const auto it = std::upper_bound(t.begin(), t.end(), a);
            const std::size_t i = std::max<std::ptrdiff_t>(0, it - t.begin() - 1);
            acc += gl_piece(z, a, b, [&](double tt) {
                return tt * lin_interp(tt, t[i], t[i + 1], p[i], p[i + 1]) * std::exp(z * tt);
            });
        });
    }
    return acc;
}

double moment(const Kernel& kernel, int k, double n) {
    require(k >= 0, "moment: k >= 0");
    double acc = 0.0;
    // exact: integrate t^k against constant / linear pieces
    for_each_piece(kernel, n, [&](double a, double b, double va, double vb) {
        if (kernel.rep() == Kernel::Rep::piecewise_const) {
            acc += va * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
        } else {
            // phi linear on [a,b]: phi(t) = va + s (t - a)
            const double s = (vb - va) / (b - a);
            const double c0 = va - s * a;
            acc += c0 * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1) +
                   s * (std::pow(b, k + 2) - std::pow(a, k + 2)) / (k + 2);
        }
    });
    return acc;
}

namespace {

// integral of |linear| over [a,b] with endpoint values va, vb (splits at
// the sign change).
double abs_lin_piece(double a, double b, double va, double vb) {
    if (va == 0.0 && vb == 0.0) return 0.0;
    if (va * vb >= 0.0) return 0.5 * (std::abs(va) + std::abs(vb)) * (b - a);
    const double root = a + (b - a) * va / (va - vb);
    return 0.5 * std::abs(va) * (root - a) + 0.5 * std::abs(vb) * (b - root);
}

} // namespace

double cumulative_abs(const Kernel& kernel, double a_lim, double n) {
    double acc = 0.0;
    const double lim = std::min(a_lim, n);
    for_each_piece(kernel, n, [&](double a, double b, double va, double vb) {
        if (a >= lim) return;
        const double bb = std::min(b, lim);
        const double vbb = kernel.rep() == Kernel::Rep::piecewise_const
                               ? va
                               : lin_interp(bb, a, b, va, vb);
        acc += kernel.rep() == Kernel::Rep::piecewise_const
                   ? std::abs(va) * (bb - a)
                   : abs_lin_piece(a, bb, va, vbb);
    });
    return acc;
}

double exp_moment(const Kernel& kernel, double s, double n) {
    double acc = 0.0;
    for_each_piece(kernel, n, [&](double a, double b, double va, double vb) {
        if (kernel.rep() == Kernel::Rep::piecewise_const) {
            acc += std::abs(va) * exp_piece(Complex(s, 0.0), a, b).real();
        } else {
            acc += gl_piece(Complex(s, 0.0), a, b, [&](double tt) {
                       return Complex(std::abs(lin_interp(tt, a, b, va, vb)) *
                                          std::exp(s * tt),
                                      0.0);
                   })
                       .real();
        }
    });
    return acc;
}

SupportParams support_params(const Kernel& kernel, double n, double tol) {
    require(n > 0.0, "support_params: n must be positive");
    require(tol > 0.0, "support_params: tol must be positive");
    const double t_end = std::min(n, kernel.support_end());
    const double total = cumulative_abs(kernel, t_end, n);
    if (total <= 0.0)
        throw std::domain_error("support_params: phi vanishes a.e. on [0, n]");
    const double theta = tol * total;

    auto bisect = [&](double target) {
        double lo = 0.0, hi = t_end;
        for (int it = 0; it < 120; ++it) {
            const double mid = 0.5 * (lo + hi);
            (cumulative_abs(kernel, mid, n) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    SupportParams sp;
    sp.sigma = bisect(theta);
    sp.mu = bisect(total - theta);
    if (sp.sigma > sp.mu) sp.sigma = sp.mu;
    return sp;
}

// ---------------------------------------------------------------------------
// Zero location by rectangle subdivision + argument principle.

namespace {

struct BoundaryHit {};

struct Rect {
    double x0, y0, x1, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double diam() const { return std::hypot(width(), height()); }
    Complex center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
};

struct ZeroFinder {
    const Kernel& kernel;
    double n;
    double phase_rate; // |d/dz arg| of the e^{zt} factor is at most t_end
    std::vector<std::pair<Complex, int>> found;
    long long evals = 0;

    Complex f(const Complex& z) {
        ++evals;
        return transform_eval(kernel, z, n);
    }
    Complex fp(const Complex& z) { return transform_deriv(kernel, z, n); }

    // phase accrual along [za, zb]. The wrapped-increment criterion can
    // alias a full 2 pi swing, so the base mesh must already resolve the
    // exponential factor's phase (min_depth); the adaptive splitting then
    // only has to deal with zeros near the edge.
    double edge_accrual(const Complex& za, const Complex& fa, const Complex& zb,
                        const Complex& fb, int depth, int min_depth) {
        if (std::abs(fa) == 0.0 || std::abs(fb) == 0.0) throw BoundaryHit{};
        const double d = std::remainder(std::arg(fb) - std::arg(fa), 2.0 * kPi);
        if (std::abs(d) < kPi / 2.0 && depth >= min_depth) return d;
        if (depth > 46) throw BoundaryHit{}; // unresolved: zero on/near the edge
        const Complex zm = 0.5 * (za + zb);
        const Complex fm = f(zm);
        return edge_accrual(za, fa, zm, fm, depth + 1, min_depth) +
               edge_accrual(zm, fm, zb, fb, depth + 1, min_depth);
    }

    int base_depth(double edge_len) const {
        // segments short enough that the e^{zt} factor turns < 0.5 rad each
        const double segs = edge_len * phase_rate / 0.5;
        int d = 3;
        while ((1 << d) < segs && d < 26) ++d;
        return d;
    }

    long long winding(const Rect& r) {
        const Complex c[4] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
        Complex fc[4];
        for (int i = 0; i < 4; ++i) fc[i] = f(c[i]);
        double acc = 0.0;
        for (int i = 0; i < 4; ++i) {
            const Complex za = c[i], zb = c[(i + 1) % 4];
            acc += edge_accrual(za, fc[i], zb, fc[(i + 1) % 4], 0,
                                base_depth(std::abs(zb - za)));
        }
        return std::llround(acc / (2.0 * kPi));
    }

    // Newton with multiplicity; returns nullopt when it wanders or stalls.
    std::optional<Complex> newton(Complex z, int mult, double radius) {
        const Complex z_start = z;
        for (int it = 0; it < 50; ++it) {
            const Complex fz = f(z);
            const Complex dz = fp(z);
            if (std::abs(dz) == 0.0) return std::nullopt;
            const Complex step = static_cast<double>(mult) * fz / dz;
            z -= step;
            if (std::abs(z - z_start) > 4.0 * radius + 1.0) return std::nullopt;
            if (std::abs(step) <= 1e-12 * std::max(1.0, std::abs(z))) return z;
        }
        return std::nullopt;
    }

    void process(const Rect& r, long long count, int depth, double cluster_tol) {
        if (count <= 0) return;
        if (depth > 60)
            throw numeric_error("laplace.zeros_in_disk",
                                "subdivision depth exceeded 60");
        const double diam = r.diam();
        // inflated-rectangle membership: a polished zero must stay in the
        // box that isolated it
        auto inside = [&](const Complex& z) {
            const double mx = 0.05 * r.width(), my = 0.05 * r.height();
            return z.real() >= r.x0 - mx && z.real() <= r.x1 + mx &&
                   z.imag() >= r.y0 - my && z.imag() <= r.y1 + my;
        };
        if (count == 1 && diam <= 0.75) {
            if (auto z = newton(r.center(), 1, diam)) {
                if (inside(*z)) {
                    found.emplace_back(*z, 1);
                    return;
                }
            }
        }
        if (diam <= cluster_tol) {
            Complex z = r.center();
            if (auto p = newton(z, static_cast<int>(count), diam); p && inside(*p)) z = *p;
            found.emplace_back(z, static_cast<int>(count));
            return;
        }
        // quadrisect with jittered split fractions; a zero on an internal
        // edge shows up as BoundaryHit and moves the split point
        for (int attempt = 0; attempt < 8; ++attempt) {
            const double fx = 0.5 + 0.017 * attempt;
            const double fy = 0.5 + 0.013 * attempt;
            const double xm = r.x0 + fx * r.width();
            const double ym = r.y0 + fy * r.height();
            const Rect quads[4] = {{r.x0, r.y0, xm, ym},
                                   {xm, r.y0, r.x1, ym},
                                   {r.x0, ym, xm, r.y1},
                                   {xm, ym, r.x1, r.y1}};
            long long counts[4];
            bool ok = true;
            long long total = 0;
            try {
                for (int i = 0; i < 4; ++i) {
                    counts[i] = winding(quads[i]);
                    total += counts[i];
                }
            } catch (const BoundaryHit&) {
                ok = false;
            }
            if (!ok || total != count) continue;
            for (int i = 0; i < 4; ++i)
                process(quads[i], counts[i], depth + 1, cluster_tol);
            return;
        }
        throw numeric_error("laplace.zeros_in_disk",
                            "could not split around an on-edge zero");
    }
};

} // namespace

TransformZeroData zeros_in_disk(const Kernel& kernel, double n, double R, double tol) {
    require(n > 0.0 && R > 0.0, "zeros_in_disk: n and R must be positive");
    require(tol > 0.0, "zeros_in_disk: tol must be positive");
    const double t_end = std::min(n, kernel.support_end());
    // the search box corners sit at |z| = R*sqrt(2)
    if (R * std::numbers::sqrt2 * t_end > kLogOverflow)
        throw numeric_error("laplace.zeros_in_disk",
                            "R * support end exceeds the overflow bound");

    ZeroFinder zf{kernel, n, t_end, {}, 0};
    const double cluster_tol = std::max(tol, 1e-6);

    // outer boundary: perturb R by up to 1% if a zero sits on the contour
    double R_search = R;
    bool done = false;
    for (int attempt = 0; attempt < 5 && !done; ++attempt) {
        zf.found.clear();
        const Rect box{-R_search, -R_search, R_search, R_search};
        try {
            const long long total = zf.winding(box);
            zf.process(box, total, 0, cluster_tol);
            done = true;
        } catch (const BoundaryHit&) {
            R_search = R * (1.0 + 0.002 * (attempt + 1));
        }
    }
    if (!done)
        throw numeric_error("laplace.zeros_in_disk",
                            "zero on the search boundary persists after 1% perturbations");

    // keep the disk |z| <= R and symmetrize under conjugation
    std::vector<std::pair<Complex, int>> kept;
    for (auto& [z, m] : zf.found)
        if (std::abs(z) <= R) kept.emplace_back(z, m);

    TransformZeroData out;
    std::vector<char> usedz(kept.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (usedz[i]) continue;
        const double scale = std::max(1.0, std::abs(kept[i].first));
        if (std::abs(kept[i].first.imag()) <= 1e-8 * scale) {
            out.zeros.push_back({Complex(kept[i].first.real(), 0.0), kept[i].second});
            usedz[i] = 1;
            continue;
        }
        std::size_t partner = kept.size();
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            if (usedz[j] || kept[j].second != kept[i].second) continue;
            if (std::abs(std::conj(kept[j].first) - kept[i].first) <= 1e-8 * scale) {
                partner = j;
                break;
            }
        }
        if (partner < kept.size()) {
            const Complex canon = 0.5 * (kept[i].first + std::conj(kept[partner].first));
            out.zeros.push_back({canon, kept[i].second});
            out.zeros.push_back({std::conj(canon), kept[i].second});
            usedz[i] = usedz[partner] = 1;
        } else {
            // unpaired complex zero: keep it and its mirror (real kernel)
            out.zeros.push_back({kept[i].first, kept[i].second});
            out.zeros.push_back({std::conj(kept[i].first), kept[i].second});
            usedz[i] = 1;
        }
    }

    // origin multiplicity and leading constant from the exact moments
    // Phi^{(k)}(0) = int t^k phi
    const double total_abs = cumulative_abs(kernel, t_end, n);
    double fact = 1.0;
    for (int k = 0; k <= 4; ++k) {
        if (k >= 2) fact *= k;
        const double mk = moment(kernel, k, n);
        const double scale = total_abs * std::pow(std::max(1.0, t_end), k);
        if (std::abs(mk) > 1e-10 * scale || k == 4) {
            out.alpha_n = k;
            out.C_n = Complex(mk / fact, 0.0);
            break;
        }
    }
    return out;
}

MomentIdentity moment_identity_residual(const Kernel& kernel, double R_trunc,
                                        double zero_tol) {
    const double m0 = moment(kernel, 0, kernel.support_end());
    if (m0 == 0.0)
        throw std::domain_error("moment_identity_residual: Phi(0) = int phi = 0");
    const auto sp = support_params(kernel, kernel.support_end(), 1e-9);
    const auto zd = zeros_in_disk(kernel, kernel.support_end(), R_trunc, zero_tol);

    MomentIdentity mi;
    for (const auto& ze : zd.zeros)
        mi.lhs += static_cast<double>(ze.multiplicity) / ze.location;
    const double m1 = moment(kernel, 1, kernel.support_end());
    mi.rhs = Complex(0.5 * (sp.sigma + sp.mu) - m1 / m0, 0.0);
    mi.residual = std::abs(mi.lhs - mi.rhs);
    return mi;
}

ObstructionReport obstruction_conditions(const std::vector<TransformZeroData>& seq,
                                         const std::vector<double>& mu, double q,
                                         const std::vector<double>& R_grid,
                                         double tol_zero) {
    require(seq.size() == mu.size(), "obstruction_conditions: seq/mu length mismatch");
    require(!seq.empty(), "obstruction_conditions: empty family");
    require(q > 1.0 && q < 2.0, "obstruction_conditions: q must lie in (1,2)");
    require(!R_grid.empty(), "obstruction_conditions: empty R_grid");
    for (double m : mu) require(m > 0.0, "obstruction_conditions: mu_n must be positive");

    ObstructionReport rep;
    const std::size_t lo = seq.size() / 2;
    for (double R : R_grid) {
        double w1 = 0.0, w2 = 0.0, w3 = 0.0;
        for (std::size_t ni = 0; ni < seq.size(); ++ni) {
            ObstructionRow row;
            row.n_index = ni;
            row.R = R;
            Complex s2(0.0, 0.0);
            for (const auto& ze : seq[ni].zeros) {
                if (std::abs(ze.location) < R) continue;
                const Complex inv = 1.0 / ze.location;
                row.cond1 += ze.multiplicity * std::abs(inv.real());
                s2 += static_cast<double>(ze.multiplicity) * inv;
                row.cond3 += ze.multiplicity * std::pow(std::abs(ze.location), -q);
            }
            row.cond1 /= mu[ni];
            row.cond2 = std::abs(s2) / mu[ni];
            row.cond3 /= mu[ni];
            rep.rows.push_back(row);
            if (ni >= lo) {
                w1 = std::max(w1, row.cond1);
                w2 = std::max(w2, row.cond2);
                w3 = std::max(w3, row.cond3);
            }
        }
        rep.cond1_window.push_back(w1);
        rep.cond2_window.push_back(w2);
        rep.cond3_window.push_back(w3);
    }

    auto not_growing = [](const std::vector<double>& v) {
        return v.back() <= v.front() * 1.2 + 1e-12;
    };
    rep.cond1_bounded = not_growing(rep.cond1_window);
    rep.cond3_bounded = not_growing(rep.cond3_window);
    rep.cond2_to_zero = rep.cond2_window.back() <=
                        std::max(0.5 * rep.cond2_window.front(), tol_zero);
    rep.pattern_holds = rep.cond1_bounded && rep.cond2_to_zero && rep.cond3_bounded;
    return rep;
}

efun::FiniteOrderFunction to_finite_order(const TransformZeroData& data,
                                          double sigma_plus_mu_half) {
    Complex c1(sigma_plus_mu_half, 0.0);
    for (const auto& ze : data.zeros)
        c1 -= static_cast<double>(ze.multiplicity) / ze.location;
    return efun::FiniteOrderFunction(data.C_n, data.alpha_n, {c1}, 1, data.zeros);
}

} // namespace efgrowth::laplace
