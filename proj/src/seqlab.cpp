#include "efgrowth/seqlab.hpp"
#include "efgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace efgrowth::seqlab {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] < v[i + 1])) return false;
    return true;
}

// Pairwise (cascade) summation keeps the coefficient recursion stable.
Complex pairwise_sum(const std::vector<Complex>& terms, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 4) {
        Complex s(0.0, 0.0);
        for (std::size_t i = lo; i < hi; ++i) s += terms[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

} // namespace

SequenceSpec::SequenceSpec(std::vector<FiniteOrderFunction> fns, std::vector<double> kk,
                           std::vector<double> grid,
                           std::optional<std::vector<double>> witness)
    : functions(std::move(fns)), k(std::move(kk)), R_grid(std::move(grid)),
      R_witness(std::move(witness)) {
    require(functions.size() == k.size(), "SequenceSpec: functions and k lengths differ");
    require(!functions.empty(), "SequenceSpec: empty family");
    for (double kn : k) require(kn > 0.0 && std::isfinite(kn), "SequenceSpec: k_n must be positive");
    require(!R_grid.empty() && strictly_increasing(R_grid),
            "SequenceSpec: R_grid must be strictly increasing");
    for (double R : R_grid) require(R > 0.0, "SequenceSpec: radii must be positive");
    if (R_witness) {
        require(R_witness->size() == functions.size(),
                "SequenceSpec: R_witness length must match the family");
        require(strictly_increasing(*R_witness),
                "SequenceSpec: R_witness must be strictly increasing");
    }
}

GrowthStats ring_constants(const SequenceSpec& s, const growth::CircleQuadrature& q) {
    const auto [lo, hi] = trend::trailing_window(s.size());
    GrowthStats g;
    g.C0_est = -std::numeric_limits<double>::infinity();
    g.C0_star_est = std::numeric_limits<double>::infinity();
    for (std::size_t n = lo; n < hi; ++n) {
        const double v = std::exp(growth::log_mean(s.functions[n], 1.0, q) / s.k[n]);
        g.C0_est = std::max(g.C0_est, v);
        g.C0_star_est = std::min(g.C0_star_est, v);
    }
    for (double R : s.R_grid) {
        double m = 0.0;
        for (std::size_t n = lo; n < hi; ++n)
            m = std::max(m, static_cast<double>(efun::zero_count(s.functions[n], R)) / s.k[n]);
        g.eta_scaled[R] = m;
    }
    g.note = "limsup/liminf estimated on trailing window n=" + std::to_string(lo + 1) +
             ".." + std::to_string(hi) + " of N=" + std::to_string(s.size());
    return g;
}

double tail_powersum_abs(const SequenceSpec& s, std::size_t n, double R, int m) {
    require(n < s.size(), "tail_powersum_abs: index out of range");
    require(m >= 1, "tail_powersum_abs: m must be >= 1");
    require(R > 0.0, "tail_powersum_abs: R must be positive");
    double acc = 0.0;
    for (const auto& ze : s.functions[n].zeros()) {
        const double r = std::abs(ze.location);
        if (r >= R) acc += ze.multiplicity * std::pow(r, -m);
    }
    return acc / s.k[n];
}

SignedTail tail_powersum_signed(const SequenceSpec& s, std::size_t n, double R, int l) {
    require(n < s.size(), "tail_powersum_signed: index out of range");
    require(l >= 1, "tail_powersum_signed: l must be >= 1");
    require(R > 0.0, "tail_powersum_signed: R must be positive");
    Complex acc(0.0, 0.0);
    for (const auto& ze : s.functions[n].zeros()) {
        if (std::abs(ze.location) >= R)
            acc += static_cast<double>(ze.multiplicity) /
                   std::pow(ze.location, static_cast<double>(l));
    }
    SignedTail st;
    st.sum = acc / s.k[n];
    st.magnitude = std::abs(st.sum);
    st.beta = -st.sum / static_cast<double>(l);
    st.beta_arg = st.magnitude > 0.0 ? std::arg(st.beta) : 0.0;
    return st;
}

TailSums collect_tail_sums(const SequenceSpec& s, int m_max) {
    require(m_max >= 1, "collect_tail_sums: m_max >= 1");
    TailSums ts;
    for (std::size_t n = 0; n < s.size(); ++n) {
        for (double R : s.R_grid) {
            for (int m = 1; m <= m_max; ++m) {
                ts.S[{n, R, m}] = tail_powersum_abs(s, n, R, m);
                ts.T[{n, R, m}] = tail_powersum_signed(s, n, R, m).magnitude;
            }
        }
        const double Rn = s.R_witness ? (*s.R_witness)[n] : s.R_grid.back();
        for (int l = 1; l <= m_max; ++l) {
            const auto st = tail_powersum_signed(s, n, Rn, l);
            ts.beta[{n, l}] = {std::abs(st.beta), st.beta_arg};
        }
    }
    return ts;
}

DichotomyVerdict dichotomy_classify(const SequenceSpec& s, int m_max,
                                    const DichotomyOptions& opts) {
    require(m_max >= 1, "dichotomy_classify: m_max >= 1");
    require(s.R_grid.size() >= 4, "dichotomy_classify: R_grid needs >= 4 points");
    require(s.size() >= 8, "dichotomy_classify: family needs N >= 8");

    const auto [lo, hi] = trend::trailing_window(s.size());
    std::vector<double> idx(hi - lo);
    for (std::size_t n = lo; n < hi; ++n) idx[n - lo] = static_cast<double>(n + 1);

    DichotomyVerdict verdict;
    verdict.caveat = "finite-sample verdict; n-window " + std::to_string(lo + 1) + ".." +
                     std::to_string(hi) + " extrapolated to n=" +
                     std::to_string(static_cast<long long>(opts.horizon)) +
                     ", R-trend on the grid's trailing half";

    const std::size_t nR = s.R_grid.size();
    std::vector<std::vector<trend::WindowExtrap>> ext(m_max + 1,
                                                      std::vector<trend::WindowExtrap>(nR));
    for (int m = 1; m <= m_max; ++m) {
        for (std::size_t ri = 0; ri < nR; ++ri) {
            std::vector<double> vals(hi - lo);
            for (std::size_t n = lo; n < hi; ++n)
                vals[n - lo] = tail_powersum_abs(s, n, s.R_grid[ri], m);
            ext[m][ri] = trend::extrapolate_window(idx, vals, opts.horizon);
            verdict.evidence.push_back({m, s.R_grid[ri], ext[m][ri].extrapolated,
                                        ext[m][ri].window_min, ext[m][ri].window_max,
                                        ext[m][ri].growing});
        }
    }

    // Alternative two: smallest m whose extrapolations sit below tol_zero
    // at the largest radii and do not rebound across the grid's tail.
    auto two_at = [&](int m) {
        if (!(ext[m][nR - 1].extrapolated <= opts.tol_zero)) return false;
        for (std::size_t ri = nR / 2; ri + 1 < nR; ++ri)
            if (ext[m][ri + 1].extrapolated > ext[m][ri].extrapolated * 1.1 + 1e-12)
                return false;
        return true;
    };
    for (int m = 1; m <= m_max; ++m) {
        if (two_at(m)) {
            verdict.alternative = Alternative::two;
            verdict.witness_m = m;
            break;
        }
    }

    if (verdict.alternative == Alternative::two) {
        const int witness = *verdict.witness_m;
        verdict.theo56_vacuous = witness <= 1;
        verdict.theo56_observed = true;
        for (int l = 1; l < witness; ++l) {
            std::vector<double> vals(hi - lo);
            for (std::size_t n = lo; n < hi; ++n)
                vals[n - lo] = tail_powersum_signed(s, n, s.R_grid.back(), l).magnitude;
            const auto e = trend::extrapolate_window(idx, vals, opts.horizon);
            if (!(e.extrapolated <= opts.tol_zero)) verdict.theo56_observed = false;
        }
        return verdict;
    }

    bool all_one = true;
    for (int m = 1; m <= m_max && all_one; ++m) {
        const auto& e = ext[m][nR - 1];
        all_one = e.extrapolated >= opts.tol_inf || (e.growing && !e.all_zero);
    }
    verdict.alternative = all_one ? Alternative::one : Alternative::inconclusive;
    return verdict;
}

RegionParams::RegionParams(double b, double g, double t) : beta(b), gamma(g), tau(t) {
    require(beta > 0.0 && std::isfinite(beta), "RegionParams: beta must be positive");
    require(gamma >= 0.0 && std::isfinite(gamma), "RegionParams: gamma must be >= 0");
    require(tau >= 0.0 && std::isfinite(tau), "RegionParams: tau must be >= 0");
}

GrowthBoundReport growth_bound_check(const SequenceSpec& s, const RegionParams& params,
                                     double C0, const std::string& hypothesis_set) {
    require(C0 >= 0.0, "growth_bound_check: C0 must be >= 0");
    const auto [lo, hi] = trend::trailing_window(s.size());
    GrowthBoundReport rep;
    rep.hypothesis_set = hypothesis_set;
    rep.note = "empirical = max over n=" + std::to_string(lo + 1) + ".." +
               std::to_string(hi) + " of ||P_n||_R^{1/k_n}";
    for (double R : s.R_grid) {
        GrowthBoundRow row;
        row.R = R;
        row.bound = C0 * std::pow(1.0 + R, params.gamma / params.beta);
        double emp = 0.0;
        for (std::size_t n = lo; n < hi; ++n)
            emp = std::max(emp, std::exp(growth::log_sup_norm(s.functions[n], R) / s.k[n]));
        row.empirical = emp;
        row.margin = row.bound - row.empirical;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

// Taylor coefficients of the plain product a prod (1-z/z_j)^{mult_j},
// truncated to `len` terms.
std::vector<Complex> synthesize_product_coeffs(const FiniteOrderFunction& f,
                                               std::size_t len) {
    std::vector<Complex> c(len, Complex(0.0, 0.0));
    c[0] = f.leading();
    std::size_t deg = 0;
    for (const auto& ze : f.zeros()) {
        const Complex w = -1.0 / ze.location;
        for (int rep = 0; rep < ze.multiplicity; ++rep) {
            deg = std::min(deg + 1, len - 1);
            for (std::size_t i = deg; i >= 1; --i) c[i] += w * c[i - 1];
        }
    }
    return c;
}

PowerSums powersums_recursion(const std::vector<Complex>& c, int l_max) {
    PowerSums ps;
    const Complex c0 = c[0];
    if (std::abs(c0) == 0.0)
        throw std::domain_error("powersums_from_logderiv: f(0) = 0");
    ps.precision_warning = std::abs(c0) < 1e-12;
    // f'/f = (log f)'; with d_l = -s_l the recursion reads
    //   k c_k = sum_{j=1..k} d_j c_{k-j}.
    std::vector<Complex> d(l_max + 1, Complex(0.0, 0.0));
    std::vector<Complex> terms;
    for (int kk = 1; kk <= l_max; ++kk) {
        terms.assign(static_cast<std::size_t>(kk - 1), Complex(0.0, 0.0));
        for (int j = 1; j < kk; ++j) terms[j - 1] = d[j] * c[kk - j];
        const Complex conv =
            terms.empty() ? Complex(0.0, 0.0) : pairwise_sum(terms, 0, terms.size());
        d[kk] = (static_cast<double>(kk) * c[kk] - conv) / c0;
        ps.s.push_back(-d[kk]);
    }
    return ps;
}

} // namespace

PowerSums powersums_from_logderiv(const FiniteOrderFunction& f, int l_max) {
    require(l_max >= 1, "powersums_from_logderiv: l_max >= 1");
    if (f.is_zero() || f.origin_mult() >= 1)
        throw std::domain_error("powersums_from_logderiv: requires f(0) != 0 (m = 0)");
    const std::size_t len = static_cast<std::size_t>(4 * l_max) + 1;
    return powersums_recursion(synthesize_product_coeffs(f, len), l_max);
}

PowerSums powersums_from_logderiv(const efun::CoefficientWindow& w, int l_max) {
    require(l_max >= 1, "powersums_from_logderiv: l_max >= 1");
    require(static_cast<std::size_t>(l_max) < w.coeffs.size(),
            "powersums_from_logderiv: window shorter than l_max");
    return powersums_recursion(w.coeffs, l_max);
}

FiniteOrderFunction finite_order_reduce(const FiniteOrderFunction& f, double R_cut) {
    require(R_cut > 0.0, "finite_order_reduce: R_cut must be positive");
    if (f.is_zero()) return f;
    const int p = f.genus();
    std::vector<efun::ZeroEntry> kept;
    std::vector<Complex> expoly = f.expoly();
    if (expoly.size() < static_cast<std::size_t>(p))
        expoly.resize(static_cast<std::size_t>(p), Complex(0.0, 0.0));
    for (const auto& ze : f.zeros()) {
        if (std::abs(ze.location) > R_cut) continue;
        kept.push_back(ze);
        Complex zl(1.0, 0.0);
        for (int l = 1; l <= p; ++l) {
            zl /= ze.location;
            expoly[l - 1] += static_cast<double>(ze.multiplicity) * zl / static_cast<double>(l);
        }
    }
    while (!expoly.empty() && std::abs(expoly.back()) == 0.0) expoly.pop_back();
    return FiniteOrderFunction(f.leading(), f.origin_mult(), std::move(expoly), 0,
                               std::move(kept));
}

LineGrowth line_growth_sign(const std::vector<Complex>& expoly, double theta,
                            double rel_tol) {
    LineGrowth out;
    std::size_t top = expoly.size();
    while (top > 0 && std::abs(expoly[top - 1]) == 0.0) --top;
    if (top == 0) {
        out.zero_polynomial = true;
        return out; // bounded on both rays, flagged
    }
    auto ray = [&](double ang) {
        for (std::size_t l = top; l >= 1; --l) {
            const Complex c = expoly[l - 1];
            if (std::abs(c) == 0.0) continue;
            const double re = (c * std::polar(1.0, ang * static_cast<double>(l))).real();
            if (re > rel_tol * std::abs(c)) return RaySign::plus_infinity;
            if (re < -rel_tol * std::abs(c)) return RaySign::minus_infinity;
            // leading real part vanishes on this ray; recurse to the next
        }
        return RaySign::bounded;
    };
    out.positive_ray = ray(theta);
    out.negative_ray = ray(theta + std::numbers::pi);
    return out;
}

HypothesisReport hypothesis_report(const SequenceSpec& s) {
    const auto [lo, hi] = trend::trailing_window(s.size());
    std::vector<double> idx(hi - lo);
    for (std::size_t n = lo; n < hi; ++n) idx[n - lo] = static_cast<double>(n + 1);

    HypothesisReport rep;
    for (double R : s.R_grid) {
        std::vector<double> vals(hi - lo);
        for (std::size_t n = lo; n < hi; ++n)
            vals[n - lo] = tail_powersum_signed(s, n, R, 1).magnitude;
        rep.theo1_1_by_R.emplace_back(R, trend::extrapolate_window(idx, vals).extrapolated);
    }
    // theo1.1 asks the R-limit of the n-limsup to vanish: require the
    // per-R extrapolations to shrink toward the largest radius.
    rep.theo1_1_trend_to_zero = true;
    const auto& rows = rep.theo1_1_by_R;
    for (std::size_t i = rows.size() / 2; i + 1 < rows.size(); ++i)
        if (rows[i + 1].second > rows[i].second * 1.1 + 1e-12)
            rep.theo1_1_trend_to_zero = false;
    if (!(rows.back().second <= 1e-3)) rep.theo1_1_trend_to_zero = false;

    if (s.R_witness) {
        double sup = 0.0;
        for (std::size_t n = lo; n < hi; ++n)
            sup = std::max(sup, static_cast<double>(efun::zero_count(
                                    s.functions[n], (*s.R_witness)[n])) /
                                    s.k[n]);
        rep.theo1_2_window_sup = sup;
    }

    rep.kn_ge_dstar = true;
    for (std::size_t n = 0; n < s.size(); ++n) {
        rep.dstar.push_back(efun::hadamard_degree(s.functions[n]));
        if (s.k[n] < rep.dstar.back() * (1.0 - 1e-12) - 1e-12) rep.kn_ge_dstar = false;
    }
    return rep;
}

} // namespace efgrowth::seqlab
