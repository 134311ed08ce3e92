#include "efgrowth/potential.hpp"
#include "efgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace efgrowth::potential {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

PointCloud::PointCloud(std::vector<Complex> pts, std::string lbl)
    : label(std::move(lbl)) {
    require(!pts.empty(), "PointCloud: empty cloud");
    points.reserve(pts.size());
    for (const Complex& p : pts) {
        require(is_finite(p), "PointCloud: points must be finite");
        bool dup = false;
        for (const Complex& q : points) {
            if (std::abs(p - q) <= 1e-14) {
                dup = true;
                break;
            }
        }
        if (!dup) points.push_back(p);
    }
}

int default_leja_n(std::size_t cloud_size) {
    return static_cast<int>(std::min<std::size_t>(64, std::max<std::size_t>(2, cloud_size / 4)));
}

CapacityEstimate capacity_estimate(const PointCloud& cloud, int n) {
    require(n >= 2, "capacity_estimate: n must be >= 2");
    if (cloud.size() < 2)
        throw std::domain_error("capacity_estimate: degenerate cloud (one distinct point)");
    require(cloud.size() >= static_cast<std::size_t>(n),
            "capacity_estimate: cloud smaller than n");

    const auto& pts = cloud.points;
    const std::size_t N = pts.size();

    // First Leja point: maximal modulus relative to the cloud centroid
    // (plain max modulus would break translation invariance), ties broken
    // by smallest index.
    Complex centroid(0.0, 0.0);
    for (const Complex& p : pts) centroid += p;
    centroid /= static_cast<double>(N);
    std::size_t first = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (std::abs(pts[i] - centroid) > std::abs(pts[first] - centroid)) first = i;

    std::vector<double> acc(N, 0.0); // sum of log distances to chosen points
    std::vector<char> used(N, 0);
    std::vector<std::size_t> chosen{first};
    used[first] = 1;
    for (int step = 1; step < n; ++step) {
        const Complex& last = pts[chosen.back()];
        std::size_t best = N;
        for (std::size_t i = 0; i < N; ++i) {
            if (used[i]) continue;
            acc[i] += std::log(std::abs(pts[i] - last));
            if (best == N || acc[i] > acc[best]) best = i;
        }
        chosen.push_back(best);
        used[best] = 1;
    }

    double pair_log = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pair_log += std::log(std::abs(pts[chosen[i]] - pts[chosen[j]]));

    CapacityEstimate est;
    est.n_used = n;
    est.leja_points.reserve(n);
    for (auto i : chosen) est.leja_points.push_back(pts[i]);
    const double log_dn = 2.0 * pair_log / (static_cast<double>(n) * (n - 1));
    est.diameter = std::exp(log_dn);
    est.cap = std::exp(log_dn - std::log(static_cast<double>(n)) / (n - 1));
    return est;
}

BetaEstimate beta_exponent(const std::map<double, PointCloud>& family, int n) {
    require(family.size() >= 4, "beta_exponent: need >= 4 radii");
    BetaEstimate be;
    for (const auto& [R, cloud] : family) {
        require(R > 1.0, "beta_exponent: radii must exceed 1");
        if (cloud.size() < 2) {
            be.skipped_R.push_back(R);
            continue;
        }
        const int use_n = std::min<int>(n, static_cast<int>(cloud.size()));
        const auto est = capacity_estimate(cloud, use_n);
        be.rows.push_back({R, est.cap, std::log(est.cap) / std::log(R)});
    }
    require(be.rows.size() >= 2, "beta_exponent: fewer than 2 usable radii");

    be.ratio_max = -kInf;
    for (std::size_t i = be.rows.size() / 2; i < be.rows.size(); ++i)
        be.ratio_max = std::max(be.ratio_max, be.rows[i].log_ratio);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : be.rows) {
        const double x = std::log(r.R), y = std::log(r.cap);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double cnt = static_cast<double>(be.rows.size());
    be.beta = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    return be;
}

ThinnessReport wiener_partial_sums(const std::map<int, PointCloud>& family,
                                   int depth_max, int n) {
    require(depth_max >= 1, "wiener_partial_sums: depth_max >= 1");
    ThinnessReport rep;
    double cumulative = 0.0;
    std::vector<double> terms;
    for (int k = 1; k <= depth_max; ++k) {
        double term = 0.0;
        const auto it = family.find(k);
        if (it != family.end() && it->second.size() >= 2) {
            const double scale = std::ldexp(1.0, -k); // 2^{-k}
            std::vector<Complex> scaled;
            scaled.reserve(it->second.size());
            for (const Complex& p : it->second.points) scaled.push_back(p * scale);
            PointCloud unit_piece(std::move(scaled), it->second.label);
            const int use_n =
                n > 0 ? std::min<int>(n, static_cast<int>(unit_piece.size()))
                      : default_leja_n(unit_piece.size());
            const double cap_k = capacity_estimate(unit_piece, std::max(2, use_n)).cap;
            if (cap_k > 0.0) {
                const double denom = std::max(std::log(1.0 / cap_k), 1e-12);
                term = static_cast<double>(k) / denom;
            }
        }
        terms.push_back(term);
        cumulative += term;
        rep.partial_sums.push_back({k, term, cumulative});
    }

    // Trend verdicts only. Superlinear cumulative growth beyond depth 8:
    // log-log slope of the cumulative sums >= 1.3. Geometric term decay
    // (including trailing empty annuli): thin.
    const double tiny = 1e-12;
    bool tail_all_zero = depth_max >= 2;
    for (int k = depth_max / 2; k < depth_max; ++k)
        if (terms[k] > tiny) tail_all_zero = false;
    if (tail_all_zero) {
        rep.verdict = ThinnessVerdict::thin_trend;
        rep.note = "terms vanish over the trailing depths";
        return rep;
    }

    std::vector<double> nz;
    for (double t : terms)
        if (t > tiny) nz.push_back(t);
    bool geometric = nz.size() >= 3;
    for (std::size_t i = 0; i + 1 < nz.size() && geometric; ++i)
        geometric = nz[i + 1] <= 0.8 * nz[i];
    if (geometric) {
        rep.verdict = ThinnessVerdict::thin_trend;
        rep.note = "terms decay geometrically";
        return rep;
    }

    if (depth_max > 8) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (int k = 8; k <= depth_max; ++k) {
            const double c = rep.partial_sums[k - 1].cumulative;
            if (!(c > 0.0)) continue;
            const double x = std::log(static_cast<double>(k)), y = std::log(c);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++cnt;
        }
        if (cnt >= 3) {
            const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
            if (slope >= 1.3) {
                rep.verdict = ThinnessVerdict::nonthin_trend;
                rep.note = "cumulative sums grow superlinearly (log-log slope " +
                           std::to_string(slope) + ")";
                return rep;
            }
        }
    }
    rep.verdict = ThinnessVerdict::inconclusive;
    rep.note = "no clear trend at depth " + std::to_string(depth_max);
    return rep;
}

} // namespace efgrowth::potential
