#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efgrowth/potential.hpp"
#include "helpers.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

using namespace efgrowth;
using potential::PointCloud;

namespace {

std::vector<Complex> circle_points(int n, double r = 1.0, Complex center = {0, 0}) {
    std::vector<Complex> pts;
    for (int k = 0; k < n; ++k)
        pts.push_back(center + std::polar(r, 2.0 * std::numbers::pi * k / n));
    return pts;
}

std::vector<Complex> segment_points(int n, double a = -1.0, double b = 1.0) {
    std::vector<Complex> pts;
    for (int k = 0; k < n; ++k)
        pts.emplace_back(a + (b - a) * k / (n - 1.0), 0.0);
    return pts;
}

// Brute-force Fekete oracle: exhaustive max of the pairwise product over
// all n-subsets of the cloud (test-only; independent of the Leja path).
double fekete_dn(const PointCloud& cloud, int n) {
    const auto& p = cloud.points;
    std::vector<int> pick(n);
    double best = -1e308;
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    s += std::log(std::abs(p[pick[i]] - p[pick[j]]));
            best = std::max(best, s);
            return;
        }
        for (int i = start; i <= static_cast<int>(p.size()) - (n - depth); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return std::exp(2.0 * best / (static_cast<double>(n) * (n - 1)));
}

} // namespace

TEST_CASE("cloud dedup and degenerate input") {
    PointCloud c({{1.0, 0.0}, {1.0, 0.0}, {1.0, 1e-16}}, "dup");
    CHECK(c.size() == 1);
    CHECK_THROWS_AS(potential::capacity_estimate(c, 2), std::domain_error);
    CHECK_THROWS(PointCloud({}, "empty"));
}

TEST_CASE("capacity golden values: circle and segment") {
    // transfinite diameter of the unit circle is 1
    PointCloud circ(circle_points(512), "unit circle");
    const auto est_c = potential::capacity_estimate(circ, 64);
    CHECK(std::abs(est_c.cap - 1.0) <= 0.02);
    // the raw pairwise mean carries the n^{1/(n-1)} excess
    CHECK(est_c.diameter == doctest::Approx(std::pow(64.0, 1.0 / 63.0)).epsilon(2e-3));

    // transfinite diameter of [-1,1] is length/4 = 1/2
    PointCloud seg(segment_points(512), "segment");
    const auto est_s = potential::capacity_estimate(seg, 64);
    CHECK(std::abs(est_s.cap - 0.5) <= 0.5 * 0.05);
}

TEST_CASE("capacity scaling covariance and translation invariance") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> pts;
        for (int i = 0; i < 80; ++i) pts.push_back(testutil::random_in_annulus(rng, 0.1, 2.0));
        PointCloud base(pts, "base");
        const int n = 20;
        const double cap0 = potential::capacity_estimate(base, n).cap;

        const Complex c = testutil::random_in_annulus(rng, 0.5, 3.0);
        std::vector<Complex> scaled, shifted;
        for (const auto& p : pts) scaled.push_back(c * p);
        const Complex w = testutil::random_in_annulus(rng, 0.5, 5.0);
        for (const auto& p : pts) shifted.push_back(p + w);

        const double cap_s = potential::capacity_estimate(PointCloud(scaled, "s"), n).cap;
        CHECK(std::abs(cap_s - std::abs(c) * cap0) <= 1e-10 * std::abs(c) * cap0);
        const double cap_t = potential::capacity_estimate(PointCloud(shifted, "t"), n).cap;
        CHECK(std::abs(cap_t - cap0) <= 1e-10 * std::max(1.0, cap0));
    }
}

TEST_CASE("monotonicity under cloud inclusion") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> big;
        for (int i = 0; i < 120; ++i) big.push_back(testutil::random_in_annulus(rng, 0.1, 3.0));
        std::vector<Complex> small(big.begin(), big.begin() + 60);
        const int n = 16;
        const double capA = potential::capacity_estimate(PointCloud(small, "A"), n).cap;
        const double capB = potential::capacity_estimate(PointCloud(big, "B"), n).cap;
        CHECK(capA <= capB * 1.05); // greedy suboptimality tolerance
    }
}

TEST_CASE("brute-force Fekete agreement at small n") {
    PointCloud circ(circle_points(24), "circle24");
    for (int n : {4, 6}) {
        const double leja = potential::capacity_estimate(circ, n).diameter;
        const double fek = fekete_dn(circ, n);
        CHECK(leja >= fek * 0.95);
        CHECK(leja <= fek * 1.0 + 1e-12); // Fekete maximizes the product
    }
    PointCloud seg(segment_points(20), "segment20");
    for (int n : {5, 8}) {
        const double leja = potential::capacity_estimate(seg, n).diameter;
        const double fek = fekete_dn(seg, n);
        CHECK(leja >= fek * 0.95);
        CHECK(leja <= fek + 1e-12);
    }
}

TEST_CASE("beta exponent: real-axis family vs fixed circle") {
    std::map<double, PointCloud> axis;
    for (double R : {8.0, 16.0, 32.0, 64.0})
        axis.emplace(R, PointCloud(segment_points(512, -R, R), "axis"));
    const auto be = potential::beta_exponent(axis, 64);
    CHECK(std::abs(be.beta - 1.0) <= 0.1);
    // ratio carries the -log(2)/log(R) offset at desk radii
    CHECK(be.ratio_max < 0.9);
    CHECK(be.ratio_max > 0.6);

    std::map<double, PointCloud> fixed;
    for (double R : {8.0, 16.0, 32.0, 64.0})
        fixed.emplace(R, PointCloud(circle_points(256, 5.0), "circle5"));
    const auto bf = potential::beta_exponent(fixed, 64);
    CHECK(std::abs(bf.beta - 0.0) <= 0.05);
}

TEST_CASE("beta exponent skips empty radii") {
    std::map<double, PointCloud> fam;
    fam.emplace(2.0, PointCloud({{1.0, 0.0}}, "single")); // degenerate after dedup
    for (double R : {4.0, 8.0, 16.0, 32.0})
        fam.emplace(R, PointCloud(segment_points(256, -R, R), "axis"));
    const auto be = potential::beta_exponent(fam, 48);
    REQUIRE(be.skipped_R.size() == 1);
    CHECK(be.skipped_R[0] == 2.0);
    CHECK(std::abs(be.beta - 1.0) <= 0.1);
}

TEST_CASE("wiener probe: ray vs bounded vs isolated points") {
    // ray [0, inf): the piece in {2^k <= |z| <= 2^{k+1}} scales to [1, 2]
    std::map<int, PointCloud> ray;
    const int depth = 14;
    for (int k = 1; k <= depth; ++k) {
        std::vector<Complex> pts;
        const double lo = std::ldexp(1.0, k), hi = std::ldexp(2.0, k);
        for (int i = 0; i < 128; ++i)
            pts.emplace_back(lo + (hi - lo) * i / 127.0, 0.0);
        ray.emplace(k, PointCloud(pts, "ray"));
    }
    const auto rep = potential::wiener_partial_sums(ray, depth);
    CHECK(rep.verdict == potential::ThinnessVerdict::nonthin_trend);
    // unit-length scaled pieces: cap 1/4, terms ~ k/log 4
    CHECK(rep.partial_sums[9].term ==
          doctest::Approx(10.0 / std::log(4.0)).epsilon(0.1));
    double prev = 0.0;
    for (const auto& row : rep.partial_sums) {
        CHECK(row.cumulative >= prev); // nondecreasing
        CHECK(row.term >= 0.0);
        prev = row.cumulative;
    }

    // bounded set: annuli empty beyond depth 3
    std::map<int, PointCloud> bounded;
    for (int k = 1; k <= 3; ++k)
        bounded.emplace(k, ray.at(k));
    const auto repb = potential::wiener_partial_sums(bounded, depth);
    CHECK(repb.verdict == potential::ThinnessVerdict::thin_trend);

    // isolated points: singleton per annulus -> cap 0, terms 0
    std::map<int, PointCloud> iso;
    for (int k = 1; k <= depth; ++k)
        iso.emplace(k, PointCloud({{std::ldexp(1.5, k), 0.0}}, "pt"));
    const auto repi = potential::wiener_partial_sums(iso, depth);
    CHECK(repi.verdict == potential::ThinnessVerdict::thin_trend);
    for (const auto& row : repi.partial_sums) CHECK(row.term == 0.0);
}
