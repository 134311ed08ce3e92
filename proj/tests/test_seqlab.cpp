#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efgrowth/seqlab.hpp"
#include "helpers.hpp"

#include <cmath>
#include <random>

using namespace efgrowth;
using efun::FiniteOrderFunction;
using seqlab::SequenceSpec;
using testutil::random_product;

namespace {

// P_n(z) = (1 - z/n)^n with k_n = n (alternative-two family)
SequenceSpec family_two(int N, std::vector<double> grid) {
    std::vector<FiniteOrderFunction> fns;
    std::vector<double> k;
    for (int n = 1; n <= N; ++n) {
        fns.push_back(FiniteOrderFunction::product(
            {1.0, 0.0}, {{{static_cast<double>(n), 0.0}, n}}));
        k.push_back(n);
    }
    return SequenceSpec(std::move(fns), std::move(k), std::move(grid));
}

// P_n(z) = (1 - z)^{n^2} with k_n = n (alternative-one family)
SequenceSpec family_one(int N, std::vector<double> grid) {
    std::vector<FiniteOrderFunction> fns;
    std::vector<double> k;
    for (int n = 1; n <= N; ++n) {
        fns.push_back(FiniteOrderFunction::product({1.0, 0.0}, {{{1.0, 0.0}, n * n}}));
        k.push_back(n);
    }
    return SequenceSpec(std::move(fns), std::move(k), std::move(grid));
}

SequenceSpec constants_family(int N, std::vector<double> values,
                              std::vector<double> grid) {
    std::vector<FiniteOrderFunction> fns;
    std::vector<double> k;
    for (int n = 1; n <= N; ++n) {
        fns.push_back(FiniteOrderFunction::constant({values[n - 1], 0.0}));
        k.push_back(n);
    }
    return SequenceSpec(std::move(fns), std::move(k), std::move(grid));
}

} // namespace

TEST_CASE("ring constants of designed families") {
    growth::CircleQuadrature q(512);

    // (1-z/n)^n: all zeros outside the unit disk, Jensen mean 0, C -> 1
    const auto s = family_two(50, {1, 2, 4, 8});
    const auto g = ring_constants(s, q);
    CHECK(std::abs(g.C0_est - 1.0) <= 0.05);
    CHECK(std::abs(g.C0_star_est - 1.0) <= 0.05);
    CHECK(g.C0_star_est <= g.C0_est);

    // constants 1
    const auto s1 = constants_family(10, std::vector<double>(10, 1.0), {1, 2, 4, 8});
    const auto g1 = ring_constants(s1, q);
    CHECK(g1.C0_est == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g1.C0_star_est == doctest::Approx(1.0).epsilon(1e-12));

    // constants 2^{-k_n}: C(P_n,1)^{1/k_n} = 1/2
    std::vector<double> vals;
    for (int n = 1; n <= 10; ++n) vals.push_back(std::pow(2.0, -n));
    const auto s2 = constants_family(10, vals, {1, 2, 4, 8});
    const auto g2 = ring_constants(s2, q);
    CHECK(g2.C0_est == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(g2.C0_star_est == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("eta scaled by k_n") {
    growth::CircleQuadrature q(512);
    const auto s = family_one(10, {0.5, 1, 2, 4});
    const auto g = ring_constants(s, q);
    // eta(P_n, R)/k_n = n^2/n = n, window max at n = 10
    CHECK(g.eta_scaled.at(1.0) == doctest::Approx(10.0));
    CHECK(g.eta_scaled.at(0.5) == doctest::Approx(0.0));
}

TEST_CASE("tail power sums, absolute and signed") {
    const auto s = family_two(10, {1, 2, 4, 8});
    // (1/k_n) sum over |z| >= R of mult/|z|^m = n * n^{-m} / n = n^{-m}
    CHECK(seqlab::tail_powersum_abs(s, 9, 1.0, 1) == doctest::Approx(0.1));
    CHECK(seqlab::tail_powersum_abs(s, 9, 1.0, 2) == doctest::Approx(0.01));

    // no zeros -> 0
    const auto c = constants_family(8, std::vector<double>(8, 1.0), {1, 2, 4, 8});
    CHECK(seqlab::tail_powersum_abs(c, 3, 1.0, 1) == 0.0);

    // symmetric pair cancels at l = 1
    const auto sym = SequenceSpec(
        {FiniteOrderFunction::product({1.0, 0.0},
                                      {{{2.0, 0.0}, 1}, {{-2.0, 0.0}, 1}})},
        {1.0}, {1.0});
    CHECK(seqlab::tail_powersum_signed(sym, 0, 1.0, 1).magnitude ==
          doctest::Approx(0.0));

    // single zero at 2, l = 2 -> 1/4
    const auto one = SequenceSpec(
        {FiniteOrderFunction::product({1.0, 0.0}, {{{2.0, 0.0}, 1}})}, {1.0}, {1.0});
    CHECK(seqlab::tail_powersum_signed(one, 0, 1.0, 2).magnitude ==
          doctest::Approx(0.25));

    // conjugate pair at +-2i, l = 2: 1/(2i)^2 + 1/(-2i)^2 = -1/2
    const auto pair_im = SequenceSpec(
        {FiniteOrderFunction::product({1.0, 0.0},
                                      {{{0.0, 2.0}, 1}, {{0.0, -2.0}, 1}})},
        {1.0}, {1.0});
    const auto st = seqlab::tail_powersum_signed(pair_im, 0, 1.0, 2);
    CHECK(st.magnitude == doctest::Approx(0.5));
    CHECK(st.sum.real() == doctest::Approx(-0.5));
}

TEST_CASE("tail sum collection invariants: T <= S, monotone in R and m") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<FiniteOrderFunction> fns;
        std::vector<double> k;
        for (int n = 1; n <= 8; ++n) {
            fns.push_back(random_product(rng, 10, 0.4, 8.0));
            k.push_back(n);
        }
        const SequenceSpec s(std::move(fns), std::move(k), {1.0, 2.0, 4.0, 8.0});
        const auto ts = seqlab::collect_tail_sums(s, 4);
        for (const auto& [key, Tval] : ts.T) {
            CHECK(Tval <= ts.S.at(key) + 1e-12); // triangle inequality
        }
        for (std::size_t n = 0; n < s.size(); ++n) {
            for (int m = 1; m <= 4; ++m)
                for (std::size_t ri = 0; ri + 1 < s.R_grid.size(); ++ri)
                    CHECK(ts.S.at({n, s.R_grid[ri + 1], m}) <=
                          ts.S.at({n, s.R_grid[ri], m}) + 1e-12);
            for (double R : s.R_grid) {
                if (R < 1.0) continue;
                for (int m = 1; m < 4; ++m)
                    CHECK(ts.S.at({n, R, m + 1}) <= ts.S.at({n, R, m}) + 1e-12);
            }
        }
    }
}

TEST_CASE("dichotomy classifier separates the designed families") {
    const auto two = seqlab::dichotomy_classify(family_two(50, {1, 2, 4, 8}), 3);
    CHECK(two.alternative == seqlab::Alternative::two);
    REQUIRE(two.witness_m.has_value());
    CHECK(*two.witness_m == 1);

    const auto one = seqlab::dichotomy_classify(family_one(50, {0.25, 0.5, 0.75, 1.0}), 3);
    CHECK(one.alternative == seqlab::Alternative::one);
    CHECK(!one.witness_m.has_value());

    const auto zf = seqlab::dichotomy_classify(
        constants_family(50, std::vector<double>(50, 1.0), {1, 2, 4, 8}), 3);
    CHECK(zf.alternative == seqlab::Alternative::two);
    REQUIRE(zf.witness_m.has_value());
    CHECK(*zf.witness_m == 1);
    for (const auto& row : zf.evidence) CHECK(row.extrapolated == 0.0);
}

TEST_CASE("growth bound check") {
    growth::CircleQuadrature q(256);
    // gamma = 0: bound constant C0
    const auto c = constants_family(8, std::vector<double>(8, 1.0), {1, 2, 4, 8});
    const auto rep0 = seqlab::growth_bound_check(c, seqlab::RegionParams(2.0, 0.0), 0.5);
    for (const auto& row : rep0.rows) CHECK(row.bound == doctest::Approx(0.5));

    // C0 = 0.5, gamma = beta, R = 3 -> bound 2
    const auto rep1 = seqlab::growth_bound_check(
        constants_family(8, std::vector<double>(8, 1.0), {3.0, 4.0, 5.0, 6.0}),
        seqlab::RegionParams(1.0, 1.0), 0.5);
    CHECK(rep1.rows[0].bound == doctest::Approx(2.0));

    // P_n = z^n, k_n = n: ||P_n||_R^{1/n} = R <= (1+R)
    std::vector<FiniteOrderFunction> fns;
    std::vector<double> kk;
    for (int n = 1; n <= 10; ++n) {
        fns.push_back(FiniteOrderFunction::product({1.0, 0.0}, {}, n));
        kk.push_back(n);
    }
    const SequenceSpec zn(std::move(fns), std::move(kk), {1, 2, 4, 8});
    const auto rep2 = seqlab::growth_bound_check(zn, seqlab::RegionParams(1.0, 1.0), 1.0);
    for (const auto& row : rep2.rows) {
        CHECK(row.empirical == doctest::Approx(row.R).epsilon(1e-9));
        CHECK(row.margin >= 1.0 - 1e-9); // (1+R) - R
    }
}

TEST_CASE("power sums from the log-derivative recursion") {
    // P = (1-z)(1-z/2): s_1 = 3/2, s_2 = 5/4
    const auto p = FiniteOrderFunction::product({1.0, 0.0},
                                                {{{1.0, 0.0}, 1}, {{2.0, 0.0}, 1}});
    const auto ps = seqlab::powersums_from_logderiv(p, 4);
    CHECK(ps.s[0].real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(ps.s[1].real() == doctest::Approx(1.25).epsilon(1e-12));

    // P = 1-z: s_l = 1 for all l
    const auto q1 = FiniteOrderFunction::product({1.0, 0.0}, {{{1.0, 0.0}, 1}});
    for (const auto& sl : seqlab::powersums_from_logderiv(q1, 6).s)
        CHECK(std::abs(sl - Complex(1.0, 0.0)) < 1e-12);

    // zeros +-2i: s_1 = 0, s_2 = -1/2
    const auto q2 = FiniteOrderFunction::product({1.0, 0.0},
                                                 {{{0.0, 2.0}, 1}, {{0.0, -2.0}, 1}});
    const auto ps2 = seqlab::powersums_from_logderiv(q2, 2);
    CHECK(std::abs(ps2.s[0]) < 1e-14);
    CHECK(ps2.s[1].real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("power sums agree with direct summation on random products") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_product(rng, 30, 0.2, 10.0);
        const auto rec = seqlab::powersums_from_logderiv(f, 8);
        const auto direct = testutil::direct_power_sums(f, 8);
        for (int l = 0; l < 8; ++l) {
            const double scale = std::max(1.0, std::abs(direct[l]));
            CHECK(std::abs(rec.s[l] - direct[l]) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("power sums from an explicit coefficient window") {
    // coefficients of (1-z)(1-z/2) = 1 - 1.5 z + 0.5 z^2
    efun::CoefficientWindow w({{1.0, 0.0}, {-1.5, 0.0}, {0.5, 0.0}, {0.0, 0.0}});
    const auto ps = seqlab::powersums_from_logderiv(w, 3);
    CHECK(ps.s[0].real() == doctest::Approx(1.5));
    CHECK(ps.s[1].real() == doctest::Approx(1.25));
    CHECK(ps.s[2].real() == doctest::Approx(1.0 + 0.125));
}

TEST_CASE("power sums reject an origin zero") {
    const auto f = FiniteOrderFunction::product({1.0, 0.0}, {{{1.0, 0.0}, 1}}, 1);
    CHECK_THROWS_AS(seqlab::powersums_from_logderiv(f, 2), std::domain_error);
}

TEST_CASE("finite order reduction") {
    // genus-0 input is a plain truncation (identity when R_cut covers all)
    const auto f0 = FiniteOrderFunction::product({2.0, 0.0},
                                                 {{{1.0, 0.0}, 1}, {{3.0, 0.0}, 2}});
    const auto q0 = seqlab::finite_order_reduce(f0, 10.0);
    CHECK(q0.zeros().size() == 2);
    CHECK(q0.expoly().empty());
    CHECK(q0.genus() == 0);

    // f = G(z,1) = (1-z)e^z: absorbed exponent z/1
    const auto g1 = efun::FiniteOrderFunction({1.0, 0.0}, 0, {}, 1, {{{1.0, 0.0}, 1}});
    const auto q1 = seqlab::finite_order_reduce(g1, 2.0);
    REQUIRE(q1.expoly().size() == 1);
    CHECK(std::abs(q1.expoly()[0] - Complex(1.0, 0.0)) < 1e-15);
    CHECK(q1.genus() == 0);
    REQUIRE(q1.zeros().size() == 1);

    // genus-1 with a dropped tail zero
    const auto g2 = efun::FiniteOrderFunction({1.0, 0.0}, 0, {}, 1,
                                              {{{1.0, 0.0}, 1}, {{10.0, 0.0}, 1}});
    const auto q2 = seqlab::finite_order_reduce(g2, 5.0);
    REQUIRE(q2.zeros().size() == 1);
    REQUIRE(q2.expoly().size() == 1);
    CHECK(std::abs(q2.expoly()[0] - Complex(1.0, 0.0)) < 1e-15); // z/1 only
}

TEST_CASE("reduction matches the original up to the dropped tail factor") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        const int genus = static_cast<int>(rng() % 3);
        std::vector<efun::ZeroEntry> zeros;
        const int nz = 2 + static_cast<int>(rng() % 8);
        for (int i = 0; i < nz; ++i)
            zeros.push_back({testutil::random_in_annulus(rng, 0.5, 9.0),
                             1 + static_cast<int>(rng() % 2)});
        const efun::FiniteOrderFunction f({1.2, 0.3}, static_cast<int>(rng() % 2), {},
                                          genus, zeros);
        const double R_cut = testutil::uniform(rng, 1.0, 8.0);
        const auto Q = seqlab::finite_order_reduce(f, R_cut);
        for (int s = 0; s < 10; ++s) {
            const Complex z = testutil::random_in_annulus(rng, 0.2, 6.0);
            const auto ef = efun::eval(f, z);
            const auto eq = efun::eval(Q, z);
            if (!std::isfinite(ef.log_abs) || !std::isfinite(eq.log_abs)) continue;
            double tail = 0.0;
            for (const auto& ze : f.zeros())
                if (std::abs(ze.location) > R_cut)
                    tail += ze.multiplicity *
                            efun::primary_factor_log_abs(z / ze.location, genus);
            CHECK(std::abs(ef.log_abs - eq.log_abs - tail) <=
                  1e-9 * std::max(1.0, std::abs(ef.log_abs)));
        }
    }
}

TEST_CASE("line growth sign of exponential polynomials") {
    using seqlab::RaySign;
    // W = z
    const auto l1 = seqlab::line_growth_sign({{1.0, 0.0}}, 0.0);
    CHECK(l1.positive_ray == RaySign::plus_infinity);
    CHECK(l1.negative_ray == RaySign::minus_infinity);

    const auto l2 = seqlab::line_growth_sign({{1.0, 0.0}}, std::acos(-1.0));
    CHECK(l2.positive_ray == RaySign::minus_infinity);

    // W = i z^2: Re(i R^2) = 0 on theta = 0, nothing below -> bounded
    const auto l3 = seqlab::line_growth_sign({{0.0, 0.0}, {0.0, 1.0}}, 0.0);
    CHECK(l3.positive_ray == RaySign::bounded);
    CHECK(l3.negative_ray == RaySign::bounded);

    // W = i z^2 + z: the degree-2 part vanishes on the ray, z decides
    const auto l4 = seqlab::line_growth_sign({{1.0, 0.0}, {0.0, 1.0}}, 0.0);
    CHECK(l4.positive_ray == RaySign::plus_infinity);
    CHECK(l4.negative_ray == RaySign::minus_infinity);

    const auto lz = seqlab::line_growth_sign({}, 1.0);
    CHECK(lz.zero_polynomial);
    CHECK(lz.positive_ray == RaySign::bounded);
}

TEST_CASE("lemma 2.2(i) desk form on a C0 = 0 family") {
    // constants 4^{-n k_n} with k_n = n: C(P_n,1)^{1/k_n} = 4^{-n} -> 0
    std::vector<double> vals;
    for (int n = 1; n <= 12; ++n) vals.push_back(std::pow(4.0, -static_cast<double>(n) * n));
    const auto s = constants_family(12, vals, {1, 2, 4, 8});
    for (double R : s.R_grid) {
        double prev = 1e308;
        for (std::size_t n = s.size() / 2; n < s.size(); ++n) {
            const double v = std::exp(growth::log_sup_norm(s.functions[n], R) / s.k[n]);
            CHECK(v < prev);
            prev = v;
        }
        CHECK(prev <= 4.0e-7); // 4^{-12} and below
    }
}

TEST_CASE("hypothesis report flags") {
    auto s = family_two(16, {1, 2, 4, 8});
    const auto rep = seqlab::hypothesis_report(s);
    CHECK(rep.kn_ge_dstar); // d*((1-z/n)^n) = n * (1/n) = 1 <= n ... for n >= 1
    CHECK(rep.theo1_1_by_R.size() == 4);
}
