#ifndef EFGROWTH_SERIES_HPP
#define EFGROWTH_SERIES_HPP

#include "efgrowth/seqlab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace efgrowth::series {

// Grouped power series s(z) = sum_n z^{k_n} P_n(z); exponents k_n are
// strictly increasing positive integers (stored as the SequenceSpec's k).
struct GroupedSeries {
    seqlab::SequenceSpec terms;
    explicit GroupedSeries(seqlab::SequenceSpec t);
    std::size_t size() const { return terms.size(); }
    long long exponent(std::size_t n) const {
        return static_cast<long long>(terms.k[n]);
    }
};

struct PartialSumResult {
    Complex value{0.0, 0.0};
    bool overflow = false;              // some term exceeded the log bound
    std::vector<double> term_log_mags;  // log |z^{k_n} P_n(z)| per term
    std::vector<double> tail_trend;     // last 10 term magnitudes
};

PartialSumResult partial_sum(const GroupedSeries& s, const Complex& z, std::size_t N);

struct ConvergenceRegion {
    Complex center{0.0, 0.0};
    double radius = 0.0; // +inf means the whole plane
    bool empty = false;
    bool whole_plane = false;
};

// Uniform-convergence disk from the circle constant C and the exponents
// (beta, gamma): radius rho0 (C^{-beta/gamma} - 1); gamma = 0 with C < 1
// gives the whole plane; C >= 1 gives the empty region.
ConvergenceRegion convergence_region(double C, double beta, double gamma,
                                     const Complex& z0, double rho0);

// Desk-scale estimate of C = limsup exp((1/(2 pi k_n)) int log|P_n(z0 + rho e^{it})|).
double region_constant(const seqlab::SequenceSpec& s, const Complex& z0, double rho0,
                       const growth::CircleQuadrature& q);

struct StageA {
    bool pass = false; // |Q_n(z)|^{1/(2k_n)} <= 1 + tol at every sample, window n
    std::vector<std::tuple<double, double, double>> rows; // (|z|, n, value)
    std::string caveat; // finite bounded sample cannot witness non-thinness
    std::vector<bool> pointwise_cauchy; // per-sample Cauchy decay of partial sums
};

struct StageB {
    bool pass = false; // k_n >= d*(P_n) for every n
    std::vector<std::tuple<std::size_t, double, double>> rows; // (n, k_n, d*)
};

struct StageC {
    bool pass = false;
    // per (R, n): ||P_n||_R^{1/(2k_n)} vs R^{-1/2} + tol, and the decay of
    // ||Q_n||_R^{1/(2k_n)} across the window
    std::vector<std::tuple<double, double, double, double>> rows; // (R, n, p_pow, q_pow)
    std::vector<std::pair<double, bool>> q_decay_by_R;
};

struct PointwiseUniformReport {
    StageA stage_a;
    StageB stage_b;
    StageC stage_c;
    bool all_pass = false;
    std::optional<std::string> thinness_note; // potential-module cross reference
};

struct CheckerOptions {
    double tol = 0.05;        // tolerance on the 1/(2k_n) power scale
    double cauchy_tol = 1e-8; // partial-sum decay tolerance at the samples
};

// Desk-scale check of the pointwise-to-uniform chain for grouped series:
// (a) hypothesis evidence on the samples for Q_n = z^{k_n} P_n with
// normalizer 2k_n, (b) k_n >= d*(P_n), (c) the conclusion chain
// ||P_n||_R^{1/(2k_n)} <= R^{-1/2} + tol and ||Q_n||_R^{1/(2k_n)} -> 0.
// Failures are report content, never errors. The set-level hypothesis
// (non-thinness) is never claimed from finitely many samples.
PointwiseUniformReport pointwise_to_uniform_check(const GroupedSeries& s,
                                                  const std::vector<Complex>& E_samples,
                                                  const std::vector<double>& R_grid,
                                                  const growth::CircleQuadrature& q,
                                                  const CheckerOptions& opts = {});

} // namespace efgrowth::series

#endif
