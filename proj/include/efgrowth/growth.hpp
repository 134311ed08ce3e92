#ifndef EFGROWTH_GROWTH_HPP
#define EFGROWTH_GROWTH_HPP

#include "efgrowth/efun.hpp"

#include <vector>

namespace efgrowth::growth {

using efun::FiniteOrderFunction;

// Equispaced trapezoid rule on the circle: spectrally accurate for
// log|f(Re^{it})| once the zeros are off the ring.
struct CircleQuadrature {
    int nodes = 4096; // power of two, >= 64
    explicit CircleQuadrature(int n = 4096);
};

struct LogMeanDetail {
    double value = 0.0;
    int nodes_used = 0;
    double err_estimate = 0.0; // last doubling change when adaptivity kicked in
    bool near_ring = false;    // a stored zero sat within 1e-9*R of the circle
};

// (1/2pi) integral of log|f(Re^{it})|, i.e. log C(f,R). Nodes that land on
// a zero (-inf) rotate the grid by a half step, up to 3 times, after which
// a singular-node numeric_error is thrown. If a stored zero lies within
// 1e-9*R of the circle the node count doubles (up to 2^20) until the value
// settles, and the achieved change is reported in the detail struct.
LogMeanDetail log_mean_detail(const FiniteOrderFunction& f, double R,
                              const CircleQuadrature& q);
double log_mean(const FiniteOrderFunction& f, double R, const CircleQuadrature& q);

// Independent Jensen-formula oracle for log C(f,R):
//   log|a| + m log R + sum_{0<|z_j|<=R} mult_j log(R/|z_j|).
// Uses only the stored Hadamard data, never the quadrature path.
double jensen_log_mean(const FiniteOrderFunction& f, double R);

struct SupNormResult {
    double log_value = 0.0; // log ||f||_R (finite even when the sup overflows)
    double value = 0.0;     // exp(log_value), may be +inf
    double log_err_bound = 0.0; // one-sided sampling-density bound on log_value
};

// sup of |f| on |z| = R (equals the sup over the disk by maximum modulus;
// no interior sampling is ever done). Dense circle sampling plus
// golden-section refinement around the best local samples; the reported
// one-sided error bound comes from the sampling density and a
// Bernstein-style bound on d/dt log|f| built from the zero data.
SupNormResult sup_norm_detail(const FiniteOrderFunction& f, double R, int samples = 4096);
double sup_norm(const FiniteOrderFunction& f, double R, int samples = 4096);
double log_sup_norm(const FiniteOrderFunction& f, double R, int samples = 4096);

struct WindingCount {
    long long total = 0;          // zeros in |z| < R including origin multiplicity
    long long eta_comparable = 0; // total minus origin multiplicity
    int nodes_used = 0;
};

// Argument-principle zero count: phase accrual of f along |z| = R with
// node doubling until every increment is below pi/2. Oracle for
// efun::zero_count; requires the ring to be at least 1e-6*R away from
// every stored zero.
WindingCount argument_principle_count(const FiniteOrderFunction& f, double R,
                                      const CircleQuadrature& q);

// One report row per radius; emitted as CSV by the CLI.
struct GrowthIndicators {
    double R = 0.0;
    double log_mean = 0.0;
    double sup_norm = 0.0;
    double log_sup_norm = 0.0;
    long long zero_count = 0;
};

GrowthIndicators indicators(const FiniteOrderFunction& f, double R,
                            const CircleQuadrature& q);

} // namespace efgrowth::growth

#endif
