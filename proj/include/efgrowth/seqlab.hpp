#ifndef EFGROWTH_SEQLAB_HPP
#define EFGROWTH_SEQLAB_HPP

#include "efgrowth/efun.hpp"
#include "efgrowth/growth.hpp"
#include "efgrowth/trend.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace efgrowth::seqlab {

using efun::FiniteOrderFunction;

// A finite family (P_1..P_N) with its normalizing sequence (k_n), the
// analysis radii, and the optional witness radii of the eta condition.
struct SequenceSpec {
    std::vector<FiniteOrderFunction> functions;
    std::vector<double> k;
    std::vector<double> R_grid;
    std::optional<std::vector<double>> R_witness;

    SequenceSpec(std::vector<FiniteOrderFunction> fns, std::vector<double> kk,
                 std::vector<double> grid,
                 std::optional<std::vector<double>> witness = std::nullopt);
    std::size_t size() const { return functions.size(); }
};

// Finite-sample estimates of C_0, C_0*, eta(R); limsup/liminf realized as
// max/min over the trailing half of indices, recorded in `note`.
struct GrowthStats {
    double C0_est = 0.0;
    double C0_star_est = 0.0;
    std::map<double, double> eta_scaled;
    std::string note;
};

GrowthStats ring_constants(const SequenceSpec& s, const growth::CircleQuadrature& q);

// (1/k_n) sum_{|z_{n,j}| >= R} mult_j / |z_{n,j}|^m over the stored zeros.
double tail_powersum_abs(const SequenceSpec& s, std::size_t n, double R, int m);

struct SignedTail {
    double magnitude = 0.0;   // (1/k_n) |sum mult_j / z_{n,j}^l|
    Complex sum{0.0, 0.0};    // (1/k_n) sum mult_j / z_{n,j}^l
    Complex beta{0.0, 0.0};   // -(1/(l k_n)) sum, the proof's beta_{n,l}
    double beta_arg = 0.0;
};

SignedTail tail_powersum_signed(const SequenceSpec& s, std::size_t n, double R, int l);

// Absolute tails S, signed-tail magnitudes T and the beta_{n,l} data for
// all n, all grid radii, exponents up to m_max. beta uses R_witness[n]
// when present, else the largest grid radius.
struct TailSums {
    std::map<std::tuple<std::size_t, double, int>, double> S;
    std::map<std::tuple<std::size_t, double, int>, double> T;
    std::map<std::pair<std::size_t, int>, std::pair<double, double>> beta; // (mag, arg)
};

TailSums collect_tail_sums(const SequenceSpec& s, int m_max);

enum class Alternative { one, two, inconclusive };

struct DichotomyEvidenceRow {
    int m = 0;
    double R = 0.0;
    double extrapolated = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
    bool growing = false;
};

struct DichotomyVerdict {
    Alternative alternative = Alternative::inconclusive;
    std::optional<int> witness_m;
    std::vector<DichotomyEvidenceRow> evidence;
    std::string caveat;
    bool theo56_observed = false; // signed tails decay for l < witness
    bool theo56_vacuous = true;   // witness = 1 leaves nothing to check
};

struct DichotomyOptions {
    double tol_zero = 1e-3;
    double tol_inf = 1e3;
    double horizon = 1e6; // index at which window power laws are evaluated
};

// Theorem-style dichotomy on the tail power sums: per (m, R) the trailing
// n-window is extrapolated in n, then the R-trend is inspected.
// Alternative two with the smallest witness m whose extrapolations are
// below tol_zero at the largest radii; alternative one when every m <=
// m_max blows past tol_inf or grows monotonically across the window;
// inconclusive otherwise (a value, not an error).
DichotomyVerdict dichotomy_classify(const SequenceSpec& s, int m_max,
                                    const DichotomyOptions& opts = {});

struct RegionParams {
    double beta = 1.0;  // > 0
    double gamma = 0.0; // >= 0
    double tau = 0.0;   // >= 0, caller-supplied
    RegionParams(double b, double g, double t = 0.0);
};

struct GrowthBoundRow {
    double R = 0.0;
    double bound = 0.0;     // C0 (1+R)^{gamma/beta}
    double empirical = 0.0; // window max of ||P_n||_R^{1/k_n}
    double margin = 0.0;    // bound - empirical
};

struct GrowthBoundReport {
    std::vector<GrowthBoundRow> rows;
    std::string hypothesis_set; // which condition set the caller asserts
    std::string note;
};

// Checks the growth bound ||P_n||_R^{1/k_n} <= C0 (1+R)^{gamma/beta} per
// grid radius. `hypothesis_set` is a caller-declared flag ("kn_ge_dstar"
// or "theo5.3+theo5.6") recorded in the report; both condition sets carry
// the same conclusion.
GrowthBoundReport growth_bound_check(const SequenceSpec& s, const RegionParams& params,
                                     double C0,
                                     const std::string& hypothesis_set = "kn_ge_dstar");

struct PowerSums {
    std::vector<Complex> s; // s_l = sum mult_j / z_j^l, l = 1..l_max
    bool precision_warning = false;
};

// Power sums of the zeros from the Taylor coefficients of log f at 0 via
// the Newton-style recursion between f's coefficients and its
// log-derivative. Requires f(0) != 0. For a FiniteOrderFunction the
// coefficients are synthesized from the plain product a prod (1-z/z_j)
// (4*l_max terms), so the recursion output can be cross-checked against
// direct summation over the stored zeros.
PowerSums powersums_from_logderiv(const FiniteOrderFunction& f, int l_max);
PowerSums powersums_from_logderiv(const efun::CoefficientWindow& w, int l_max);

// Finite-order reduction Q of f at R_cut: keeps the zeros with
// |z_j| <= R_cut as a genus-0 product and absorbs the dropped primary
// exponents into the exponential polynomial,
//   expoly += sum_{kept j} mult_j (z/z_j + ... + z^p/(p z_j^p)).
FiniteOrderFunction finite_order_reduce(const FiniteOrderFunction& f, double R_cut);

enum class RaySign { plus_infinity, minus_infinity, bounded };

struct LineGrowth {
    RaySign positive_ray = RaySign::bounded;
    RaySign negative_ray = RaySign::bounded;
    bool zero_polynomial = false;
};

// Growth of Re W(z) along the two rays of the line through 0 at angle
// theta, decided by the highest coefficient with a nonvanishing
// Re(c_l e^{il theta}) (recursing to lower degrees on vanishing ones).
LineGrowth line_growth_sign(const std::vector<Complex>& expoly, double theta,
                            double rel_tol = 1e-12);

// Desk-scale evidence for the hypothesis conditions: the signed l=1 tail
// trend per radius (condition theo1.1), the windowed eta(P_n,R_n)/k_n when
// witness radii are present (condition theo1.2), and k_n >= d*(P_n).
struct HypothesisReport {
    std::vector<std::pair<double, double>> theo1_1_by_R; // (R, window extrap)
    bool theo1_1_trend_to_zero = false;
    std::optional<double> theo1_2_window_sup;
    bool kn_ge_dstar = false;
    std::vector<double> dstar; // d*(P_n) per n
};

HypothesisReport hypothesis_report(const SequenceSpec& s);

} // namespace efgrowth::seqlab

#endif
