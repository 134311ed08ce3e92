#ifndef EFGROWTH_EFUN_HPP
#define EFGROWTH_EFUN_HPP

#include <complex>
#include <vector>

namespace efgrowth {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Products are evaluated in log space; values are reconstructed only while
// the accumulated real part of the log stays below this bound.
inline constexpr double kLogOverflow = 700.0;

namespace efun {

// A zero different from the origin, with multiplicity.
struct ZeroEntry {
    Complex location;
    int multiplicity = 1;
};

// An entire function of finite order presented by its Hadamard data:
//
//   f(z) = a z^m exp(W(z)) prod_j G(z/z_j, p)^{mult_j}
//
// with W(z) = c_1 z + ... + c_q z^q (W(0) = 0), p = genus, and
// G(z,p) = (1-z) exp(z + z^2/2 + ... + z^p/p) the primary factor.
// The zero list is a finite truncation of the (possibly infinite) zero
// multiset; every operation below is exact for the truncation. Tail
// behaviour belongs to the sequence-level module.
//
// The constructor enforces the hard invariants (finite fields, nonzero
// zeros, positive multiplicities, leading != 0 unless the dedicated
// identically-zero flag is set). The paper-form rules -- expoly degree
// at most genus+1 and genus 0 implying an empty expoly -- are checked by
// the strict zerodata-v1 parser, not here: finite-order reduction emits
// genus-0 products carrying the absorbed exponential polynomial.
class FiniteOrderFunction {
public:
    FiniteOrderFunction(Complex leading, int origin_mult,
                        std::vector<Complex> expoly, int genus,
                        std::vector<ZeroEntry> zeros);

    static FiniteOrderFunction zero_function();

    // Convenience: genus-zero product a z^m prod (1 - z/z_j).
    static FiniteOrderFunction product(Complex leading,
                                       std::vector<ZeroEntry> zeros,
                                       int origin_mult = 0);

    static FiniteOrderFunction constant(Complex value);

    bool is_zero() const { return is_zero_; }
    const Complex& leading() const { return leading_; }
    int origin_mult() const { return origin_mult_; }
    const std::vector<Complex>& expoly() const { return expoly_; }
    int genus() const { return genus_; }
    const std::vector<ZeroEntry>& zeros() const { return zeros_; }

    // Sum of stored multiplicities (origin excluded).
    long long total_zero_count() const;

private:
    FiniteOrderFunction() = default;

    Complex leading_{1.0, 0.0};
    int origin_mult_ = 0;
    std::vector<Complex> expoly_; // c_1..c_q, W(0) = 0
    int genus_ = 0;
    std::vector<ZeroEntry> zeros_;
    bool is_zero_ = false;
};

// Taylor coefficients a_0..a_M of an entire function at the origin, M >= 2.
struct CoefficientWindow {
    std::vector<Complex> coeffs;
    explicit CoefficientWindow(std::vector<Complex> c);
};

// lambda_p = 1 + sum_{j=1..p} 1/j; lambda_0 = 1 by the G(z,0) = 1-z
// convention (the |z|>=1 bound degenerates at p = 0).
struct HarmonicConstant {
    int p = 0;
    double lambda = 1.0;
};
HarmonicConstant harmonic_constant(int p);
double harmonic_lambda(int p);

// S_p(z) = z + z^2/2 + ... + z^p/p  (0 for p = 0).
Complex primary_exponent(const Complex& z, int p);

// Primary factor G(z,p) = (1-z) exp(S_p(z)), G(z,0) = 1-z. The exponent is
// accumulated first and exponentiated once; throws numeric_error carrying
// the exponent's real part when that would overflow.
Complex primary_factor(const Complex& z, int p);

// log|G(z,p)| = log|1-z| + Re S_p(z); -inf exactly at z = 1. Never overflows.
double primary_factor_log_abs(const Complex& z, int p);

// Principal-branch complex log of G(z,p); the branch is continuous from
// z = 0 while 1-z stays off the negative real axis (always true for |z|<1).
Complex primary_factor_log(const Complex& z, int p);

struct EvalResult {
    Complex value{0.0, 0.0}; // exp(log) when !overflow, else 0
    double log_abs = 0.0;    // log|f(z)|, -inf exactly on zeros
    double arg = 0.0;        // Im of the accumulated log (mod 2pi)
    bool overflow = false;   // Re(log) exceeded kLogOverflow
};

// Evaluates f via per-factor log accumulation; log_abs is the sum of
// log|.| terms, never the log of the product.
EvalResult eval(const FiniteOrderFunction& f, const Complex& z);

// W(z) = sum c_i z^i for the stored exponential polynomial.
Complex expoly_eval(const FiniteOrderFunction& f, const Complex& z);

// Number of stored zeros with 0 < |z_j| <= R, counted with multiplicity.
// The comparison |z_j| <= R is exact on the stored data.
long long zero_count(const FiniteOrderFunction& f, double R);

// Degree d*(f) = m + sup_{|z|<=1}|W| + sum_{|z_j|<=1} mult/|z_j|^p
//                 + sum_{|z_j|>1} mult/|z_j|^{p+1}.
// The sup over the disk is attained on the unit circle (maximum modulus);
// it is sampled at 1024 angles and refined by golden section to 1e-10.
double hadamard_degree(const FiniteOrderFunction& f);

struct OrderEstimate {
    double value = 0.0;         // finite-sample order estimate
    double raw_ratio_max = 0.0; // max of n log n / log(1/|a_n|) on the window
    bool degenerate = false;    // no usable coefficients (returns 0)
    std::size_t window_size = 0;
};

// Finite-sample stand-in for rho = limsup n log n / log(1/|a_n|). The raw
// ratio converges like 1/log n, far too slowly at desk scale, so the
// estimate fits log(1/|a_n|) against {n log n, n, 1} over the trailing
// window of qualifying indices (0 < |a_n| < 1) and returns the reciprocal
// slope; the raw window max is reported alongside. Inputs with no
// qualifying index (polynomials) yield 0 with the degenerate flag set.
OrderEstimate order_estimate(const CoefficientWindow& w,
                             double window_fraction = 0.5);

} // namespace efun
} // namespace efgrowth

#endif
