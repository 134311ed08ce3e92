#ifndef EFGROWTH_TEST_HELPERS_HPP
#define EFGROWTH_TEST_HELPERS_HPP

#include "efgrowth/efun.hpp"

#include <random>
#include <vector>

namespace testutil {

using efgrowth::Complex;
using efgrowth::efun::FiniteOrderFunction;
using efgrowth::efun::ZeroEntry;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_in_annulus(std::mt19937_64& rng, double r_lo, double r_hi) {
    const double r = uniform(rng, r_lo, r_hi);
    const double th = uniform(rng, 0.0, 2.0 * 3.141592653589793);
    return std::polar(r, th);
}

// Random genus-zero product a prod (1 - z/z_j)^{mult_j} with zero moduli
// in [r_lo, r_hi].
inline FiniteOrderFunction random_product(std::mt19937_64& rng, int max_zeros,
                                          double r_lo = 0.2, double r_hi = 10.0,
                                          int max_mult = 3, int origin_mult = 0) {
    std::uniform_int_distribution<int> nz(1, max_zeros);
    std::uniform_int_distribution<int> nm(1, max_mult);
    std::vector<ZeroEntry> zeros;
    const int count = nz(rng);
    for (int i = 0; i < count; ++i)
        zeros.push_back({random_in_annulus(rng, r_lo, r_hi), nm(rng)});
    const Complex a = random_in_annulus(rng, 0.5, 2.0);
    return FiniteOrderFunction::product(a, std::move(zeros), origin_mult);
}

// A radius in [lo, hi] whose relative distance to every zero modulus is
// at least `sep` (needed for spectral accuracy of the ring quadrature).
inline double radius_off_moduli(std::mt19937_64& rng, const FiniteOrderFunction& f,
                                double lo, double hi, double sep = 0.01) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double R = uniform(rng, lo, hi);
        bool ok = true;
        for (const auto& ze : f.zeros())
            if (std::abs(std::abs(ze.location) - R) < sep * R) ok = false;
        if (ok) return R;
    }
    return hi;
}

// Direct summation oracle for power sums of the stored zeros.
inline std::vector<Complex> direct_power_sums(const FiniteOrderFunction& f, int l_max) {
    std::vector<Complex> s(l_max);
    for (int l = 1; l <= l_max; ++l) {
        Complex acc(0.0, 0.0);
        for (const auto& ze : f.zeros())
            acc += static_cast<double>(ze.multiplicity) /
                   std::pow(ze.location, static_cast<double>(l));
        s[l - 1] = acc;
    }
    return s;
}

} // namespace testutil

#endif
