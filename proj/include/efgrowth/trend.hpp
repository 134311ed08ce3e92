#ifndef EFGROWTH_TREND_HPP
#define EFGROWTH_TREND_HPP

#include <cstddef>
#include <vector>

namespace efgrowth::trend {

// Limsup surrogates over a trailing index window. All limit quantities in
// the sequence modules are estimated deterministically from the last part
// of the data; the window bounds travel with every verdict.
struct WindowExtrap {
    double extrapolated = 0.0; // power-law fit value at the horizon index
    double window_max = 0.0;
    double window_min = 0.0;
    double slope = 0.0;   // d log v / d log n over the window
    bool growing = false; // nondecreasing across the window with a net increase
    bool all_zero = false;
};

// Fits log v = c + slope*log n over the positive entries of (n, v) and
// evaluates the fit at n = horizon (clamped to [0, 1e300]). Windows that
// end at zero extrapolate to zero; windows with fewer than two positive
// entries fall back to the last value.
WindowExtrap extrapolate_window(const std::vector<double>& n,
                                const std::vector<double>& v,
                                double horizon = 1e6);

// Trailing-window [start, end) covering the last `fraction` of N items.
std::pair<std::size_t, std::size_t> trailing_window(std::size_t N,
                                                    double fraction = 0.5);

} // namespace efgrowth::trend

#endif
