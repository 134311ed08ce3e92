#include "efgrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace efgrowth::trend {

WindowExtrap extrapolate_window(const std::vector<double>& n,
                                const std::vector<double>& v, double horizon) {
    if (n.size() != v.size() || v.empty())
        throw std::invalid_argument("extrapolate_window: mismatched or empty window");

    WindowExtrap w;
    w.window_max = *std::max_element(v.begin(), v.end());
    w.window_min = *std::min_element(v.begin(), v.end());

    w.growing = v.size() >= 2;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] < v[i] * (1.0 - 1e-12) - 1e-300) w.growing = false;
    if (!(v.back() > v.front())) w.growing = false;

    if (w.window_max <= 1e-300) {
        w.all_zero = true;
        w.extrapolated = 0.0;
        return w;
    }
    if (v.back() <= 1e-300) {
        w.extrapolated = 0.0;
        return w;
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0) || !(n[i] > 0.0)) continue;
        const double x = std::log(n[i]), y = std::log(v[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++cnt;
    }
    if (cnt < 2) {
        w.extrapolated = v.back();
        return w;
    }
    const double denom = cnt * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) {
        w.extrapolated = v.back();
        return w;
    }
    w.slope = (cnt * sxy - sx * sy) / denom;
    const double intercept = (sy - w.slope * sx) / cnt;
    const double le = intercept + w.slope * std::log(horizon);
    w.extrapolated = le > 690.0 ? 1e300 : std::exp(le);
    return w;
}

std::pair<std::size_t, std::size_t> trailing_window(std::size_t N, double fraction) {
    if (N == 0) throw std::invalid_argument("trailing_window: empty range");
    auto start = static_cast<std::size_t>(static_cast<double>(N) * (1.0 - fraction));
    if (start >= N) start = N - 1;
    return {start, N};
}

} // namespace efgrowth::trend
