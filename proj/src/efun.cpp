#include "efgrowth/efun.hpp"
#include "efgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace efgrowth::efun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

FiniteOrderFunction::FiniteOrderFunction(Complex leading, int origin_mult,
                                         std::vector<Complex> expoly, int genus,
                                         std::vector<ZeroEntry> zeros)
    : leading_(leading), origin_mult_(origin_mult), expoly_(std::move(expoly)),
      genus_(genus), zeros_(std::move(zeros)) {
    require(is_finite(leading_), "leading coefficient must be finite");
    require(std::abs(leading_) > 0.0, "leading coefficient must be nonzero (use zero_function)");
    require(origin_mult_ >= 0, "origin multiplicity must be >= 0");
    require(genus_ >= 0, "genus must be >= 0");
    for (const Complex& c : expoly_) require(is_finite(c), "expoly coefficient must be finite");
    for (const ZeroEntry& ze : zeros_) {
        require(is_finite(ze.location), "zero location must be finite");
        require(std::abs(ze.location) > 0.0, "zeros must be away from the origin");
        require(ze.multiplicity >= 1, "zero multiplicity must be >= 1");
    }
}

FiniteOrderFunction FiniteOrderFunction::zero_function() {
    FiniteOrderFunction f;
    f.is_zero_ = true;
    f.leading_ = Complex(0.0, 0.0);
    return f;
}

FiniteOrderFunction FiniteOrderFunction::product(Complex leading,
                                                 std::vector<ZeroEntry> zeros,
                                                 int origin_mult) {
    return FiniteOrderFunction(leading, origin_mult, {}, 0, std::move(zeros));
}

FiniteOrderFunction FiniteOrderFunction::constant(Complex value) {
    if (std::abs(value) == 0.0) return zero_function();
    return FiniteOrderFunction(value, 0, {}, 0, {});
}

long long FiniteOrderFunction::total_zero_count() const {
    long long n = 0;
    for (const ZeroEntry& ze : zeros_) n += ze.multiplicity;
    return n;
}

CoefficientWindow::CoefficientWindow(std::vector<Complex> c) : coeffs(std::move(c)) {
    require(coeffs.size() >= 3, "coefficient window needs a_0..a_M with M >= 2");
    for (const Complex& a : coeffs) require(is_finite(a), "coefficients must be finite");
}

double harmonic_lambda(int p) {
    require(p >= 0, "harmonic_lambda: p must be >= 0");
    double s = 1.0;
    for (int j = 1; j <= p; ++j) s += 1.0 / j;
    return s;
}

HarmonicConstant harmonic_constant(int p) { return {p, harmonic_lambda(p)}; }

Complex primary_exponent(const Complex& z, int p) {
    Complex sum(0.0, 0.0);
    Complex zj(1.0, 0.0);
    for (int j = 1; j <= p; ++j) {
        zj *= z;
        sum += zj / static_cast<double>(j);
    }
    return sum;
}

Complex primary_factor(const Complex& z, int p) {
    require(p >= 0, "primary_factor: p must be >= 0");
    const Complex s = primary_exponent(z, p);
    if (s.real() > kLogOverflow)
        throw numeric_error("efun.primary_factor",
                            "exponent real part " + std::to_string(s.real()) +
                                " exceeds overflow bound");
    return (Complex(1.0, 0.0) - z) * std::exp(s);
}

double primary_factor_log_abs(const Complex& z, int p) {
    return std::log(std::abs(Complex(1.0, 0.0) - z)) + primary_exponent(z, p).real();
}

Complex primary_factor_log(const Complex& z, int p) {
    return std::log(Complex(1.0, 0.0) - z) + primary_exponent(z, p);
}

Complex expoly_eval(const FiniteOrderFunction& f, const Complex& z) {
    // Horner on c_q .. c_1 with the z*(...) wrap supplying W(0) = 0.
    Complex acc(0.0, 0.0);
    const auto& c = f.expoly();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc * z;
}

EvalResult eval(const FiniteOrderFunction& f, const Complex& z) {
    EvalResult r;
    if (f.is_zero()) {
        r.log_abs = -kInf;
        return r;
    }
    Complex log_acc = std::log(f.leading());
    if (f.origin_mult() > 0) {
        if (std::abs(z) == 0.0) {
            r.log_abs = -kInf;
            return r;
        }
        log_acc += static_cast<double>(f.origin_mult()) * std::log(z);
    }
    log_acc += expoly_eval(f, z);
    const int p = f.genus();
    for (const ZeroEntry& ze : f.zeros()) {
        const Complex w = z / ze.location;
        if (w == Complex(1.0, 0.0)) {
            r.log_abs = -kInf;
            return r;
        }
        log_acc += static_cast<double>(ze.multiplicity) * primary_factor_log(w, p);
    }
    r.log_abs = log_acc.real();
    r.arg = log_acc.imag();
    if (log_acc.real() <= kLogOverflow) {
        r.value = std::exp(log_acc);
    } else {
        r.overflow = true;
    }
    return r;
}

long long zero_count(const FiniteOrderFunction& f, double R) {
    require(R > 0.0, "zero_count: R must be positive");
    long long n = 0;
    for (const ZeroEntry& ze : f.zeros())
        if (std::abs(ze.location) <= R) n += ze.multiplicity;
    return n;
}

namespace {

// sup of |W| on the unit circle: 1024 samples, then golden-section
// refinement around the best local samples down to 1e-10 in angle.
double expoly_circle_sup(const FiniteOrderFunction& f) {
    if (f.expoly().empty()) return 0.0;
    constexpr int kSamples = 1024;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    std::vector<double> vals(kSamples);
    for (int k = 0; k < kSamples; ++k)
        vals[k] = std::abs(expoly_eval(f, std::polar(1.0, kTwoPi * k / kSamples)));

    std::vector<int> order(kSamples);
    for (int k = 0; k < kSamples; ++k) order[k] = k;
    std::partial_sort(order.begin(), order.begin() + 8, order.end(),
                      [&](int a, int b) { return vals[a] > vals[b]; });

    const double h = kTwoPi / kSamples;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double best = 0.0;
    auto g = [&](double t) { return std::abs(expoly_eval(f, std::polar(1.0, t))); };
    for (int c = 0; c < 8; ++c) {
        double a = h * order[c] - h, b = h * order[c] + h;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double g1 = g(x1), g2 = g(x2);
        while (b - a > 1e-10) {
            if (g1 < g2) {
                a = x1; x1 = x2; g1 = g2;
                x2 = a + gr * (b - a); g2 = g(x2);
            } else {
                b = x2; x2 = x1; g2 = g1;
                x1 = b - gr * (b - a); g1 = g(x1);
            }
        }
        best = std::max({best, g1, g2});
    }
    return best;
}

} // namespace

double hadamard_degree(const FiniteOrderFunction& f) {
    if (f.is_zero())
        throw std::domain_error("hadamard_degree: undefined for the zero function");
    const int p = f.genus();
    double d = static_cast<double>(f.origin_mult()) + expoly_circle_sup(f);
    for (const ZeroEntry& ze : f.zeros()) {
        const double r = std::abs(ze.location);
        const double w = r <= 1.0 ? std::pow(r, -p) : std::pow(r, -(p + 1));
        d += ze.multiplicity * w;
    }
    return d;
}

OrderEstimate order_estimate(const CoefficientWindow& w, double window_fraction) {
    require(window_fraction > 0.0 && window_fraction <= 1.0,
            "order_estimate: window fraction in (0,1]");
    // Qualifying indices: n >= 2 with 0 < |a_n| < 1 so log(1/|a_n|) > 0.
    std::vector<std::size_t> idx;
    for (std::size_t n = 2; n < w.coeffs.size(); ++n) {
        const double a = std::abs(w.coeffs[n]);
        if (a > 0.0 && a < 1.0) idx.push_back(n);
    }
    OrderEstimate est;
    auto fit_window = [&](std::size_t lo) {
        std::size_t cnt = idx.size() - lo;
        est.window_size = cnt;
        // Normal equations for y = b1*(n log n) + b2*n + b3.
        double A[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
        double rhs[3] = {0, 0, 0};
        est.raw_ratio_max = 0.0;
        for (std::size_t t = lo; t < idx.size(); ++t) {
            const double n = static_cast<double>(idx[t]);
            const double y = -std::log(std::abs(w.coeffs[idx[t]]));
            const double x[3] = {n * std::log(n), n, 1.0};
            est.raw_ratio_max = std::max(est.raw_ratio_max, x[0] / y);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) A[i][j] += x[i] * x[j];
                rhs[i] += x[i] * y;
            }
        }
        // 3x3 Gaussian elimination with partial pivoting.
        int piv[3] = {0, 1, 2};
        for (int c = 0; c < 3; ++c) {
            int pr = c;
            for (int r = c + 1; r < 3; ++r)
                if (std::abs(A[piv[r]][c]) > std::abs(A[piv[pr]][c])) pr = r;
            std::swap(piv[c], piv[pr]);
            if (std::abs(A[piv[c]][c]) < 1e-300) return false;
            for (int r = c + 1; r < 3; ++r) {
                const double m = A[piv[r]][c] / A[piv[c]][c];
                for (int k = c; k < 3; ++k) A[piv[r]][k] -= m * A[piv[c]][k];
                rhs[piv[r]] -= m * rhs[piv[c]];
            }
        }
        double b[3];
        for (int c = 2; c >= 0; --c) {
            double s = rhs[piv[c]];
            for (int k = c + 1; k < 3; ++k) s -= A[piv[c]][k] * b[k];
            b[c] = s / A[piv[c]][c];
        }
        if (!(b[0] > 0.0)) return false;
        est.value = 1.0 / b[0];
        return true;
    };

    if (idx.size() >= 3) {
        std::size_t lo = static_cast<std::size_t>(
            static_cast<double>(idx.size()) * (1.0 - window_fraction));
        if (idx.size() - lo < 3) lo = idx.size() - 3;
        if (fit_window(lo)) return est;
        if (lo > 0 && fit_window(0)) return est; // widen once before giving up
    }
    est.value = 0.0;
    est.degenerate = true;
    est.window_size = idx.size();
    return est;
}

} // namespace efgrowth::efun
