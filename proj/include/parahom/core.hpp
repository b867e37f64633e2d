#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parahom {

// Small d x d matrix, d in {1,2}. Stored row-major in a fixed array.
struct Mat2 {
    int d = 1;
    std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};

    static Mat2 identity(int d) {
        Mat2 m;
        m.d = d;
        for (int i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat2 scalar(int d, double c) {
        Mat2 m = identity(d);
        for (int i = 0; i < d; ++i) m(i, i) = c;
        return m;
    }
    double& operator()(int i, int j) { return a[static_cast<size_t>(i * d + j)]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i * d + j)]; }

    Mat2& operator+=(const Mat2& o) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }
    Mat2& operator*=(double c) {
        for (double& v : a) v *= c;
        return *this;
    }
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }
    // xi . (A_sym xi)
    double quad_form(std::span<const double> xi) const {
        double q = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) q += xi[static_cast<size_t>(i)] * (*this)(i, j) * xi[static_cast<size_t>(j)];
        return q;
    }
};

inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    double m = 0.0;
    for (int i = 0; i < x.d; ++i)
        for (int j = 0; j < x.d; ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

struct MacroPoint {
    std::array<double, 2> x{0.0, 0.0};
    double t = 0.0;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct SolverError : std::runtime_error {
    double diagnostic;  // last residual / period gap
    SolverError(const std::string& msg, double diag) : std::runtime_error(msg), diagnostic(diag) {}
};

// Least-squares line fit of y against x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // rms of fit residuals
    bool degenerate = false;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

// Deterministic uniforms from a fixed 64-bit generator (no library distributions,
// so streams are identical across standard library implementations).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next_u64() {
        // xorshift* variant
        uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    uint64_t state_;
};

// Trapezoid weight for node i of n+1 uniformly spaced nodes with spacing h.
inline double trapezoid_weight(int i, int n, double h) {
    return (i == 0 || i == n) ? 0.5 * h : h;
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::string format_double(double v);  // shortest round-trip-ish, deterministic "%.17g"

uint64_t fnv1a64(std::span<const unsigned char> bytes);
inline uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(std::span<const unsigned char>(reinterpret_cast<const unsigned char*>(s.data()), s.size()));
}

}  // namespace parahom
