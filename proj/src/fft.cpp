#include "parahom/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace parahom {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty() || dims_.size() > 3) throw std::invalid_argument("Fft: rank must be 1..3");
    n_ = 1;
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("Fft: dim must be >= 2");
        n_ *= static_cast<size_t>(d);
    }
    buf_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n_));
    if (!buf_) throw std::bad_alloc();
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto* b = reinterpret_cast<fftw_complex*>(buf_);
    plan_fwd_ = fftw_plan_dft(static_cast<int>(dims_.size()), dims_.data(), b, b, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft(static_cast<int>(dims_.size()), dims_.data(), b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("Fft: plan creation failed");
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buf_);
}

void Fft::forward() { fftw_execute(static_cast<fftw_plan>(plan_fwd_)); }
void Fft::backward() { fftw_execute(static_cast<fftw_plan>(plan_bwd_)); }

std::vector<double> wavenumbers(int n, double period) {
    std::vector<double> k(static_cast<size_t>(n));
    const double base = 2.0 * 3.14159265358979323846 / period;
    for (int i = 0; i < n; ++i) {
        int m = (i <= n / 2) ? i : i - n;
        k[static_cast<size_t>(i)] = base * m;
    }
    if (n % 2 == 0) k[static_cast<size_t>(n / 2)] = 0.0;  // zero Nyquist for odd derivatives
    return k;
}

}  // namespace parahom
