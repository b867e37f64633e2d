#pragma once

#include <complex>
#include <span>
#include <vector>

namespace parahom {

// Thin RAII wrappers over FFTW complex transforms. Plans are created with
// FFTW_ESTIMATE so results are reproducible run to run. Plan creation is
// serialized internally (FFTW planning is not thread safe); execution is.

class Fft {
  public:
    // rank 1..3, dims given slowest-first (row-major, FFTW convention)
    explicit Fft(std::vector<int> dims);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    size_t size() const { return n_; }
    // in-place transforms on the internal buffer
    std::complex<double>* buffer() { return buf_; }
    void forward();
    void backward();  // unnormalized; callers divide by size()

  private:
    std::vector<int> dims_;
    size_t n_;
    std::complex<double>* buf_;
    void* plan_fwd_;
    void* plan_bwd_;
};

// Spectral helper on the periodic grid of N points over a period L:
// wavenumber table 2*pi*k/L with the Nyquist mode zeroed for odd derivatives.
std::vector<double> wavenumbers(int n, double period);

}  // namespace parahom
