#include "alphapatch/spectral.hpp"

#include <fftw3.h>

#include <cassert>
#include <cmath>
#include <mutex>

#include "alphapatch/errors.hpp"

namespace ap {

namespace {

// FFTW plan creation is not thread safe; executions on distinct buffers are.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<std::complex<double>> fourier_coeffs(std::span<const double> samples) {
    const int n = static_cast<int>(samples.size());
    assert(n > 0 && n % 2 == 0);
    std::vector<double> in(samples.begin(), samples.end());
    std::vector<std::complex<double>> out(n / 2 + 1);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_plan plan = fftw_plan_dft_r2c_1d(
            n, in.data(), reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    for (auto& c : out) c /= static_cast<double>(n);
    return out;
}

std::vector<double> inverse_fourier(std::span<const std::complex<double>> coeffs, int n) {
    assert(static_cast<int>(coeffs.size()) == n / 2 + 1);
    std::vector<std::complex<double>> in(coeffs.begin(), coeffs.end());
    std::vector<double> out(n);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_plan plan = fftw_plan_dft_c2r_1d(
            n, reinterpret_cast<fftw_complex*>(in.data()), out.data(), FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> spectral_derivative(std::span<const double> samples, int order) {
    const int n = static_cast<int>(samples.size());
    auto coeffs = fourier_coeffs(samples);
    for (int k = 0; k <= n / 2; ++k) {
        std::complex<double> factor = std::pow(std::complex<double>(0.0, k), order);
        coeffs[k] *= factor;
    }
    if (order % 2 == 1) coeffs[n / 2] = 0.0;
    return inverse_fourier(coeffs, n);
}

std::vector<double> spectral_antiderivative_periodic(std::span<const double> samples) {
    const int n = static_cast<int>(samples.size());
    auto coeffs = fourier_coeffs(samples);
    coeffs[0] = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
        coeffs[k] /= std::complex<double>(0.0, k);
    }
    coeffs[n / 2] = 0.0;  // Nyquist has no smooth antiderivative representation
    return inverse_fourier(coeffs, n);
}

std::vector<double> spectral_resample(std::span<const double> samples, int n_new) {
    const int n = static_cast<int>(samples.size());
    auto coeffs = fourier_coeffs(samples);
    std::vector<std::complex<double>> out(n_new / 2 + 1, 0.0);
    const int keep = std::min(n, n_new) / 2;
    for (int k = 0; k < keep; ++k) out[k] = coeffs[k];
    if (n_new > n) {
        // split the old Nyquist coefficient symmetrically; its real part is the
        // sampled value of cos(n/2 t), which halves between +-n/2 when padded
        out[n / 2] = 0.5 * coeffs[n / 2];
        // conjugate partner is implicit in the r2c layout after padding; the
        // factor 2 applied to interior modes on evaluation restores it
    } else if (n_new == n) {
        out[n / 2] = coeffs[n / 2];
    }
    // note: when truncating (n_new < n), discarded tail modes are simply dropped
    return inverse_fourier(out, n_new);
}

std::vector<double> spectral_filter(std::span<const double> samples, double strength,
                                    int order) {
    const int n = static_cast<int>(samples.size());
    auto coeffs = fourier_coeffs(samples);
    for (int k = 0; k <= n / 2; ++k) {
        double ratio = static_cast<double>(k) / (n / 2);
        coeffs[k] *= std::exp(-strength * std::pow(ratio, order));
    }
    return inverse_fourier(coeffs, n);
}

TrigInterp::TrigInterp(std::span<const double> samples)
    : n_(static_cast<int>(samples.size())), coeffs_(fourier_coeffs(samples)) {}

double TrigInterp::eval(double gamma, int order) const {
    const double t = gamma + M_PI;
    double result = 0.0;
    if (order == 0) result += coeffs_[0].real();
    for (int k = 1; k <= n_ / 2; ++k) {
        std::complex<double> c = coeffs_[k];
        if (order > 0) c *= std::pow(std::complex<double>(0.0, k), order);
        if (k == n_ / 2 && order % 2 == 1) continue;
        const double weight = (k == n_ / 2) ? 1.0 : 2.0;
        result += weight * (c * std::exp(std::complex<double>(0.0, k * t))).real();
    }
    return result;
}

double trapezoid_mean(std::span<const double> samples) {
    double sum = 0.0;
    for (double v : samples) sum += v;
    return sum / static_cast<double>(samples.size());
}

}  // namespace ap
