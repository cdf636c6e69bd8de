#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ap {

// All routines act on samples of a 2pi-periodic real function taken at the
// uniform grid gamma_i = -pi + 2*pi*i/n, n even.

inline double grid_gamma(int i, int n) { return -M_PI + 2.0 * M_PI * i / n; }
inline double grid_spacing(int n) { return 2.0 * M_PI / n; }

// Half-spectrum (r2c layout), normalized so that coeff[k] multiplies e^{ikt}
// with t = gamma + pi. coeff.size() == n/2 + 1.
std::vector<std::complex<double>> fourier_coeffs(std::span<const double> samples);

std::vector<double> inverse_fourier(std::span<const std::complex<double>> coeffs, int n);

// k-th derivative of the trigonometric interpolant, sampled on the same grid.
// Odd-order Nyquist contribution is zeroed.
std::vector<double> spectral_derivative(std::span<const double> samples, int order = 1);

// Periodic (zero-mean) antiderivative P of the zero-mean part of the samples.
// The full running integral from -pi is  mean * (gamma + pi) + P(gamma) - P(-pi).
std::vector<double> spectral_antiderivative_periodic(std::span<const double> samples);

// Trigonometric interpolation onto a new even grid size (pad or truncate modes).
std::vector<double> spectral_resample(std::span<const double> samples, int n_new);

// Exponential filter: coeff[k] *= exp(-strength * (k/(n/2))^order).
std::vector<double> spectral_filter(std::span<const double> samples, double strength,
                                    int order);

// Evaluates the trigonometric interpolant (and derivatives) at arbitrary gamma.
class TrigInterp {
public:
    TrigInterp() = default;
    explicit TrigInterp(std::span<const double> samples);

    double eval(double gamma, int order = 0) const;
    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<std::complex<double>> coeffs_;
};

double trapezoid_mean(std::span<const double> samples);

}  // namespace ap
