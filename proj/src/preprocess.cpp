// Copyright 2026 The hlsep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hlsep/preprocess.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "fft_util.hpp"

namespace hlsep {

namespace fft {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// One forward/backward r2c transform pair of a fixed size.
struct RealFft {
  explicit RealFft(std::size_t n) : n_(n) {
    in_ = fftw_alloc_real(n);
    out_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), out_, in_, FFTW_ESTIMATE);
  }
  ~RealFft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(in_);
    fftw_free(out_);
  }
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t n_;
  double* in_;
  fftw_complex* out_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> convolve_truncated(const std::vector<double>& x,
                                       const std::vector<double>& h) {
  const std::size_t n = x.size(), m = h.size();
  const std::size_t nfft = next_pow2(n + m - 1);
  RealFft f(nfft);
  const std::size_t nc = nfft / 2 + 1;

  std::vector<std::complex<double>> hx(nc);
  std::fill(f.in_, f.in_ + nfft, 0.0);
  std::copy(h.begin(), h.end(), f.in_);
  fftw_execute(f.fwd_);
  for (std::size_t i = 0; i < nc; ++i) hx[i] = {f.out_[i][0], f.out_[i][1]};

  std::fill(f.in_, f.in_ + nfft, 0.0);
  std::copy(x.begin(), x.end(), f.in_);
  fftw_execute(f.fwd_);
  for (std::size_t i = 0; i < nc; ++i) {
    std::complex<double> v = std::complex<double>(f.out_[i][0], f.out_[i][1]) * hx[i];
    f.out_[i][0] = v.real();
    f.out_[i][1] = v.imag();
  }
  fftw_execute(f.bwd_);

  std::vector<double> y(n);
  const double scale = 1.0 / static_cast<double>(nfft);
  for (std::size_t i = 0; i < n; ++i) y[i] = f.in_[i] * scale;
  return y;
}

std::vector<double> autocorr_raw(const std::vector<double>& x, std::size_t max_lag) {
  const std::size_t n = x.size();
  const std::size_t nfft = next_pow2(2 * n);
  RealFft f(nfft);
  const std::size_t nc = nfft / 2 + 1;

  std::fill(f.in_, f.in_ + nfft, 0.0);
  std::copy(x.begin(), x.end(), f.in_);
  fftw_execute(f.fwd_);
  for (std::size_t i = 0; i < nc; ++i) {
    const double re = f.out_[i][0], im = f.out_[i][1];
    f.out_[i][0] = re * re + im * im;
    f.out_[i][1] = 0.0;
  }
  fftw_execute(f.bwd_);

  std::vector<double> r(max_lag + 1);
  const double scale = 1.0 / static_cast<double>(nfft);
  for (std::size_t i = 0; i <= max_lag && i < n; ++i) r[i] = f.in_[i] * scale;
  return r;
}

}  // namespace fft

namespace {

double bessel_i0(double x) {
  // Power series; converges quickly for the beta values used here.
  double sum = 1.0, term = 1.0;
  const double q = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double kaiser_beta(double atten_db) {
  if (atten_db > 50.0) return 0.1102 * (atten_db - 8.7);
  if (atten_db >= 21.0)
    return 0.5842 * std::pow(atten_db - 21.0, 0.4) + 0.07886 * (atten_db - 21.0);
  return 0.0;
}

}  // namespace

FirFilter design_bandpass(const BandpassSpec& spec, int sample_rate_hz) {
  const double fs = sample_rate_hz;
  const double nyq = fs / 2.0;
  const double lo = spec.low_cut_hz, hi = spec.high_cut_hz;
  const double tw = spec.transition_width_hz;

  if (sample_rate_hz <= 0)
    throw std::invalid_argument("design_bandpass: sample rate must be positive");
  if (!(lo > 0.0))
    throw std::invalid_argument("design_bandpass: low_cut_hz must be > 0");
  if (!(lo < hi))
    throw std::invalid_argument("design_bandpass: requires low_cut_hz < high_cut_hz");
  if (!(hi < nyq))
    throw std::invalid_argument("design_bandpass: high_cut_hz must be below Nyquist");
  if (!(spec.stopband_atten_db > 0))
    throw std::invalid_argument("design_bandpass: stopband_atten_db must be > 0");
  if (!(tw > 0))
    throw std::invalid_argument("design_bandpass: transition_width_hz must be > 0");
  if (!(lo - tw > 0.0))
    throw std::invalid_argument(
        "design_bandpass: lower stopband edge low_cut_hz - transition_width_hz "
        "must stay above 0 Hz");
  if (!(hi + tw < nyq))
    throw std::invalid_argument(
        "design_bandpass: upper stopband edge high_cut_hz + transition_width_hz "
        "must stay below Nyquist");

  // Kaiser estimate for the minimum tap count at this attenuation and
  // transition width, rounded up to an odd (type I) length.
  const double beta = kaiser_beta(spec.stopband_atten_db);
  const double delta_omega = 2.0 * std::numbers::pi * tw / fs;
  int taps = static_cast<int>(
                 std::ceil((spec.stopband_atten_db - 7.95) / (2.285 * delta_omega))) +
             1;
  if (taps % 2 == 0) ++taps;
  if (taps < 3) taps = 3;

  // Ideal cutoffs sit mid-transition so the passband edge keeps ~unity gain
  // and the stopband edge reaches full attenuation.
  const double f1 = (lo - tw / 2.0) / fs;
  const double f2 = (hi + tw / 2.0) / fs;
  const int mid = (taps - 1) / 2;

  FirFilter fir;
  fir.sample_rate_hz = sample_rate_hz;
  fir.taps.resize(taps);
  const double i0b = bessel_i0(beta);
  for (int k = 0; k < taps; ++k) {
    const int m = k - mid;
    double ideal;
    if (m == 0) {
      ideal = 2.0 * (f2 - f1);
    } else {
      const double pm = std::numbers::pi * m;
      ideal = (std::sin(2.0 * pm * f2) - std::sin(2.0 * pm * f1)) / pm;
    }
    const double r = static_cast<double>(m) / mid;
    const double w = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0b;
    fir.taps[k] = ideal * w;
  }
  return fir;
}

double magnitude_response(const FirFilter& fir, double f_hz) {
  const double w = 2.0 * std::numbers::pi * f_hz / fir.sample_rate_hz;
  std::complex<double> h = 0.0;
  for (std::size_t k = 0; k < fir.taps.size(); ++k)
    h += fir.taps[k] * std::exp(std::complex<double>(0.0, -w * static_cast<double>(k)));
  return std::abs(h);
}

Signal apply_filter(const Signal& sig, const FirFilter& fir) {
  validate(sig, "apply_filter");
  if (fir.taps.empty()) throw std::invalid_argument("apply_filter: empty filter");
  if (fir.sample_rate_hz != sig.sample_rate_hz)
    throw std::invalid_argument(
        "apply_filter: filter was designed for a different sample rate");
  Signal out;
  out.sample_rate_hz = sig.sample_rate_hz;
  out.samples = fft::convolve_truncated(sig.samples, fir.taps);
  return out;
}

void normalize_inplace(std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("normalize: empty signal");
  // Two-pass mean removal keeps the residual mean at machine-noise level
  // even for long buffers.
  for (int pass = 0; pass < 2; ++pass) {
    double mu = 0.0;
    for (double v : x) mu += v;
    mu /= static_cast<double>(x.size());
    for (double& v : x) v -= mu;
  }
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0)
    throw std::invalid_argument("normalize: constant signal (zero peak deviation)");
  for (double& v : x) v /= peak;
}

Signal normalize(const Signal& sig) {
  validate(sig, "normalize");
  Signal out = sig;
  normalize_inplace(out.samples);
  return out;
}

}  // namespace hlsep
