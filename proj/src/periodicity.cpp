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

#include "hlsep/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft_util.hpp"

namespace hlsep {

namespace {

std::vector<double> demean(const Signal& sig, const char* what) {
  validate(sig, what);
  std::vector<double> d = sig.samples;
  double mu = 0.0;
  for (double v : d) mu += v;
  mu /= static_cast<double>(d.size());
  double dev = 0.0;
  for (double& v : d) {
    v -= mu;
    dev = std::max(dev, std::abs(v));
  }
  if (dev == 0.0)
    throw std::invalid_argument(std::string(what) +
                                ": constant signal, periodicity undefined");
  return d;
}

}  // namespace

std::vector<double> autocorrelation(const Signal& sig, int max_lag) {
  if (max_lag < 1 || static_cast<std::size_t>(max_lag) >= sig.samples.size())
    throw std::invalid_argument("autocorrelation: need 1 <= max_lag < length");
  std::vector<double> d = demean(sig, "autocorrelation");
  std::vector<double> r =
      fft::autocorr_raw(d, static_cast<std::size_t>(max_lag));
  const double r0 = r[0];
  for (double& v : r) v /= r0;
  return r;
}

WindowedAcf windowed_autocorrelation(const Signal& sig, int max_lag) {
  if (max_lag < 1 || static_cast<std::size_t>(max_lag) >= sig.samples.size())
    throw std::invalid_argument(
        "windowed_autocorrelation: need 1 <= max_lag < length");
  std::vector<double> d = demean(sig, "windowed_autocorrelation");
  const std::size_t n = d.size();
  std::vector<double> w(n);
  for (std::size_t t = 0; t < n; ++t) {
    w[t] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(t) /
                                static_cast<double>(n - 1));
    d[t] *= w[t];
  }
  const auto lag = static_cast<std::size_t>(max_lag);
  std::vector<double> rw = fft::autocorr_raw(d, lag);
  std::vector<double> rh = fft::autocorr_raw(w, lag);

  WindowedAcf out;
  out.tapered.resize(lag + 1);
  out.flat.resize(lag + 1);
  const double rw0 = rw[0];
  const double scale0 = rw[0] / rh[0];
  for (std::size_t i = 0; i <= lag; ++i) {
    out.tapered[i] = rw[i] / rw0;
    out.flat[i] = (rw[i] / std::max(rh[i], 1e-30)) / scale0;
  }
  return out;
}

PeriodEstimate estimate_period(const Signal& sig, double min_period_s,
                               double max_period_s, double threshold) {
  validate(sig, "estimate_period");
  if (!(min_period_s > 0) || !(min_period_s < max_period_s))
    throw std::invalid_argument(
        "estimate_period: need 0 < min_period_s < max_period_s");
  const double fs = sig.sample_rate_hz;
  const int lmin = std::max(1, static_cast<int>(std::lround(min_period_s * fs)));
  const int lmax = static_cast<int>(std::lround(max_period_s * fs));
  if (2 * static_cast<std::size_t>(lmax) >= sig.samples.size())
    throw std::invalid_argument(
        "estimate_period: max_period_s * rate must stay below length / 2");

  const WindowedAcf acf = windowed_autocorrelation(sig, lmax + 1);
  const auto& tap = acf.tapered;
  const auto& flat = acf.flat;

  // Strongest strict local maximum of the tapered curve; its taper makes a
  // fundamental outweigh its own multiples. Ties resolve to the smaller lag.
  int best = -1;
  for (int i = lmin; i <= lmax; ++i) {
    if (tap[i] > tap[i - 1] && tap[i] > tap[i + 1]) {
      if (best < 0 || tap[i] > tap[best]) best = i;
    }
  }

  PeriodEstimate est;
  if (best < 0) {
    int tau = lmin;
    for (int i = lmin + 1; i <= lmax; ++i)
      if (tap[i] > tap[tau]) tau = i;
    est.period_samples = tau;
    est.period_seconds = tau / fs;
    est.peak_strength = std::clamp(flat[tau], 0.0, 1.0);
    est.is_periodic = false;
    return est;
  }

  // Refine on the flat curve within +-5% of the candidate lag.
  const int lo = std::max(lmin, static_cast<int>(best * 0.95));
  const int hi = std::min(lmax, static_cast<int>(best * 1.05) + 1);
  int tau = best;
  while (tau + 1 <= hi && flat[tau + 1] > flat[tau]) ++tau;
  while (tau - 1 >= lo && flat[tau - 1] > flat[tau]) --tau;

  est.period_samples = tau;
  est.period_seconds = tau / fs;
  est.peak_strength = std::clamp(flat[tau], 0.0, 1.0);
  est.is_periodic = est.peak_strength >= threshold;
  return est;
}

PeriodAssignment assign_by_period(const Signal& a, const Signal& b,
                                  double min_period_s, double max_period_s) {
  PeriodEstimate pa = estimate_period(a, min_period_s, max_period_s);
  PeriodEstimate pb = estimate_period(b, min_period_s, max_period_s);
  PeriodAssignment out;
  const bool a_first =
      pa.period_samples != pb.period_samples
          ? pa.period_samples < pb.period_samples
          : pa.peak_strength >= pb.peak_strength;
  out.shorter_index = a_first ? 0 : 1;
  out.longer_index = a_first ? 1 : 0;
  out.shorter = a_first ? pa : pb;
  out.longer = a_first ? pb : pa;
  return out;
}

Signal signal_envelope(const Signal& sig, double win_s) {
  validate(sig, "signal_envelope");
  const auto n = static_cast<long>(sig.samples.size());
  long w = std::lround(win_s * sig.sample_rate_hz);
  if (w < 1) w = 1;
  if (w % 2 == 0) ++w;
  const long half = w / 2;

  // Centered moving average of |x| via prefix sums.
  std::vector<double> prefix(n + 1, 0.0);
  for (long t = 0; t < n; ++t)
    prefix[t + 1] = prefix[t] + std::abs(sig.samples[t]);
  Signal out;
  out.sample_rate_hz = sig.sample_rate_hz;
  out.samples.resize(n);
  for (long t = 0; t < n; ++t) {
    const long a = std::max<long>(0, t - half);
    const long b = std::min<long>(n, t + half + 1);
    out.samples[t] = (prefix[b] - prefix[a]) / static_cast<double>(b - a);
  }
  return out;
}

}  // namespace hlsep
