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

#ifndef HLSEP_PERIODICITY_HPP_
#define HLSEP_PERIODICITY_HPP_

#include <vector>

#include "hlsep/signal.hpp"

namespace hlsep {

struct PeriodEstimate {
  int period_samples = 0;
  double period_seconds = 0.0;
  double peak_strength = 0.0;  // normalized ACF value at the chosen lag, in [0, 1]
  bool is_periodic = false;
};

/// Normalized ACF value below which a signal is flagged non-periodic.
inline constexpr double kPeriodicityThreshold = 0.3;

/// Biased sample autocorrelation of the de-meaned signal for lags
/// 0..max_lag, normalized so r[0] = 1. Throws on a constant signal or
/// max_lag >= length.
std::vector<double> autocorrelation(const Signal& sig, int max_lag);

/// Autocorrelation of the Hann-windowed, de-meaned signal. `tapered` is
/// normalized to 1 at lag 0 and decays with the window overlap; `flat`
/// divides the window's own autocorrelation back out, removing the
/// finite-window taper so peak positions are unbiased even when the period
/// is a sizable fraction of the signal.
struct WindowedAcf {
  std::vector<double> tapered;
  std::vector<double> flat;
};
WindowedAcf windowed_autocorrelation(const Signal& sig, int max_lag);

/// Location of the strongest autocorrelation peak with lag in
/// [min_period_s, max_period_s]. Candidate peaks are strict local maxima
/// of the tapered ACF (so shorter lags win over their own multiples); the
/// winning lag is then refined on the flat ACF, whose peaks are free of
/// the taper's downward pull. Requires max_period_s * rate < length / 2.
///
/// When no local maximum exists in range, the global argmax in range is
/// returned with is_periodic = false.
PeriodEstimate estimate_period(const Signal& sig, double min_period_s,
                               double max_period_s,
                               double threshold = kPeriodicityThreshold);

/// Result of ordering two signals by estimated period.
/// Indices refer to the argument order (0 = first signal).
struct PeriodAssignment {
  int shorter_index = 0;
  int longer_index = 1;
  PeriodEstimate shorter;
  PeriodEstimate longer;
};

/// Orders two signals by estimated period ascending; ties go to the higher
/// peak strength. Symmetric in its arguments.
PeriodAssignment assign_by_period(const Signal& a, const Signal& b,
                                  double min_period_s, double max_period_s);

/// Amplitude envelope: moving average of |x| over a centered window of
/// win_s seconds. Used to expose the cycle structure of noise-carrier
/// signals, whose raw waveform decorrelates within milliseconds.
Signal signal_envelope(const Signal& sig, double win_s = 0.05);

}  // namespace hlsep

#endif  // HLSEP_PERIODICITY_HPP_
