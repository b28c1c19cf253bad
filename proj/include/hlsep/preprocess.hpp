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

#ifndef HLSEP_PREPROCESS_HPP_
#define HLSEP_PREPROCESS_HPP_

#include <vector>

#include "hlsep/signal.hpp"

namespace hlsep {

/// Bandpass design request. The filter must stay within 3 dB of unity
/// across [low_cut_hz, high_cut_hz] and reach stopband_atten_db one
/// transition width outside each band edge.
struct BandpassSpec {
  double low_cut_hz = 0.0;
  double high_cut_hz = 0.0;
  double stopband_atten_db = 60.0;
  double transition_width_hz = 20.0;
};

inline BandpassSpec heart_band() { return {50.0, 250.0, 60.0, 20.0}; }
inline BandpassSpec lung_band() { return {60.0, 300.0, 60.0, 20.0}; }

/// Linear-phase FIR filter (odd tap count, symmetric coefficients).
struct FirFilter {
  std::vector<double> taps;
  int sample_rate_hz = 0;

  int order() const { return static_cast<int>(taps.size()) - 1; }
};

/// Kaiser-windowed sinc bandpass of minimum odd length meeting the spec.
/// Throws std::invalid_argument naming the violated constraint when the
/// band is degenerate or the transition regions fall outside (0, fs/2).
FirFilter design_bandpass(const BandpassSpec& spec, int sample_rate_hz);

/// Magnitude response |H(f)| of the filter at frequency f_hz.
double magnitude_response(const FirFilter& fir, double f_hz);

/// Causal FIR filtering; output has the input's length and sample rate.
Signal apply_filter(const Signal& sig, const FirFilter& fir);

/// Zero-mean, peak-one normalization: (x - mean) / max|x - mean|.
/// Throws std::invalid_argument on a constant signal.
Signal normalize(const Signal& sig);

/// normalize() on a raw buffer, in place.
void normalize_inplace(std::vector<double>& x);

}  // namespace hlsep

#endif  // HLSEP_PREPROCESS_HPP_
