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

// Thin FFTW wrappers shared by the DSP translation units. Planning is
// serialized behind a mutex (FFTW planning is not thread safe); plans use
// FFTW_ESTIMATE so results do not depend on runtime measurements.

#ifndef HLSEP_SRC_FFT_UTIL_HPP_
#define HLSEP_SRC_FFT_UTIL_HPP_

#include <cstddef>
#include <vector>

namespace hlsep::fft {

std::size_t next_pow2(std::size_t n);

/// Linear convolution of x and h, truncated to x.size() samples (causal
/// filtering with the tail discarded).
std::vector<double> convolve_truncated(const std::vector<double>& x,
                                       const std::vector<double>& h);

/// Raw (unnormalized) autocorrelation r[tau] = sum_t x[t] x[t+tau] for
/// tau = 0..max_lag, computed via zero-padded FFT.
std::vector<double> autocorr_raw(const std::vector<double>& x, std::size_t max_lag);

}  // namespace hlsep::fft

#endif  // HLSEP_SRC_FFT_UTIL_HPP_
