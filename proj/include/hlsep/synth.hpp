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

#ifndef HLSEP_SYNTH_HPP_
#define HLSEP_SYNTH_HPP_

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "hlsep/signal.hpp"

namespace hlsep {

// Seeded generators for ground-truth periodic test sources. These are
// stand-ins with the properties the separation pipeline exploits --
// periodicity, band placement, and relative dominance -- not clinical
// waveform models.

enum class SourceKind { kHeartLike, kLungLike };

struct SourceSpec {
  SourceKind kind = SourceKind::kHeartLike;
  double period_s = 1.0;
  double duration_s = 10.0;
  int sample_rate_hz = 8000;
  unsigned long long seed = 0;
  double jitter_pct = 0.0;  // cycle-length jitter, fraction of the period
};

/// Two windowed tone bursts per cycle (S1/S2-style morphology), energy in
/// 50-250 Hz, peak-normalized. Requires 0.4 <= period_s <= 1.5 and
/// duration_s >= 3 * period_s.
Signal gen_heart_like(const SourceSpec& spec);

/// Band-limited noise (60-300 Hz) under a periodic two-bump breath
/// envelope, peak-normalized. Requires 2.5 <= period_s <= 6.0 and
/// duration_s >= 3 * period_s.
Signal gen_lung_like(const SourceSpec& spec);

/// [mix1; mix2] = mixing * [heart; gain_lung * lung]. The matrix must be
/// nonsingular (condition number < 1e6). gain_lung defaults to 1.5, making
/// the lung source the energetically dominant one.
std::pair<Signal, Signal> mix(const Signal& heart, const Signal& lung,
                              const Eigen::Matrix2d& mixing,
                              double gain_lung = 1.5);

/// One reproducible synthetic case: both source specs plus the mixing.
struct CaseSpec {
  SourceSpec heart;
  SourceSpec lung;
  Eigen::Matrix2d mixing;
  double gain_lung = 1.5;
};

/// n reproducible cases. Heart periods are drawn from [0.6, 1.2] s, lung
/// periods from [3, 5] s, mixing matrices [[1, a], [b, 1]] with
/// a, b in [0.3, 0.75] redrawn until the condition number is <= 10.
/// Durations grow with the lung period so every source keeps at least
/// three cycles.
std::vector<CaseSpec> gen_case_set(int n, unsigned long long base_seed);

}  // namespace hlsep

#endif  // HLSEP_SYNTH_HPP_
