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

#ifndef HLSEP_BSS_EVAL_HPP_
#define HLSEP_BSS_EVAL_HPP_

#include <Eigen/Core>
#include <vector>

#include "hlsep/signal.hpp"

namespace hlsep {

/// Orthogonal decomposition of an estimate against reference sources:
///   estimate = s_target + e_interference + e_noise + e_artifact
/// s_target is collinear with the designated reference; e_interference
/// lies in the references' span orthogonal to the target's direction;
/// e_noise lives in the extra span of the noise references (zero when
/// none are given); e_artifact is the remainder.
struct Decomposition {
  Eigen::VectorXd s_target;
  Eigen::VectorXd e_interference;
  Eigen::VectorXd e_noise;
  Eigen::VectorXd e_artifact;
};

/// Nested-projection decomposition. Throws when lengths differ, the target
/// index is out of range, or the references' Gram matrix has condition
/// number above 1e10 (linearly dependent references).
Decomposition decompose(const Signal& estimate,
                        const std::vector<Signal>& references, int target_index,
                        const std::vector<Signal>& noise_references = {});

/// 10 log10(||s_target||^2 / ||e_interference + e_noise + e_artifact||^2).
/// Returns +infinity when the error energy is <= 1e-30 of the target
/// energy (the documented zero-error sentinel).
double sdr(const Decomposition& d);

/// As sdr, with only the interference energy in the denominator.
double sir(const Decomposition& d);

/// 10 log10(||s_target + e_interference + e_noise||^2 / ||e_artifact||^2).
double sar(const Decomposition& d);

/// Convenience wrapper computing all three scores. `valid` is false only
/// when the estimate has no target component and no error energy at all.
BssScores evaluate_scores(const Signal& estimate,
                          const std::vector<Signal>& references,
                          int target_index,
                          const std::vector<Signal>& noise_references = {});

}  // namespace hlsep

#endif  // HLSEP_BSS_EVAL_HPP_
