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

#ifndef HLSEP_SIGNAL_HPP_
#define HLSEP_SIGNAL_HPP_

#include <Eigen/Core>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlsep {

/// A sampled single-channel waveform. Amplitudes are dimensionless,
/// nominally in [-1, 1] after normalization.
struct Signal {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  Signal() = default;
  Signal(std::vector<double> s, int rate) : samples(std::move(s)), sample_rate_hz(rate) {}

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

/// Throws std::invalid_argument unless the signal is non-empty, finite
/// everywhere and has a positive sample rate.
void validate(const Signal& sig, const std::string& what = "signal");

/// True iff every entry of m is finite and >= 0.
bool validate_nonneg(const Eigen::MatrixXd& m);

/// Dense nonnegative matrix. Rows are channels/sources, columns are time
/// samples. Construction checks entrywise nonnegativity and finiteness.
class NonNegMatrix {
 public:
  explicit NonNegMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() < 1 || m_.cols() < 1)
      throw std::invalid_argument("NonNegMatrix: empty matrix");
    if (!validate_nonneg(m_))
      throw std::invalid_argument(
          "NonNegMatrix: entries must be finite and nonnegative");
  }

  const Eigen::MatrixXd& m() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

 private:
  Eigen::MatrixXd m_;
};

/// Hyperparameters of one NMF module.
///
/// lambda2 is the affine offset of the scale-and-offset input transform;
/// setting lambda2_auto makes the pipeline use the smallest feasible
/// offset for the actual input (see nmf::auto_offset).
struct NmfConfig {
  double alpha = 0.5;
  int num_layers = 1;
  double lambda1 = 1.0;
  double lambda2 = 0.0;
  bool lambda2_auto = true;
  double epsilon = 1e-9;
  int max_iterations = 1000;
  int rank = 2;
  unsigned int seed = 1;
};

/// Throws std::invalid_argument if any NmfConfig invariant is violated.
void validate(const NmfConfig& cfg);

/// SDR/SIR/SAR triple in decibels. A score of +infinity is the documented
/// sentinel for zero error energy; `valid` is false only in the degenerate
/// case where both the target projection and all error terms are zero.
struct BssScores {
  double sdr_db = 0.0;
  double sir_db = 0.0;
  double sar_db = 0.0;
  bool valid = true;

  static constexpr double kInf = std::numeric_limits<double>::infinity();
};

}  // namespace hlsep

#endif  // HLSEP_SIGNAL_HPP_
