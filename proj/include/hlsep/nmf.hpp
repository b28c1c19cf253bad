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

#ifndef HLSEP_NMF_HPP_
#define HLSEP_NMF_HPP_

#include <Eigen/Core>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlsep/signal.hpp"

namespace hlsep {

/// One recorded iteration of the divergence trace.
/// relative_change = |D(k) - D(k-1)| / D(k); 0 for the first iteration of
/// a layer.
struct ConvergenceRecord {
  int layer = 1;
  int iteration = 0;
  double divergence = 0.0;
  double relative_change = 0.0;
};

/// Result of a (possibly multilayer) factorization Y ~ A(1)...A(L) X.
///
/// a_layers[0] is I x J; later layers are J x J; x is J x T. All entries
/// are nonnegative, and every a_layers column sums to one (the inverse
/// scale is absorbed into x after each update).
struct NmfState {
  std::vector<Eigen::MatrixXd> a_layers;
  Eigen::MatrixXd x;
  std::vector<ConvergenceRecord> trace;
  int iterations_run = 0;
  bool converged = false;

  double final_divergence() const {
    return trace.empty() ? 0.0 : trace.back().divergence;
  }
  std::vector<double> divergence_history() const;
};

/// Thrown when a factorization aborts (non-finite divergence); carries the
/// state at the point of failure for diagnosis.
class FactorizeError : public std::runtime_error {
 public:
  FactorizeError(const std::string& msg, NmfState state)
      : std::runtime_error(msg), state_(std::move(state)) {}
  const NmfState& state() const { return state_; }

 private:
  NmfState state_;
};

/// Smallest offset lambda2 >= 0 with lambda1 * min(y) + lambda2 >= 0.
double auto_offset(const Eigen::MatrixXd& y, double lambda1);

/// Entrywise lambda1 * y + lambda2. Throws std::invalid_argument (reporting
/// the offending minimum) when the result would be negative.
NonNegMatrix affine_transform(const Eigen::MatrixXd& y, double lambda1,
                              double lambda2);

/// Alpha-divergence D(y || yhat). Continuous limits are used at alpha = 1
/// (KL) and alpha = 0 (reverse KL). Returns +infinity instead of throwing
/// when a zero model entry makes the divergence diverge.
double alpha_divergence(const NonNegMatrix& y, const NonNegMatrix& yhat,
                        double alpha);

/// One multiplicative update of the source matrix:
///   x_jt <- x_jt * (sum_i ahat_ij (y_it / [AX]_it)^alpha)^(1/alpha)
/// with ahat the l1 column-normalized A. [AX] is floored at
/// 1e-12 * max(y).
Eigen::MatrixXd update_x(const NonNegMatrix& y, const NonNegMatrix& a,
                         const NonNegMatrix& x, double alpha);

/// One multiplicative update of the mixing matrix:
///   a_ij <- a_ij * (sum_t xhat_jt (y_it / [AX]_it)^alpha)^(1/alpha)
/// with xhat the l1 row-normalized X. Column rescaling is a separate step
/// (normalize_columns) so the raw update stays testable.
Eigen::MatrixXd update_a(const NonNegMatrix& y, const NonNegMatrix& a,
                         const NonNegMatrix& x, double alpha);

/// Rescales every column of a to unit l1 sum and absorbs the inverse
/// scale into the corresponding row of x. Throws on an all-zero column.
void normalize_columns(Eigen::MatrixXd& a, Eigen::MatrixXd& x);

/// True iff the newest record satisfies |D(k) - D(k-1)| / D(k) <= epsilon,
/// or D(k) == 0 (exact factorization). Requires >= 2 records.
bool check_convergence(std::span<const ConvergenceRecord> history,
                       double epsilon);

/// Single-layer factorization from seeded uniform (0.1, 1.1) initialization,
/// alternating update_a (with column renormalization) and update_x until
/// check_convergence or cfg.max_iterations.
NmfState factorize(const NonNegMatrix& y, const NmfConfig& cfg);

/// Sequential multilayer training: layer 1 factorizes y, each later layer
/// factorizes the previous layer's x. Layer l uses seed cfg.seed + l - 1,
/// so num_layers = 1 reproduces factorize() bit for bit.
NmfState multilayer_factorize(const NonNegMatrix& y, const NmfConfig& cfg);

/// Writes the iteration trace as CSV (layer,iteration,divergence,
/// relative_change).
void write_trace_csv(const std::string& path, const NmfState& state);

}  // namespace hlsep

#endif  // HLSEP_NMF_HPP_
