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

#include "hlsep/bss_eval.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hlsep {

namespace {

constexpr double kCondLimit = 1e10;
constexpr double kZeroEnergyRatio = 1e-30;

Eigen::Map<const Eigen::VectorXd> as_vec(const Signal& s) {
  return {s.samples.data(), static_cast<Eigen::Index>(s.samples.size())};
}

// Least-squares projection of v onto the span of the given signals.
Eigen::VectorXd project_span(const Eigen::VectorXd& v,
                             const std::vector<const Signal*>& basis) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index n = v.size();
  Eigen::MatrixXd r(n, k);
  for (Eigen::Index j = 0; j < k; ++j) r.col(j) = as_vec(*basis[j]);
  Eigen::MatrixXd gram = r.transpose() * r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kCondLimit)
    throw std::invalid_argument(
        "decompose: reference set is (numerically) linearly dependent");
  Eigen::VectorXd coef = es.eigenvectors() *
                         (es.eigenvectors().transpose() * (r.transpose() * v))
                             .cwiseQuotient(es.eigenvalues());
  return r * coef;
}

double db_ratio(double num, double den) {
  if (den <= kZeroEnergyRatio * num)
    return std::numeric_limits<double>::infinity();
  if (num == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(num / den);
}

}  // namespace

Decomposition decompose(const Signal& estimate,
                        const std::vector<Signal>& references, int target_index,
                        const std::vector<Signal>& noise_references) {
  validate(estimate, "decompose estimate");
  if (references.empty())
    throw std::invalid_argument("decompose: no references");
  if (target_index < 0 ||
      target_index >= static_cast<int>(references.size()))
    throw std::invalid_argument("decompose: target_index out of range");
  for (const Signal& r : references) {
    validate(r, "decompose reference");
    if (r.samples.size() != estimate.samples.size())
      throw std::invalid_argument("decompose: reference length mismatch");
  }
  for (const Signal& r : noise_references)
    if (r.samples.size() != estimate.samples.size())
      throw std::invalid_argument("decompose: noise reference length mismatch");

  const Eigen::VectorXd e = as_vec(estimate);
  const Eigen::VectorXd tgt = as_vec(references[target_index]);
  const double tgt_energy = tgt.squaredNorm();
  if (tgt_energy == 0.0)
    throw std::invalid_argument("decompose: target reference is all zero");

  Decomposition d;
  d.s_target = (e.dot(tgt) / tgt_energy) * tgt;

  std::vector<const Signal*> ref_basis;
  for (const Signal& r : references) ref_basis.push_back(&r);
  const Eigen::VectorXd p_refs = project_span(e, ref_basis);
  d.e_interference = p_refs - d.s_target;

  if (noise_references.empty()) {
    d.e_noise = Eigen::VectorXd::Zero(e.size());
    d.e_artifact = e - p_refs;
  } else {
    std::vector<const Signal*> full = ref_basis;
    for (const Signal& r : noise_references) full.push_back(&r);
    const Eigen::VectorXd p_full = project_span(e, full);
    d.e_noise = p_full - p_refs;
    d.e_artifact = e - p_full;
  }
  return d;
}

double sdr(const Decomposition& d) {
  const double num = d.s_target.squaredNorm();
  const double den =
      (d.e_interference + d.e_noise + d.e_artifact).squaredNorm();
  return db_ratio(num, den);
}

double sir(const Decomposition& d) {
  return db_ratio(d.s_target.squaredNorm(), d.e_interference.squaredNorm());
}

double sar(const Decomposition& d) {
  const double num = (d.s_target + d.e_interference + d.e_noise).squaredNorm();
  return db_ratio(num, d.e_artifact.squaredNorm());
}

BssScores evaluate_scores(const Signal& estimate,
                          const std::vector<Signal>& references,
                          int target_index,
                          const std::vector<Signal>& noise_references) {
  const Decomposition d =
      decompose(estimate, references, target_index, noise_references);
  BssScores s;
  const double num = d.s_target.squaredNorm();
  const double err =
      (d.e_interference + d.e_noise + d.e_artifact).squaredNorm();
  if (num == 0.0 && err == 0.0) {
    s.valid = false;
    return s;
  }
  s.sdr_db = sdr(d);
  s.sir_db = sir(d);
  s.sar_db = sar(d);
  return s;
}

}  // namespace hlsep
