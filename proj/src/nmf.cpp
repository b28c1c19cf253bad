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

#include "hlsep/nmf.hpp"

#include <cmath>
#include <fstream>
#include <random>

namespace hlsep {

namespace {

constexpr double kFloorScale = 1e-12;

// r := r^alpha, with branch-free fast paths for the alphas the pipeline
// and the parameter sweep actually use.
void pow_inplace(Eigen::ArrayXXd& r, double alpha) {
  if (alpha == 0.5) {
    r = r.sqrt();
  } else if (alpha == 1.0) {
    // identity
  } else if (alpha == 2.0) {
    r = r.square();
  } else if (alpha == -1.0) {
    r = r.inverse();
  } else {
    r = r.pow(alpha);
  }
}

void pow_inplace(Eigen::MatrixXd& m, double alpha) {
  if (alpha == 0.5) {
    m.array() = m.array().sqrt();
  } else if (alpha == 1.0) {
    // identity
  } else if (alpha == 2.0) {
    m.array() = m.array().square();
  } else if (alpha == -1.0) {
    m.array() = m.array().inverse();
  } else {
    m.array() = m.array().pow(alpha);
  }
}

double divergence_impl(const Eigen::ArrayXXd& y, const Eigen::ArrayXXd& p,
                       double alpha, double floor) {
  const Eigen::ArrayXXd pf = p.max(floor);
  double d;
  if (alpha == 0.5) {
    d = 4.0 * (0.5 * (y + pf) - (y * pf).sqrt()).sum();
  } else if (alpha == 1.0) {
    d = ((y > 0.0).select(y * (y.max(1e-300) / pf).log(), 0.0) - y + pf).sum();
  } else if (alpha == 0.0) {
    if (((y <= 0.0) && (pf > floor)).any())
      return std::numeric_limits<double>::infinity();
    d = (pf * (pf / y.max(1e-300)).log() - pf + y).sum();
  } else {
    if (alpha > 1.0 || alpha < 0.0) {
      // y^alpha * p^(1-alpha) diverges where p (or y, for negative alpha)
      // vanishes against a positive partner.
      if (alpha < 0.0 && ((y <= 0.0) && (pf > 0.0)).any())
        return std::numeric_limits<double>::infinity();
    }
    Eigen::ArrayXXd cross =
        (y > 0.0).select(y.pow(alpha) * pf.pow(1.0 - alpha), 0.0);
    d = (cross - alpha * y + (alpha - 1.0) * pf).sum() / (alpha * (alpha - 1.0));
  }
  if (std::isnan(d)) return std::numeric_limits<double>::quiet_NaN();
  return d < 0.0 ? 0.0 : d;  // clamp FP round-off below zero
}

void check_update_preconditions(const NonNegMatrix& y, const NonNegMatrix& a,
                                const NonNegMatrix& x, double alpha) {
  if (a.rows() != y.rows() || x.cols() != y.cols() || a.cols() != x.rows())
    throw std::invalid_argument("nmf update: shapes do not chain");
  if (alpha == 0.0)
    throw std::invalid_argument("nmf update: alpha = 0 is not defined");
  if ((a.m().colwise().sum().array() <= 0.0).any())
    throw std::invalid_argument("nmf update: A has an all-zero column");
}

struct LayerResult {
  Eigen::MatrixXd a;
  Eigen::MatrixXd x;
  std::vector<ConvergenceRecord> trace;
  bool converged = false;
};

// Hot path shared by factorize and multilayer_factorize. Workspaces are
// reused across iterations; matrices are small-by-long (I x T with I = 2
// in the pipeline), so elementwise passes dominate.
LayerResult run_layer(const Eigen::MatrixXd& y, const NmfConfig& cfg, int layer,
                      unsigned int seed) {
  const Eigen::Index rows = y.rows(), cols = y.cols(), rank = cfg.rank;
  const double floor = kFloorScale * y.maxCoeff();
  const double inv_alpha = 1.0 / cfg.alpha;

  // 53-bit uniform draws in (0.1, 1.1), row-major fill order. Hand-rolled
  // mapping keeps streams identical across standard library
  // implementations.
  std::mt19937_64 gen(seed);
  auto uniform = [&gen]() {
    return 0.1 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  Eigen::MatrixXd a(rows, rank), x(rank, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) a(i, j) = uniform();
  for (Eigen::Index j = 0; j < rank; ++j)
    for (Eigen::Index t = 0; t < cols; ++t) x(j, t) = uniform();
  normalize_columns(a, x);

  Eigen::ArrayXXd prod(rows, cols), ratio(rows, cols);
  Eigen::MatrixXd a_num(rows, rank);
  Eigen::MatrixXd x_num(rank, cols);

  LayerResult res;
  res.trace.reserve(static_cast<std::size_t>(cfg.max_iterations));
  double prev_d = 0.0;

  for (int k = 1; k <= cfg.max_iterations; ++k) {
    prod = (a * x).array();
    ratio = y.array() / prod.max(floor);
    pow_inplace(ratio, cfg.alpha);
    a_num.noalias() = ratio.matrix() * x.transpose();
    a_num.array().rowwise() /= x.rowwise().sum().transpose().array();
    pow_inplace(a_num, inv_alpha);
    a.array() *= a_num.array();
    normalize_columns(a, x);

    prod = (a * x).array();
    ratio = y.array() / prod.max(floor);
    pow_inplace(ratio, cfg.alpha);
    x_num.noalias() = a.transpose() * ratio.matrix();
    pow_inplace(x_num, inv_alpha);
    x.array() *= x_num.array();

    prod = (a * x).array();
    const double d = divergence_impl(y.array(), prod, cfg.alpha, floor);

    ConvergenceRecord rec;
    rec.layer = layer;
    rec.iteration = k;
    rec.divergence = d;
    rec.relative_change = (k == 1 || d == 0.0) ? 0.0 : std::abs(d - prev_d) / d;
    res.trace.push_back(rec);

    if (!std::isfinite(d)) {
      res.a = std::move(a);
      res.x = std::move(x);
      NmfState bad;
      bad.a_layers.push_back(res.a);
      bad.x = res.x;
      bad.trace = res.trace;
      bad.iterations_run = k;
      throw FactorizeError("factorize: non-finite divergence at layer " +
                               std::to_string(layer) + ", iteration " +
                               std::to_string(k),
                           std::move(bad));
    }
    if (k >= 2 && (d == 0.0 || rec.relative_change <= cfg.epsilon)) {
      res.converged = true;
      prev_d = d;
      break;
    }
    prev_d = d;
  }

  res.a = std::move(a);
  res.x = std::move(x);
  return res;
}

}  // namespace

std::vector<double> NmfState::divergence_history() const {
  std::vector<double> h;
  h.reserve(trace.size());
  for (const auto& r : trace) h.push_back(r.divergence);
  return h;
}

double auto_offset(const Eigen::MatrixXd& y, double lambda1) {
  if (!(lambda1 > 0)) throw std::invalid_argument("auto_offset: lambda1 must be > 0");
  return std::max(0.0, -lambda1 * y.minCoeff());
}

NonNegMatrix affine_transform(const Eigen::MatrixXd& y, double lambda1,
                              double lambda2) {
  if (!(lambda1 > 0))
    throw std::invalid_argument("affine_transform: lambda1 must be > 0");
  if (!(lambda2 >= 0))
    throw std::invalid_argument("affine_transform: lambda2 must be >= 0");
  const double m = y.minCoeff();
  if (lambda1 * m + lambda2 < 0)
    throw std::invalid_argument(
        "affine_transform: lambda1 * min + lambda2 = " +
        std::to_string(lambda1 * m + lambda2) + " < 0 (min = " +
        std::to_string(m) + ")");
  Eigen::MatrixXd out = (lambda1 * y.array() + lambda2).cwiseMax(0.0).matrix();
  return NonNegMatrix(std::move(out));
}

double alpha_divergence(const NonNegMatrix& y, const NonNegMatrix& yhat,
                        double alpha) {
  if (y.rows() != yhat.rows() || y.cols() != yhat.cols())
    throw std::invalid_argument("alpha_divergence: shape mismatch");
  if (!std::isfinite(alpha))
    throw std::invalid_argument("alpha_divergence: alpha must be finite");
  // A zero floor keeps the public cost exact; zero model entries show up
  // as +infinity rather than being masked.
  const double d = divergence_impl(y.m().array(), yhat.m().array(), alpha, 0.0);
  if (std::isnan(d)) return std::numeric_limits<double>::infinity();
  return d;
}

Eigen::MatrixXd update_x(const NonNegMatrix& y, const NonNegMatrix& a,
                         const NonNegMatrix& x, double alpha) {
  check_update_preconditions(y, a, x, alpha);
  const double floor = kFloorScale * y.m().maxCoeff();
  Eigen::MatrixXd ahat = a.m();
  ahat.array().rowwise() /= ahat.colwise().sum().array();
  Eigen::ArrayXXd ratio = y.m().array() / (a.m() * x.m()).array().max(floor);
  pow_inplace(ratio, alpha);
  Eigen::MatrixXd bracket = ahat.transpose() * ratio.matrix();
  pow_inplace(bracket, 1.0 / alpha);
  return x.m().cwiseProduct(bracket);
}

Eigen::MatrixXd update_a(const NonNegMatrix& y, const NonNegMatrix& a,
                         const NonNegMatrix& x, double alpha) {
  check_update_preconditions(y, a, x, alpha);
  if ((x.m().rowwise().sum().array() <= 0.0).any())
    throw std::invalid_argument("update_a: X has an all-zero row");
  const double floor = kFloorScale * y.m().maxCoeff();
  Eigen::ArrayXXd ratio = y.m().array() / (a.m() * x.m()).array().max(floor);
  pow_inplace(ratio, alpha);
  Eigen::MatrixXd bracket = ratio.matrix() * x.m().transpose();
  bracket.array().rowwise() /= x.m().rowwise().sum().transpose().array();
  pow_inplace(bracket, 1.0 / alpha);
  return a.m().cwiseProduct(bracket);
}

void normalize_columns(Eigen::MatrixXd& a, Eigen::MatrixXd& x) {
  Eigen::VectorXd s = a.colwise().sum();
  if ((s.array() <= 0.0).any())
    throw std::invalid_argument("normalize_columns: all-zero column in A");
  a.array().rowwise() /= s.transpose().array();
  x.array().colwise() *= s.array();
}

bool check_convergence(std::span<const ConvergenceRecord> history,
                       double epsilon) {
  if (history.size() < 2)
    throw std::invalid_argument("check_convergence: needs at least 2 records");
  const double d = history.back().divergence;
  const double d_prev = history[history.size() - 2].divergence;
  if (d == 0.0) return true;  // exact factorization reached
  return std::abs(d - d_prev) / d <= epsilon;
}

NmfState factorize(const NonNegMatrix& y, const NmfConfig& cfg) {
  validate(cfg);
  LayerResult r = run_layer(y.m(), cfg, 1, cfg.seed);
  NmfState state;
  state.a_layers.push_back(std::move(r.a));
  state.x = std::move(r.x);
  state.iterations_run = static_cast<int>(r.trace.size());
  state.trace = std::move(r.trace);
  state.converged = r.converged;
  return state;
}

NmfState multilayer_factorize(const NonNegMatrix& y, const NmfConfig& cfg) {
  validate(cfg);
  NmfState state;
  state.converged = true;
  const Eigen::MatrixXd* target = &y.m();
  Eigen::MatrixXd current;
  for (int layer = 1; layer <= cfg.num_layers; ++layer) {
    LayerResult r;
    try {
      r = run_layer(*target, cfg, layer, cfg.seed + static_cast<unsigned>(layer - 1));
    } catch (FactorizeError& e) {
      NmfState bad = e.state();
      bad.a_layers.insert(bad.a_layers.begin(), state.a_layers.begin(),
                          state.a_layers.end());
      bad.trace.insert(bad.trace.begin(), state.trace.begin(), state.trace.end());
      bad.iterations_run += state.iterations_run;
      throw FactorizeError(e.what(), std::move(bad));
    }
    state.a_layers.push_back(std::move(r.a));
    state.iterations_run += static_cast<int>(r.trace.size());
    state.trace.insert(state.trace.end(), r.trace.begin(), r.trace.end());
    state.converged = state.converged && r.converged;
    current = std::move(r.x);
    target = &current;
  }
  state.x = std::move(current);
  return state;
}

void write_trace_csv(const std::string& path, const NmfState& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_trace_csv: cannot open " + path);
  out << "layer,iteration,divergence,relative_change\n";
  char line[128];
  for (const auto& r : state.trace) {
    std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g\n", r.layer, r.iteration,
                  r.divergence, r.relative_change);
    out << line;
  }
}

}  // namespace hlsep
