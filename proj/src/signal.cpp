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

#include "hlsep/signal.hpp"

#include <cmath>

namespace hlsep {

void validate(const Signal& sig, const std::string& what) {
  if (sig.samples.empty())
    throw std::invalid_argument(what + ": empty sample buffer");
  if (sig.sample_rate_hz <= 0)
    throw std::invalid_argument(what + ": sample_rate_hz must be positive");
  for (double v : sig.samples)
    if (!std::isfinite(v))
      throw std::invalid_argument(what + ": non-finite sample");
}

bool validate_nonneg(const Eigen::MatrixXd& m) {
  return m.array().isFinite().all() && (m.array() >= 0.0).all();
}

void validate(const NmfConfig& cfg) {
  if (!(cfg.lambda1 > 0)) throw std::invalid_argument("NmfConfig: lambda1 must be > 0");
  if (!cfg.lambda2_auto && !(cfg.lambda2 >= 0))
    throw std::invalid_argument("NmfConfig: lambda2 must be >= 0");
  if (!(cfg.epsilon > 0)) throw std::invalid_argument("NmfConfig: epsilon must be > 0");
  if (cfg.num_layers < 1) throw std::invalid_argument("NmfConfig: num_layers must be >= 1");
  if (cfg.rank < 1) throw std::invalid_argument("NmfConfig: rank must be >= 1");
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("NmfConfig: max_iterations must be >= 1");
  if (!std::isfinite(cfg.alpha)) throw std::invalid_argument("NmfConfig: alpha must be finite");
  if (cfg.alpha == 0.0)
    throw std::invalid_argument("NmfConfig: alpha = 0 has no multiplicative update");
}

}  // namespace hlsep
