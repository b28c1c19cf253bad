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

#include "hlsep/synth.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hlsep/preprocess.hpp"
#include "rng_util.hpp"

namespace hlsep {

namespace {

void peak_normalize(std::vector<double>& x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw std::runtime_error("synth: generated silence");
  for (double& v : x) v /= peak;
}

double hann_at(long i, long width) {
  return 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(width - 1));
}

void add_hann_bump(std::vector<double>& env, long start, long width, double amp) {
  const long n = static_cast<long>(env.size());
  for (long i = std::max(0l, -start); i < width; ++i) {
    const long t = start + i;
    if (t >= n) break;
    env[t] += amp * hann_at(i, width);
  }
}

void validate_spec(const SourceSpec& spec, SourceKind expected, double min_p,
                   double max_p) {
  if (spec.kind != expected)
    throw std::invalid_argument("synth: wrong SourceKind for this generator");
  if (!(spec.period_s >= min_p && spec.period_s <= max_p))
    throw std::invalid_argument("synth: period_s outside the generator's range");
  if (!(spec.duration_s >= 3.0 * spec.period_s))
    throw std::invalid_argument(
        "synth: duration_s must be at least 3 * period_s");
  if (spec.sample_rate_hz <= 0)
    throw std::invalid_argument("synth: sample_rate_hz must be positive");
  if (spec.jitter_pct < 0.0 || spec.jitter_pct > 0.2)
    throw std::invalid_argument("synth: jitter_pct must be within [0, 0.2]");
}

}  // namespace

Signal gen_heart_like(const SourceSpec& spec) {
  validate_spec(spec, SourceKind::kHeartLike, 0.4, 1.5);
  const double fs = spec.sample_rate_hz;
  const long n = std::lround(spec.duration_s * fs);

  rng::Stream rng(spec.seed);
  const double f1 = rng.uniform(70.0, 110.0);
  const double f2 = rng.uniform(90.0, 150.0);
  const long w1 = std::lround(0.12 * fs);
  const long w2 = std::lround(0.09 * fs);

  std::vector<double> x(n, 0.0);
  double cycle_start = rng.uniform(0.0, spec.period_s);
  while (true) {
    const long s1 = std::lround(cycle_start * fs);
    if (s1 >= n) break;
    const long s2 = s1 + std::lround(0.33 * spec.period_s * fs);
    for (auto [start, width, freq, amp] :
         {std::tuple{s1, w1, f1, 1.0}, std::tuple{s2, w2, f2, 0.7}}) {
      for (long i = 0; i < width; ++i) {
        const long t = start + i;
        if (t < 0 || t >= n) continue;
        const double tt = static_cast<double>(i) / fs;
        x[t] += amp * hann_at(i, width) *
                std::sin(2.0 * std::numbers::pi * freq * tt);
      }
    }
    cycle_start +=
        spec.period_s * (1.0 + spec.jitter_pct * rng.uniform(-1.0, 1.0));
  }
  peak_normalize(x);
  return {std::move(x), spec.sample_rate_hz};
}

Signal gen_lung_like(const SourceSpec& spec) {
  validate_spec(spec, SourceKind::kLungLike, 2.5, 6.0);
  const double fs = spec.sample_rate_hz;
  const long n = std::lround(spec.duration_s * fs);

  rng::Stream rng(spec.seed);
  Signal noise;
  noise.sample_rate_hz = spec.sample_rate_hz;
  noise.samples.resize(n);
  for (long t = 0; t < n; ++t) noise.samples[t] = rng.normal();
  noise = apply_filter(noise, design_bandpass(lung_band(), spec.sample_rate_hz));

  // Inhale/exhale bumps over a small positive floor; the quiet stretches
  // between breaths carry the cycle structure the separator relies on.
  std::vector<double> env(n, 0.04);
  const long period = std::lround(spec.period_s * fs);
  double cycle_start = rng.uniform(0.0, spec.period_s);
  double pos = cycle_start - spec.period_s;  // allow a partial leading cycle
  while (true) {
    const long c = std::lround(pos * fs);
    if (c >= n) break;
    add_hann_bump(env, c, std::lround(0.34 * period), 1.0);
    add_hann_bump(env, c + std::lround(0.45 * period), std::lround(0.26 * period),
                  0.58);
    pos += spec.period_s * (1.0 + spec.jitter_pct * rng.uniform(-1.0, 1.0));
  }

  std::vector<double> x(n);
  for (long t = 0; t < n; ++t) x[t] = noise.samples[t] * env[t];
  peak_normalize(x);
  return {std::move(x), spec.sample_rate_hz};
}

std::pair<Signal, Signal> mix(const Signal& heart, const Signal& lung,
                              const Eigen::Matrix2d& mixing, double gain_lung) {
  validate(heart, "mix heart");
  validate(lung, "mix lung");
  if (heart.samples.size() != lung.samples.size() ||
      heart.sample_rate_hz != lung.sample_rate_hz)
    throw std::invalid_argument("mix: sources must share length and rate");
  if (!(gain_lung > 0)) throw std::invalid_argument("mix: gain_lung must be > 0");
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(mixing);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin >= 1e6)
    throw std::invalid_argument("mix: mixing matrix is singular");

  const std::size_t n = heart.samples.size();
  Signal m1, m2;
  m1.sample_rate_hz = m2.sample_rate_hz = heart.sample_rate_hz;
  m1.samples.resize(n);
  m2.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double h = heart.samples[t];
    const double l = gain_lung * lung.samples[t];
    m1.samples[t] = mixing(0, 0) * h + mixing(0, 1) * l;
    m2.samples[t] = mixing(1, 0) * h + mixing(1, 1) * l;
  }
  return {std::move(m1), std::move(m2)};
}

std::vector<CaseSpec> gen_case_set(int n, unsigned long long base_seed) {
  if (n < 1) throw std::invalid_argument("gen_case_set: n must be >= 1");
  std::vector<CaseSpec> cases;
  cases.reserve(n);
  rng::Stream rng(base_seed);
  for (int i = 0; i < n; ++i) {
    CaseSpec c;
    const double hp = rng.uniform(0.6, 1.2);
    const double lp = rng.uniform(3.0, 5.0);
    const double dur = std::max(10.0, 3.0 * lp);
    c.heart = {SourceKind::kHeartLike, hp, dur, 8000,
               base_seed * 1000003ull + static_cast<unsigned long long>(i) * 2 + 1,
               0.0};
    c.lung = {SourceKind::kLungLike, lp, dur, 8000,
              base_seed * 1000003ull + static_cast<unsigned long long>(i) * 2 + 2,
              0.0};
    while (true) {
      const double a = rng.uniform(0.3, 0.75);
      const double b = rng.uniform(0.3, 0.75);
      c.mixing << 1.0, a, b, 1.0;
      Eigen::JacobiSVD<Eigen::Matrix2d> svd(c.mixing);
      if (svd.singularValues()(0) / svd.singularValues()(1) <= 10.0) break;
    }
    c.gain_lung = 1.5;
    cases.push_back(c);
  }
  return cases;
}

}  // namespace hlsep
