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

#ifndef HLSEP_WAV_HPP_
#define HLSEP_WAV_HPP_

#include <string>

#include "hlsep/signal.hpp"

namespace hlsep {

// 16-bit PCM mono little-endian WAV. Samples are clamped to [-1, 1] on
// write and scaled by 32767, so a write/read round trip changes a sample
// by at most 2^-15.

void write_wav(const std::string& path, const Signal& sig);
Signal read_wav(const std::string& path);

}  // namespace hlsep

#endif  // HLSEP_WAV_HPP_
