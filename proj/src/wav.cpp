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

#include "hlsep/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace hlsep {
namespace {

void put_u32(std::vector<unsigned char>& b, uint32_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
  b.push_back((v >> 16) & 0xff);
  b.push_back((v >> 24) & 0xff);
}

void put_u16(std::vector<unsigned char>& b, uint16_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
}

uint32_t get_u32(const unsigned char* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (uint32_t(p[3]) << 24);
}

uint16_t get_u16(const unsigned char* p) { return p[0] | (p[1] << 8); }

}  // namespace

void write_wav(const std::string& path, const Signal& sig) {
  validate(sig, "write_wav");
  const uint32_t n = static_cast<uint32_t>(sig.samples.size());
  const uint32_t data_bytes = n * 2;
  std::vector<unsigned char> buf;
  buf.reserve(44 + data_bytes);

  buf.insert(buf.end(), {'R', 'I', 'F', 'F'});
  put_u32(buf, 36 + data_bytes);
  buf.insert(buf.end(), {'W', 'A', 'V', 'E'});
  buf.insert(buf.end(), {'f', 'm', 't', ' '});
  put_u32(buf, 16);
  put_u16(buf, 1);  // PCM
  put_u16(buf, 1);  // mono
  put_u32(buf, static_cast<uint32_t>(sig.sample_rate_hz));
  put_u32(buf, static_cast<uint32_t>(sig.sample_rate_hz) * 2);
  put_u16(buf, 2);   // block align
  put_u16(buf, 16);  // bits per sample
  buf.insert(buf.end(), {'d', 'a', 't', 'a'});
  put_u32(buf, data_bytes);

  for (double v : sig.samples) {
    double c = std::clamp(v, -1.0, 1.0);
    auto q = static_cast<int16_t>(std::lrint(c * 32767.0));
    put_u16(buf, static_cast<uint16_t>(q));
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_wav: cannot open " + path);
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write_wav: write failed for " + path);
}

Signal read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_wav: cannot open " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 44 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path);

  // Walk chunks; require a PCM fmt chunk before data.
  std::size_t pos = 12;
  int sample_rate = 0;
  bool have_fmt = false;
  while (pos + 8 <= buf.size()) {
    const unsigned char* hdr = buf.data() + pos;
    uint32_t sz = get_u32(hdr + 4);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (sz < 16 || pos + 8 + sz > buf.size())
        throw std::runtime_error("read_wav: truncated fmt chunk: " + path);
      const unsigned char* f = hdr + 8;
      if (get_u16(f) != 1) throw std::runtime_error("read_wav: not PCM: " + path);
      if (get_u16(f + 2) != 1) throw std::runtime_error("read_wav: not mono: " + path);
      sample_rate = static_cast<int>(get_u32(f + 4));
      if (get_u16(f + 14) != 16)
        throw std::runtime_error("read_wav: not 16-bit: " + path);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error("read_wav: data before fmt: " + path);
      if (pos + 8 + sz > buf.size())
        throw std::runtime_error("read_wav: truncated data chunk: " + path);
      const unsigned char* d = hdr + 8;
      std::size_t n = sz / 2;
      if (n == 0) throw std::runtime_error("read_wav: empty data chunk: " + path);
      Signal sig;
      sig.sample_rate_hz = sample_rate;
      sig.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto q = static_cast<int16_t>(get_u16(d + 2 * i));
        sig.samples[i] = q / 32767.0;
      }
      validate(sig, "read_wav(" + path + ")");
      return sig;
    }
    pos += 8 + sz + (sz & 1);
  }
  throw std::runtime_error("read_wav: no data chunk: " + path);
}

}  // namespace hlsep
