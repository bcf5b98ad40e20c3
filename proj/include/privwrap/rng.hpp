// Copyright 2026 The Privwrap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVWRAP_RNG_HPP_
#define PRIVWRAP_RNG_HPP_

#include <cstdint>

namespace privwrap {

// Counter-based SplitMix64 stream. Identical seed => identical draw sequence.
// Each draw consumes exactly one counter increment, so samplers built on top
// are bit-reproducible given (seed, draw index).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), counter_(0) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1); never returns 0 or 1, so inverse-CDF
  // transforms stay finite.
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Independent substream for worker i (disjoint from this stream for all
  // practical purposes).
  RandomStream substream(std::uint64_t stream_id) const {
    std::uint64_t z = seed_ ^ (0x6A09E667F3BCC909ULL + stream_id * 0xD1B54A32D192ED03ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return RandomStream(z ^ (z >> 31));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace privwrap

#endif  // PRIVWRAP_RNG_HPP_
