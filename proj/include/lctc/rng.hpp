// Copyright 2026 LCTC Contributors
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

#ifndef LCTC_RNG_HPP
#define LCTC_RNG_HPP

#include <cstdint>
#include <random>

namespace lctc {

/// SplitMix64 step; used only to expand a user seed into substream seeds.
inline uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic, independently seeded generator for substream `stream` of
/// a run identified by `seed`. Streams with distinct indices are decorrelated.
inline std::mt19937_64 make_stream(uint64_t seed, uint64_t stream) {
    uint64_t s = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
    uint64_t w0 = splitmix64(s);
    uint64_t w1 = splitmix64(s);
    uint64_t w2 = splitmix64(s);
    uint64_t w3 = splitmix64(s);
    std::seed_seq seq{
        static_cast<uint32_t>(w0), static_cast<uint32_t>(w0 >> 32),
        static_cast<uint32_t>(w1), static_cast<uint32_t>(w1 >> 32),
        static_cast<uint32_t>(w2), static_cast<uint32_t>(w2 >> 32),
        static_cast<uint32_t>(w3), static_cast<uint32_t>(w3 >> 32)};
    return std::mt19937_64(seq);
}

/// Uniform double in [0, 1). Drawn from the top 53 bits so the mapping is
/// identical across standard libraries.
inline double uniform01(std::mt19937_64 &gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace lctc

#endif
