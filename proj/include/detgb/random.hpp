// Copyright 2026 The Authors.
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

#ifndef DETGB_RANDOM_HPP_
#define DETGB_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>

#include "detgb/field.hpp"

namespace detgb {

// SplitMix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// A stateless stream: the value at a key tuple depends only on the seed and
// the tuple, so draws are reproducible across platforms and thread layouts.
class KeyedRandom {
 public:
  explicit KeyedRandom(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::initializer_list<std::uint64_t> key) const {
    std::uint64_t h = splitmix64(seed_);
    for (auto k : key) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return h;
  }

  KeyedRandom split(std::uint64_t stream) const { return KeyedRandom(at({0x5eedULL, stream})); }

  // Uniform nonzero element: 1..p-1 over F_p, or a nonzero integer in
  // [-50, 50] over Q.
  Scalar nonzero(const Field& field, std::initializer_list<std::uint64_t> key) const {
    std::uint64_t h = at(key);
    if (field.is_prime()) {
      auto p = static_cast<std::uint64_t>(field.characteristic());
      return field.from_int(static_cast<std::int64_t>(1 + h % (p - 1)));
    }
    auto v = static_cast<std::int64_t>(h % 100);
    return field.from_int(v < 50 ? v - 50 : v - 49);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace detgb

#endif  // DETGB_RANDOM_HPP_
