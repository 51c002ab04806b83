// Copyright 2026 The RSVP Authors
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

#ifndef RSVP_RANDOM_H_
#define RSVP_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>

namespace rsvp {

// std::mt19937_64 output is fixed by the standard, but the std distributions
// are not. Everything seeded in this library draws through these helpers so
// generated graphs are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename Container>
  void Shuffle(Container& c) {
    for (size_t i = c.size(); i > 1; --i) {
      using std::swap;
      swap(c[i - 1], c[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rsvp

#endif  // RSVP_RANDOM_H_
