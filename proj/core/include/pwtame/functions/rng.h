// Copyright 2026 The pwtame Authors.
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

#ifndef PWTAME_FUNCTIONS_RNG_H_
#define PWTAME_FUNCTIONS_RNG_H_

#include <cstdint>
#include <random>

namespace pwtame::functions {

// Portable random stream used by every sampler in the toolkit.
//
// The bit stream is std::mt19937_64 seeded with the raw seed; its output
// sequence is fixed by the C++ standard, so samples are identical across
// compilers and platforms. Uniform reals take the top 53 bits of each draw and
// scale by 2^-53. Gaussian draws use the Box-Muller transform on two uniforms
// and hand out both variates before drawing again.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextBits() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal.
  double Normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pwtame::functions

#endif  // PWTAME_FUNCTIONS_RNG_H_
