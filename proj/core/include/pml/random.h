// Copyright 2026 The PML Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PML_RANDOM_H_
#define PML_RANDOM_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pml {

// Seeded generator with platform-independent derived distributions. The
// standard library's distribution objects are implementation-defined, so
// only the raw mt19937_64 stream is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double Uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }
  // Uniform on {0, ..., n - 1}.
  std::size_t UniformIndex(std::size_t n) {
    return static_cast<std::size_t>(Uniform01() * static_cast<double>(n)) % n;
  }
  // Uniform point in the interior of the (k-1)-simplex.
  std::vector<double> SimplexPoint(std::size_t k) {
    std::vector<double> p(k);
    double total = 0.0;
    for (double& v : p) {
      v = -std::log(Uniform01());
      total += v;
    }
    for (double& v : p) v /= total;
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pml

#endif  // PML_RANDOM_H_
