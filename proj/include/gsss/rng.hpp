/*
   Copyright 2026 the gsss authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsss/numeric.hpp"

namespace gsss {

/// Deterministic generator seeded from an arbitrary byte string.
///
/// Every random choice in the library (prime candidates, Miller-Rabin
/// witnesses, threshold coefficients, synthetic benchmark instances) flows
/// from one of these, so a run is fully reproducible from its seed bytes.
/// The stream is fixed for all time: FNV-1a over the seed, expanded with
/// splitmix64 into a xoshiro256** state. Not a cryptographic DRBG; the
/// dealer is trusted and offline.
class DeterministicRng {
 public:
  explicit DeterministicRng(const std::vector<std::uint8_t>& seed);
  explicit DeterministicRng(std::string_view seed);

  std::uint64_t next_u64();

  /// Uniform integer in [0, 2^nbits).
  BigInt random_bits(std::size_t nbits);

  /// Uniform integer in [0, bound); bound must be >= 1.
  BigInt uniform_below(const BigInt& bound);

 private:
  void init(const std::uint8_t* data, std::size_t len);
  std::array<std::uint64_t, 4> state_{};
};

/// Short stable identifier for a seed (FNV-1a 64, lowercase hex). Written to
/// metadata files so a run can be matched to its seed without storing it.
std::string seed_fingerprint(const std::vector<std::uint8_t>& seed);
std::string seed_fingerprint(std::string_view seed);

}  // namespace gsss
