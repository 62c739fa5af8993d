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

#include <string>
#include <vector>

#include "gsss/numeric.hpp"

namespace gsss {

/// 2^61 - 1, a Mersenne prime comfortably above 64-bit participant counts.
BigInt shamir_default_modulus();

struct ThresholdParams {
  std::size_t n = 0;  // number of shares dealt
  std::size_t t = 0;  // shares needed to reconstruct
  BigInt q;           // prime field modulus
};

/// Requires 1 <= t <= n < q and q a probable prime; throws InvalidParams.
void require_valid(const ThresholdParams& params);

struct ShamirShare {
  BigInt x;
  BigInt y;
  BigInt q;
  std::size_t t = 0;
};

/// Classic threshold split: a uniform polynomial of degree t-1 over GF(q)
/// with constant term `secret`, evaluated at x = 1..n. Deterministic in seed.
std::vector<ShamirShare> shamir_split(const BigInt& secret, const ThresholdParams& params,
                                      const std::string& seed);

/// Lagrange interpolation at x = 0 using every share given. Throws
/// NotEnoughShares (fewer than t), DuplicateX, or InvalidParams (mixed q/t).
BigInt shamir_reconstruct(const std::vector<ShamirShare>& shares);

std::string shamir_share_to_json(const ShamirShare& share);
ShamirShare shamir_share_from_json(const std::string& text);

}  // namespace gsss
