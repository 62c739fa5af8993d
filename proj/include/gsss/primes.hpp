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

#include <cstdint>
#include <string>
#include <vector>

#include "gsss/numeric.hpp"
#include "gsss/rng.hpp"

namespace gsss {

/// Miller-Rabin probabilistic primality test. Witnesses are drawn from rng,
/// so the verdict is reproducible for a fixed rng state. Composites slip
/// through with probability at most 4^-rounds.
bool miller_rabin_probable_prime(const BigInt& n, unsigned rounds, DeterministicRng& rng);

/// Convenience wrapper with a fixed witness seed.
bool is_probable_prime(const BigInt& n, unsigned rounds = 64);

/// Generates `count` distinct primes of exactly `bit_length` bits, derived
/// deterministically from `seed`. Throws InvalidBitLength for bit_length < 2
/// and InsufficientPrimes when fewer than `count` primes of that size exist.
std::vector<BigInt> generate_distinct_primes(std::size_t count, unsigned bit_length,
                                             const std::string& seed);

}  // namespace gsss
