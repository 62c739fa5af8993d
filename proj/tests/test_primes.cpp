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

#include <doctest.h>

#include <set>

#include "gsss/errors.hpp"
#include "gsss/primes.hpp"
#include "support/oracles.hpp"

using namespace gsss;

TEST_CASE("miller-rabin agrees with trial division at desk scale") {
  DeterministicRng witness_rng("primes.witnesses");
  for (long n = 0; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(miller_rabin_probable_prime(BigInt(n), 64, witness_rng) ==
          gsss::testing::is_prime_trial(BigInt(n)));
  }
}

TEST_CASE("miller-rabin rejects carmichael numbers") {
  // strong pseudoprime traps for weak tests
  for (long n : {561L, 1105L, 1729L, 2465L, 41041L, 825265L}) {
    CHECK_FALSE(is_probable_prime(BigInt(n)));
  }
}

TEST_CASE("miller-rabin accepts known large primes") {
  BigInt mersenne61(1);
  mersenne61 <<= 61;
  mersenne61 -= 1;
  CHECK(is_probable_prime(mersenne61));

  BigInt composite = mersenne61 * 3;
  CHECK_FALSE(is_probable_prime(composite));
}

TEST_CASE("generated primes have the exact size and pass trial division") {
  const auto primes = generate_distinct_primes(50, 12, "sizing");
  std::set<BigInt> unique(primes.begin(), primes.end());
  CHECK(unique.size() == 50);
  for (const BigInt& p : primes) {
    CAPTURE(p.get_str());
    CHECK(bit_length(p) == 12);
    CHECK(gsss::testing::is_prime_trial(p));
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const auto a = generate_distinct_primes(8, 16, "same");
  const auto b = generate_distinct_primes(8, 16, "same");
  const auto c = generate_distinct_primes(8, 16, "other");
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("two-bit requests can reach both two-bit primes") {
  const auto pair = generate_distinct_primes(2, 2, "tiny");
  std::set<BigInt> got(pair.begin(), pair.end());
  CHECK(got == std::set<BigInt>{BigInt(2), BigInt(3)});
}

TEST_CASE("impossible requests fail fast") {
  CHECK_THROWS_AS(generate_distinct_primes(3, 2, "x"), InsufficientPrimes);
  CHECK_THROWS_AS(generate_distinct_primes(1, 1, "x"), InvalidBitLength);
  CHECK_THROWS_AS(generate_distinct_primes(1, 0, "x"), InvalidBitLength);
  // 3-bit primes are exactly {5, 7}
  CHECK_THROWS_AS(generate_distinct_primes(3, 3, "x"), InsufficientPrimes);
  const auto pair = generate_distinct_primes(2, 3, "x");
  CHECK(std::set<BigInt>(pair.begin(), pair.end()) == std::set<BigInt>{BigInt(5), BigInt(7)});
}
