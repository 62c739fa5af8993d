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

#include "gsss/primes.hpp"

#include <mutex>
#include <set>
#include <unordered_map>

#include "gsss/errors.hpp"

namespace gsss {

namespace {

// Exact count of primes with exactly `bits` bits, for small sizes where a
// sieve is cheap. Used to detect unsatisfiable requests instead of spinning.
std::size_t primes_with_exact_bits(unsigned bits) {
  static std::mutex mu;
  static std::unordered_map<unsigned, std::size_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;

  const std::size_t limit = std::size_t(1) << bits;  // exclusive upper bound
  std::vector<bool> composite(limit, false);
  std::size_t count = 0;
  const std::size_t lo = limit >> 1;  // smallest `bits`-bit value
  for (std::size_t p = 2; p < limit; ++p) {
    if (composite[p]) continue;
    if (p >= lo) ++count;
    for (std::size_t m = p * p; m < limit; m += p) composite[m] = true;
  }
  cache.emplace(bits, count);
  return count;
}

}  // namespace

bool miller_rabin_probable_prime(const BigInt& n, unsigned rounds, DeterministicRng& rng) {
  if (n < 2) return false;
  if (n < 4) return true;  // 2, 3
  if (mpz_even_p(n.get_mpz_t())) return false;

  // n - 1 = d * 2^s with d odd
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  BigInt n_minus_1 = n - 1;
  BigInt span = n - 3;  // witnesses drawn from [2, n-2]
  for (unsigned round = 0; round < rounds; ++round) {
    BigInt a = 2 + rng.uniform_below(span);
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n, unsigned rounds) {
  DeterministicRng rng("gsss.primality." + n.get_str());
  return miller_rabin_probable_prime(n, rounds, rng);
}

std::vector<BigInt> generate_distinct_primes(std::size_t count, unsigned bit_length,
                                             const std::string& seed) {
  if (bit_length < 2) {
    throw InvalidBitLength("prime bit length must be at least 2, got " +
                           std::to_string(bit_length));
  }
  if (bit_length <= 20 && primes_with_exact_bits(bit_length) < count) {
    throw InsufficientPrimes("fewer than " + std::to_string(count) + " primes of exactly " +
                             std::to_string(bit_length) + " bits exist");
  }

  DeterministicRng rng("gsss.primes.v1|" + std::to_string(bit_length) + "|" + seed);
  std::set<BigInt> found;
  std::vector<BigInt> out;
  out.reserve(count);
  while (out.size() < count) {
    BigInt candidate = rng.random_bits(bit_length);
    mpz_setbit(candidate.get_mpz_t(), bit_length - 1);
    // Forcing the candidate odd would make 2 unreachable at two bits.
    if (bit_length > 2) mpz_setbit(candidate.get_mpz_t(), 0);
    if (!found.insert(candidate).second) continue;
    if (miller_rabin_probable_prime(candidate, 64, rng)) out.push_back(candidate);
  }
  return out;
}

}  // namespace gsss
