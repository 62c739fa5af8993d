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

#include "gsss/rng.hpp"

#include <cstdio>

namespace gsss {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t len) {
  std::uint64_t h = kFnvOffset;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

DeterministicRng::DeterministicRng(const std::vector<std::uint8_t>& seed) {
  init(seed.data(), seed.size());
}

DeterministicRng::DeterministicRng(std::string_view seed) {
  init(reinterpret_cast<const std::uint8_t*>(seed.data()), seed.size());
}

void DeterministicRng::init(const std::uint8_t* data, std::size_t len) {
  std::uint64_t x = fnv1a64(data, len);
  for (auto& w : state_) w = splitmix64(x);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = kFnvOffset;
}

std::uint64_t DeterministicRng::next_u64() {
  // xoshiro256**
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

BigInt DeterministicRng::random_bits(std::size_t nbits) {
  if (nbits == 0) return BigInt(0);
  const std::size_t nwords = (nbits + 63) / 64;
  std::vector<std::uint64_t> words(nwords);
  for (auto& w : words) w = next_u64();  // words[0] = least significant
  const std::size_t top_bits = nbits - 64 * (nwords - 1);
  if (top_bits < 64) words.back() &= (std::uint64_t(1) << top_bits) - 1;
  BigInt v;
  mpz_import(v.get_mpz_t(), nwords, -1, sizeof(std::uint64_t), 0, 0, words.data());
  return v;
}

BigInt DeterministicRng::uniform_below(const BigInt& bound) {
  if (sign_of(bound) <= 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
  if (bound == 1) return BigInt(0);
  const std::size_t k = bit_length(bound);
  for (;;) {
    BigInt v = random_bits(k);
    if (v < bound) return v;
  }
}

std::string seed_fingerprint(const std::vector<std::uint8_t>& seed) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(seed.data(), seed.size())));
  return buf;
}

std::string seed_fingerprint(std::string_view seed) {
  return seed_fingerprint(std::vector<std::uint8_t>(seed.begin(), seed.end()));
}

}  // namespace gsss
