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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gsss/access.hpp"
#include "gsss/numeric.hpp"
#include "gsss/polynomial.hpp"

namespace gsss {

/// One participant's share: a prime unique to that participant.
struct PrimeShare {
  Participant participant;
  BigInt prime;
};

/// The secret payload, a non-negative integer.
class Secret {
 public:
  Secret() : value_(0) {}
  explicit Secret(BigInt value);

  /// Accepts decimal ("1234") or hex with a 0x prefix ("0x4d2").
  static Secret from_string(const std::string& text);
  static Secret from_bytes(const std::vector<std::uint8_t>& bytes);

  const BigInt& value() const { return value_; }
  std::vector<std::uint8_t> to_bytes() const;
  std::string str() const { return to_decimal(value_); }

  friend bool operator==(const Secret& a, const Secret& b) { return a.value_ == b.value_; }

 private:
  BigInt value_;
};

/// The published polynomial y(x) = prod_i (x - c_i) + S, expanded. Monic of
/// degree k, one root shift per authorized set.
struct PublicPolynomial {
  IntPolynomial poly;
  std::size_t k = 0;
};

/// Validates monicity and degree k >= 1; throws InvalidParams otherwise.
void require_valid(const PublicPolynomial& pub);

/// The characteristic number of a coalition: the product of its members'
/// primes. Throws EmptySubset / UnknownParticipant.
BigInt characteristic_number(const std::set<Participant>& subset,
                             const std::map<Participant, BigInt>& prime_of);

struct DealResult {
  std::vector<PrimeShare> shares;           // canonical participant order
  PublicPolynomial public_polynomial;
  std::string seed_fingerprint;
};

/// Deals shares for the exact access structure given (no monotone closure is
/// applied; supersets of authorized sets stay unauthorized). Primes have
/// exactly prime_bits bits and are derived deterministically from seed.
DealResult deal(const AccessStructure& structure, const Secret& secret, unsigned prime_bits,
                const std::string& seed);

/// Same construction with caller-supplied primes, aligned with the canonical
/// participant order. Each must be a distinct probable prime.
DealResult deal_with_primes(const AccessStructure& structure, const Secret& secret,
                            const std::vector<BigInt>& primes);

/// Product of the coalition's primes. Throws EmptyCoalition / DuplicateShare.
BigInt coalition_product(const std::vector<PrimeShare>& shares);

/// Evaluates the public polynomial at r. The result equals the secret
/// exactly when r is the characteristic number of an authorized set; any
/// other coalition sees an unrelated value (possibly negative).
BigInt reconstruct(const PublicPolynomial& pub, const BigInt& r);

std::string public_polynomial_to_json(const PublicPolynomial& pub);
PublicPolynomial public_polynomial_from_json(const std::string& text);

std::string share_to_json(const PrimeShare& share);
PrimeShare share_from_json(const std::string& text);

}  // namespace gsss
