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

#include "gsss/scheme.hpp"

#include <algorithm>
#include <json.hpp>

#include "gsss/errors.hpp"
#include "gsss/primes.hpp"
#include "gsss/rng.hpp"

namespace gsss {

Secret::Secret(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw InvalidParams("secret must be non-negative");
}

Secret Secret::from_string(const std::string& text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    const std::string hex = text.substr(2);
    if (hex.empty() || hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
      throw ParseError("bad hex secret '" + text + "'");
    }
    BigInt v;
    mpz_set_str(v.get_mpz_t(), hex.c_str(), 16);
    return Secret(std::move(v));
  }
  return Secret(bigint_from_decimal(text));
}

Secret Secret::from_bytes(const std::vector<std::uint8_t>& bytes) {
  return Secret(bigint_from_bytes_be(bytes));
}

std::vector<std::uint8_t> Secret::to_bytes() const { return bigint_to_bytes_be(value_); }

void require_valid(const PublicPolynomial& pub) {
  if (pub.k == 0) throw InvalidParams("public polynomial needs degree k >= 1");
  if (pub.poly.degree() != static_cast<int>(pub.k)) {
    throw InvalidParams("public polynomial degree " + std::to_string(pub.poly.degree()) +
                        " does not match k=" + std::to_string(pub.k));
  }
  if (pub.poly.leading_coefficient() != 1) {
    throw InvalidParams("public polynomial must be monic");
  }
}

BigInt characteristic_number(const std::set<Participant>& subset,
                             const std::map<Participant, BigInt>& prime_of) {
  if (subset.empty()) throw EmptySubset("characteristic number of the empty set is undefined");
  BigInt product(1);
  for (const Participant& p : subset) {
    auto it = prime_of.find(p);
    if (it == prime_of.end()) throw UnknownParticipant("no prime for participant '" + p + "'");
    product *= it->second;
  }
  return product;
}

namespace {

DealResult deal_impl(const AccessStructure& structure, const Secret& secret,
                     const std::vector<BigInt>& primes, std::string fingerprint) {
  const std::vector<Participant> order = canonical_participants(structure);

  std::map<Participant, BigInt> prime_of;
  for (std::size_t i = 0; i < order.size(); ++i) prime_of.emplace(order[i], primes[i]);

  // Characteristic numbers in ascending-mask order, so the expansion (and
  // with it every serialized byte) is independent of input set order.
  const std::vector<std::uint64_t> masks = authorized_masks(structure);
  std::vector<BigInt> roots;
  roots.reserve(masks.size());
  for (std::uint64_t m : masks) {
    BigInt c(1);
    for (unsigned i = 0; i < order.size(); ++i) {
      if (m & (std::uint64_t(1) << i)) c *= primes[i];
    }
    roots.push_back(std::move(c));
  }

  DealResult result;
  result.public_polynomial.poly = poly_from_roots(roots, secret.value());
  result.public_polynomial.k = roots.size();
  result.seed_fingerprint = std::move(fingerprint);
  result.shares.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    result.shares.push_back(PrimeShare{order[i], primes[i]});
  }
  return result;
}

}  // namespace

DealResult deal(const AccessStructure& structure, const Secret& secret, unsigned prime_bits,
                const std::string& seed) {
  require_valid(structure);
  const std::size_t n = structure.participants.size();
  std::vector<BigInt> primes = generate_distinct_primes(n, prime_bits, seed);
  return deal_impl(structure, secret, primes, seed_fingerprint(seed));
}

DealResult deal_with_primes(const AccessStructure& structure, const Secret& secret,
                            const std::vector<BigInt>& primes) {
  require_valid(structure);
  if (primes.size() != structure.participants.size()) {
    throw InvalidParams("need exactly one prime per participant");
  }
  std::set<BigInt> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size()) throw InvalidParams("primes must be distinct");
  for (const BigInt& p : primes) {
    if (!is_probable_prime(p)) throw InvalidParams("'" + p.get_str() + "' is not prime");
  }
  return deal_impl(structure, secret, primes, "");
}

BigInt coalition_product(const std::vector<PrimeShare>& shares) {
  if (shares.empty()) throw EmptyCoalition("coalition has no shares");
  std::set<Participant> names;
  std::set<BigInt> primes;
  BigInt product(1);
  for (const PrimeShare& s : shares) {
    if (!names.insert(s.participant).second) {
      throw DuplicateShare("participant '" + s.participant + "' appears twice");
    }
    if (!primes.insert(s.prime).second) {
      throw DuplicateShare("prime " + s.prime.get_str() + " appears twice");
    }
    product *= s.prime;
  }
  return product;
}

BigInt reconstruct(const PublicPolynomial& pub, const BigInt& r) {
  require_valid(pub);
  return pub.poly.eval(r);
}

std::string public_polynomial_to_json(const PublicPolynomial& pub) {
  nlohmann::ordered_json j;
  j["k"] = pub.k;
  std::vector<std::string> coeffs;
  coeffs.reserve(pub.poly.coefficients().size());
  for (const BigInt& c : pub.poly.coefficients()) coeffs.push_back(to_decimal(c));
  j["coefficients"] = coeffs;
  return j.dump(2) + "\n";
}

PublicPolynomial public_polynomial_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad public polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("coefficients") ||
      !j.at("k").is_number_unsigned() || !j.at("coefficients").is_array()) {
    throw ParseError("public polynomial JSON needs unsigned 'k' and 'coefficients' array");
  }
  PublicPolynomial pub;
  pub.k = j.at("k").get<std::size_t>();
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coefficients")) {
    if (!c.is_string()) throw ParseError("coefficients must be decimal strings");
    coeffs.push_back(bigint_from_decimal(c.get<std::string>()));
  }
  pub.poly = IntPolynomial(std::move(coeffs));
  require_valid(pub);
  return pub;
}

std::string share_to_json(const PrimeShare& share) {
  nlohmann::ordered_json j;
  j["participant"] = share.participant;
  j["prime"] = to_decimal(share.prime);
  return j.dump(2) + "\n";
}

PrimeShare share_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad share JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("participant") || !j.contains("prime") ||
      !j.at("participant").is_string() || !j.at("prime").is_string()) {
    throw ParseError("share JSON needs string 'participant' and 'prime'");
  }
  PrimeShare share;
  share.participant = j.at("participant").get<std::string>();
  share.prime = bigint_from_decimal(j.at("prime").get<std::string>());
  return share;
}

}  // namespace gsss
