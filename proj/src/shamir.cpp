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

#include "gsss/shamir.hpp"

#include <set>
#include <json.hpp>

#include "gsss/errors.hpp"
#include "gsss/primes.hpp"
#include "gsss/rng.hpp"

namespace gsss {

BigInt shamir_default_modulus() {
  BigInt q(1);
  q <<= 61;
  return q - 1;
}

void require_valid(const ThresholdParams& params) {
  if (params.t < 1) throw InvalidParams("threshold t must be at least 1");
  if (params.t > params.n) throw InvalidParams("threshold t must not exceed n");
  if (params.q <= static_cast<long>(params.n)) throw InvalidParams("modulus q must exceed n");
  if (!is_probable_prime(params.q)) throw InvalidParams("modulus q must be prime");
}

std::vector<ShamirShare> shamir_split(const BigInt& secret, const ThresholdParams& params,
                                      const std::string& seed) {
  require_valid(params);
  if (secret < 0 || secret >= params.q) {
    throw InvalidParams("secret must lie in [0, q)");
  }

  DeterministicRng rng("gsss.shamir.v1|" + std::to_string(params.n) + "|" +
                       std::to_string(params.t) + "|" + params.q.get_str() + "|" + seed);
  std::vector<BigInt> coeffs;
  coeffs.reserve(params.t);
  coeffs.push_back(secret);
  for (std::size_t i = 1; i < params.t; ++i) coeffs.push_back(rng.uniform_below(params.q));

  std::vector<ShamirShare> shares;
  shares.reserve(params.n);
  for (std::size_t i = 1; i <= params.n; ++i) {
    BigInt x(static_cast<unsigned long>(i));
    BigInt y(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) y = (y * x + *it) % params.q;
    shares.push_back(ShamirShare{std::move(x), std::move(y), params.q, params.t});
  }
  return shares;
}

BigInt shamir_reconstruct(const std::vector<ShamirShare>& shares) {
  if (shares.empty()) throw NotEnoughShares("no shares given");
  const BigInt& q = shares.front().q;
  const std::size_t t = shares.front().t;
  if (t < 1 || q < 2) throw InvalidParams("shares carry invalid parameters");
  for (const ShamirShare& s : shares) {
    if (s.q != q || s.t != t) throw InvalidParams("shares disagree on q or t");
  }
  if (shares.size() < t) {
    throw NotEnoughShares("need " + std::to_string(t) + " shares, got " +
                          std::to_string(shares.size()));
  }
  std::set<BigInt> xs;
  for (const ShamirShare& s : shares) {
    if (!xs.insert(s.x).second) throw DuplicateX("duplicate share x = " + s.x.get_str());
  }

  BigInt secret(0);
  for (const ShamirShare& si : shares) {
    BigInt num(1), den(1);
    for (const ShamirShare& sj : shares) {
      if (sj.x == si.x) continue;
      num = (num * sj.x) % q;
      den = (den * ((sj.x - si.x) % q + q)) % q;
    }
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t()) == 0) {
      throw InvalidParams("share x values collide modulo q");
    }
    secret = (secret + si.y % q * num % q * den_inv) % q;
  }
  return (secret % q + q) % q;
}

std::string shamir_share_to_json(const ShamirShare& share) {
  nlohmann::ordered_json j;
  j["x"] = to_decimal(share.x);
  j["y"] = to_decimal(share.y);
  j["q"] = to_decimal(share.q);
  j["t"] = share.t;
  return j.dump(2) + "\n";
}

ShamirShare shamir_share_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad threshold share JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("q") ||
      !j.contains("t") || !j.at("x").is_string() || !j.at("y").is_string() ||
      !j.at("q").is_string() || !j.at("t").is_number_unsigned()) {
    throw ParseError("threshold share JSON needs string 'x', 'y', 'q' and unsigned 't'");
  }
  ShamirShare share;
  share.x = bigint_from_decimal(j.at("x").get<std::string>());
  share.y = bigint_from_decimal(j.at("y").get<std::string>());
  share.q = bigint_from_decimal(j.at("q").get<std::string>());
  share.t = j.at("t").get<std::size_t>();
  return share;
}

}  // namespace gsss
