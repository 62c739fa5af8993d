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

#include "gsss/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace gsss {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigInt bigint_from_decimal(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  return BigInt(std::string(s), 10);
}

BigRational rational_from_string(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = bigint_from_decimal(s.substr(0, slash));
    BigInt den = bigint_from_decimal(s.substr(slash + 1));
    if (sign_of(den) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return make_rational(num, den);
  }

  // decimal form: [sign] digits [. digits] [e|E [sign] digits]
  std::string_view body = s;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view mantissa = body;
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mantissa = body.substr(0, epos);
    std::string_view es = body.substr(epos + 1);
    bool eneg = false;
    if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) throw ParseError("bad exponent in '" + std::string(s) + "'");
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
  }

  std::string digits;
  long frac_len = 0;
  auto dot = mantissa.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("bad rational '" + std::string(s) + "'");
    if (!ip.empty() && !all_digits(ip)) throw ParseError("bad rational '" + std::string(s) + "'");
    if (!fp.empty() && !all_digits(fp)) throw ParseError("bad rational '" + std::string(s) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw ParseError("bad rational '" + std::string(s) + "'");
    digits = std::string(mantissa);
  }
  if (digits.empty()) digits = "0";

  BigInt num(digits, 10);
  if (negative) num = -num;
  long net = exp10 - frac_len;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0) return make_rational(num * scale, 1);
  return make_rational(num, scale);
}

std::vector<std::uint8_t> bigint_to_bytes_be(const BigInt& v) {
  if (sign_of(v) < 0) throw std::invalid_argument("negative integer has no byte encoding");
  if (sign_of(v) == 0) return {};
  std::size_t count = 0;
  std::vector<std::uint8_t> out((bit_length(v) + 7) / 8);
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

BigInt bigint_from_bytes_be(const std::vector<std::uint8_t>& bytes) {
  BigInt v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

}  // namespace gsss
