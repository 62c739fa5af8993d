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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsss/errors.hpp"

namespace gsss {

// Exact sign+magnitude integer of unbounded precision. All arithmetic in this
// library is exact; nothing is ever rounded or reduced modulo a machine word.
using BigInt = mpz_class;

// Exact rational, always kept in lowest terms with a positive denominator
// (GMP's canonical form). Use make_rational to build one from parts.
using BigRational = mpq_class;

inline int sign_of(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const BigRational& v) { return mpq_sgn(v.get_mpq_t()); }

/// Number of bits in |v|; bit_length(0) == 0.
inline std::size_t bit_length(const BigInt& v) {
  if (sign_of(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

/// Canonicalized rational num/den. Throws on a zero denominator.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sign_of(den) == 0) throw std::invalid_argument("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

/// Canonical rational string: "p" when the denominator is 1, else "p/q".
inline std::string to_decimal(const BigRational& v) { return v.get_str(); }

/// Strict decimal-integer parse (optional leading '-', digits only).
BigInt bigint_from_decimal(std::string_view s);

/// Parse "p/q", "p", a plain decimal like "0.001", or scientific "1e-6",
/// all exactly.
BigRational rational_from_string(std::string_view s);

/// Big-endian byte view of a non-negative integer; 0 encodes as empty.
std::vector<std::uint8_t> bigint_to_bytes_be(const BigInt& v);
BigInt bigint_from_bytes_be(const std::vector<std::uint8_t>& bytes);

/// A rational extended with -inf / +inf markers, used for root-count bounds
/// and for attack intervals whose sides may be unbounded.
class ExtendedRational {
 public:
  ExtendedRational() : kind_(Kind::Finite), value_(0) {}
  ExtendedRational(BigRational v) : kind_(Kind::Finite), value_(std::move(v)) {}

  static ExtendedRational neg_infinity() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_infinity() { return ExtendedRational(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_infinity() const { return kind_ == Kind::NegInf; }
  bool is_pos_infinity() const { return kind_ == Kind::PosInf; }

  /// Finite payload; only valid when is_finite().
  const BigRational& value() const { return value_; }

  ExtendedRational operator-() const {
    switch (kind_) {
      case Kind::NegInf: return pos_infinity();
      case Kind::PosInf: return neg_infinity();
      default: return ExtendedRational(BigRational(-value_));
    }
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ == Kind::NegInf) return b.kind_ != Kind::NegInf;
    if (a.kind_ == Kind::PosInf) return false;
    if (b.kind_ == Kind::PosInf) return true;
    if (b.kind_ == Kind::NegInf) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b || a == b;
  }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return b <= a; }

  /// hi - lo with the convention that any infinite side gives +inf.
  static ExtendedRational width(const ExtendedRational& lo, const ExtendedRational& hi) {
    if (!lo.is_finite() || !hi.is_finite()) return pos_infinity();
    return ExtendedRational(BigRational(hi.value_ - lo.value_));
  }

  /// "-inf", "inf", or the canonical rational string.
  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      default: return value_.get_str();
    }
  }

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  BigRational value_;
};

}  // namespace gsss
