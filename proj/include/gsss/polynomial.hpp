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

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsss/numeric.hpp"

namespace gsss {

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient vector is kept trimmed: no trailing zeros, and the zero
/// polynomial is the empty vector (degree() == -1 by convention). All
/// arithmetic is exact; Coeff is BigInt or BigRational in this library.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i, 0 beyond the degree.
  Coeff coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }

  const Coeff& leading_coefficient() const { return coeffs_.back(); }

  /// Horner evaluation: exactly degree-many multiplications for a
  /// non-constant polynomial. mul_count, when given, receives that count.
  Coeff eval(const Coeff& x, std::size_t* mul_count = nullptr) const {
    if (mul_count) *mul_count = 0;
    if (coeffs_.empty()) return Coeff(0);
    Coeff acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
      if (mul_count) ++*mul_count;
    }
    return acc;
  }

  /// Formal derivative.
  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Coeff(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<Coeff> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = Coeff(-coeffs_[i]);
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Coeff& s) {
    std::vector<Coeff> out(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = Coeff(a.coeffs_[i] * s);
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

/// Expanded monic product of (x - root_i), with constant_offset added to the
/// constant coefficient. An empty root list yields the constant polynomial
/// [constant_offset].
inline IntPolynomial poly_from_roots(std::span<const BigInt> roots, const BigInt& constant_offset) {
  if (roots.empty()) return IntPolynomial({constant_offset});
  std::vector<BigInt> c;
  c.reserve(roots.size() + 1);
  c.emplace_back(1);
  for (const BigInt& r : roots) {
    // multiply by (x - r), coefficients ascending
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) {
      c[i] = c[i - 1] - r * c[i];
    }
    c[0] = BigInt(c[0] * -r);
  }
  c[0] += constant_offset;
  return IntPolynomial(std::move(c));
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> out;
  out.reserve(p.coefficients().size());
  for (const BigInt& c : p.coefficients()) out.emplace_back(c);
  return RatPolynomial(std::move(out));
}

/// Quotient and remainder of a by b over the rationals; b must be nonzero.
inline std::pair<RatPolynomial, RatPolynomial> poly_divrem(const RatPolynomial& a,
                                                           const RatPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {RatPolynomial(), a};
  std::vector<BigRational> quot(static_cast<std::size_t>(dq) + 1, BigRational(0));
  const BigRational& lead = b.leading_coefficient();
  for (int i = dq; i >= 0; --i) {
    const std::size_t top = static_cast<std::size_t>(i + db);
    if (top >= rem.size() || rem[top] == 0) continue;
    BigRational f(rem[top] / lead);
    quot[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i + j)] -= f * b.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Monic gcd over the rationals (1 for coprime inputs, 0 only if both zero).
inline RatPolynomial poly_gcd_monic(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  BigRational inv_lead(1 / a.leading_coefficient());
  return a * inv_lead;
}

/// Integer polynomial proportional to p by a positive rational factor, with
/// coprime coefficients. Signs (and so roots and sign behavior) unchanged.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return IntPolynomial();
  BigInt den_lcm(1);
  for (const BigRational& c : p.coefficients()) {
    if (c == 0) continue;
    BigInt d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> scaled;
  scaled.reserve(p.coefficients().size());
  BigInt content(0);
  for (const BigRational& c : p.coefficients()) {
    BigRational s(c * den_lcm);
    scaled.emplace_back(s.get_num());  // exact: den_lcm clears the denominator
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.back().get_mpz_t());
  }
  for (BigInt& c : scaled) c /= content;
  return IntPolynomial(std::move(scaled));
}

}  // namespace gsss
