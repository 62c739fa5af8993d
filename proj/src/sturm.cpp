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

#include "gsss/sturm.hpp"

#include <algorithm>
#include <functional>

#include "gsss/errors.hpp"

namespace gsss {

namespace {

IntPolynomial integer_primitive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt content(0);
  for (const BigInt& c : p.coefficients()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const BigInt& c : p.coefficients()) out.emplace_back(c / content);
  return IntPolynomial(std::move(out));
}

}  // namespace

int sign_at(const IntPolynomial& p, const BigRational& x) {
  if (p.is_zero()) return 0;
  const BigInt num = x.get_num();
  const BigInt den = x.get_den();  // canonical, so den > 0
  // sign(p(num/den)) = sign(sum_i c_i num^i den^(d-i))
  const auto& c = p.coefficients();
  BigInt acc(0);
  BigInt num_pow(1);
  std::vector<BigInt> den_pows(c.size());
  den_pows[c.size() - 1] = 1;
  for (std::size_t i = c.size() - 1; i > 0; --i) den_pows[i - 1] = den_pows[i] * den;
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc += c[i] * num_pow * den_pows[i];
    num_pow *= num;
  }
  return sign_of(acc);
}

int sign_at(const IntPolynomial& p, const ExtendedRational& x) {
  if (p.is_zero()) return 0;
  if (x.is_finite()) return sign_at(p, x.value());
  const int lead = sign_of(p.leading_coefficient());
  if (x.is_pos_infinity()) return lead;
  return p.degree() % 2 == 0 ? lead : -lead;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
  if (p.degree() == 0) return integer_primitive(p);
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = poly_gcd_monic(rp, rp.derivative());
  auto [q, r] = poly_divrem(rp, g);
  (void)r;  // exact division, r == 0
  IntPolynomial sf = integer_primitive(primitive_part(q));
  // primitive_part keeps the quotient's sign, which matches p's leading sign
  return sf;
}

SturmChain::SturmChain(IntPolynomial square_free) {
  if (square_free.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  elements_.push_back(integer_primitive(square_free));
  if (elements_[0].degree() == 0) return;
  elements_.push_back(integer_primitive(elements_[0].derivative()));
  while (elements_.back().degree() > 0) {
    const IntPolynomial& a = elements_[elements_.size() - 2];
    const IntPolynomial& b = elements_.back();
    auto [q, r] = poly_divrem(to_rational(a), to_rational(b));
    (void)q;
    if (r.is_zero()) break;  // cannot happen for square-free input
    elements_.push_back(integer_primitive(primitive_part(-r)));
  }
}

int SturmChain::sign_changes(const ExtendedRational& x) const {
  int changes = 0;
  int prev = 0;
  for (const IntPolynomial& e : elements_) {
    const int s = sign_at(e, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int sturm_count(const IntPolynomial& p, const ExtendedRational& lo, const ExtendedRational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("root counting needs a nonzero polynomial");
  if (!(lo < hi)) return 0;
  if (p.degree() == 0) return 0;
  SturmChain chain(square_free_part(p));
  return chain.sign_changes(lo) - chain.sign_changes(hi);
}

int sturm_count(const IntPolynomial& p) {
  return sturm_count(p, ExtendedRational::neg_infinity(), ExtendedRational::pos_infinity());
}

RealRootIsolator::RealRootIsolator(IntPolynomial p)
    : p_(std::move(p)), sf_(square_free_part(p_)), chain_(sf_) {
  if (p_.degree() < 1) throw InvalidParams("root isolation needs degree >= 1");
}

BigRational RealRootIsolator::cauchy_bound() const {
  const auto& c = sf_.coefficients();
  const std::size_t d = c.size() - 1;
  BigInt lead = abs(c.back());
  BigInt biggest(0);
  for (std::size_t i = 0; i < d; ++i) {
    BigInt a = abs(c[i]);
    if (a > biggest) biggest = a;
  }
  BigRational cauchy = make_rational(biggest, lead);
  cauchy += 1;

  // power-mean bound: |root| <= 2 * max_i (|c_[d-i]| / lead)^(1/i). Far
  // tighter than Cauchy when a huge constant term meets a small lead.
  BigInt scaled(0);
  for (std::size_t i = 1; i <= d; ++i) {
    BigInt q;
    BigInt a = abs(c[d - i]);
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
    BigInt root;
    mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i));
    root += 1;  // round the i-th root up
    if (root > scaled) scaled = root;
  }
  BigInt doubled = 2 * scaled + 1;
  BigRational power_mean(doubled);

  return std::min(cauchy, power_mean);
}

int RealRootIsolator::count_open(const BigRational& lo, const BigRational& hi) const {
  // (lo, hi] with a nonroot hi equals the open-interval count
  return chain_.sign_changes(ExtendedRational(lo)) - chain_.sign_changes(ExtendedRational(hi));
}

void RealRootIsolator::flank(const BigRational& root, BigRational& half) const {
  while (true) {
    BigRational lo(root - half);
    BigRational hi(root + half);
    if (sign_at(sf_, lo) != 0 && sign_at(sf_, hi) != 0 && count_open(lo, hi) == 1) return;
    half /= 2;
  }
}

std::vector<RootBracket> RealRootIsolator::isolate() const {
  std::vector<RootBracket> out;

  if (sf_.degree() == 1) {
    // ax + b: the single root -b/a, exactly
    BigRational root = make_rational(-sf_.coefficient(0), sf_.coefficient(1));
    RootBracket bracket;
    bracket.exact = true;
    bracket.point = root;
    BigRational half(1);
    flank(root, half);
    bracket.lo = BigRational(root - half);
    bracket.hi = BigRational(root + half);
    out.push_back(std::move(bracket));
    return out;
  }

  if (sf_.degree() == 2) {
    // square-free quadratic: two simple roots or none
    const BigInt a = sf_.coefficient(2);
    const BigInt b = sf_.coefficient(1);
    const BigInt c = sf_.coefficient(0);
    BigInt disc = b * b - 4 * a * c;
    if (disc < 0) return out;
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
      std::vector<BigRational> roots = {make_rational(-b - s, 2 * a),
                                        make_rational(-b + s, 2 * a)};
      std::sort(roots.begin(), roots.end());
      for (const BigRational& root : roots) {
        RootBracket bracket;
        bracket.exact = true;
        bracket.point = root;
        BigRational half = roots[1] == roots[0] ? BigRational(1)
                                                : BigRational((roots[1] - roots[0]) / 2);
        flank(root, half);
        bracket.lo = BigRational(root - half);
        bracket.hi = BigRational(root + half);
        out.push_back(std::move(bracket));
      }
      return out;
    }
  }

  const BigRational bound = cauchy_bound();
  BigRational lo(-bound);
  BigRational hi(bound);

  std::function<void(const BigRational&, const BigRational&, int)> split =
      [&](const BigRational& a, const BigRational& b, int count) {
        if (count == 0) return;
        if (count == 1) {
          RootBracket bracket;
          bracket.lo = a;
          bracket.hi = b;
          out.push_back(std::move(bracket));
          return;
        }
        BigRational mid((a + b) / 2);
        if (sign_at(sf_, mid) == 0) {
          // the midpoint is a root; carve an exact bracket around it
          RootBracket bracket;
          bracket.exact = true;
          bracket.point = mid;
          BigRational half((b - a) / 4);
          flank(mid, half);
          bracket.lo = BigRational(mid - half);
          bracket.hi = BigRational(mid + half);
          const int left = count_open(a, bracket.lo);
          const int right = count_open(bracket.hi, b);
          split(a, bracket.lo, left);
          out.push_back(std::move(bracket));
          split(BigRational(mid + half), b, right);
          return;
        }
        const int left = count_open(a, mid);
        split(a, mid, left);
        split(mid, b, count - left);
      };

  split(lo, hi, count_open(lo, hi));
  return out;
}

void RealRootIsolator::refine(RootBracket& bracket, const BigRational& max_width) const {
  if (bracket.exact) return;
  while (bracket.width() > max_width) {
    BigRational mid((bracket.lo + bracket.hi) / 2);
    if (sign_at(sf_, mid) == 0) {
      bracket.exact = true;
      bracket.point = mid;
      BigRational half(bracket.width() / 4);
      if (half > max_width / 2) half = BigRational(max_width / 2);
      flank(mid, half);
      bracket.lo = BigRational(mid - half);
      bracket.hi = BigRational(mid + half);
      return;
    }
    if (count_open(bracket.lo, mid) == 1) {
      bracket.hi = mid;
    } else {
      bracket.lo = mid;
    }
  }
}

}  // namespace gsss
