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

#include <string>
#include <vector>

#include "gsss/numeric.hpp"
#include "gsss/polynomial.hpp"
#include "gsss/scheme.hpp"

namespace gsss {

/// Closed rational interval [lo, hi].
struct RatInterval {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return BigRational(hi - lo); }
  bool is_point() const { return lo == hi; }
};

/// Interval Horner evaluation: encloses { p(x) : x in [x.lo, x.hi] }.
/// Inclusion-isotone, so refining x never widens the result.
RatInterval interval_eval(const IntPolynomial& p, const RatInterval& x);

enum class CriticalKind { minimum, maximum, inflection };

/// One critical point of p: an enclosure of a root of p' plus an enclosure
/// of p's value there. Both collapse to points when the root is rational.
struct CriticalPoint {
  RatInterval location;
  RatInterval value;
  CriticalKind kind = CriticalKind::inflection;
  bool exact = false;
};

/// Encloses every critical point of p (degree >= 2) to the given positive
/// width, locations and values both. Rational roots of p' come out exact.
std::vector<CriticalPoint> critical_values(const IntPolynomial& p, const BigRational& precision);

/// The tampering range an adversary can apply to the public polynomial
/// without changing its count of distinct real roots, and the secret
/// interval that range betrays. Sides are unbounded where the attack is
/// uninformative.
struct DeltaInterval {
  ExtendedRational delta1 = ExtendedRational::neg_infinity();
  ExtendedRational delta2 = ExtendedRational::pos_infinity();
  ExtendedRational secret_low = ExtendedRational::neg_infinity();   // == -delta2
  ExtendedRational secret_high = ExtendedRational::pos_infinity();  // == -delta1
  bool exact = false;  // true when every contributing enclosure is a point

  ExtendedRational width() const { return ExtendedRational::width(secret_low, secret_high); }
};

/// Admissible shifts delta of y keeping k distinct real roots: y has the
/// form prod (x - c_i) + S, so the local minima sit below S and the local
/// maxima above it, and (max of minima, min of maxima) must contain S.
/// Reported bounds are outer enclosures; the true secret always lies inside
/// (secret_low, secret_high). Throws DegreeZero for a constant polynomial.
DeltaInterval delta_interval(const PublicPolynomial& pub, const BigRational& precision);

struct SharesMeta {
  unsigned bit_length = 0;
  std::size_t k = 0;  // authorized sets
  std::size_t n = 0;  // participants
};

struct HardeningReport {
  DeltaInterval interval;
  ExtendedRational width;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
};

/// Attack-driven parameter guidance: the secret-interval width as a leak
/// measure, a prime-size uniformity note, and a warning when the number of
/// authorized sets approaches the subexponential cap 2^ceil(2*sqrt(n)).
/// The two-argument form encloses critical values to width 1/10^6.
HardeningReport hardening_report(const PublicPolynomial& pub, const SharesMeta& meta);
HardeningReport hardening_report(const PublicPolynomial& pub, const SharesMeta& meta,
                                 const BigRational& precision);

std::string hardening_report_to_json(const HardeningReport& report);

}  // namespace gsss
