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

#include <vector>

#include "gsss/numeric.hpp"
#include "gsss/polynomial.hpp"

namespace gsss {

/// Sign of p at the rational point x, computed homogeneously in integers
/// (no rational coefficient growth). Returns -1, 0, or 1.
int sign_at(const IntPolynomial& p, const BigRational& x);

/// Sign of p at an extended point; at +/-inf this is the sign of the
/// leading term's limit.
int sign_at(const IntPolynomial& p, const ExtendedRational& x);

/// p with repeated roots collapsed to simple ones: p / gcd(p, p'), made
/// primitive. Same distinct roots, same leading sign.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sturm chain of a square-free polynomial. Elements are integer-primitive;
/// each normalization scales by a positive rational, which leaves every sign
/// pattern intact.
class SturmChain {
 public:
  explicit SturmChain(IntPolynomial square_free);

  /// Number of sign changes in the chain at x, zeros skipped.
  int sign_changes(const ExtendedRational& x) const;

  const std::vector<IntPolynomial>& elements() const { return elements_; }

 private:
  std::vector<IntPolynomial> elements_;
};

/// Distinct real roots of p in the half-open interval (lo, hi]. Multiplicity
/// is ignored: a double root counts once. Throws ZeroPolynomial when p == 0;
/// a nonzero constant has no roots.
int sturm_count(const IntPolynomial& p, const ExtendedRational& lo, const ExtendedRational& hi);

/// Distinct real roots of p over the whole line.
int sturm_count(const IntPolynomial& p);

/// An isolating bracket: the open interval (lo, hi) holds exactly one
/// distinct root of the target polynomial, and neither endpoint is a root.
/// When the root is hit exactly it is stored in `point` with exact = true;
/// the interval still flanks it with nonroot endpoints.
struct RootBracket {
  BigRational lo;
  BigRational hi;
  bool exact = false;
  BigRational point;

  BigRational width() const { return BigRational(hi - lo); }
};

/// Isolates and refines the distinct real roots of a polynomial. Degree-1
/// and rational-root quadratic inputs resolve exactly; everything else is
/// bisected against the Sturm chain.
class RealRootIsolator {
 public:
  explicit RealRootIsolator(IntPolynomial p);

  /// All distinct real roots, ascending, one bracket each.
  std::vector<RootBracket> isolate() const;

  /// Shrinks the bracket until width() <= max_width or the root is exact.
  void refine(RootBracket& bracket, const BigRational& max_width) const;

  /// Every real root of p lies strictly inside (-bound, bound).
  BigRational cauchy_bound() const;

  const IntPolynomial& polynomial() const { return p_; }
  const IntPolynomial& square_free() const { return sf_; }

 private:
  int count_open(const BigRational& lo, const BigRational& hi) const;
  /// Shrinks a symmetric nonroot flank around a known root until it isolates
  /// exactly that root. half is halved in place.
  void flank(const BigRational& root, BigRational& half) const;

  IntPolynomial p_;
  IntPolynomial sf_;
  SturmChain chain_;
};

}  // namespace gsss
