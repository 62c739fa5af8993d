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

#include "gsss/attack.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "gsss/errors.hpp"
#include "gsss/sturm.hpp"

namespace gsss {

RatInterval interval_eval(const IntPolynomial& p, const RatInterval& x) {
  if (p.is_zero()) return RatInterval{BigRational(0), BigRational(0)};
  const auto& c = p.coefficients();
  BigRational lo(c.back());
  BigRational hi(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    BigRational a(lo * x.lo), b(lo * x.hi), d(hi * x.lo), e(hi * x.hi);
    lo = std::min(std::min(a, b), std::min(d, e));
    hi = std::max(std::max(a, b), std::max(d, e));
    lo += c[i];
    hi += c[i];
  }
  return RatInterval{std::move(lo), std::move(hi)};
}

namespace {

RatInterval value_enclosure(const IntPolynomial& p, const RootBracket& bracket) {
  if (bracket.exact) {
    RatPolynomial rp = to_rational(p);
    BigRational v = rp.eval(bracket.point);
    return RatInterval{v, v};
  }
  return interval_eval(p, RatInterval{bracket.lo, bracket.hi});
}

CriticalKind classify(const IntPolynomial& dp, const RootBracket& bracket) {
  const int before = sign_at(dp, bracket.lo);
  const int after = sign_at(dp, bracket.hi);
  if (before < 0 && after > 0) return CriticalKind::minimum;
  if (before > 0 && after < 0) return CriticalKind::maximum;
  return CriticalKind::inflection;
}

}  // namespace

std::vector<CriticalPoint> critical_values(const IntPolynomial& p, const BigRational& precision) {
  if (p.degree() < 2) throw InvalidParams("critical points need degree >= 2");
  if (precision <= 0) throw InvalidParams("precision must be positive");

  const IntPolynomial dp = p.derivative();
  RealRootIsolator isolator(dp);
  std::vector<RootBracket> brackets = isolator.isolate();

  std::vector<CriticalPoint> out;
  out.reserve(brackets.size());
  for (RootBracket& bracket : brackets) {
    const CriticalKind kind = classify(dp, bracket);
    isolator.refine(bracket, precision);
    RatInterval value = value_enclosure(p, bracket);
    while (!bracket.exact && value.width() > precision) {
      isolator.refine(bracket, BigRational(bracket.width() / 2));
      value = value_enclosure(p, bracket);
    }
    CriticalPoint cp;
    cp.exact = bracket.exact;
    cp.location = bracket.exact ? RatInterval{bracket.point, bracket.point}
                                : RatInterval{bracket.lo, bracket.hi};
    cp.value = std::move(value);
    cp.kind = kind;
    out.push_back(std::move(cp));
  }
  return out;
}

DeltaInterval delta_interval(const PublicPolynomial& pub, const BigRational& precision) {
  if (pub.poly.degree() < 1) throw DegreeZero("a constant polynomial admits no tampering bound");
  require_valid(pub);

  DeltaInterval out;
  if (pub.poly.degree() == 1) {
    // a line crosses every height once; tampering is undetectable
    out.exact = true;
    return out;
  }

  bool has_min = false, has_max = false;
  bool all_exact = true;
  BigRational best_low, best_high;
  for (const CriticalPoint& cp : critical_values(pub.poly, precision)) {
    if (cp.kind == CriticalKind::minimum) {
      if (!has_min || cp.value.lo > best_low) best_low = cp.value.lo;
      has_min = true;
      all_exact = all_exact && cp.exact;
    } else if (cp.kind == CriticalKind::maximum) {
      if (!has_max || cp.value.hi < best_high) best_high = cp.value.hi;
      has_max = true;
      all_exact = all_exact && cp.exact;
    }
  }

  if (has_min) {
    out.secret_low = ExtendedRational(best_low);
    out.delta2 = ExtendedRational(BigRational(-best_low));
  }
  if (has_max) {
    out.secret_high = ExtendedRational(best_high);
    out.delta1 = ExtendedRational(BigRational(-best_high));
  }
  out.exact = all_exact;
  return out;
}

HardeningReport hardening_report(const PublicPolynomial& pub, const SharesMeta& meta) {
  static const BigRational kReportPrecision = make_rational(BigInt(1), BigInt(1000000));
  return hardening_report(pub, meta, kReportPrecision);
}

HardeningReport hardening_report(const PublicPolynomial& pub, const SharesMeta& meta,
                                 const BigRational& precision) {
  HardeningReport report;
  report.interval = delta_interval(pub, precision);
  report.width = report.interval.width();

  if (report.width.is_finite()) {
    report.notes.push_back("secret interval width " + report.width.str() +
                           "; the attack narrows the secret to this range");
    report.warnings.push_back("finite secret interval: pick larger primes to widen it");
  } else {
    report.notes.push_back("width unbounded (attack uninformative on this side)");
  }
  if (!report.interval.secret_low.is_finite()) {
    report.notes.push_back("no lower bound leaks: the polynomial has no local minimum");
  }
  if (!report.interval.secret_high.is_finite()) {
    report.notes.push_back("no upper bound leaks: the polynomial has no local maximum");
  }

  if (meta.bit_length > 0) {
    report.notes.push_back("primes share a single size of " + std::to_string(meta.bit_length) +
                           " bits, keeping characteristic numbers of the same order");
  } else {
    report.warnings.push_back("prime bit length unknown; same-order prime sizes are required");
  }

  if (meta.n > 0) {
    const unsigned cap_bits =
        static_cast<unsigned>(std::ceil(2.0 * std::sqrt(static_cast<double>(meta.n))));
    const double cap = std::ldexp(1.0, static_cast<int>(cap_bits));
    report.notes.push_back("authorized-set cap for " + std::to_string(meta.n) +
                           " participants: 2^" + std::to_string(cap_bits));
    if (static_cast<double>(meta.k) * 2.0 >= cap) {
      report.warnings.push_back("k=" + std::to_string(meta.k) +
                                " authorized sets approaches the subexponential cap 2^" +
                                std::to_string(cap_bits) + "; restrict the number of sets");
    }
  }
  return report;
}

std::string hardening_report_to_json(const HardeningReport& report) {
  nlohmann::ordered_json j;
  j["delta1"] = report.interval.delta1.str();
  j["delta2"] = report.interval.delta2.str();
  j["secret_low"] = report.interval.secret_low.str();
  j["secret_high"] = report.interval.secret_high.str();
  j["exact"] = report.interval.exact;
  if (report.width.is_finite()) {
    j["width"] = report.width.str();
    j["width_approx"] = mpq_get_d(report.width.value().get_mpq_t());
  } else {
    j["width"] = "unbounded (attack uninformative on this side)";
  }
  j["notes"] = report.notes;
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

}  // namespace gsss
