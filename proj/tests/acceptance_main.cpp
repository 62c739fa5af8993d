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

// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
// argv[1] is the path to the gsss CLI binary (used by criteria 6 and 7).

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsss/access.hpp"
#include "gsss/attack.hpp"
#include "gsss/errors.hpp"
#include "gsss/numeric.hpp"
#include "gsss/polynomial.hpp"
#include "gsss/rng.hpp"
#include "gsss/scheme.hpp"
#include "gsss/shamir.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

namespace {

using namespace gsss;
namespace fs = std::filesystem;
using gsss::testing::read_text;
using gsss::testing::run_command;
using gsss::testing::RunResult;
using gsss::testing::shell_quote;
using gsss::testing::write_text;
using Clock = std::chrono::steady_clock;

// Pinned acceptance parameters.
constexpr int kInstanceCount = 120;            // criterion 1 needs >= 100
constexpr double kCriterion1Budget = 10.0;     // seconds
constexpr int kClosureCases = 50;              // criterion 4 suite size
constexpr std::size_t kShamirMaxN = 8;         // criterion 5 exhaustive bound
constexpr int kPrivacyCandidates = 20;         // criterion 5 candidate secrets
constexpr double kBenchRatioLimit = 2.0;       // criterion 6 normalized ratio

// Attack tolerances: oracle comparison within 1e-6, computed at 1e-7.
BigRational attack_tolerance() { return make_rational(BigInt(1), BigInt(1000000)); }
BigRational cubic_precision() { return make_rational(BigInt(1), BigInt(10000000)); }
// Containment checks need only outer bounds, so enclosure refinement is
// skipped by asking for an astronomically loose width.
BigRational loose_precision() {
  BigInt big(1);
  big <<= 4096;
  return BigRational(big);
}

std::string cli_path;  // set from argv[1]

double seconds_since(const Clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
}

std::string trim_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

/// One seeded random instance of the prime-share scheme.
struct Instance {
  AccessStructure structure;
  std::vector<BigInt> primes;          // canonical participant order
  std::set<std::uint64_t> masks;       // authorized sets over that order
  Secret secret;
  PublicPolynomial pub;
  unsigned n = 0;
};

const std::vector<Instance>& instances() {
  static const std::vector<Instance> built = [] {
    std::vector<Instance> out;
    out.reserve(kInstanceCount);
    DeterministicRng rng("gsss.acceptance.v1");
    for (int idx = 0; idx < kInstanceCount; ++idx) {
      Instance inst;
      inst.n = 1 + static_cast<unsigned>(rng.next_u64() % 6);
      const std::uint64_t all = (std::uint64_t(1) << inst.n) - 1;
      std::uint64_t want = 1 + rng.next_u64() % 8;
      if (want > all) want = all;
      while (inst.masks.size() < want) inst.masks.insert(1 + rng.next_u64() % all);

      for (unsigned i = 0; i < inst.n; ++i) {
        inst.structure.participants.push_back("P" + std::to_string(i));
      }
      for (std::uint64_t mask : inst.masks) {
        std::set<Participant> subset;
        for (unsigned i = 0; i < inst.n; ++i) {
          if (mask & (std::uint64_t(1) << i)) subset.insert(inst.structure.participants[i]);
        }
        inst.structure.authorized_sets.push_back(std::move(subset));
      }

      inst.secret = Secret(rng.random_bits(64));
      const DealResult dealt =
          deal(inst.structure, inst.secret, 16, "acceptance-" + std::to_string(idx));
      inst.pub = dealt.public_polynomial;
      for (const PrimeShare& share : dealt.shares) inst.primes.push_back(share.prime);
      out.push_back(std::move(inst));
    }
    return out;
  }();
  return built;
}

bool criterion1(std::string& detail) {
  const auto start = Clock::now();
  std::size_t checks = 0;
  for (const Instance& inst : instances()) {
    const std::uint64_t all = (std::uint64_t(1) << inst.n) - 1;
    for (std::uint64_t mask = 1; mask <= all; ++mask) {
      BigInt r(1);
      for (unsigned i = 0; i < inst.n; ++i) {
        if (mask & (std::uint64_t(1) << i)) r *= inst.primes[i];
      }
      const BigInt got = reconstruct(inst.pub, r);
      const bool authorized = inst.masks.count(mask) > 0;
      if ((got == inst.secret.value()) != authorized) {
        detail = "coalition mask " + std::to_string(mask) + " broke soundness";
        return false;
      }
      ++checks;
    }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(checks) + " coalition checks over " + std::to_string(kInstanceCount) +
           " instances in " + trim_double(elapsed) + "s";
  if (elapsed >= kCriterion1Budget) {
    detail += " which exceeds the " + trim_double(kCriterion1Budget) + "s budget";
    return false;
  }
  return true;
}

bool criterion2(std::string& detail) {
  AccessStructure structure;
  structure.participants = {"A", "B", "C"};
  structure.authorized_sets = {{"A", "B"}, {"B", "C"}};
  const DealResult dealt =
      deal_with_primes(structure, Secret(BigInt(42)), {BigInt(2), BigInt(3), BigInt(5)});

  const std::vector<BigInt> expected = {BigInt(132), BigInt(-21), BigInt(1)};
  if (dealt.public_polynomial.poly.coefficients() != expected) {
    detail = "coefficients differ from [132, -21, 1]";
    return false;
  }
  const std::vector<std::pair<long, long>> evals = {{6, 42}, {15, 42}, {10, 22}, {30, 402}};
  for (const auto& [r, want] : evals) {
    if (reconstruct(dealt.public_polynomial, BigInt(r)) != want) {
      detail = "evaluation at " + std::to_string(r) + " missed " + std::to_string(want);
      return false;
    }
  }
  detail = "coefficients [132, -21, 1] and all four evaluations exact";
  return true;
}

bool criterion3(std::string& detail) {
  std::size_t contained = 0;
  const BigRational loose = loose_precision();
  for (const Instance& inst : instances()) {
    if (inst.pub.k < 2) continue;
    const DeltaInterval d = delta_interval(inst.pub, loose);
    const ExtendedRational s{BigRational(inst.secret.value())};
    if (!(d.secret_low < s && s < d.secret_high)) {
      detail = "secret escaped the interval on a k=" + std::to_string(inst.pub.k) + " instance";
      return false;
    }
    ++contained;
  }

  // quadratic worked instance: the bound is exact
  PublicPolynomial quad{IntPolynomial({BigInt(132), BigInt(-21), BigInt(1)}), 2};
  const DeltaInterval dq = delta_interval(quad, attack_tolerance());
  if (!dq.exact || !dq.delta2.is_finite() ||
      dq.delta2.value() != make_rational(BigInt(-87), BigInt(4))) {
    detail = "quadratic delta2 is not exactly -87/4";
    return false;
  }

  // cubic worked instance against the scan-and-bisect oracle
  const std::vector<BigInt> roots = {BigInt(6), BigInt(10), BigInt(15)};
  PublicPolynomial cubic{poly_from_roots(roots, BigInt(42)), 3};
  const DeltaInterval dc = delta_interval(cubic, cubic_precision());
  const auto oracle = gsss::testing::critical_points_oracle(
      cubic.poly, BigRational(32), make_rational(BigInt(1), BigInt(4)),
      make_rational(BigInt(1), BigInt(1000000000)));
  if (oracle.size() != 2 || !dc.secret_low.is_finite() || !dc.secret_high.is_finite()) {
    detail = "cubic analysis lost a critical point";
    return false;
  }
  const BigRational tol = attack_tolerance();
  BigRational gap_high(dc.secret_high.value() - oracle[0].value);
  BigRational gap_low(dc.secret_low.value() - oracle[1].value);
  if (gap_high < 0) gap_high = BigRational(-gap_high);
  if (gap_low < 0) gap_low = BigRational(-gap_low);
  if (gap_high > tol || gap_low > tol) {
    detail = "cubic endpoints drifted more than 1e-6 from the oracle";
    return false;
  }

  detail = std::to_string(contained) + " secret intervals contained their secret; " +
           "quadratic bound exact at -87/4; cubic endpoints within 1e-6 of the oracle";
  return true;
}

using Family = std::set<std::set<Participant>>;

Family to_family(const AccessStructure& structure) {
  return Family(structure.authorized_sets.begin(), structure.authorized_sets.end());
}

bool criterion4(std::string& detail) {
  DeterministicRng rng("gsss.acceptance.closure");
  for (int round = 0; round < kClosureCases; ++round) {
    AccessStructure structure;
    const unsigned n = 1 + static_cast<unsigned>(rng.next_u64() % 10);
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;
    for (unsigned i = 0; i < n; ++i) {
      structure.participants.push_back("Q" + std::to_string(i));
    }
    const std::vector<Participant> order = canonical_participants(structure);
    std::uint64_t want = 1 + rng.next_u64() % 6;
    if (want > all) want = all;
    std::set<std::uint64_t> masks;
    while (masks.size() < want) masks.insert(1 + rng.next_u64() % all);
    for (std::uint64_t mask : masks) {
      std::set<Participant> subset;
      for (unsigned i = 0; i < n; ++i) {
        if (mask & (std::uint64_t(1) << i)) subset.insert(order[i]);
      }
      structure.authorized_sets.push_back(std::move(subset));
    }

    const AccessStructure closed = monotone_closure(structure);
    const auto brute = gsss::testing::closure_brute_force(structure);
    if (to_family(closed) != Family(brute.begin(), brute.end())) {
      detail = "closure differs from 2^n brute force on case " + std::to_string(round);
      return false;
    }
    if (to_family(monotone_closure(closed)) != to_family(closed)) {
      detail = "closure is not idempotent on case " + std::to_string(round);
      return false;
    }
    const std::vector<std::uint64_t> closed_masks = authorized_masks(closed);
    const std::set<std::uint64_t> closed_set(closed_masks.begin(), closed_masks.end());
    for (std::uint64_t mask : closed_set) {
      for (unsigned b = 0; b < n; ++b) {
        const std::uint64_t super = mask | (std::uint64_t(1) << b);
        if (!closed_set.count(super)) {
          detail = "closure is not superset-closed on case " + std::to_string(round);
          return false;
        }
      }
    }
  }
  detail = std::to_string(kClosureCases) +
           " cases matched brute force, idempotent and superset-closed";
  return true;
}

bool criterion5(std::string& detail) {
  const BigInt q = shamir_default_modulus();
  DeterministicRng rng("gsss.acceptance.shamir");
  std::size_t reconstructions = 0;
  std::size_t privacy_checks = 0;

  for (std::size_t n = 1; n <= kShamirMaxN; ++n) {
    for (std::size_t t = 1; t <= n; ++t) {
      ThresholdParams params;
      params.n = n;
      params.t = t;
      params.q = q;
      const BigInt secret = rng.uniform_below(q);
      const std::vector<ShamirShare> shares =
          shamir_split(secret, params, "acc-" + std::to_string(n) + "-" + std::to_string(t));

      for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        const int size = std::popcount(mask);
        if (size == static_cast<int>(t)) {
          std::vector<ShamirShare> coalition;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t(1) << i)) coalition.push_back(shares[i]);
          }
          if (shamir_reconstruct(coalition) != secret) {
            detail = "a size-" + std::to_string(t) + " coalition missed the secret at n=" +
                     std::to_string(n);
            return false;
          }
          ++reconstructions;
        } else if (size == static_cast<int>(t) - 1) {
          // privacy: any candidate secret is consistent with t-1 shares
          std::vector<std::pair<BigInt, BigInt>> points;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t(1) << i)) points.emplace_back(shares[i].x, shares[i].y);
          }
          for (int c = 0; c < kPrivacyCandidates; ++c) {
            const BigInt candidate = rng.uniform_below(q);
            auto candidate_points = points;
            candidate_points.emplace_back(BigInt(0), candidate);
            const std::vector<BigInt> coeffs =
                gsss::testing::lagrange_coefficients_mod(candidate_points, q);
            if (coeffs.size() > t) {
              detail = "interpolant degree escaped the threshold bound";
              return false;
            }
            for (const auto& [x, y] : candidate_points) {
              if (gsss::testing::eval_mod(coeffs, x, q) != ((y % q) + q) % q) {
                detail = "no consistent polynomial for a candidate secret";
                return false;
              }
            }
            ++privacy_checks;
          }
        }
      }
    }
  }
  detail = std::to_string(reconstructions) + " exhaustive reconstructions and " +
           std::to_string(privacy_checks) + " candidate-secret interpolations over 2^61-1";
  return true;
}

bool criterion6(std::string& detail) {
  const RunResult run =
      run_command(shell_quote(cli_path) + " bench --k-list 100 1000 10000 2>/dev/null");
  if (run.exit_code != 0) {
    detail = "bench exited with " + std::to_string(run.exit_code);
    return false;
  }
  std::map<long, double> ns_for;
  std::istringstream lines(run.out);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) continue;
    ns_for[std::stol(line.substr(0, comma))] = std::stod(line.substr(comma + 1));
  }
  if (!ns_for.count(100) || !ns_for.count(1000) || !ns_for.count(10000)) {
    detail = "bench output missing a k row";
    return false;
  }
  const double norm_small = ns_for[100] / 100.0;
  const double norm_large = ns_for[10000] / 10000.0;
  if (norm_small <= 0.0) {
    detail = "k=100 timing was not positive";
    return false;
  }
  const double ratio = norm_large / norm_small;
  detail = "ns-per-k 100: " + trim_double(norm_small) + ", 1000: " +
           trim_double(ns_for[1000] / 1000.0) + ", 10000: " + trim_double(norm_large) +
           "; ratio " + trim_double(ratio) + " within limit " + trim_double(kBenchRatioLimit);
  if (ratio > kBenchRatioLimit) {
    detail = "normalized ratio " + trim_double(ratio) + " exceeds " +
             trim_double(kBenchRatioLimit);
    return false;
  }
  return true;
}

bool identical_trees(const fs::path& a, const fs::path& b, std::string& why) {
  std::map<std::string, fs::path> left, right;
  for (const auto& entry : fs::directory_iterator(a)) {
    if (entry.is_regular_file()) left[entry.path().filename().string()] = entry.path();
  }
  for (const auto& entry : fs::directory_iterator(b)) {
    if (entry.is_regular_file()) right[entry.path().filename().string()] = entry.path();
  }
  if (left.size() != right.size()) {
    why = "file counts differ";
    return false;
  }
  for (const auto& [name, path] : left) {
    if (!right.count(name)) {
      why = "missing " + name;
      return false;
    }
    if (read_text(path) != read_text(right[name])) {
      why = name + " differs byte-wise";
      return false;
    }
  }
  return true;
}

bool criterion7(std::string& detail) {
  const fs::path root = gsss::testing::make_temp_dir("gsss-acceptance");
  struct Cleanup {
    fs::path path;
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  } cleanup{root};

  const fs::path structure = root / "structure.json";
  write_text(structure,
             R"({"participants":["A","B","C"],"authorized_sets":[["A","B"],["B","C"]]})");
  const std::string deal_base = "env -u GSSS_SEED " + shell_quote(cli_path) +
                                " deal --structure " + shell_quote(structure.string()) +
                                " --secret 42 --bits 64 --seed acceptance --out-dir ";
  for (const char* dir : {"d1", "d2"}) {
    const RunResult r = run_command(deal_base + shell_quote((root / dir).string()) +
                                    " 2>/dev/null");
    if (r.exit_code != 0) {
      detail = "deal exited with " + std::to_string(r.exit_code);
      return false;
    }
  }
  std::string why;
  if (!identical_trees(root / "d1", root / "d2", why)) {
    detail = "deal artifacts differ: " + why;
    return false;
  }

  const std::string split_base = "env -u GSSS_SEED " + shell_quote(cli_path) +
                                 " shamir split --secret 123456789 --n 5 --t 3" +
                                 " --seed acceptance --out-dir ";
  for (const char* dir : {"s1", "s2"}) {
    const RunResult r = run_command(split_base + shell_quote((root / dir).string()) +
                                    " 2>/dev/null");
    if (r.exit_code != 0) {
      detail = "shamir split exited with " + std::to_string(r.exit_code);
      return false;
    }
  }
  if (!identical_trees(root / "s1", root / "s2", why)) {
    detail = "split artifacts differ: " + why;
    return false;
  }

  detail = "repeated deal and split runs are byte-identical";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)(std::string&);
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-gsss-cli>\n", argv[0]);
    return 2;
  }
  cli_path = argv[1];

  const Criterion criteria[] = {
      {1, "exhaustive correctness", criterion1},
      {2, "worked instance", criterion2},
      {3, "attack containment", criterion3},
      {4, "monotone closure", criterion4},
      {5, "threshold baseline", criterion5},
      {6, "linear evaluation", criterion6},
      {7, "determinism", criterion7},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
      pass = false;
    }
    all_pass = all_pass && pass;
    std::printf("criterion %d (%s): %s (%s)\n", c.id, c.name, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
