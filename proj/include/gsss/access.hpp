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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace gsss {

using Participant = std::string;

/// An access structure: the participant universe plus the exact family of
/// coalitions entitled to the secret. The family is NOT assumed monotone;
/// a superset of an authorized set is unauthorized unless listed.
struct AccessStructure {
  std::vector<Participant> participants;
  std::vector<std::set<Participant>> authorized_sets;
};

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Checks structural soundness: nonempty universe of distinct participants,
/// at least one authorized set, every set nonempty and drawn from the
/// universe, no duplicate sets.
ValidationReport validate(const AccessStructure& structure);

/// Throws StructureInvalid (message lists every problem) unless valid.
void require_valid(const AccessStructure& structure);

/// Participants in canonical (sorted) order; masks index into this order.
std::vector<Participant> canonical_participants(const AccessStructure& structure);

/// Authorized sets as bitmasks over the canonical participant order, sorted
/// ascending. Requires at most 64 participants.
std::vector<std::uint64_t> authorized_masks(const AccessStructure& structure);

struct ClosureGrowthReport {
  std::size_t k_before = 0;
  std::size_t k_after = 0;
  std::size_t n = 0;
  /// Upper-bound estimate k_before * 2^(n - min_set_size), the cost of
  /// closing the smallest listed set.
  double growth_estimate = 0.0;
};

/// Monotone closure: the input family plus every superset of each listed
/// set. Throws ClosureTooLarge if the result would exceed max_sets.
AccessStructure monotone_closure(const AccessStructure& structure,
                                 std::size_t max_sets = std::size_t(1) << 20);

ClosureGrowthReport closure_growth(const AccessStructure& before, const AccessStructure& after);

/// True if `coalition` is exactly one of the authorized sets.
bool is_authorized(const AccessStructure& structure, const std::set<Participant>& coalition);

std::string access_structure_to_json(const AccessStructure& structure);
AccessStructure access_structure_from_json(const std::string& text);

}  // namespace gsss
