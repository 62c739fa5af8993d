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

#include "gsss/access.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <json.hpp>

#include "gsss/errors.hpp"

namespace gsss {

ValidationReport validate(const AccessStructure& structure) {
  ValidationReport report;
  auto& problems = report.problems;

  if (structure.participants.empty()) problems.push_back("participant list is empty");
  std::set<Participant> universe;
  for (const Participant& p : structure.participants) {
    if (p.empty()) problems.push_back("participant name is empty");
    if (!universe.insert(p).second) problems.push_back("duplicate participant '" + p + "'");
  }

  if (structure.authorized_sets.empty()) {
    problems.push_back("empty access structure: no authorized sets");
  }
  std::set<std::set<Participant>> seen;
  for (std::size_t i = 0; i < structure.authorized_sets.size(); ++i) {
    const auto& s = structure.authorized_sets[i];
    if (s.empty()) problems.push_back("authorized set " + std::to_string(i) + " is empty");
    for (const Participant& p : s) {
      if (!universe.count(p)) {
        problems.push_back("authorized set " + std::to_string(i) + " names unknown participant '" +
                           p + "'");
      }
    }
    if (!seen.insert(s).second) {
      problems.push_back("authorized set " + std::to_string(i) + " is a duplicate");
    }
  }

  report.ok = problems.empty();
  return report;
}

void require_valid(const AccessStructure& structure) {
  ValidationReport report = validate(structure);
  if (report.ok) return;
  std::string msg = "invalid access structure:";
  for (const std::string& p : report.problems) msg += " " + p + ";";
  throw StructureInvalid(msg);
}

std::vector<Participant> canonical_participants(const AccessStructure& structure) {
  std::vector<Participant> order = structure.participants;
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::uint64_t> authorized_masks(const AccessStructure& structure) {
  const std::vector<Participant> order = canonical_participants(structure);
  if (order.size() > 64) throw StructureInvalid("more than 64 participants");
  std::map<Participant, unsigned> index;
  for (unsigned i = 0; i < order.size(); ++i) index.emplace(order[i], i);

  std::vector<std::uint64_t> masks;
  masks.reserve(structure.authorized_sets.size());
  for (const auto& s : structure.authorized_sets) {
    std::uint64_t m = 0;
    for (const Participant& p : s) {
      auto it = index.find(p);
      if (it == index.end()) throw UnknownParticipant("unknown participant '" + p + "'");
      m |= std::uint64_t(1) << it->second;
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

AccessStructure monotone_closure(const AccessStructure& structure, std::size_t max_sets) {
  require_valid(structure);
  const std::vector<Participant> order = canonical_participants(structure);
  const unsigned n = static_cast<unsigned>(order.size());
  const std::vector<std::uint64_t> masks = authorized_masks(structure);
  const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;

  std::set<std::uint64_t> closed;
  for (std::uint64_t m : masks) {
    const unsigned free_bits = n - static_cast<unsigned>(std::popcount(m));
    // 2^free_bits supersets of m; bail before enumerating if that alone
    // already exceeds the cap.
    if (free_bits >= 63 || (std::size_t(1) << free_bits) > max_sets) {
      throw ClosureTooLarge("closure of a set with " + std::to_string(free_bits) +
                            " absent participants exceeds the cap of " +
                            std::to_string(max_sets) + " sets");
    }
    const std::uint64_t complement = full & ~m;
    // enumerate submasks of the complement, i.e. all supersets of m
    std::uint64_t sub = complement;
    while (true) {
      closed.insert(m | sub);
      if (closed.size() > max_sets) {
        throw ClosureTooLarge("monotone closure exceeds the cap of " + std::to_string(max_sets) +
                              " sets");
      }
      if (sub == 0) break;
      sub = (sub - 1) & complement;
    }
  }

  AccessStructure out;
  out.participants = order;
  out.authorized_sets.reserve(closed.size());
  for (std::uint64_t m : closed) {
    std::set<Participant> s;
    for (unsigned i = 0; i < n; ++i) {
      if (m & (std::uint64_t(1) << i)) s.insert(order[i]);
    }
    out.authorized_sets.push_back(std::move(s));
  }
  return out;
}

ClosureGrowthReport closure_growth(const AccessStructure& before, const AccessStructure& after) {
  ClosureGrowthReport report;
  report.k_before = before.authorized_sets.size();
  report.k_after = after.authorized_sets.size();
  report.n = before.participants.size();
  std::size_t min_size = report.n;
  for (const auto& s : before.authorized_sets) min_size = std::min(min_size, s.size());
  report.growth_estimate =
      static_cast<double>(report.k_before) * std::ldexp(1.0, static_cast<int>(report.n - min_size));
  return report;
}

bool is_authorized(const AccessStructure& structure, const std::set<Participant>& coalition) {
  return std::find(structure.authorized_sets.begin(), structure.authorized_sets.end(), coalition) !=
         structure.authorized_sets.end();
}

std::string access_structure_to_json(const AccessStructure& structure) {
  nlohmann::ordered_json j;
  j["participants"] = canonical_participants(structure);
  std::vector<std::vector<Participant>> sets;
  sets.reserve(structure.authorized_sets.size());
  for (const auto& s : structure.authorized_sets) sets.emplace_back(s.begin(), s.end());
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  j["authorized_sets"] = sets;
  return j.dump(2) + "\n";
}

AccessStructure access_structure_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad access structure JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("participants") || !j.contains("authorized_sets")) {
    throw ParseError("access structure JSON needs 'participants' and 'authorized_sets'");
  }
  AccessStructure out;
  try {
    out.participants = j.at("participants").get<std::vector<Participant>>();
    for (const auto& arr : j.at("authorized_sets")) {
      out.authorized_sets.push_back(arr.get<std::set<Participant>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad access structure JSON: ") + e.what());
  }
  return out;
}

}  // namespace gsss
