#pragma once

// Bounded mechanical check that S ∪ T is a Gröbner-Shirshov basis: every
// composition between enumerated rule instances must reduce to zero.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "digroup/dipoly.hpp"
#include "digroup/rewrite.hpp"

namespace digroup {

/// Identifies an ambiguity family: the ordered rule pair, the composition
/// kind and, for intersections, where the ambiguity center lies. For left and
/// right multiplications g == f.
struct FamilyTag {
  RuleKind f;
  RuleKind g;
  CompositionKind kind;
  Region region = Region::None;

  friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

std::string to_string(const FamilyTag& tag);

/// The ambiguity families of S ∪ T: 34 intersections, 3 inclusions and
/// 10 multiplicative inclusions. No multiplicative intersection occurs.
const std::vector<FamilyTag>& reference_families();

struct CompositionEntry {
  std::string pair;
  FamilyTag family;
  DiWord ambiguity;
  bool reduced_to_zero;
  /// Rendered remainder, set only when nonzero.
  std::optional<std::string> remainder;
};

struct VerificationReport {
  Alphabet alphabet;
  std::size_t max_chain = 0;
  std::size_t max_pad = 0;
  std::size_t instances_checked = 0;
  /// Sorted by (kind, ambiguity, pair).
  std::vector<CompositionEntry> entries;
  /// Instances whose lhs is not the larger side.
  std::vector<std::string> orientation_failures;
  std::set<FamilyTag> families_exercised;

  bool pass() const;
  std::size_t failure_count() const;
  std::vector<FamilyTag> missing_reference_families() const;
};

std::vector<RuleInstance> enumerate_rule_instances(const Alphabet& alphabet, std::size_t max_chain,
                                                   const RuleSet& rules = RuleSet::standard());

struct CheckOptions {
  std::size_t jobs = 1;
  RuleSet rules = RuleSet::standard();
};

VerificationReport check_all(const Alphabet& alphabet, std::size_t max_chain, std::size_t max_pad,
                             const CheckOptions& options = {});

std::string report_to_text(const VerificationReport& report);
/// {"verdict": "PASS|FAIL", "checked": n, "failures": [...], ...}
std::string report_to_json(const VerificationReport& report);

namespace mutations {

/// T3 with its orientation flipped: [e x]_1 -> [x e]_2.
Schema t3_reversed();

}  // namespace mutations

}  // namespace digroup
