#pragma once

// The rewriting system S ∪ T presenting the free digroup as a quotient of the
// free disemigroup on X^{±1} ∪ {e}, and a normalizer built on it.
//
//   S1  [x x^-1]_2              -> [e]_1
//   S2  [x^-1 x]_1              -> [e]_1
//   S3  [y e]_1                 -> [y]_1
//   S4  [e y]_2                 -> [y]_1
//   T1  [x^-1 e]_2              -> [x^-1]_1
//   T2  [e c1..cn x^-1]_1       -> [c1..cn x^-1]_{n+1}
//   T3  [x e]_2                 -> [e x]_1
//   T4  [x^-1 c1..cm z^-1]_{m+2} -> [x^-1 c1..cm z^-1]_1
//
// x, z, ci range over generators, y over every letter including e.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digroup/diword.hpp"

namespace digroup {

enum class RuleKind : std::uint8_t { S1, S2, S3, S4, T1, T2, T3, T4 };

inline constexpr RuleKind kAllRuleKinds[] = {RuleKind::S1, RuleKind::S2, RuleKind::S3,
                                             RuleKind::S4, RuleKind::T1, RuleKind::T2,
                                             RuleKind::T3, RuleKind::T4};

std::string_view to_string(RuleKind kind);

struct RuleInstance {
  RuleKind kind;
  DiWord lhs;
  DiWord rhs;
  /// Bound letters in schema order: x / y, then any chain, then z.
  Word params;

  /// The associative word of lhs strictly exceeds that of rhs. Only strong
  /// rules may fire with the center outside the matched span.
  bool strong() const;

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

std::string describe(const RuleInstance& rule, const Alphabet& alphabet);

/// Where the center sits relative to the matched span.
enum class StepCase : char { A = 'A', B = 'B', C = 'C' };

struct RewriteStep {
  RuleInstance rule;
  std::size_t span_start;  // 1-based
  StepCase where;
};

/// One parametric rule family, matched by shape.
struct Schema {
  RuleKind kind;
  /// The instance whose lhs word occurs at 0-based offset `pos`, if any.
  std::function<std::optional<RuleInstance>(std::span<const Letter> word, std::size_t pos)> match;
  /// Every instance over the alphabet with chain length <= max_chain.
  std::function<std::vector<RuleInstance>(const Alphabet&, std::size_t max_chain)> instances;
};

Schema standard_schema(RuleKind kind);

class RuleSet {
 public:
  explicit RuleSet(std::vector<Schema> schemas);

  static const RuleSet& standard();

  RuleSet without(RuleKind kind) const;
  /// Swaps in `schema` for the schema of the same kind.
  RuleSet replaced(Schema schema) const;

  const std::vector<Schema>& schemas() const { return schemas_; }
  std::vector<RuleInstance> instances(const Alphabet& alphabet, std::size_t max_chain) const;

 private:
  std::vector<Schema> schemas_;
};

/// All applicable non-trivial steps, ordered by span start then rule kind.
std::vector<RewriteStep> find_steps(const DiWord& w, const RuleSet& rules = RuleSet::standard());
std::optional<RewriteStep> first_step(const DiWord& w, const RuleSet& rules = RuleSet::standard());

/// Throws std::invalid_argument if the step does not match w.
DiWord apply(const DiWord& w, const RewriteStep& step);

using TraceSink =
    std::function<void(const RewriteStep& step, const DiWord& before, const DiWord& after)>;

DiWord normalize(const DiWord& w, const RuleSet& rules = RuleSet::standard(),
                 const TraceSink& trace = {});

/// `<kind> @<span> case=<A|B|C> : <before> => <after>`
std::string format_trace_line(const RewriteStep& step, const DiWord& before, const DiWord& after,
                              const Alphabet& alphabet);

enum class NormalClass : std::uint8_t { OmegaE, OmegaX, OmegaXinv };

std::string_view to_string(NormalClass klass);

/// The normal-form pattern w matches, if any:
///   OmegaE     [e u]_1 with u in X^*
///   OmegaX     [u x v]_{|u|+1} with u, v reduced over X^{±1}
///   OmegaXinv  [u x^-1 v]_{|u|+1} with u in X^* and u x^-1 v reduced
std::optional<NormalClass> omega_class(const DiWord& w);

inline bool is_normal_form(const DiWord& w) { return omega_class(w).has_value(); }

}  // namespace digroup
