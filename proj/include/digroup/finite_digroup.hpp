#pragma once

// Explicit finite digroups given by operation tables: axiom checking, halos,
// the halo-times-group product construction, and homomorphisms out of F(X).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digroup/diword.hpp"

namespace digroup {

using Element = std::size_t;
using Table = std::vector<std::vector<Element>>;

struct FiniteDigroup {
  std::vector<std::string> elements;
  Table left;   // left[a][b] = a |- b
  Table right;  // right[a][b] = a -| b
  std::vector<Element> dagger;
  Element unit = 0;

  std::size_t size() const { return elements.size(); }
  Element vdash(Element a, Element b) const { return left[a][b]; }
  Element dashv(Element a, Element b) const { return right[a][b]; }
};

/// A malformed digroup description. `constraint` names the first violated
/// requirement, e.g. "left[1][0] out of range".
class DigroupLoadError : public std::runtime_error {
 public:
  explicit DigroupLoadError(const std::string& constraint)
      : std::runtime_error("invalid digroup: " + constraint), constraint_(constraint) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// {"elements": [...], "left": [[...]], "right": [[...]], "dagger": [...], "unit": i}
FiniteDigroup parse_digroup_json(const std::string& text);
FiniteDigroup load_digroup_file(const std::string& path);
std::string to_json(const FiniteDigroup& d);

/// Throws DigroupLoadError if the tables are not total and closed.
void validate_shape(const FiniteDigroup& d);

enum class Axiom : std::uint8_t {
  G1Left,   // (a |- b) |- c = a |- (b |- c)
  G1Right,  // (a -| b) -| c = a -| (b -| c)
  G2,       // a -| (b |- c) = a -| (b -| c)
  G3,       // (a -| b) |- c = (a |- b) |- c
  G4,       // a |- (b -| c) = (a |- b) -| c
  G5,       // 1 |- a = a = a -| 1
  G6,       // a |- a' = 1 = a' -| a
};

inline constexpr Axiom kAllAxioms[] = {Axiom::G1Left, Axiom::G1Right, Axiom::G2, Axiom::G3,
                                       Axiom::G4,     Axiom::G5,      Axiom::G6};

std::string_view to_string(Axiom axiom);

struct AxiomResult {
  Axiom axiom;
  bool holds;
  /// First failing tuple (a, b, c as far as the axiom uses them).
  std::vector<Element> witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool pass() const;
  const AxiomResult& result(Axiom axiom) const;
};

AxiomReport check_axioms(const FiniteDigroup& d);
std::string report_to_text(const AxiomReport& report, const FiniteDigroup& d);

struct FiniteGroup {
  std::vector<std::string> elements;
  Table mul;
  Element identity = 0;
  std::vector<Element> inverse;

  std::size_t size() const { return elements.size(); }
};

/// Z/nZ with elements "0".."n-1".
FiniteGroup cyclic_group(std::size_t n);
/// Z/2Z with elements "1" (identity) and "a".
FiniteGroup z2();

/// A group as a digroup with both operations equal to the product.
FiniteDigroup group_digroup(const FiniteGroup& g);

/// A pointed set acted on by a group: action[h][v] = h . v.
struct PointedActionSet {
  std::vector<std::string> points;
  Element basepoint = 0;
  Table action;
};

PointedActionSet trivial_action(std::vector<std::string> points, std::size_t group_size);

/// E x J with (u,h) |- (v,k) = (h.v, hk), (u,h) -| (v,k) = (u, hk),
/// unit (basepoint, 1) and (u,h)' = (basepoint, h^-1). Element (u,h) has index
/// u * |J| + h and name "(u,h)". Throws std::invalid_argument if the action is
/// not a group action fixing the basepoint.
FiniteDigroup product_digroup(const PointedActionSet& e, const FiniteGroup& j);

/// Image of w under the homomorphism F(X) -> D extending the assignment of
/// generators: letters map to their images (inverses to daggers, e to the
/// unit), combined with |- up to the center and -| after it.
Element evaluate_hom(const std::vector<Element>& assignment, const DiWord& w, const FiniteDigroup& d);

struct HomCount {
  std::size_t count = 0;
  std::size_t relations_checked = 0;
  /// Assignments under which some defining relation is not preserved.
  std::size_t failed_assignments = 0;
};

/// Counts assignments X -> D for |X| = num_generators and audits each one on
/// every S relation and every T relation with chain length <= 2.
HomCount hom_count(std::size_t num_generators, const FiniteDigroup& d);

std::vector<Element> bar_units(const FiniteDigroup& d);

struct InverseCheck {
  bool ok = true;
  /// First a whose set of two-sided inverses is not {a'}.
  std::optional<Element> witness;
};

InverseCheck unique_inverse_check(const FiniteDigroup& d);

}  // namespace digroup
