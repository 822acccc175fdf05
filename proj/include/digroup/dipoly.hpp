#pragma once

// Dialgebra polynomials over the rationals: finite linear combinations of
// diwords, their reduction modulo a rule set, and the compositions (critical
// pairs) whose triviality characterizes a Gröbner-Shirshov basis.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "digroup/diword.hpp"
#include "digroup/rewrite.hpp"

namespace digroup {

using Rational = boost::multiprecision::cpp_rational;

class DiPoly {
 public:
  /// Largest monomial first.
  using Terms = std::map<DiWord, Rational, std::greater<>>;

  DiPoly() = default;

  static DiPoly monomial(const DiWord& w, const Rational& c = 1);
  /// lhs - rhs
  static DiPoly binomial(const DiWord& lhs, const DiWord& rhs);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const DiWord& w) const;

  void add_term(const DiWord& w, const Rational& c);

  DiPoly& operator+=(const DiPoly& o);
  DiPoly& operator-=(const DiPoly& o);
  DiPoly& operator*=(const Rational& c);

  friend DiPoly operator+(DiPoly a, const DiPoly& b) { return a += b; }
  friend DiPoly operator-(DiPoly a, const DiPoly& b) { return a -= b; }
  friend DiPoly operator*(const Rational& c, DiPoly a) { return a *= c; }
  friend DiPoly operator-(DiPoly a) { return a *= -1; }
  friend bool operator==(const DiPoly&, const DiPoly&) = default;

 private:
  Terms terms_;
};

struct LeadingTerm {
  DiWord monomial;
  Rational coefficient;
};

/// Throws std::domain_error on the zero polynomial.
LeadingTerm leading(const DiPoly& f);
DiPoly make_monic(const DiPoly& f);

/// The leading associative word strictly exceeds every other term's word.
bool is_strong(const DiPoly& f);

/// The rule instance lhs - rhs, made monic.
DiPoly to_poly(const RuleInstance& rule);

/// Admissible centers of a normal s-diword (a s b).
class PositionSet {
 public:
  PositionSet() = default;
  explicit PositionSet(std::vector<std::size_t> positions);

  const std::vector<std::size_t>& positions() const { return positions_; }
  bool contains(std::size_t p) const;
  bool empty() const { return positions_.empty(); }
  PositionSet intersect(const PositionSet& o) const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::vector<std::size_t> positions_;  // sorted, unique
};

PositionSet p_set(std::size_t prefix_len, const DiPoly& s, std::size_t suffix_len);

/// [a s b]_center as a polynomial. Throws std::invalid_argument unless center
/// is admissible.
DiPoly normal_sdiword(std::span<const Letter> a, const DiPoly& s, std::span<const Letter> b,
                      std::size_t center);

/// Source of reducers: given a monomial, a polynomial that is a normal
/// S-diword with that monomial as a term, or nothing if it is irreducible.
class ReductionBasis {
 public:
  virtual ~ReductionBasis() = default;
  virtual std::optional<DiPoly> reducer(const DiWord& monomial) const = 0;
};

/// A finite list of monic polynomials, searched by occurrence.
class ExplicitBasis final : public ReductionBasis {
 public:
  explicit ExplicitBasis(std::vector<DiPoly> rules);
  std::optional<DiPoly> reducer(const DiWord& monomial) const override;

 private:
  std::vector<DiPoly> rules_;
};

/// The rule schemas of a RuleSet, matched by shape with unbounded chains.
class SchemaBasis final : public ReductionBasis {
 public:
  explicit SchemaBasis(RuleSet rules = RuleSet::standard());
  std::optional<DiPoly> reducer(const DiWord& monomial) const override;

 private:
  RuleSet rules_;
};

class ReductionDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full reduction: the returned remainder has only irreducible monomials and
/// is zero iff f reduces to zero.
DiPoly reduce(const DiPoly& f, const ReductionBasis& basis, std::size_t max_steps = 1'000'000);
DiPoly reduce(const DiPoly& f, const std::vector<DiPoly>& rules);

enum class CompositionKind : std::uint8_t {
  LeftMultiplication,        // x |- f
  RightMultiplicationVdash,  // f |- [u]_{|u|}
  RightMultiplicationDashv,  // f -| [u]_{|u|}
  Inclusion,
  LeftMultInclusion,
  RightMultInclusion,
  Intersection,
  LeftMultIntersection,
  RightMultIntersection,
};

std::string_view to_string(CompositionKind kind);

/// Where an intersection's ambiguity center lies: in the part covered only by
/// f, in the overlap, or in the part covered only by g.
enum class Region : std::uint8_t { None, Left, Overlap, Right };

std::string_view to_string(Region region);

struct Composition {
  CompositionKind kind;
  Region region;
  DiWord ambiguity;
  DiPoly value;
};

/// Left and right multiplication compositions; empty unless f is non-strong.
/// Right multiplications run over every u with 1 <= |u| <= max_pad, under both
/// the |- and the -| reading.
std::vector<Composition> multiplication_compositions(const DiPoly& f, const Alphabet& alphabet,
                                                     std::size_t max_pad);

/// Inclusion and intersection compositions of f with g, including their
/// multiplicative variants.
std::vector<Composition> pair_compositions(const DiPoly& f, const DiPoly& g,
                                           const Alphabet& alphabet);

std::vector<Composition> compositions(const DiPoly& f, const DiPoly& g, const Alphabet& alphabet,
                                      std::size_t max_pad);

/// Terms in decreasing order: "[x x^-1]_2 - [e]_1", "2*[x]_1 + 1/2*[y]_1", "0".
std::string to_string(const DiPoly& f, const Alphabet& alphabet);

}  // namespace digroup
