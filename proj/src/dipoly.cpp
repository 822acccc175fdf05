#include "digroup/dipoly.hpp"

#include <algorithm>

namespace digroup {

DiPoly DiPoly::monomial(const DiWord& w, const Rational& c) {
  DiPoly p;
  p.add_term(w, c);
  return p;
}

DiPoly DiPoly::binomial(const DiWord& lhs, const DiWord& rhs) {
  DiPoly p;
  p.add_term(lhs, 1);
  p.add_term(rhs, -1);
  return p;
}

Rational DiPoly::coefficient(const DiWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiPoly::add_term(const DiWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

DiPoly& DiPoly::operator+=(const DiPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

DiPoly& DiPoly::operator-=(const DiPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

DiPoly& DiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

LeadingTerm leading(const DiPoly& f) {
  if (f.is_zero()) throw std::domain_error("zero polynomial has no leading term");
  const auto& [w, c] = *f.terms().begin();
  return {w, c};
}

DiPoly make_monic(const DiPoly& f) {
  Rational c = leading(f).coefficient;
  return Rational(1) / c * f;
}

bool is_strong(const DiPoly& f) {
  auto lead = leading(f);
  for (const auto& [w, c] : f.terms()) {
    if (w == lead.monomial) continue;
    if (deglex_compare(lead.monomial.word(), w.word()) <= 0) return false;
  }
  return true;
}

DiPoly to_poly(const RuleInstance& rule) { return make_monic(DiPoly::binomial(rule.lhs, rule.rhs)); }

PositionSet::PositionSet(std::vector<std::size_t> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

bool PositionSet::contains(std::size_t p) const {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

PositionSet PositionSet::intersect(const PositionSet& o) const {
  std::vector<std::size_t> out;
  std::set_intersection(positions_.begin(), positions_.end(), o.positions_.begin(), o.positions_.end(),
                        std::back_inserter(out));
  return PositionSet(std::move(out));
}

PositionSet p_set(std::size_t prefix_len, const DiPoly& s, std::size_t suffix_len) {
  auto lead = leading(s);
  const std::size_t len = lead.monomial.size();
  std::vector<std::size_t> out{prefix_len + lead.monomial.center()};
  if (is_strong(s)) {
    for (std::size_t n = 1; n <= prefix_len; ++n) out.push_back(n);
    for (std::size_t n = prefix_len + len + 1; n <= prefix_len + len + suffix_len; ++n) out.push_back(n);
  }
  return PositionSet(std::move(out));
}

DiPoly normal_sdiword(std::span<const Letter> a, const DiPoly& s, std::span<const Letter> b,
                      std::size_t center) {
  if (!p_set(a.size(), s, b.size()).contains(center))
    throw std::invalid_argument("center is not admissible for this s-diword");
  const std::size_t len = leading(s).monomial.size();
  DiPoly out;
  for (const auto& [v, c] : s.terms()) {
    Word w = concat(concat(a, v.word()), b);
    std::size_t m = center;
    if (center > a.size() + len)
      m = center - len + v.size();
    else if (center > a.size())
      m = a.size() + v.center();
    out.add_term(DiWord(std::move(w), m), c);
  }
  return out;
}

ExplicitBasis::ExplicitBasis(std::vector<DiPoly> rules) {
  for (auto& r : rules) rules_.push_back(make_monic(r));
}

std::optional<DiPoly> ExplicitBasis::reducer(const DiWord& monomial) const {
  const auto& word = monomial.word();
  for (const auto& s : rules_) {
    const Word sw = leading(s).monomial.word();
    if (sw.size() > word.size()) continue;
    for (std::size_t k = 0; k + sw.size() <= word.size(); ++k) {
      if (!std::equal(sw.begin(), sw.end(), word.begin() + k)) continue;
      std::span<const Letter> all(word);
      auto a = all.first(k);
      auto b = all.subspan(k + sw.size());
      if (p_set(a.size(), s, b.size()).contains(monomial.center()))
        return normal_sdiword(a, s, b, monomial.center());
    }
  }
  return std::nullopt;
}

SchemaBasis::SchemaBasis(RuleSet rules) : rules_(std::move(rules)) {}

std::optional<DiPoly> SchemaBasis::reducer(const DiWord& monomial) const {
  auto step = first_step(monomial, rules_);
  if (!step) return std::nullopt;
  return DiPoly::binomial(monomial, apply(monomial, *step));
}

DiPoly reduce(const DiPoly& f, const ReductionBasis& basis, std::size_t max_steps) {
  DiPoly rem = f;
  DiPoly out;
  for (std::size_t steps = 0; !rem.is_zero(); ++steps) {
    if (steps >= max_steps) throw ReductionDiverged("reduction exceeded " + std::to_string(max_steps) + " steps");
    auto [m, c] = leading(rem);
    if (auto r = basis.reducer(m)) {
      rem -= (c / r->coefficient(m)) * *r;
    } else {
      out.add_term(m, c);
      rem.add_term(m, -c);
    }
  }
  return out;
}

DiPoly reduce(const DiPoly& f, const std::vector<DiPoly>& rules) { return reduce(f, ExplicitBasis(rules)); }

std::string_view to_string(CompositionKind kind) {
  switch (kind) {
    case CompositionKind::LeftMultiplication:
      return "left-multiplication";
    case CompositionKind::RightMultiplicationVdash:
      return "right-multiplication(|-)";
    case CompositionKind::RightMultiplicationDashv:
      return "right-multiplication(-|)";
    case CompositionKind::Inclusion:
      return "inclusion";
    case CompositionKind::LeftMultInclusion:
      return "left-multiplicative-inclusion";
    case CompositionKind::RightMultInclusion:
      return "right-multiplicative-inclusion";
    case CompositionKind::Intersection:
      return "intersection";
    case CompositionKind::LeftMultIntersection:
      return "left-multiplicative-intersection";
    case CompositionKind::RightMultIntersection:
      return "right-multiplicative-intersection";
  }
  return "?";
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::None:
      return "-";
    case Region::Left:
      return "L";
    case Region::Overlap:
      return "O";
    case Region::Right:
      return "R";
  }
  return "?";
}

namespace {

std::vector<Word> all_words_up_to(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  const auto letters = alphabet.letters();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : letters) {
        next.push_back(w);
        next.back().push_back(l);
      }
    layer = std::move(next);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

std::vector<Composition> multiplication_compositions(const DiPoly& f, const Alphabet& alphabet,
                                                     std::size_t max_pad) {
  std::vector<Composition> out;
  if (is_strong(f)) return out;
  const auto lead = leading(f).monomial;
  for (Letter x : alphabet.letters()) {
    DiWord xw({x}, 1);
    DiPoly value;
    for (const auto& [v, c] : f.terms()) value.add_term(op_left(xw, v), c);
    out.push_back({CompositionKind::LeftMultiplication, Region::None, op_left(xw, lead), std::move(value)});
  }
  for (const auto& u : all_words_up_to(alphabet, max_pad)) {
    DiWord uw(u, u.size());
    DiPoly vdash;
    DiPoly dashv;
    for (const auto& [v, c] : f.terms()) {
      vdash.add_term(op_left(v, uw), c);
      dashv.add_term(op_right(v, uw), c);
    }
    out.push_back({CompositionKind::RightMultiplicationVdash, Region::None, op_left(lead, uw), std::move(vdash)});
    out.push_back({CompositionKind::RightMultiplicationDashv, Region::None, op_right(lead, uw), std::move(dashv)});
  }
  return out;
}

std::vector<Composition> pair_compositions(const DiPoly& f, const DiPoly& g, const Alphabet& alphabet) {
  std::vector<Composition> out;
  const auto lf = leading(f).monomial;
  const auto lg = leading(g).monomial;
  const Word& F = lf.word();
  const Word& G = lg.word();
  const bool both_strong = is_strong(f) && is_strong(g);
  const auto letters = alphabet.letters();
  std::span<const Letter> fs(F);
  std::span<const Letter> gs(G);

  // g's leading word inside f's.
  if (G.size() <= F.size()) {
    for (std::size_t k = 0; k + G.size() <= F.size(); ++k) {
      if (!std::equal(G.begin(), G.end(), F.begin() + k)) continue;
      if (G.size() == F.size() && f == g) continue;
      auto a = fs.first(k);
      auto b = fs.subspan(k + G.size());
      if (p_set(a.size(), g, b.size()).contains(lf.center())) {
        out.push_back({CompositionKind::Inclusion, Region::None, lf, f - normal_sdiword(a, g, b, lf.center())});
      } else if (both_strong) {
        for (Letter x : letters) {
          Word xv{x};
          Word xa = concat(xv, a);
          Word bx = concat(b, xv);
          out.push_back({CompositionKind::LeftMultInclusion, Region::None, DiWord(concat(xv, F), 1),
                         normal_sdiword(xv, f, {}, 1) - normal_sdiword(xa, g, b, 1)});
          out.push_back({CompositionKind::RightMultInclusion, Region::None, DiWord(concat(F, xv), F.size() + 1),
                         normal_sdiword({}, f, xv, F.size() + 1) - normal_sdiword(a, g, bx, F.size() + 1)});
        }
      }
    }
  }

  // A proper suffix of f's leading word equal to a proper prefix of g's.
  for (std::size_t o = 1; o < std::min(F.size(), G.size()); ++o) {
    if (!std::equal(F.end() - o, F.end(), G.begin())) continue;
    auto a = fs.first(F.size() - o);
    auto b = gs.subspan(o);
    Word w = concat(F, b);
    auto both = p_set(0, f, b.size()).intersect(p_set(a.size(), g, 0));
    if (!both.empty()) {
      for (std::size_t m : both.positions()) {
        Region region = m <= a.size() ? Region::Left : (m <= F.size() ? Region::Overlap : Region::Right);
        out.push_back({CompositionKind::Intersection, region, DiWord(w, m),
                       normal_sdiword({}, f, b, m) - normal_sdiword(a, g, {}, m)});
      }
    } else if (both_strong) {
      for (Letter x : letters) {
        Word xv{x};
        Word xa = concat(xv, a);
        Word bx = concat(b, xv);
        out.push_back({CompositionKind::LeftMultIntersection, Region::None, DiWord(concat(xv, w), 1),
                       normal_sdiword(xv, f, b, 1) - normal_sdiword(xa, g, {}, 1)});
        out.push_back({CompositionKind::RightMultIntersection, Region::None, DiWord(concat(w, xv), w.size() + 1),
                       normal_sdiword({}, f, bx, w.size() + 1) - normal_sdiword(a, g, xv, w.size() + 1)});
      }
    }
  }
  return out;
}

std::vector<Composition> compositions(const DiPoly& f, const DiPoly& g, const Alphabet& alphabet,
                                      std::size_t max_pad) {
  auto out = multiplication_compositions(f, alphabet, max_pad);
  auto pairs = pair_compositions(f, g, alphabet);
  out.insert(out.end(), std::make_move_iterator(pairs.begin()), std::make_move_iterator(pairs.end()));
  return out;
}

std::string to_string(const DiPoly& f, const Alphabet& alphabet) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.str() + "*";
    out += to_string(w, alphabet);
    first = false;
  }
  return out;
}

}  // namespace digroup
