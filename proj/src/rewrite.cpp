#include "digroup/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

#include "digroup/free_group.hpp"

namespace digroup {

namespace {

const Letter kE = Letter::unit();

RuleInstance make_s1(Letter x) { return {RuleKind::S1, DiWord({x, x.inverted()}, 2), DiWord({kE}, 1), {x}}; }
RuleInstance make_s2(Letter x) { return {RuleKind::S2, DiWord({x.inverted(), x}, 1), DiWord({kE}, 1), {x}}; }
RuleInstance make_s3(Letter y) { return {RuleKind::S3, DiWord({y, kE}, 1), DiWord({y}, 1), {y}}; }
RuleInstance make_s4(Letter y) { return {RuleKind::S4, DiWord({kE, y}, 2), DiWord({y}, 1), {y}}; }
RuleInstance make_t1(Letter x) {
  return {RuleKind::T1, DiWord({x.inverted(), kE}, 2), DiWord({x.inverted()}, 1), {x}};
}
RuleInstance make_t3(Letter x) { return {RuleKind::T3, DiWord({x, kE}, 2), DiWord({kE, x}, 1), {x}}; }

RuleInstance make_t2(std::span<const Letter> chain, Letter x) {
  Word rhs(chain.begin(), chain.end());
  rhs.push_back(x.inverted());
  Word lhs{kE};
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  Word params(chain.begin(), chain.end());
  params.push_back(x);
  return {RuleKind::T2, DiWord(std::move(lhs), 1), DiWord(std::move(rhs), chain.size() + 1),
          std::move(params)};
}

RuleInstance make_t4(Letter x, std::span<const Letter> chain, Letter z) {
  Word word{x.inverted()};
  word.insert(word.end(), chain.begin(), chain.end());
  word.push_back(z.inverted());
  Word params{x};
  params.insert(params.end(), chain.begin(), chain.end());
  params.push_back(z);
  return {RuleKind::T4, DiWord(word, chain.size() + 2), DiWord(word, 1), std::move(params)};
}

// Every word of length n over the generators, in lexicographic order.
std::vector<Word> chains(const Alphabet& alphabet, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& c : out)
      for (Letter g : alphabet.generators()) {
        next.push_back(c);
        next.back().push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

// Length of the run of positive letters starting at pos.
std::size_t positive_run(std::span<const Letter> w, std::size_t pos) {
  std::size_t k = pos;
  while (k < w.size() && w[k].is_positive()) ++k;
  return k - pos;
}

std::optional<RuleInstance> match_standard(RuleKind kind, std::span<const Letter> w, std::size_t pos) {
  const std::size_t n = w.size();
  if (pos >= n) return std::nullopt;
  const Letter a = w[pos];
  const bool has_next = pos + 1 < n;
  const Letter b = has_next ? w[pos + 1] : Letter();
  switch (kind) {
    case RuleKind::S1:
      if (has_next && a.is_positive() && b == a.inverted()) return make_s1(a);
      break;
    case RuleKind::S2:
      if (has_next && a.is_negative() && b == a.inverted()) return make_s2(b);
      break;
    case RuleKind::S3:
      if (has_next && b.is_unit()) return make_s3(a);
      break;
    case RuleKind::S4:
      if (has_next && a.is_unit()) return make_s4(b);
      break;
    case RuleKind::T1:
      if (has_next && a.is_negative() && b.is_unit()) return make_t1(a.inverted());
      break;
    case RuleKind::T2: {
      if (!a.is_unit()) break;
      std::size_t run = positive_run(w, pos + 1);
      std::size_t end = pos + 1 + run;
      if (end < n && w[end].is_negative())
        return make_t2(w.subspan(pos + 1, run), w[end].inverted());
      break;
    }
    case RuleKind::T3:
      if (has_next && a.is_positive() && b.is_unit()) return make_t3(a);
      break;
    case RuleKind::T4: {
      if (!a.is_negative()) break;
      std::size_t run = positive_run(w, pos + 1);
      std::size_t end = pos + 1 + run;
      if (end < n && w[end].is_negative())
        return make_t4(a.inverted(), w.subspan(pos + 1, run), w[end].inverted());
      break;
    }
  }
  return std::nullopt;
}

std::vector<RuleInstance> standard_instances(RuleKind kind, const Alphabet& alphabet,
                                             std::size_t max_chain) {
  std::vector<RuleInstance> out;
  switch (kind) {
    case RuleKind::S1:
      for (Letter x : alphabet.generators()) out.push_back(make_s1(x));
      break;
    case RuleKind::S2:
      for (Letter x : alphabet.generators()) out.push_back(make_s2(x));
      break;
    case RuleKind::S3:
      for (Letter y : alphabet.letters()) out.push_back(make_s3(y));
      break;
    case RuleKind::S4:
      for (Letter y : alphabet.letters()) out.push_back(make_s4(y));
      break;
    case RuleKind::T1:
      for (Letter x : alphabet.generators()) out.push_back(make_t1(x));
      break;
    case RuleKind::T2:
      for (std::size_t n = 0; n <= max_chain; ++n)
        for (const auto& c : chains(alphabet, n))
          for (Letter x : alphabet.generators()) out.push_back(make_t2(c, x));
      break;
    case RuleKind::T3:
      for (Letter x : alphabet.generators()) out.push_back(make_t3(x));
      break;
    case RuleKind::T4:
      for (std::size_t m = 0; m <= max_chain; ++m)
        for (Letter x : alphabet.generators())
          for (const auto& c : chains(alphabet, m))
            for (Letter z : alphabet.generators()) out.push_back(make_t4(x, c, z));
      break;
  }
  return out;
}

}  // namespace

std::string_view to_string(RuleKind kind) {
  static constexpr std::string_view names[] = {"S1", "S2", "S3", "S4", "T1", "T2", "T3", "T4"};
  return names[static_cast<std::size_t>(kind)];
}

bool RuleInstance::strong() const { return deglex_compare(lhs.word(), rhs.word()) > 0; }

std::string describe(const RuleInstance& rule, const Alphabet& alphabet) {
  return std::string(to_string(rule.kind)) + " " + to_string(rule.lhs, alphabet) + " -> " +
         to_string(rule.rhs, alphabet);
}

Schema standard_schema(RuleKind kind) {
  return Schema{
      kind,
      [kind](std::span<const Letter> w, std::size_t pos) { return match_standard(kind, w, pos); },
      [kind](const Alphabet& a, std::size_t max_chain) { return standard_instances(kind, a, max_chain); }};
}

RuleSet::RuleSet(std::vector<Schema> schemas) : schemas_(std::move(schemas)) {
  std::stable_sort(schemas_.begin(), schemas_.end(),
                   [](const Schema& a, const Schema& b) { return a.kind < b.kind; });
}

const RuleSet& RuleSet::standard() {
  static const RuleSet rules = [] {
    std::vector<Schema> s;
    for (RuleKind k : kAllRuleKinds) s.push_back(standard_schema(k));
    return RuleSet(std::move(s));
  }();
  return rules;
}

RuleSet RuleSet::without(RuleKind kind) const {
  std::vector<Schema> s;
  for (const auto& schema : schemas_)
    if (schema.kind != kind) s.push_back(schema);
  return RuleSet(std::move(s));
}

RuleSet RuleSet::replaced(Schema schema) const {
  std::vector<Schema> s;
  for (const auto& existing : schemas_)
    if (existing.kind != schema.kind) s.push_back(existing);
  s.push_back(std::move(schema));
  return RuleSet(std::move(s));
}

std::vector<RuleInstance> RuleSet::instances(const Alphabet& alphabet, std::size_t max_chain) const {
  std::vector<RuleInstance> out;
  for (const auto& schema : schemas_) {
    auto part = schema.instances(alphabet, max_chain);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

std::optional<StepCase> step_case(const DiWord& w, const RuleInstance& rule, std::size_t span_start) {
  const std::size_t c = w.center();
  if (c == span_start - 1 + rule.lhs.center()) return StepCase::C;
  if (!rule.strong()) return std::nullopt;
  if (c < span_start) return StepCase::A;
  if (c >= span_start + rule.lhs.size()) return StepCase::B;
  return std::nullopt;
}

DiWord apply_unchecked(const DiWord& w, const RewriteStep& step) {
  const auto& lhs = step.rule.lhs.word();
  const auto& rhs = step.rule.rhs.word();
  const std::size_t off = step.span_start - 1;
  Word out;
  out.reserve(w.size() - lhs.size() + rhs.size());
  out.insert(out.end(), w.word().begin(), w.word().begin() + off);
  out.insert(out.end(), rhs.begin(), rhs.end());
  out.insert(out.end(), w.word().begin() + off + lhs.size(), w.word().end());
  std::size_t center = w.center();
  switch (step.where) {
    case StepCase::A:
      break;
    case StepCase::B:
      center = center + rhs.size() - lhs.size();
      break;
    case StepCase::C:
      center = off + step.rule.rhs.center();
      break;
  }
  return DiWord(std::move(out), center);
}

// Visits steps in (span, kind) order until the visitor returns false.
template <typename Visitor>
void scan_steps(const DiWord& w, const RuleSet& rules, Visitor&& visit) {
  const auto& word = w.word();
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    for (const auto& schema : rules.schemas()) {
      auto rule = schema.match(word, pos);
      if (!rule) continue;
      auto where = step_case(w, *rule, pos + 1);
      if (!where) continue;
      RewriteStep step{std::move(*rule), pos + 1, *where};
      if (apply_unchecked(w, step) == w) continue;
      if (!visit(std::move(step))) return;
    }
  }
}

}  // namespace

std::vector<RewriteStep> find_steps(const DiWord& w, const RuleSet& rules) {
  std::vector<RewriteStep> out;
  scan_steps(w, rules, [&](RewriteStep s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::optional<RewriteStep> first_step(const DiWord& w, const RuleSet& rules) {
  std::optional<RewriteStep> out;
  scan_steps(w, rules, [&](RewriteStep s) {
    out = std::move(s);
    return false;
  });
  return out;
}

DiWord apply(const DiWord& w, const RewriteStep& step) {
  const auto& lhs = step.rule.lhs.word();
  if (step.span_start < 1 || step.span_start - 1 + lhs.size() > w.size())
    throw std::invalid_argument("rewrite span outside the diword");
  if (!std::equal(lhs.begin(), lhs.end(), w.word().begin() + (step.span_start - 1)))
    throw std::invalid_argument("rule lhs does not occur at the span");
  auto where = step_case(w, step.rule, step.span_start);
  if (!where || *where != step.where)
    throw std::invalid_argument("center does not satisfy the step case");
  return apply_unchecked(w, step);
}

DiWord normalize(const DiWord& w, const RuleSet& rules, const TraceSink& trace) {
  DiWord current = w;
  while (auto step = first_step(current, rules)) {
    DiWord next = apply_unchecked(current, *step);
    if (trace) trace(*step, current, next);
    current = std::move(next);
  }
  return current;
}

std::string format_trace_line(const RewriteStep& step, const DiWord& before, const DiWord& after,
                              const Alphabet& alphabet) {
  return std::string(to_string(step.rule.kind)) + " @" + std::to_string(step.span_start) +
         " case=" + static_cast<char>(step.where) + " : " + to_string(before, alphabet) + " => " +
         to_string(after, alphabet);
}

std::string_view to_string(NormalClass klass) {
  switch (klass) {
    case NormalClass::OmegaE:
      return "OmegaE";
    case NormalClass::OmegaX:
      return "OmegaX";
    case NormalClass::OmegaXinv:
      return "OmegaXinv";
  }
  return "?";
}

std::optional<NormalClass> omega_class(const DiWord& w) {
  const auto& word = w.word();
  const std::size_t c = w.center();
  const Letter mid = w.center_letter();
  std::span<const Letter> all(word);
  if (mid.is_unit()) {
    if (c == 1 && all_positive(all.subspan(1))) return NormalClass::OmegaE;
    return std::nullopt;
  }
  if (std::any_of(word.begin(), word.end(), [](Letter l) { return l.is_unit(); })) return std::nullopt;
  if (mid.is_positive()) {
    if (is_reduced(all.first(c - 1)) && is_reduced(all.subspan(c))) return NormalClass::OmegaX;
    return std::nullopt;
  }
  if (all_positive(all.first(c - 1)) && is_reduced(all)) return NormalClass::OmegaXinv;
  return std::nullopt;
}

}  // namespace digroup
