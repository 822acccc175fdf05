// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "digroup/finite_digroup.hpp"
#include "digroup/free_digroup.hpp"
#include "digroup/gsb_verifier.hpp"
#include "support/oracles.hpp"

using namespace digroup;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

NormalForm nf(const std::string& text, const Alphabet& a) { return NormalForm(parse_diword(text, a)); }

Outcome gsb_reproof() {
  const Alphabet ab({"a", "b"});
  CheckOptions options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto start = std::chrono::steady_clock::now();
  const auto report = check_all(ab, 3, 3, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  options.rules = RuleSet::standard().replaced(mutations::t3_reversed());
  const auto mutated = check_all(ab, 3, 3, options);

  const auto missing = report.missing_reference_families();
  std::ostringstream d;
  d << report.entries.size() << " compositions over " << report.instances_checked << " instances, "
    << report.failure_count() << " nonzero; families " << reference_families().size() - missing.size() << "/"
    << reference_families().size() << "; " << seconds << " s; T3-reversed verdict "
    << (mutated.pass() ? "PASS" : "FAIL") << " (" << mutated.failure_count() << " failures)";
  return {report.pass() && missing.empty() && seconds < 30.0 && !mutated.pass(), d.str()};
}

Outcome golden_tables() {
  const Alphabet x({"x"});
  std::vector<oracle::OneGen> elements;
  for (int n = 0; n <= 5; ++n) elements.push_back(oracle::OneGen::e(n));
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) elements.push_back(oracle::OneGen::x(i, j));
  for (int m = 1; m <= 5; ++m) elements.push_back(oracle::OneGen::xinv(m));

  std::vector<NormalForm> forms;
  for (const auto& g : elements) forms.push_back(nf(oracle::render(g), x));

  std::size_t cells = 0, mismatches = 0;
  std::string first;
  auto check = [&](const std::string& got, const std::string& want, const std::string& what) {
    ++cells;
    if (got == want) return;
    if (mismatches++ == 0) first = what + ": got " + got + ", table " + want;
  };
  for (std::size_t p = 0; p < elements.size(); ++p) {
    for (std::size_t q = 0; q < elements.size(); ++q) {
      const std::string label = oracle::render(elements[p]) + " , " + oracle::render(elements[q]);
      check(to_string(mul_left(forms[p], forms[q]).diword(), x),
            oracle::render(oracle::table_vdash(elements[p], elements[q])), label + " |-");
      check(to_string(mul_right(forms[p], forms[q]).diword(), x),
            oracle::render(oracle::table_dashv(elements[p], elements[q])), label + " -|");
    }
    check(to_string(dagger(forms[p]).diword(), x), oracle::render(oracle::table_dagger(elements[p])),
          oracle::render(elements[p]) + " dagger");
  }

  // The emitted table must agree cell for cell as well.
  std::map<std::string, oracle::OneGen> by_name;
  for (const auto& g : elements) by_name.emplace(oracle::render(g), g);
  const auto table = single_generator_table(5, 4);
  std::size_t table_cells = 0;
  for (const auto& cell : table.cells) {
    const auto p = by_name.at(to_string(cell.left.diword(), x));
    std::string want;
    if (cell.op == TableOp::Dagger) {
      want = oracle::render(oracle::table_dagger(p));
    } else {
      const auto q = by_name.at(to_string(cell.right->diword(), x));
      want = oracle::render(cell.op == TableOp::Left ? oracle::table_vdash(p, q) : oracle::table_dashv(p, q));
    }
    ++table_cells;
    check(to_string(cell.result.diword(), x), want, "emitted table");
  }
  const std::size_t expected_table = 2 * elements.size() * elements.size() + elements.size();

  std::ostringstream d;
  d << cells << " cells compared, " << mismatches << " mismatches; emitted table " << table_cells << "/"
    << expected_table << " cells";
  if (mismatches) d << "; first: " << first;
  return {mismatches == 0 && table_cells == expected_table, d.str()};
}

Outcome oracle_equivalence() {
  const Alphabet xyz({"x", "y", "z"});
  oracle::Rng rng(20240603);
  std::size_t mismatches = 0;
  std::string first;
  for (int k = 0; k < 10000; ++k) {
    const auto q = oracle::random_normal_form(rng, xyz, 8);
    const auto p = oracle::random_normal_form(rng, xyz, 8);
    const bool ok = mul_left(q, p).diword() == normalize(op_left(q.diword(), p.diword())) &&
                    mul_right(q, p).diword() == normalize(op_right(q.diword(), p.diword())) &&
                    dagger(q).diword() == normalize(oracle::raw_dagger(q.diword()));
    if (!ok && mismatches++ == 0) first = to_string(q.diword(), xyz) + " , " + to_string(p.diword(), xyz);
  }
  return {mismatches == 0, "10000 pairs over 3 generators, " + std::to_string(mismatches) + " mismatches" +
                               (first.empty() ? "" : "; first: " + first)};
}

Outcome axiom_suite() {
  const Alphabet ab({"a", "b"});
  oracle::Rng rng(7);
  const NormalForm one = NormalForm::unit();
  std::map<std::string, std::size_t> failures;
  for (int k = 0; k < 10000; ++k) {
    const auto a = oracle::random_normal_form(rng, ab, 7);
    const auto b = oracle::random_normal_form(rng, ab, 7);
    const auto c = oracle::random_normal_form(rng, ab, 7);
    if (mul_left(mul_left(a, b), c) != mul_left(a, mul_left(b, c))) ++failures["G1 |-"];
    if (mul_right(mul_right(a, b), c) != mul_right(a, mul_right(b, c))) ++failures["G1 -|"];
    if (mul_right(a, mul_left(b, c)) != mul_right(a, mul_right(b, c))) ++failures["G2"];
    if (mul_left(mul_right(a, b), c) != mul_left(mul_left(a, b), c)) ++failures["G3"];
    if (mul_left(a, mul_right(b, c)) != mul_right(mul_left(a, b), c)) ++failures["G4"];
    if (mul_left(one, a) != a || mul_right(a, one) != a) ++failures["G5"];
    if (mul_left(a, dagger(a)) != one || mul_right(dagger(a), a) != one) ++failures["G6"];
  }
  std::string detail = "10000 triples over 2 generators";
  for (const auto& [axiom, n] : failures) detail += "; " + axiom + " failed " + std::to_string(n) + "x";
  if (failures.empty()) detail += ", G1-G6 all hold";
  return {failures.empty(), detail};
}

Outcome irreducibility() {
  const Alphabet x({"x"});
  std::set<DiWord> irreducible, pattern, enumerated;
  for (std::size_t len = 1; len <= 5; ++len)
    for (const auto& w : oracle::all_diwords(x, len)) {
      if (find_steps(w).empty()) irreducible.insert(w);
      if (oracle::omega_pattern(w)) pattern.insert(w);
    }
  for (const auto& w : enumerate_normal_forms(x, 5)) enumerated.insert(w.diword());
  std::ostringstream d;
  d << irreducible.size() << " irreducible diwords of length <= 5, " << pattern.size() << " pattern matches, "
    << enumerated.size() << " enumerated normal forms";
  return {irreducible == pattern && pattern == enumerated, d.str()};
}

Outcome confluence() {
  const Alphabet xyz({"x", "y", "z"});
  oracle::Rng rng(11);
  std::size_t disagreements = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto w = oracle::random_diword(rng, xyz, 10);
    const auto expected = normalize(w);
    for (int r = 0; r < 20; ++r)
      if (oracle::random_normalize(w, rng) != expected) ++disagreements;
  }
  return {disagreements == 0,
          "1000 diwords x 20 random strategies, " + std::to_string(disagreements) + " disagreements"};
}

Outcome hom_invariance() {
  const auto d = product_digroup(trivial_action({"*", "p"}, 2), z2());
  const Alphabet ab({"a", "b"});
  oracle::Rng rng(3);
  std::size_t failures = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto w = oracle::random_diword(rng, ab, 10);
    const auto n = normalize(w);
    for (int s = 0; s < 5; ++s) {
      std::vector<Element> assignment{oracle::uniform(rng, 0, d.size() - 1), oracle::uniform(rng, 0, d.size() - 1)};
      if (evaluate_hom(assignment, w, d) != evaluate_hom(assignment, n, d)) ++failures;
    }
  }
  const bool axioms = check_axioms(d).pass();
  return {failures == 0 && axioms && d.size() == 4,
          "4-element product digroup (axioms " + std::string(axioms ? "hold" : "FAIL") + "), 10000 diwords x 5 " +
              "assignments, " + std::to_string(failures) + " failures"};
}

Outcome hom_counting() {
  const auto d = group_digroup(z2());
  bool ok = true;
  std::string detail;
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto r = hom_count(k, d);
    ok = ok && r.count == (std::size_t{1} << k) && r.failed_assignments == 0 && r.relations_checked > 0;
    detail += (k > 1 ? "; " : "") + std::string("K=") + std::to_string(k) + ": " + std::to_string(r.count) +
              " (audit " + std::to_string(r.relations_checked) + " relation images, " +
              std::to_string(r.failed_assignments) + " bad assignments)";
  }
  return {ok, detail};
}

std::set<std::string> halo_strings(const Alphabet& x, std::size_t max_len) {
  std::set<std::string> out;
  for (const auto& w : enumerate_normal_forms(x, max_len))
    if (in_halo(w)) out.insert(to_string(w.diword(), x));
  return out;
}

Outcome halo_and_group_part() {
  const Alphabet x({"x"});
  auto expected = [](int n) {
    auto v = oracle::one_generator_halo(n);
    return std::set<std::string>(v.begin(), v.end());
  };
  // A halo element [x^-n x^n]_{n+1} has length 2n, so length <= 8 admits n <= 4
  // and the n <= 3 family is exactly the halo of length <= 6 (and <= 7).
  const bool at8 = halo_strings(x, 8) == expected(4);
  const bool at7 = halo_strings(x, 7) == expected(3);
  const bool at6 = halo_strings(x, 6) == expected(3);

  const auto sample = enumerate_normal_forms(x, 4);
  bool units_act = true;
  std::size_t halo_count = 0;
  for (const auto& w : enumerate_normal_forms(x, 8)) {
    bool acts = true;
    for (const auto& a : sample) acts = acts && mul_left(w, a) == a && mul_right(a, w) == a;
    if (in_halo(w)) ++halo_count;
    if (acts != in_halo(w)) units_act = false;
  }

  bool group_part = true;
  std::vector<NormalForm> j;
  for (const auto& w : enumerate_normal_forms(x, 8)) {
    const Letter mid = w.diword().center_letter();
    if (in_group_part(w) != (mid.is_unit() || mid.is_negative())) group_part = false;
    if (in_group_part(w) && w.diword().size() <= 5) j.push_back(w);
  }
  for (const auto& a : j)
    for (const auto& b : j) {
      const auto l = mul_left(a, b);
      if (!in_group_part(l) || l != mul_right(a, b)) group_part = false;
    }

  std::ostringstream d;
  d << "halo(len<=8) = {e} + n<=4 families: " << (at8 ? "yes" : "NO") << "; halo(len<=6,7) = n<=3 families: "
    << (at6 && at7 ? "yes" : "NO") << "; " << halo_count << " halo elements act as bar-units on " << sample.size()
    << " forms, non-halo never: " << (units_act ? "yes" : "NO") << "; J = OmegaE + OmegaXinv, closed, |- = -| on "
    << j.size() << " elements: " << (group_part ? "yes" : "NO");
  return {at8 && at7 && at6 && units_act && group_part, d.str()};
}

Outcome congruence_soundness() {
  const Alphabet x({"x"});
  std::vector<DiWord> nodes;
  for (std::size_t len = 1; len <= 7; ++len)
    for (auto& w : oracle::all_diwords(x, len)) nodes.push_back(std::move(w));
  std::unordered_map<DiWord, std::size_t, DiWordHash> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t edges = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& step : find_steps(nodes[i])) {
      parent[find(i)] = find(index.at(apply(nodes[i], step)));
      ++edges;
    }

  // Each component must hold exactly one normal form, and every diword of
  // length <= 4 must normalize to the one in its component.
  std::map<std::size_t, std::set<DiWord>> forms;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (is_normal_form(nodes[i])) forms[find(i)].insert(nodes[i]);
  bool sound = true;
  std::size_t checked = 0;
  for (const auto& [root, set] : forms)
    if (set.size() != 1) sound = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].size() > 4) continue;
    ++checked;
    const auto& set = forms[find(i)];
    if (set.size() != 1 || *set.begin() != normalize(nodes[i])) sound = false;
  }
  std::ostringstream d;
  d << nodes.size() << " diwords up to length 7, " << edges << " rewrite edges, " << forms.size()
    << " components with a normal form; " << checked << " short diwords checked";
  return {sound, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 GSB re-proof over {a,b}, chain 3, pad 3", gsb_reproof},
      {"2 single generator golden tables", golden_tables},
      {"3 closed form vs rewriting oracle", oracle_equivalence},
      {"4 G1-G6 on F(X)", axiom_suite},
      {"5 irreducible = normal form patterns", irreducibility},
      {"6 strategy independence", confluence},
      {"7 homomorphic invariance", hom_invariance},
      {"8 hom counting into Z2", hom_counting},
      {"9 halo and group part", halo_and_group_part},
      {"10 bounded congruence soundness", congruence_soundness},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << " | " << o.detail << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
