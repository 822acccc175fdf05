#include <doctest.h>

#include "digroup/finite_digroup.hpp"
#include "digroup/rewrite.hpp"
#include "support/oracles.hpp"

using namespace digroup;

namespace {

FiniteDigroup z2_digroup() { return group_digroup(z2()); }

// E = {*, p, q} with the nontrivial element of Z2 swapping p and q.
PointedActionSet swap_action() {
  PointedActionSet e{{"*", "p", "q"}, 0, {{0, 1, 2}, {0, 2, 1}}};
  return e;
}

std::size_t index_of(const FiniteDigroup& d, const std::string& name) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.elements[i] == name) return i;
  FAIL("no element " << name);
  return 0;
}

}  // namespace

TEST_SUITE("finite_digroup") {
  TEST_CASE("Z2 passes every axiom") {
    auto report = check_axioms(z2_digroup());
    CHECK(report.pass());
    CHECK(report.results.size() == 7);
  }

  TEST_CASE("a mutated G5 cell is caught with its witness") {
    auto d = z2_digroup();
    d.left[0][1] = 0;  // 1 |- a = 1
    auto report = check_axioms(d);
    CHECK_FALSE(report.pass());
    CHECK_FALSE(report.result(Axiom::G5).holds);
    CHECK(report.result(Axiom::G5).witness == std::vector<Element>{1});
    CHECK(report_to_text(report, d).find("G5: FAIL witness (a)") != std::string::npos);
    CHECK(bar_units(d).empty());
  }

  TEST_CASE("every cyclic group is a digroup") {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto d = group_digroup(cyclic_group(n));
      CHECK(check_axioms(d).pass());
      CHECK(bar_units(d) == std::vector<Element>{0});
      CHECK(unique_inverse_check(d).ok);
    }
  }

  TEST_CASE("product construction") {
    auto trivial = product_digroup(trivial_action({"*"}, 2), z2());
    CHECK(trivial.left == z2_digroup().left);
    CHECK(trivial.right == z2_digroup().right);
    CHECK(trivial.dagger == z2_digroup().dagger);

    auto d = product_digroup(trivial_action({"*", "p"}, 2), z2());
    CHECK(d.size() == 4);
    CHECK(check_axioms(d).pass());
    const auto pa = index_of(d, "(p,a)");
    CHECK(d.elements[d.dashv(pa, pa)] == "(p,1)");
    std::vector<std::string> units;
    for (auto u : bar_units(d)) units.push_back(d.elements[u]);
    CHECK(units == std::vector<std::string>{"(*,1)", "(p,1)"});

    auto s = product_digroup(swap_action(), z2());
    CHECK(check_axioms(s).pass());
    CHECK(unique_inverse_check(s).ok);
    for (Element a = 0; a < s.size(); ++a) CHECK(s.vdash(a, s.dagger[a]) == s.unit);
  }

  TEST_CASE("product construction rejects bad actions") {
    PointedActionSet moves_base{{"*", "p"}, 0, {{0, 1}, {1, 0}}};
    CHECK_THROWS_AS(product_digroup(moves_base, z2()), std::invalid_argument);
    PointedActionSet not_identity{{"*", "p", "q"}, 0, {{0, 2, 1}, {0, 1, 2}}};
    CHECK_THROWS_AS(product_digroup(not_identity, z2()), std::invalid_argument);
    PointedActionSet not_action{{"*", "p", "q", "r"}, 0, {{0, 1, 2, 3}, {0, 2, 3, 1}}};
    CHECK_THROWS_AS(product_digroup(not_action, z2()), std::invalid_argument);
  }

  TEST_CASE("evaluation of diwords") {
    const Alphabet x({"x"});
    auto d = z2_digroup();
    CHECK(evaluate_hom({1}, parse_diword("[x x^-1]_2", x), d) == d.unit);
    CHECK(evaluate_hom({1}, parse_diword("[e x]_1", x), d) == 1);
  }

  TEST_CASE("each rewrite step preserves images") {
    const Alphabet ab({"a", "b"});
    auto d = product_digroup(swap_action(), z2());
    oracle::Rng rng(21);
    for (int k = 0; k < 3000; ++k) {
      auto w = oracle::random_diword(rng, ab, 8);
      std::vector<Element> assignment{oracle::uniform(rng, 0, d.size() - 1), oracle::uniform(rng, 0, d.size() - 1)};
      for (const auto& step : find_steps(w))
        CHECK(evaluate_hom(assignment, w, d) == evaluate_hom(assignment, apply(w, step), d));
    }
  }

  TEST_CASE("hom counting") {
    CHECK(hom_count(1, z2_digroup()).count == 2);
    CHECK(hom_count(2, z2_digroup()).count == 4);
    auto r = hom_count(3, product_digroup(trivial_action({"*", "p"}, 2), z2()));
    CHECK(r.count == 64);
    CHECK(r.failed_assignments == 0);
    auto s = hom_count(2, product_digroup(swap_action(), z2()));
    CHECK(s.count == 36);
    CHECK(s.failed_assignments == 0);
  }

  TEST_CASE("a non-digroup fails the relation audit") {
    auto d = z2_digroup();
    d.dagger = {0, 0};
    CHECK(hom_count(1, d).failed_assignments > 0);
  }

  TEST_CASE("unique inverses") {
    CHECK(unique_inverse_check(z2_digroup()).ok);
    auto d = z2_digroup();
    d.dagger[1] = 0;
    auto r = unique_inverse_check(d);
    CHECK_FALSE(r.ok);
    CHECK(r.witness == Element{1});
  }

  TEST_CASE("loading") {
    auto d = parse_digroup_json(
        R"({"elements":["1","a"],"left":[[0,1],[1,0]],"right":[[0,1],[1,0]],"dagger":[0,1],"unit":0})");
    CHECK(check_axioms(d).pass());
    CHECK(parse_digroup_json(to_json(d)).left == d.left);

    auto error_of = [](const std::string& text) {
      try {
        parse_digroup_json(text);
      } catch (const DigroupLoadError& e) {
        return e.constraint();
      }
      return std::string("no error");
    };
    CHECK(error_of("[1]") == "top level must be an object");
    CHECK(error_of(R"({"left":[]})") == "missing \"elements\"");
    CHECK(error_of(R"({"elements":["1","1"]})") == "elements[1] duplicates a name");
    CHECK(error_of(R"({"elements":["1"],"left":[[0]],"right":[[1]],"dagger":[0],"unit":0})") ==
          "right[0][0] out of range");
    CHECK(error_of(R"({"elements":["1"],"left":[[0]],"right":[[0]],"dagger":[0]})") == "missing \"unit\"");
    CHECK(error_of(R"({"elements":["1","a"],"left":[[0,1]],"right":[[0,1],[1,0]],"dagger":[0,1],"unit":0})") ==
          "\"left\" must have one row per element");
    CHECK(error_of("{") .rfind("not valid JSON", 0) == 0);
  }
}
