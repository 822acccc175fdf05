#include <doctest.h>

#include "digroup/free_group.hpp"
#include "support/oracles.hpp"

using namespace digroup;

namespace {
const Alphabet xyz({"x", "y", "z"});
Word w(const char* text, const Alphabet& a = xyz) { return parse_word(text, a); }
Word letters(const ReducedWord& r) { return r.letters(); }
}  // namespace

TEST_SUITE("free_group") {
  TEST_CASE("tau erases e only") {
    CHECK(tau(w("e x e y")).letters() == w("x y"));
    CHECK(tau(w("")).empty());
    CHECK(tau(w("x e x^-1")).letters() == w("x x^-1"));
  }

  TEST_CASE("hat") {
    CHECK(hat(w("x x^-1")).empty());
    CHECK(letters(hat(w("e x e y"))) == w("x y"));
    CHECK(letters(hat(w("x y y^-1 z"))) == w("x z"));
    CHECK(letters(hat(w("x y e y^-1 x^-1 z"))) == w("z"));
  }

  TEST_CASE("hat matches brute-force deletion on every word of length <= 6 over 2 generators") {
    const Alphabet ab({"a", "b"});
    std::vector<Word> words{Word{}};
    std::size_t checked = 0;
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const auto& u : words) {
        CHECK(letters(hat(u)) == oracle::brute_hat(u));
        ++checked;
      }
      std::vector<Word> next;
      for (const auto& u : words)
        for (Letter l : ab.letters()) {
          if (l.is_unit()) continue;
          next.push_back(u);
          next.back().push_back(l);
        }
      words = std::move(next);
    }
    CHECK(checked == 1 + 4 + 16 + 64 + 256 + 1024 + 4096);
  }

  TEST_CASE("hat properties") {
    oracle::Rng rng(2);
    for (int k = 0; k < 2000; ++k) {
      auto u = oracle::random_diword(rng, xyz, 10).word();
      auto h = hat(u);
      CHECK(hat(h.letters()) == h);
      CHECK(is_reduced(h.letters()));
      CHECK(hat(concat(u, inverse(h).letters())).empty());
    }
  }

  TEST_CASE("inverse") {
    CHECK(inverse(GroupWord(w("x y^-1"))).letters() == w("y x^-1"));
    CHECK(inverse(GroupWord()).empty());
    oracle::Rng rng(3);
    for (int k = 0; k < 500; ++k) {
      GroupWord g(oracle::random_reduced(rng, xyz, oracle::uniform(rng, 0, 8)));
      CHECK(inverse(inverse(g)) == g);
    }
  }

  TEST_CASE("lambda") {
    const Alphabet four({"x1", "x2", "x3", "x4"});
    CHECK(lambda(GroupWord(w("x1 x2^-1 x3 x4^-1", four))) == 2);
    CHECK(lambda(GroupWord(w("x^-1"))) == 1);
    CHECK_THROWS_AS(lambda(GroupWord(w("x y"))), std::domain_error);
    CHECK_THROWS_AS(lambda(GroupWord()), std::domain_error);
  }

  TEST_CASE("invariants are enforced") {
    CHECK_THROWS(GroupWord(w("x e")));
    CHECK_THROWS(ReducedWord(GroupWord(w("y x x^-1"))));
    CHECK_NOTHROW(ReducedWord(GroupWord(w("x^-1 y x"))));
  }
}
