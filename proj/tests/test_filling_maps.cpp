#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "legfill/diagram.hpp"
#include "legfill/filling_maps.hpp"

using namespace legfill;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation s({2, 3, 1});
  CHECK(s.size() == 3);
  CHECK(s(1) == 2);
  CHECK(s(3) == 1);
  CHECK(s.position_of(1) == 3);
  CHECK(s.position_of(2) == 1);
  CHECK(s.str() == "(2,3,1)");
  CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));

  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(s(0), std::invalid_argument);
  CHECK_THROWS_AS(s(4), std::invalid_argument);
}

TEST_CASE("pinch targets and term sources by hand") {
  Permutation s({2, 3, 1});
  CHECK(pinch_targets(s, 2) == std::vector<int>{1, 3});
  CHECK(pinch_targets(s, 3) == std::vector<int>{1});
  CHECK(pinch_targets(s, 1) == std::vector<int>{});
  CHECK(term_sources(s, 1) == std::vector<int>{2, 3});
  CHECK(term_sources(s, 2) == std::vector<int>{});
  CHECK(term_sources(s, 3) == std::vector<int>{2});

  Permutation id({1, 2, 3});
  CHECK(pinch_targets(id, 1) == std::vector<int>{2});
  CHECK(pinch_targets(id, 2) == std::vector<int>{3});
  CHECK(pinch_targets(id, 3) == std::vector<int>{});
  CHECK(term_sources(id, 2) == std::vector<int>{1});
  CHECK(term_sources(id, 3) == std::vector<int>{2});
}

TEST_CASE("T and S mirror each other") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : all_permutations(n))
      for (int i = 1; i <= n; ++i) {
        auto S = term_sources(s, i);
        for (int j = 1; j <= n; ++j) {
          auto T = pinch_targets(s, j);
          bool in_S = std::find(S.begin(), S.end(), j) != S.end();
          bool in_T = std::find(T.begin(), T.end(), i) != T.end();
          CHECK(in_S == in_T);
        }
      }
}

TEST_CASE("worked pinch sequence (2,3,1)") {
  auto st = initial_state(3);
  CHECK(st.n == 3);
  CHECK(st.steps_done() == 0);
  CHECK(st.images[0].str() == "b1");
  CHECK(st.images[4].str() == "a2");
  CHECK(same_alphabet(st.alpha, build_torus_2n(3).alphabet()));

  st = pinch_move(st, 2);
  CHECK(st.ctx->name(1) == "s2");
  CHECK(st.images[0].str() == "s2^-1 + b1");
  CHECK(st.images[1].str() == "s2");
  CHECK(st.images[2].str() == "s2^-1 + b3");

  st = pinch_move(st, 3);
  CHECK(st.ctx->arity() == 3);
  CHECK(st.images[0].str() == "s2^-1 + s2^-2*s3^-1 + b1");
  CHECK(st.images[1].str() == "s2");
  CHECK(st.images[2].str() == "s3 + s2^-1");

  st = pinch_move(st, 1);
  CHECK(st.ctx->arity() == 4);
  CHECK(st.images[0].str() == "s1 + s2^-1 + s2^-2*s3^-1");
  CHECK(st.images[1].str() == "s2");
  CHECK(st.images[2].str() == "s3 + s2^-1");
  CHECK(st.images[3].str() == "a1");  // clasp chords never change
  CHECK(st.images[4].str() == "a2");

  auto aug = close_filling(st);
  CHECK(aug.n == 3);
  CHECK(aug.ctx->arity() == 2);
  CHECK(aug.sigma == std::vector<int>{2, 3, 1});
  CHECK(aug.images[0].str() == "s1 + s1*s2^-1 + s2^-1");
  CHECK(aug.images[1].str() == "s2");
  CHECK(aug.images[2].str() == "s2^-1 + s1^-1*s2^-1");
}

TEST_CASE("pinch bookkeeping is validated") {
  auto st = initial_state(3);
  CHECK_THROWS_AS(pinch_move(st, 0), std::invalid_argument);
  CHECK_THROWS_AS(pinch_move(st, 4), std::invalid_argument);
  CHECK_THROWS_AS(close_filling(st), std::invalid_argument);
  st = pinch_move(st, 2);
  CHECK_THROWS_AS(pinch_move(st, 2), std::invalid_argument);
  CHECK_THROWS_AS(run_pinches(3, Permutation({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(initial_state(0), std::invalid_argument);
}

TEST_CASE("composed pinches expand into sources before closing") {
  // After all pinches, the image of b_i over s0..sn is s_i plus one monomial
  // per element of S: s_j^-1 times the squares between.
  for (int n : {1, 2, 3, 4}) {
    CAPTURE(n);
    for (const auto& sig : all_permutations(n)) {
      CAPTURE(sig.str());
      auto st = run_pinches(n, sig);
      for (int i = 1; i <= n; ++i) {
        std::vector<Monomial> ms;
        auto mono = [&](int j, std::int64_t ex) {
          std::vector<std::int64_t> e(n + 1, 0);
          e[j] = ex;
          return e;
        };
        ms.push_back(Monomial(mono(i, 1)));
        for (int j : term_sources(sig, i)) {
          auto e = mono(j, -1);
          for (int k = std::min(i, j) + 1; k < std::max(i, j); ++k) e[k] = -2;
          ms.push_back(Monomial(e));
        }
        REQUIRE(st.images[i - 1].is_scalar());
        CHECK(st.images[i - 1].scalar_part() ==
              LaurentPoly::from_monomials(st.ctx, std::move(ms)));
      }
    }
  }
}

TEST_CASE("closed form agrees with the composed pinches") {
  for (int n : {1, 2, 3, 4, 5}) {
    CAPTURE(n);
    for (const auto& sig : all_permutations(n)) {
      CAPTURE(sig.str());
      auto composed = close_filling(run_pinches(n, sig));
      auto direct = closed_form_augmentation(sig);
      CHECK(composed == direct);
      CHECK(direct.sigma == sig.values());
    }
  }
}

TEST_CASE("the five augmentations of the trefoil") {
  auto img = [](const Permutation& s) {
    std::vector<std::string> out;
    for (const auto& p : closed_form_augmentation(s).images) out.push_back(p.str());
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(img(Permutation({1, 2, 3})) ==
        V{"s1", "s2 + s1^-1", "s2^-1 + s1^-1*s2^-1"});
  CHECK(img(Permutation({1, 3, 2})) ==
        V{"s1", "s1*s2 + s2 + s1^-1", "s1^-1*s2^-1"});
  CHECK(img(Permutation({2, 1, 3})) ==
        V{"s1 + s2^-1", "s2", "s2^-1 + s1^-1*s2^-1 + s1^-1*s2^-2"});
  CHECK(img(Permutation({2, 3, 1})) ==
        V{"s1 + s1*s2^-1 + s2^-1", "s2", "s2^-1 + s1^-1*s2^-1"});
  CHECK(img(Permutation({3, 2, 1})) ==
        V{"s1 + s2^-1", "s1*s2 + s2", "s1^-1*s2^-1"});
  // The two orders that give the same filling give the same augmentation.
  CHECK(closed_form_augmentation(Permutation({1, 3, 2})) ==
        closed_form_augmentation(Permutation({3, 1, 2})));
  // And the one-chord knot has the unique augmentation b1 -> 1.
  auto tiny = closed_form_augmentation(Permutation({1}));
  CHECK(tiny.ctx->arity() == 0);
  CHECK(tiny.images[0].is_one());
  CHECK(tiny.str() == "b1 -> 1");
}

TEST_CASE("augmentations kill the differential") {
  for (int n : {1, 3, 5}) {
    CAPTURE(n);
    auto dga = differential(build_torus_2n(n));
    for (const auto& sig : all_permutations(n)) {
      CAPTURE(sig.str());
      CHECK(is_augmentation(dga, closed_form_augmentation(sig)));
    }
  }

  // Corrupting one image breaks the equation.
  auto dga = differential(build_torus_2n(3));
  auto aug = closed_form_augmentation(Permutation({1, 2, 3}));
  aug.images[1] = aug.images[1] + LaurentPoly::one(aug.ctx);
  CHECK_FALSE(is_augmentation(dga, aug));
}

TEST_CASE("lifting a pinch order") {
  auto lifted = lift_permutation(Permutation({2, 1}));
  CHECK(lifted == Permutation({3, 2, 1}));
  CHECK(lift_permutation(Permutation({1, 2, 3})) == Permutation({4, 1, 2, 3}));
  CHECK(lifted.size() == 3);
}
