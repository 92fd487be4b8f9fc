#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legfill/free_algebra.hpp"

using namespace legfill;

namespace {

struct Fixture {
  Ctx ctx = make_context({"s0"});
  Alphabet alpha = make_alphabet(
      {{"b1", 0}, {"b2", 0}, {"b3", 0}, {"a1", 1}, {"a2", 1}});

  AlgebraElement gen(int i) const { return AlgebraElement::generator(ctx, alpha, i); }
  AlgebraElement one() const { return AlgebraElement::one(ctx, alpha); }
  AlgebraElement zero() const { return AlgebraElement::zero(ctx, alpha); }
  LaurentPoly s0(std::int64_t e) const { return LaurentPoly::variable(ctx, 0, e); }
};

}  // namespace

TEST_CASE("alphabet basics") {
  auto alpha = make_alphabet({{"b1", 0}, {"a1", 1}});
  CHECK(alpha->size() == 2);
  CHECK(alpha->label(1) == "a1");
  CHECK(alpha->grading(1) == 1);
  CHECK(alpha->index_of("b1") == 0);
  CHECK(alpha->index_of("zz") == -1);
  CHECK_THROWS_AS(make_alphabet({{"b1", 0}, {"b1", 1}}), std::invalid_argument);
  CHECK(same_alphabet(alpha, make_alphabet({{"b1", 0}, {"a1", 1}})));
  CHECK_FALSE(same_alphabet(alpha, make_alphabet({{"b1", 0}, {"a1", 2}})));
}

TEST_CASE("addition is GF(2) and products are noncommutative") {
  Fixture f;
  auto b1 = f.gen(0), b2 = f.gen(1);
  CHECK((b1 + b1).is_zero());
  CHECK(b1 * b2 != b2 * b1);
  CHECK((b1 * b2 + b2 * b1) != f.zero());
  CHECK(b1 * f.one() == b1);
  CHECK(f.one() * b1 == b1);
  CHECK((b1 * f.zero()).is_zero());
}

TEST_CASE("coefficients are central") {
  Fixture f;
  auto b1 = f.gen(0), b2 = f.gen(1);
  auto c = AlgebraElement::scalar(f.alpha, f.s0(-1));
  CHECK(c * b1 * b2 == b1 * c * b2);
  CHECK(c * b1 * b2 == b1 * b2 * c);
  CHECK(f.s0(-1) * b1 == c * b1);
}

TEST_CASE("canonical term order and rendering") {
  Fixture f;
  auto b1 = f.gen(0), b2 = f.gen(1), b3 = f.gen(2);
  auto d1 = AlgebraElement::scalar(f.alpha, f.s0(-1)) + b1 + b3 + b1 * b2 * b3;
  CHECK(d1.str() == "s0^-1 + b1 + b3 + b1*b2*b3");
  // Construction order must not matter.
  auto again = b1 * b2 * b3 + b3 + AlgebraElement::scalar(f.alpha, f.s0(-1)) + b1;
  CHECK(d1 == again);

  auto d2 = f.one() + b1 + b3 + b3 * b2 * b1;
  CHECK(d2.str() == "1 + b1 + b3 + b3*b2*b1");

  CHECK(f.zero().str() == "0");
  CHECK((f.s0(2) * b1).str() == "s0^2*b1");
}

TEST_CASE("scalar detection and extraction") {
  Fixture f;
  auto c = AlgebraElement::scalar(f.alpha, f.s0(-1) + LaurentPoly::one(f.ctx));
  CHECK(c.is_scalar());
  CHECK(c.scalar_part() == f.s0(-1) + LaurentPoly::one(f.ctx));
  CHECK(f.zero().is_scalar());
  CHECK(f.zero().scalar_part().is_zero());
  CHECK_FALSE((c + f.gen(0)).is_scalar());
  CHECK_THROWS_AS((c + f.gen(0)).scalar_part(), std::domain_error);
}

TEST_CASE("word grading and homogeneity") {
  Fixture f;
  auto b1 = f.gen(0), a1 = f.gen(3);
  CHECK(word_grading(f.alpha, {0, 1, 2}) == 0);
  CHECK(word_grading(f.alpha, {3, 4}) == 2);
  CHECK(homogeneous_of_degree(b1 * b1 + f.one(), 0));
  CHECK(homogeneous_of_degree(a1, 1));
  CHECK_FALSE(homogeneous_of_degree(a1 + b1, 1));
  CHECK(homogeneous_of_degree(f.zero(), 17));
}

TEST_CASE("Leibniz extension") {
  Fixture f;
  auto b1 = f.gen(0), b2 = f.gen(1), b3 = f.gen(2);
  // d(b1) = 1, d(b2) = s0 * 1, d(b3) = b1; extend to products.
  std::vector<AlgebraElement> d = {f.one(), AlgebraElement::scalar(f.alpha, f.s0(1)), b1,
                                   f.zero(), f.zero()};
  auto dd = [&](const AlgebraElement& x) { return extend_derivation(x, d); };

  CHECK(dd(f.one()).is_zero());
  CHECK(dd(b1) == f.one());
  // d(b1*b2) = d(b1) b2 + b1 d(b2) = b2 + s0*b1
  CHECK(dd(b1 * b2) == b2 + f.s0(1) * b1);
  // Leibniz on a triple product, against the hand expansion.
  CHECK(dd(b1 * b2 * b3) == b2 * b3 + f.s0(1) * (b1 * b3) + b1 * b2 * b1);
  // Linearity.
  CHECK(dd(b1 + b2 * b3) == dd(b1) + dd(b2 * b3));
}

TEST_CASE("apply_hom is a unital algebra map") {
  Fixture f;
  auto b1 = f.gen(0), b2 = f.gen(1);
  // Target algebra over a larger context, same alphabet.
  auto tctx = make_context({"s0", "s2"});
  std::vector<AlgebraElement> images;
  for (int i = 0; i < f.alpha->size(); ++i)
    images.push_back(AlgebraElement::generator(tctx, f.alpha, i));
  // b2 |-> b2 + s2^-1
  images[1] = images[1] + AlgebraElement::scalar(f.alpha, LaurentPoly::variable(tctx, 1, -1));

  auto h = [&](const AlgebraElement& x) { return apply_hom(x, images); };
  CHECK(h(f.one()) == AlgebraElement::one(tctx, f.alpha));
  CHECK(h(b1 * b2) == h(b1) * h(b2));
  CHECK(h(b1 + b2) == h(b1) + h(b2));
  // Coefficients ride along by variable name.
  CHECK(h(f.s0(-1) * b1) ==
        LaurentPoly::variable(tctx, 0, -1) * AlgebraElement::generator(tctx, f.alpha, 0));
}

TEST_CASE("evaluate into a commutative ring") {
  Fixture f;
  auto b1 = f.gen(0), b2 = f.gen(1), b3 = f.gen(2);
  auto tctx = make_context({"s1", "s2"});
  auto s1 = LaurentPoly::variable(tctx, 0);
  auto s2 = LaurentPoly::variable(tctx, 1);
  std::vector<LaurentPoly> var_images = {LaurentPoly::one(tctx)};  // s0 -> 1
  std::vector<LaurentPoly> chord_images = {s1, s2, s1 * s2, LaurentPoly::zero(tctx),
                                           LaurentPoly::zero(tctx)};

  auto ev = [&](const AlgebraElement& x) { return evaluate(x, var_images, chord_images, tctx); };
  CHECK(ev(f.one()).is_one());
  CHECK(ev(b1 * b2 * b3) == s1 * s2 * (s1 * s2));
  CHECK(ev(AlgebraElement::scalar(f.alpha, f.s0(-1))).is_one());
  // The trefoil-shaped sample: s0^-1 + b1 + b3 + b1*b2*b3 evaluates to
  // 1 + s1 + s1*s2 + s1^2*s2^2.
  auto d1 = AlgebraElement::scalar(f.alpha, f.s0(-1)) + b1 + b3 + b1 * b2 * b3;
  CHECK(ev(d1) == LaurentPoly::one(tctx) + s1 + s1 * s2 + (s1 * s2).pow(2));
  // Hom property.
  CHECK(ev(d1 * b2) == ev(d1) * ev(b2));
}

TEST_CASE("mismatched algebras are rejected") {
  Fixture f;
  auto other = AlgebraElement::one(make_context({"t"}), f.alpha);
  CHECK_THROWS_AS(f.one() + other, std::invalid_argument);
  CHECK_THROWS_AS(f.one() * other, std::invalid_argument);
  CHECK_THROWS_AS(extend_derivation(f.one(), {}), std::invalid_argument);
  CHECK_THROWS_AS(apply_hom(f.one(), {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(f.one(), {}, {}, f.ctx), std::invalid_argument);
}
