#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "qlb/lie.hpp"

using namespace qlb;

TEST_CASE("abelian algebras validate") {
  CHECK(validate(fx::abelian("a3", 3)).ok());
  CHECK(validate(fx::abelian("a0", 0)).ok());
}

TEST_CASE("broken antisymmetry is reported at the offending pair") {
  LieAlgebra L = fx::abelian("bad", 3);
  L.c(1, 2, 2) = 1;
  L.c(2, 1, 2) = 1;  // should be -1
  const ValidationReport rep = validate(L);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.issues)
    if (v.kind == ValidationIssue::Kind::Antisymmetry && v.i == 1 && v.j == 2)
      found = true;
  CHECK(found);
}

TEST_CASE("broken Jacobi is reported at the offending triple") {
  // antisymmetric but [e0,[e1,e2]]-cycle does not vanish
  LieAlgebra L = fx::abelian("bad_jacobi", 3);
  L.c(0, 1, 2) = 1;
  L.c(1, 0, 2) = -1;
  L.c(0, 2, 0) = 1;
  L.c(2, 0, 0) = -1;
  const ValidationReport rep = validate(L);
  CHECK_FALSE(rep.ok());
  bool jacobi = false;
  for (const auto& v : rep.issues)
    if (v.kind == ValidationIssue::Kind::Jacobi) jacobi = true;
  CHECK(jacobi);
}

TEST_CASE("sl2 validates and brackets as defined") {
  const LieAlgebra L = fx::sl2_algebra();
  CHECK(validate(L).ok());
  const Vec e = basis_vec(L.space(), 0);
  const Vec f = basis_vec(L.space(), 1);
  const Vec h = basis_vec(L.space(), 2);
  CHECK(bracket(L, e, f) == h);
  CHECK(bracket(L, h, e) == Rational(2) * e);
  CHECK(bracket(L, h, f) == Rational(-2) * f);
}

TEST_CASE("bracket is alternating and bilinear") {
  const LieAlgebra L = fx::sl2_algebra();
  const Vec x = make_vec(L.space(), [] {
    ColVec c(3);
    c << frac(1, 2), frac(-3), frac(2, 7);
    return c;
  }());
  CHECK(is_zero(bracket(L, x, x)));
  const Vec y = basis_vec(L.space(), 1);
  CHECK(bracket(L, x, y) + bracket(L, y, x) == zero_vec(L.space()));
}

TEST_CASE("abelian brackets vanish") {
  const LieAlgebra L = fx::abelian("a2", 2);
  CHECK(is_zero(bracket(L, basis_vec(L.space(), 0), basis_vec(L.space(), 1))));
}

TEST_CASE("ad and ad* of h are diagonal on sl2") {
  const LieAlgebra L = fx::sl2_algebra();
  const LinearMap adh = ad(L, basis_vec(L.space(), 2));
  Mat expect = Mat::Zero(3, 3);
  expect(0, 0) = 2;
  expect(1, 1) = -2;
  CHECK(mat_equal(adh.m, expect));
  const LinearMap coadh = ad_star(L, basis_vec(L.space(), 2));
  CHECK(mat_equal(coadh.m, (-expect).eval()));  // transpose-negate oracle
}

TEST_CASE("ad of zero is zero") {
  const LieAlgebra L = fx::sl2_algebra();
  CHECK(mat_is_zero(ad(L, zero_vec(L.space())).m));
  CHECK(mat_is_zero(ad_star(L, zero_vec(L.space())).m));
}

TEST_CASE("coadjoint pairing identity on all basis triples") {
  for (const LieAlgebra& L :
       {fx::sl2_algebra(), fx::axb_algebra(), fx::heisenberg_algebra()}) {
    for (Index a = 0; a < L.dim(); ++a) {
      const Vec x = basis_vec(L.space(), a);
      const LinearMap coad = ad_star(L, x);
      const LinearMap adx = ad(L, x);
      for (Index i = 0; i < L.dim(); ++i)
        for (Index j = 0; j < L.dim(); ++j) {
          const Vec xi = basis_vec(L.dual_space(), i);
          const Vec y = basis_vec(L.space(), j);
          CHECK(pairing(apply(coad, xi), y) + pairing(xi, apply(adx, y)) == 0);
        }
    }
  }
}

TEST_CASE("ad restates Jacobi: ad([x,y]) = [ad x, ad y]") {
  for (const LieAlgebra& L : {fx::sl2_algebra(), fx::heisenberg_algebra()}) {
    for (Index i = 0; i < L.dim(); ++i)
      for (Index j = 0; j < L.dim(); ++j) {
        const Vec x = basis_vec(L.space(), i);
        const Vec y = basis_vec(L.space(), j);
        const Mat lhs = ad(L, bracket(L, x, y)).m;
        const Mat rhs = ad(L, x).m * ad(L, y).m - ad(L, y).m * ad(L, x).m;
        CHECK(mat_equal(lhs, rhs));
      }
  }
}

TEST_CASE("pairing checks dual tags") {
  const LieAlgebra L = fx::sl2_algebra();
  CHECK_THROWS_AS(pairing(basis_vec(L.space(), 0), basis_vec(L.space(), 0)),
                  TagMismatchError);
  CHECK(pairing(basis_vec(L.dual_space(), 1), basis_vec(L.space(), 1)) == 1);
}

TEST_CASE("direct sums validate and keep blocks apart") {
  const LieAlgebra L = direct_sum(fx::sl2_algebra(), fx::axb_algebra(), "mix");
  CHECK(L.dim() == 5);
  CHECK(validate(L).ok());
  CHECK(is_zero(bracket(L, basis_vec(L.space(), 0), basis_vec(L.space(), 3))));
  const Vec b = bracket(L, basis_vec(L.space(), 3), basis_vec(L.space(), 4));
  CHECK(b.coords(4) == 1);
}
