#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "qlb/checks.hpp"

using namespace qlb;

TEST_CASE("the double of an abelian bialgebra with r = 0 is abelian") {
  const DirectDouble D = build_direct_double(fx::abelian2());
  CHECK(D.d.dim() == 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      CHECK(is_zero(bracket(D.d, basis_vec(D.space(), i), basis_vec(D.space(), j))));
}

TEST_CASE("the direct double validates on every fixture") {
  for (const auto& B : fx::all_fixtures()) {
    const DirectDouble D = build_direct_double(B);
    CHECK(D.d.dim() == 2 * B.g().dim());
    CHECK(validate(D.d).ok());
  }
}

TEST_CASE("canonical form values") {
  const DirectDouble D = build_direct_double(fx::sl2());
  const Space ds = D.space();
  CHECK(canonical_form(D, basis_vec(ds, 0), basis_vec(ds, 1)) == 0);
  CHECK(canonical_form(D, basis_vec(ds, 3), basis_vec(ds, 4)) == 0);
  CHECK(canonical_form(D, basis_vec(ds, 0), basis_vec(ds, 3)) == 1);
  CHECK(canonical_form(D, basis_vec(ds, 2), basis_vec(ds, 5)) == 1);
}

TEST_CASE("sl2 mixed bracket: [h, e*] = -2 e*") {
  const DirectDouble D = build_direct_double(fx::sl2());
  const Vec br = bracket(D.d, basis_vec(D.space(), 2), basis_vec(D.space(), 3));
  ColVec expect = ColVec::Zero(6);
  expect(3) = -2;
  CHECK(mat_equal(br.coords, expect));
}

TEST_CASE("manin triple report passes on every fixture") {
  for (const auto& B : fx::all_fixtures()) {
    const Report rep = verify_manin_triple(build_direct_double(B));
    INFO(rep.subject);
    for (const auto& c : rep.checks) {
      INFO(c.name << " " << c.details);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("lemma suite passes on every fixture") {
  for (const auto& B : fx::all_fixtures()) {
    const Report rep = lemma_suite(B, build_direct_double(B));
    INFO(rep.subject);
    for (const auto& c : rep.checks) {
      INFO(c.name << " " << c.details);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("form is invariant under a non-basis triple too") {
  const DirectDouble D = build_direct_double(fx::heisenberg());
  ColVec a(6), b(6), c(6);
  a << 1, 2, frac(1, 3), 0, -1, 5;
  b << 0, frac(2, 7), -1, 1, 1, 0;
  c << 3, 0, 0, frac(-5, 2), 1, 1;
  const Vec va{D.space(), a}, vb{D.space(), b}, vc{D.space(), c};
  CHECK(canonical_form(D, bracket(D.d, va, vb), vc) +
            canonical_form(D, vb, bracket(D.d, va, vc)) ==
        0);
}
