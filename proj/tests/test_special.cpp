#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "qlb/checks.hpp"

using namespace qlb;

namespace {

void check_all(const Report& rep) {
  INFO(rep.subject);
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.details);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("verify_factorizable passes on the factorizable fixtures") {
  check_all(verify_factorizable(fx::sl2()));
  check_all(verify_factorizable(fx::sl2_sl2()));
}

TEST_CASE("verify_factorizable refuses other classes") {
  CHECK_THROWS_AS(verify_factorizable(fx::axb()), PreconditionError);
  CHECK_THROWS_AS(verify_factorizable(fx::heisenberg()), PreconditionError);
}

TEST_CASE("verify_triangular passes on the triangular fixtures") {
  check_all(verify_triangular(fx::axb()));
  check_all(verify_triangular(fx::abelian2()));
  check_all(verify_triangular(fx::sl2_triangular()));
}

TEST_CASE("verify_triangular refuses other classes") {
  CHECK_THROWS_AS(verify_triangular(fx::sl2()), PreconditionError);
  CHECK_THROWS_AS(verify_triangular(fx::sl2_axb()), PreconditionError);
}

TEST_CASE("j/j* Manin triple passes on the triangular fixtures") {
  check_all(manin_triple_jjstar(fx::axb()));
  check_all(manin_triple_jjstar(fx::abelian2()));
  check_all(manin_triple_jjstar(fx::sl2_triangular()));
  CHECK_THROWS_AS(manin_triple_jjstar(fx::sl2()), PreconditionError);
}

TEST_CASE("quasi-Frobenius gamma of the ax+b structure") {
  // g+ = g (r+ invertible): gamma = [[0, -1], [1, 0]], nondegenerate.
  const Tensor2 gamma = quasi_frobenius_gamma(fx::axb());
  REQUIRE(gamma.m.rows() == 2);
  CHECK(gamma.m(0, 0) == 0);
  CHECK(gamma.m(0, 1) == -1);
  CHECK(gamma.m(1, 0) == 1);
  CHECK(gamma.m(1, 1) == 0);
}

TEST_CASE("quasi-Frobenius gamma of the triangular sl2 structure") {
  // g+ = span{e, h}: gamma = [[0, 1], [-1, 0]] in the g+ chart.
  const Tensor2 gamma = quasi_frobenius_gamma(fx::sl2_triangular());
  REQUIRE(gamma.m.rows() == 2);
  CHECK(gamma.m(0, 1) == 1);
  CHECK(gamma.m(1, 0) == -1);
  CHECK(rank(gamma.m) == 2);
}

TEST_CASE("quasi-Frobenius gamma is empty when r = 0") {
  const Tensor2 gamma = quasi_frobenius_gamma(fx::abelian2());
  CHECK(gamma.m.rows() == 0);
}

TEST_CASE("quasi-Frobenius gamma requires a triangular structure") {
  CHECK_THROWS_AS(quasi_frobenius_gamma(fx::sl2()), PreconditionError);
}

TEST_CASE("invariant form space of ax+b is the degenerate line") {
  const SubspaceBasis forms = invariant_form_space(fx::axb_algebra());
  REQUIRE(forms.dim() == 1);
  // only F(e1,e1) is free
  ColVec expect = ColVec::Zero(4);
  expect(0) = 1;
  CHECK(mat_equal(forms.rows.row(0).transpose().eval(), expect));
  CHECK(has_nondegenerate_invariant_form(fx::axb_algebra()) ==
        std::optional<bool>(false));
}

TEST_CASE("invariant form space of sl2 is spanned by the trace form") {
  const LieAlgebra sl2 = fx::sl2_algebra();
  const SubspaceBasis forms = invariant_form_space(sl2);
  REQUIRE(forms.dim() == 1);
  // row-major flattened multiple of [[0,1,0],[1,0,0],[0,0,2]]
  const ColVec f = forms.rows.row(0).transpose();
  CHECK(f(1) == 1);
  CHECK(f(3) == 1);
  CHECK(f(8) == 2);
  CHECK(has_nondegenerate_invariant_form(sl2) == std::optional<bool>(true));
}

TEST_CASE("heisenberg admits no nondegenerate invariant form") {
  CHECK(has_nondegenerate_invariant_form(fx::heisenberg_algebra()) ==
        std::optional<bool>(false));
}

TEST_CASE("abelian algebras admit the identity form") {
  CHECK(has_nondegenerate_invariant_form(fx::abelian("a2", 2)) ==
        std::optional<bool>(true));
}

TEST_CASE("dual-number double of the abelian fixture with the identity form") {
  const QuasitriangularBialgebra B = fx::abelian2();
  Tensor2 form = zero_tensor2(B.space(), B.space());
  form.m = Mat::Identity(2, 2);
  check_all(dual_number_double(B, form));
}

TEST_CASE("dual-number double of triangular sl2 with the trace form") {
  const QuasitriangularBialgebra B = fx::sl2_triangular();
  Tensor2 form = zero_tensor2(B.space(), B.space());
  form.m(0, 1) = 1;
  form.m(1, 0) = 1;
  form.m(2, 2) = 2;
  check_all(dual_number_double(B, form));
}

TEST_CASE("dual-number double rejects ax+b and says why") {
  const QuasitriangularBialgebra B = fx::axb();
  Tensor2 form = zero_tensor2(B.space(), B.space());
  form.m = Mat::Identity(2, 2);
  try {
    dual_number_double(B, form);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("not invariant") != std::string::npos);
    CHECK(msg.find("no nondegenerate invariant form exists") !=
          std::string::npos);
  }
}

TEST_CASE("dual-number double rejects a degenerate form") {
  const QuasitriangularBialgebra B = fx::sl2_triangular();
  Tensor2 form = zero_tensor2(B.space(), B.space());  // zero form
  try {
    dual_number_double(B, form);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("degenerate") != std::string::npos);
    CHECK(msg.find("does exist") != std::string::npos);
  }
}

TEST_CASE("dual-number double requires a triangular structure") {
  const QuasitriangularBialgebra B = fx::sl2();
  Tensor2 form = zero_tensor2(B.space(), B.space());
  form.m(0, 1) = 1;
  form.m(1, 0) = 1;
  form.m(2, 2) = 2;
  CHECK_THROWS_AS(dual_number_double(B, form), PreconditionError);
}

TEST_CASE("special suite dispatches by classification") {
  for (const auto& B : fx::all_fixtures()) check_all(special_suite(B));
}

TEST_CASE("full check passes on every fixture") {
  for (const auto& B : fx::all_fixtures()) check_all(full_check(B.g(), B.r()));
}
