#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlb/linalg.hpp"

using namespace qlb;

namespace {

const Space kR2{"R2", 2};
const Space kR3{"R3", 3};

Mat mat2(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m(static_cast<Index>(rows.size()),
        static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Deterministic small-rational matrices for property loops.
Mat random_mat(std::mt19937& gen, Index rows, Index cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = frac(num(gen), den(gen));
  return m;
}

// Independent intersection oracle: U cap V = (U' + V')' with X' the
// annihilator for the dot product, each computed as a kernel.
SubspaceBasis intersect_oracle(const SubspaceBasis& a, const SubspaceBasis& b) {
  auto complement = [&](const SubspaceBasis& s) {
    return kernel(LinearMap{a.ambient, Space{"rows", s.dim()}, s.rows});
  };
  const SubspaceBasis na = complement(a);
  const SubspaceBasis nb = complement(b);
  Mat stacked(na.dim() + nb.dim(), a.ambient.dim);
  stacked.topRows(na.dim()) = na.rows;
  stacked.bottomRows(nb.dim()) = nb.rows;
  return kernel(LinearMap{a.ambient, Space{"rows", stacked.rows()}, stacked});
}

}  // namespace

TEST_CASE("rref collapses dependent rows") {
  const SubspaceBasis s = rref(kR2, mat2({{1, 2}, {2, 4}}));
  CHECK(s.dim() == 1);
  CHECK(s.rows(0, 0) == 1);
  CHECK(s.rows(0, 1) == 2);
}

TEST_CASE("rref of an empty list is the zero subspace") {
  const SubspaceBasis s = rref(kR2, Mat::Zero(0, 2));
  CHECK(s.dim() == 0);
  CHECK(s == zero_subspace(kR2));
}

TEST_CASE("rref sorts pivots") {
  const SubspaceBasis s = rref(kR2, mat2({{0, 1}, {1, 0}}));
  CHECK(s.dim() == 2);
  CHECK(mat_equal(s.rows, Mat::Identity(2, 2)));
  CHECK(s.pivots == std::vector<Index>{0, 1});
}

TEST_CASE("rref rejects mixed ambient tags") {
  const std::vector<Vec> rows = {basis_vec(kR2, 0),
                                 basis_vec(Space{"other", 2}, 0)};
  CHECK_THROWS_AS(rref(rows), TagMismatchError);
}

TEST_CASE("rref is idempotent on pseudo-random input") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 1 + trial % 5;
    const Space amb{"S" + std::to_string(n), n};
    const SubspaceBasis s = rref(amb, random_mat(gen, 1 + trial % 4, n));
    CHECK(rref(amb, s.rows) == s);
  }
}

TEST_CASE("kernel and image of the zero and identity maps") {
  const LinearMap zero = zero_map(kR2, kR2);
  CHECK(kernel(zero) == whole_space(kR2));
  CHECK(image(zero).dim() == 0);
  const LinearMap id = identity_map(kR2);
  CHECK(kernel(id).dim() == 0);
  CHECK(image(id) == whole_space(kR2));
}

TEST_CASE("kernel and image of (x,y) -> (x+y, 2x+2y)") {
  const Space plane{"plane", 2};
  const LinearMap m{kR2, plane, mat2({{1, 1}, {2, 2}})};
  const SubspaceBasis ker = kernel(m);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.rows(0, 0) == 1);
  CHECK(ker.rows(0, 1) == -1);
  const SubspaceBasis img = image(m);
  REQUIRE(img.dim() == 1);
  CHECK(img.rows(0, 0) == 1);
  CHECK(img.rows(0, 1) == 2);
}

TEST_CASE("rank-nullity on pseudo-random maps") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dom = trial % 5;
    const Index cod = (trial / 5) % 4 + 1;
    const LinearMap m{Space{"dom", dom}, Space{"cod", cod},
                      random_mat(gen, cod, dom)};
    CHECK(kernel(m).dim() + image(m).dim() == dom);
  }
}

TEST_CASE("intersect basics") {
  const SubspaceBasis whole = whole_space(kR2);
  const SubspaceBasis diag = rref(kR2, mat2({{1, 1}}));
  CHECK(intersect(whole, diag) == diag);
  const SubspaceBasis ex = rref(kR2, mat2({{1, 0}}));
  const SubspaceBasis ey = rref(kR2, mat2({{0, 1}}));
  CHECK(intersect(ex, ey).dim() == 0);
  CHECK(intersect(whole, diag) == intersect_oracle(whole, diag));
  CHECK_THROWS_AS(intersect(ex, rref(Space{"other", 2}, mat2({{1, 0}}))),
                  TagMismatchError);
}

TEST_CASE("intersect agrees with the double-annihilator oracle") {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 4;
    const Space amb{"S" + std::to_string(n), n};
    const SubspaceBasis a = rref(amb, random_mat(gen, 1 + trial % 3, n));
    const SubspaceBasis b = rref(amb, random_mat(gen, 1 + (trial + 1) % 3, n));
    CHECK(intersect(a, b) == intersect_oracle(a, b));
  }
}

TEST_CASE("quotient chart of the zero and whole subspaces") {
  const QuotientChart q0 = quotient_chart(kR2, zero_subspace(kR2), "q0");
  CHECK(q0.complement == whole_space(kR2));
  CHECK(mat_equal(q0.projector.m, Mat::Identity(2, 2)));
  const QuotientChart q1 = quotient_chart(kR2, whole_space(kR2), "q1");
  CHECK(q1.complement.dim() == 0);
  CHECK(q1.projector.codomain.dim == 0);
}

TEST_CASE("quotient chart picks non-pivot coordinate directions") {
  const SubspaceBasis w = rref(kR2, mat2({{1, 1}}));
  const QuotientChart q = quotient_chart(kR2, w, "q");
  REQUIRE(q.complement.dim() == 1);
  CHECK(q.complement.rows(0, 0) == 0);
  CHECK(q.complement.rows(0, 1) == 1);
  // projector kills w and fixes the complement
  CHECK(is_zero(project(q, Vec{kR2, w.rows.row(0).transpose()})));
  const Vec c{kR2, q.complement.rows.row(0).transpose()};
  CHECK(project(q, c).coords(0) == 1);
}

TEST_CASE("quotient chart projector identities on pseudo-random subspaces") {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + trial % 5;
    const Space amb{"S" + std::to_string(n), n};
    const SubspaceBasis w = rref(amb, random_mat(gen, trial % (n + 1), n));
    const QuotientChart q = quotient_chart(amb, w, "q");
    CHECK(w.dim() + q.complement.dim() == n);
    for (Index i = 0; i < w.dim(); ++i)
      CHECK(is_zero(project(q, Vec{amb, w.rows.row(i).transpose()})));
    for (Index i = 0; i < q.complement.dim(); ++i) {
      const Vec chart =
          project(q, Vec{amb, q.complement.rows.row(i).transpose()});
      CHECK(chart.coords(i) == 1);
      // lift is a section of the projector
      CHECK(project(q, lift(q, chart)) == chart);
    }
  }
}

TEST_CASE("solve_right_inverse on the identity is the identity") {
  const LinearMap s =
      solve_right_inverse(identity_map(kR2), whole_space(kR2), "sec");
  CHECK(mat_equal(s.m, Mat::Identity(2, 2)));
}

TEST_CASE("solve_right_inverse of the zero map onto 0 has a dim-0 domain") {
  const LinearMap s =
      solve_right_inverse(zero_map(kR2, kR3), zero_subspace(kR3), "sec");
  CHECK(s.domain.dim == 0);
  CHECK(s.m.cols() == 0);
}

TEST_CASE("solve_right_inverse uses the first-pivot preimage") {
  const Space line{"line", 1};
  const LinearMap m{kR2, line, mat2({{1, 1}})};
  const LinearMap s = solve_right_inverse(m, whole_space(line), "sec");
  CHECK(s.m(0, 0) == 1);  // s(1) = (1, 0)
  CHECK(s.m(1, 0) == 0);
}

TEST_CASE("solve_right_inverse refuses targets outside the image") {
  const LinearMap m{kR2, kR2, mat2({{1, 0}, {0, 0}})};
  CHECK_THROWS_AS(solve_right_inverse(m, whole_space(kR2), "sec"),
                  UnsolvableError);
}

TEST_CASE("m o s = id on `onto` for pseudo-random maps") {
  std::mt19937 gen(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Index dom = 1 + trial % 4;
    const Index cod = 1 + (trial / 3) % 4;
    const LinearMap m{Space{"dom", dom}, Space{"cod", cod},
                      random_mat(gen, cod, dom)};
    const SubspaceBasis onto = image(m);
    const LinearMap s = solve_right_inverse(m, onto, "sec");
    for (Index j = 0; j < onto.dim(); ++j) {
      const ColVec y = onto.rows.row(j).transpose();
      CHECK(mat_equal((m.m * s.m.col(j)).eval(), y));
    }
  }
}

TEST_CASE("coords_in / from_coords round-trip and membership") {
  const SubspaceBasis diag = rref(kR2, mat2({{1, 1}}));
  ColVec three(1);
  three << 3;
  const ColVec v = from_coords(diag, three);
  CHECK(contains(diag, v));
  CHECK(coords_in(diag, v)(0) == 3);
  CHECK_FALSE(contains(diag, basis_vec(kR2, 0).coords));
  CHECK_THROWS_AS(coords_in(diag, basis_vec(kR2, 0).coords), DomainError);
}

TEST_CASE("solve returns the first-pivot particular solution") {
  const Mat a = mat2({{1, 2}, {2, 4}});
  ColVec b(2);
  b << 3, 6;
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == 3);
  CHECK((*x)(1) == 0);
  ColVec inconsistent(2);
  inconsistent << 1, 0;
  CHECK_FALSE(solve(a, inconsistent).has_value());
}
