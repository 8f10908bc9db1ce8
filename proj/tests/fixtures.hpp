#ifndef QLB_TESTS_FIXTURES_HPP
#define QLB_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "qlb/bialgebra.hpp"

// Programmatic copies of the shipped fixtures. test_io_cli checks that the
// JSON files in fixtures/ parse to exactly these, so the rest of the tests
// can use either source interchangeably.
namespace fx {

using namespace qlb;

inline LieAlgebra abelian(const std::string& name, Index dim) {
  std::vector<std::string> names;
  for (Index i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i));
  return make_algebra(name, std::move(names));
}

// [e1, e2] = e2
inline LieAlgebra axb_algebra() {
  LieAlgebra L = make_algebra("axb", {"e1", "e2"});
  L.c(0, 1, 1) = 1;
  L.c(1, 0, 1) = -1;
  return L;
}

// [e,f] = h, [h,e] = 2e, [h,f] = -2f on basis (e, f, h)
inline LieAlgebra sl2_algebra(const std::string& name = "sl2") {
  LieAlgebra L = make_algebra(name, {"e", "f", "h"});
  L.c(0, 1, 2) = 1;
  L.c(1, 0, 2) = -1;
  L.c(2, 0, 0) = 2;
  L.c(0, 2, 0) = -2;
  L.c(2, 1, 1) = -2;
  L.c(1, 2, 1) = 2;
  return L;
}

// [x, y] = z
inline LieAlgebra heisenberg_algebra() {
  LieAlgebra L = make_algebra("heisenberg", {"x", "y", "z"});
  L.c(0, 1, 2) = 1;
  L.c(1, 0, 2) = -1;
  return L;
}

inline QuasitriangularBialgebra abelian2() {
  LieAlgebra L = make_algebra("abelian2", {"a", "b"});
  return QuasitriangularBialgebra::create(L, zero_tensor2(L.space(), L.space()));
}

// r = e1 (x) e2 - e2 (x) e1 (triangular)
inline QuasitriangularBialgebra axb() {
  LieAlgebra L = axb_algebra();
  Tensor2 r = zero_tensor2(L.space(), L.space());
  r.m(0, 1) = 1;
  r.m(1, 0) = -1;
  return QuasitriangularBialgebra::create(L, r);
}

// r = e (x) f + 1/4 h (x) h (factorizable)
inline QuasitriangularBialgebra sl2() {
  LieAlgebra L = sl2_algebra();
  Tensor2 r = zero_tensor2(L.space(), L.space());
  r.m(0, 1) = 1;
  r.m(2, 2) = frac(1, 4);
  return QuasitriangularBialgebra::create(L, r);
}

// r = h (x) e - e (x) h (triangular with Ker r+ = span{f*})
inline QuasitriangularBialgebra sl2_triangular() {
  LieAlgebra L = sl2_algebra("sl2_triangular");
  Tensor2 r = zero_tensor2(L.space(), L.space());
  r.m(2, 0) = 1;
  r.m(0, 2) = -1;
  return QuasitriangularBialgebra::create(L, r);
}

// r = 1/2 z (x) z (general class, nonzero cocycle)
inline QuasitriangularBialgebra heisenberg() {
  LieAlgebra L = heisenberg_algebra();
  Tensor2 r = zero_tensor2(L.space(), L.space());
  r.m(2, 2) = frac(1, 2);
  return QuasitriangularBialgebra::create(L, r);
}

// sl2 (+) axb with the block-sum r (general class)
inline QuasitriangularBialgebra sl2_axb() {
  LieAlgebra L = direct_sum(sl2_algebra(), axb_algebra(), "sl2_axb");
  Tensor2 r = zero_tensor2(L.space(), L.space());
  r.m(0, 1) = 1;
  r.m(2, 2) = frac(1, 4);
  r.m(3, 4) = 1;
  r.m(4, 3) = -1;
  return QuasitriangularBialgebra::create(L, r);
}

// sl2 (+) sl2 with the block-sum standard r (factorizable)
inline QuasitriangularBialgebra sl2_sl2() {
  LieAlgebra L = direct_sum(sl2_algebra(), sl2_algebra("sl2b"), "sl2_sl2");
  L.basis_names = {"e", "f", "h", "E", "F", "H"};
  Tensor2 r = zero_tensor2(L.space(), L.space());
  r.m(0, 1) = 1;
  r.m(2, 2) = frac(1, 4);
  r.m(3, 4) = 1;
  r.m(5, 5) = frac(1, 4);
  return QuasitriangularBialgebra::create(L, r);
}

inline std::vector<QuasitriangularBialgebra> all_fixtures() {
  return {abelian2(), axb(),        sl2(),     sl2_axb(),
          sl2_sl2(),  heisenberg(), sl2_triangular()};
}

}  // namespace fx

#endif
