#ifndef QLB_DOUBLE_ORACLE_HPP
#define QLB_DOUBLE_ORACLE_HPP

#include "qlb/bialgebra.hpp"
#include "qlb/report.hpp"

namespace qlb {

/// The double built directly on g (+) g*: g and g* keep their own brackets
/// and the mixed bracket is [x, xi] = ad*_x(xi) - ad*_xi(x). This is the
/// ground truth the extension model is tested against.
struct DirectDouble {
  QuasitriangularBialgebra B;
  LieAlgebra d;  // dim 2n on basis (e_1..e_n, e_1*..e_n*)
  Tensor2 form;  // <<x1+xi1, x2+xi2>> = <xi1,x2> + <xi2,x1>

  Space space() const { return d.space(); }
};

/// Builds and validates the direct double. A Jacobi failure here means a
/// sign-convention bug in this library, never bad input, and surfaces as
/// InternalInconsistencyError.
DirectDouble build_direct_double(const QuasitriangularBialgebra& B);

/// The canonical invariant form evaluated on two double vectors.
Rational canonical_form(const DirectDouble& D, const Vec& d1, const Vec& d2);

/// form nondegenerate + invariant; g and g* Lagrangian subalgebras.
Report verify_manin_triple(const DirectDouble& D);

}  // namespace qlb

#endif
