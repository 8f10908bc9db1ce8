#ifndef QLB_EMBEDDING_HPP
#define QLB_EMBEDDING_HPP

#include "qlb/extension.hpp"

namespace qlb {

/// The Cayley transform of the r-matrix: g+- = Im r+-, n+- = r+-(Ker r-+),
/// and the induced isomorphism theta: g+/n+ -> g-/n-, theta(r+ xi + n+) =
/// r- xi + n-. Quotients are presented in the deterministic complement
/// charts of quotient_chart.
struct CayleyData {
  SubspaceBasis g_plus, g_minus;  // in g
  SubspaceBasis n_plus, n_minus;  // in g
  Space gp_space, gm_space;       // charts of g+ and g-
  QuotientChart q_plus, q_minus;  // g+- chart modulo n+- (in-chart)
  LinearMap theta;                // q_plus complement chart -> q_minus chart
};

/// Constructs CayleyData and verifies all its invariants (n+- are ideals of
/// g+-, theta well defined, invertible, a Lie algebra isomorphism on the
/// quotient brackets). Violations throw InternalInconsistencyError.
CayleyData cayley(const QuasitriangularBialgebra& B);

/// b = {(x+, x-) in (g+ (+) g-) cap a : theta pi+(x+) = pi-(x-)} as a
/// subspace of g (+) g.
SubspaceBasis b_via_theta(const QuasitriangularBialgebra& B);

/// The same subalgebra in the a-chart of the extension model, computed both
/// as b_via_theta and as p(g*); the two canonical bases must agree
/// (InternalInconsistencyError otherwise).
SubspaceBasis build_b(const DoubleExtension& E);

/// W = Ker r+ cap Ker r-, in g*.
SubspaceBasis compute_W(const QuasitriangularBialgebra& B);

/// beta(x1,x2) = pbar^{-1}(x1,x2) - sigma s(x1 - x2), a coset in f_perp/W
/// presented in the complement chart of sigma. DomainError if (x1,x2) is
/// outside b.
Vec beta_cochain(const DoubleExtension& E, const Vec& x1, const Vec& x2);

/// Subalgebra data (b, W, beta) of an extension h x|_alpha V, with
/// sigma: V -> V/W the chart the beta values live in.
struct SubalgebraTriple {
  SubspaceBasis b;        // in h
  SubspaceBasis W;        // in V
  QuotientChart sigma;    // V modulo W
  std::vector<Vec> beta;  // one chart value per basis row of b
};

/// Invariant checks of a triple: b a subalgebra, W invariant under the
/// b-action, coboundary of beta = -sigma o alpha restricted to b.
Report triple_invariants(const ExtensionAlgebra& ext, const SubalgebraTriple& t);

/// b^beta_W = {(x, v) : x in b, v + W = beta(x)} as a subspace of the total
/// space; checks closure under the extension bracket (ConstructionError
/// naming the violating pair).
SubspaceBasis build_b_beta_W(const ExtensionAlgebra& ext,
                             const SubalgebraTriple& t);

/// Canonical basis of the image of g* under
///   xi -> (r+(xi), r-(xi)) x| (xi - s(r+ - r-)xi),
/// in total coordinates.
SubspaceBasis gstar_image(const DoubleExtension& E);

/// The triple (b, W, beta) describing the embedded g*.
SubalgebraTriple gstar_triple(const DoubleExtension& E);

/// The image of g* coincides with b^beta_W; includes the W cross-check
/// (image cap V) and the pbar isomorphism checks.
Report verify_gstar_image(const DoubleExtension& E);

/// Recovers (p(k), k cap V, beta) from a subalgebra k of the total space;
/// build_b_beta_W of the result reproduces k. Error if k is not closed
/// under the bracket.
SubalgebraTriple decompose_subalgebra(const ExtensionAlgebra& ext,
                                      const SubspaceBasis& k);

}  // namespace qlb

#endif
