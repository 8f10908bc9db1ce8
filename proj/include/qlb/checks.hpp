#ifndef QLB_CHECKS_HPP
#define QLB_CHECKS_HPP

#include "qlb/special.hpp"

namespace qlb {

/// Derived-data identities of the bialgebra: omega invariance, f an ideal,
/// the two routes to f and f_perp, r+- homomorphisms, the dual algebra
/// axioms, cobracket antisymmetry and the 1-cocycle identity.
Report bialgebra_invariants(const QuasitriangularBialgebra& B);

/// The lemma-level identities inside the direct double: the two coadjoint
/// contraction formulas, Ker p+- = (id - r+-) g*, mutual commutation of the
/// kernels (and the vanishing dual expression), the g-module property of
/// id - r+-, and p+- being homomorphisms, plus the exact sequence.
Report lemma_suite(const QuasitriangularBialgebra& B, const DirectDouble& D);

/// Cocycle-level identities: alpha antisymmetric 2-cocycle with values in
/// f_perp, alpha equals the commutator defect of the splitting S computed in
/// the direct double, the induced action identity, and d(beta) = -sigma o
/// alpha on b.
Report cocycle_suite(const DoubleExtension& E, const DirectDouble& D);

/// The explicit isomorphism: mutual inverses, bracket pushforward on every
/// basis pair, p o S = id, the g-embedding, and the transported form equals
/// the canonical form.
Report iso_suite(const DoubleExtension& E, const DirectDouble& D);

/// Image of g*: b^beta_W equality and decompose/build round-trips.
Report embedding_suite(const DoubleExtension& E);

/// Classification-dependent corollaries.
Report special_suite(const QuasitriangularBialgebra& B);

/// Everything, in dependency order, with early exit after axiom/CYBE
/// failures. This is the engine behind `check` and the acceptance suite.
Report full_check(const LieAlgebra& g, const Tensor2& r);

}  // namespace qlb

#endif
