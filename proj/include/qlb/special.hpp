#ifndef QLB_SPECIAL_HPP
#define QLB_SPECIAL_HPP

#include <optional>

#include "qlb/embedding.hpp"

namespace qlb {

/// Factorizable case: f_perp = 0 and p is a Lie algebra isomorphism
/// D -> g (+) g carrying g to the diagonal and g* to b.
/// PreconditionError unless classify(B) is factorizable.
Report verify_factorizable(const QuasitriangularBialgebra& B);

/// Triangular case: f = 0, alpha = 0, the extension is the semidirect sum
/// g x| g* with the coadjoint action, the embedded g* is {(r+ xi, xi)} and
/// equals (id, sigma^{-1} o beta)(g+) with beta = rbar_+^{-1}, which is a
/// 1-cocycle for the coadjoint representation of g+.
/// PreconditionError unless classify(B) is triangular.
Report verify_triangular(const QuasitriangularBialgebra& B);

/// Second proof of the triangular case: j(x) = (x,0), j*(xi) = (r+ xi, xi)
/// are homomorphisms into g x| g* with complementary Lagrangian images.
Report manin_triple_jjstar(const QuasitriangularBialgebra& B);

/// Triangular case of an algebra carrying a nondegenerate invariant form:
/// the double is the dual-number algebra g[t]/(t^2) and the image of g*
/// is (id + t sigma^{-1} beta)(g+) + t.(Ker r+ transported by the form).
/// The form is checked (invariance + nondegeneracy); failures raise
/// PreconditionError whose message reports whether any nondegenerate
/// invariant form exists at all.
Report dual_number_double(const QuasitriangularBialgebra& B,
                          const Tensor2& form);

/// gamma(x1,x2) = <beta(x1), x2> on the g+ chart; antisymmetric 2-cocycle,
/// nondegenerate exactly when beta is. PreconditionError unless triangular.
Tensor2 quasi_frobenius_gamma(const QuasitriangularBialgebra& B);

/// Basis of the space of invariant bilinear forms of L, as flattened
/// n*n row-major vectors.
SubspaceBasis invariant_form_space(const LieAlgebra& L);

/// Exact decision whether L admits a nondegenerate invariant bilinear form,
/// by polynomial identity testing of det on the solved form space over a
/// grid. nullopt when the grid would be unreasonably large (the answer is
/// then unknown; only used to phrase error messages).
std::optional<bool> has_nondegenerate_invariant_form(const LieAlgebra& L);

}  // namespace qlb

#endif
