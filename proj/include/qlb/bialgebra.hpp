#ifndef QLB_BIALGEBRA_HPP
#define QLB_BIALGEBRA_HPP

#include <string>

#include "qlb/lie.hpp"

namespace qlb {

/// The classical Yang-Baxter tensor [r12,r13] + [r12,r23] + [r13,r23] of a
/// candidate r-matrix; r is quasitriangular iff this vanishes identically.
Tensor3 cybe_tensor(const LieAlgebra& g, const Tensor2& r);

/// r fails the Yang-Baxter equation; carries one nonzero witness entry.
struct CybeViolationError : Error {
  CybeViolationError(Index i, Index j, Index k, const Rational& value);
  Index i, j, k;
  Rational value;
};

enum class BialgebraClass { Triangular, Factorizable, General };
const char* to_string(BialgebraClass c);

/// A Lie algebra together with a verified r-matrix and the derived data the
/// rest of the library runs on. Construction validates the Lie axioms and
/// the Yang-Baxter equation eagerly; everything downstream may assume both.
/// Immutable after construction.
class QuasitriangularBialgebra {
 public:
  /// Throws ConstructionError (Lie axioms) or CybeViolationError.
  static QuasitriangularBialgebra create(LieAlgebra g, Tensor2 r);

  const LieAlgebra& g() const { return g_; }
  const Tensor2& r() const { return r_; }

  /// r+(xi) = (xi (x) id) r; matrix r^T in coordinates.
  const LinearMap& r_plus() const { return r_plus_; }
  /// r-(xi) = -(id (x) xi) r; matrix -r in coordinates.
  const LinearMap& r_minus() const { return r_minus_; }
  /// r+ - r- as a map g* -> g (the symmetric part acting on covectors).
  LinearMap r_diff() const { return r_plus_ - r_minus_; }

  /// omega = r + r_21, the symmetric invariant part.
  const Tensor2& omega() const { return omega_; }

  /// f = Im(r+ - r-), an ideal of g.
  const SubspaceBasis& f() const { return f_; }
  /// f_perp = Ker(r+ - r-), the annihilator of f in g*.
  const SubspaceBasis& f_perp() const { return f_perp_; }

  /// g* with the bracket dual to the cobracket:
  /// <[xi,eta], x> = <xi (x) eta, delta(x)>. Named g.name + "*".
  const LieAlgebra& dual_algebra() const { return dual_; }

  Space space() const { return g_.space(); }
  Space dual_space() const { return g_.dual_space(); }

 private:
  QuasitriangularBialgebra() = default;

  LieAlgebra g_;
  Tensor2 r_;
  LinearMap r_plus_, r_minus_;
  Tensor2 omega_;
  SubspaceBasis f_, f_perp_;
  LieAlgebra dual_;
};

/// delta(x) = (ad_x (x) id + id (x) ad_x) r, an element of g (x) g.
Tensor2 cobracket(const QuasitriangularBialgebra& B, const Vec& x);

/// The coadjoint action of xi in g* on g: x -> ad*_xi(x), computed by
/// contracting the cobracket. The two contraction formulas (first slot with
/// -xi, second slot with +xi) agree; this uses the first.
LinearMap dual_coadjoint(const QuasitriangularBialgebra& B, const Vec& xi);

/// Triangular iff omega = 0; factorizable iff omega has full rank.
BialgebraClass classify(const QuasitriangularBialgebra& B);

/// The double's ambient space D = g (+) g*, basis (e_1..e_n, e_1*..e_n*).
Space double_space(const QuasitriangularBialgebra& B);

/// Inclusions of g and g* into D and the block split of D.
Vec embed_g(const QuasitriangularBialgebra& B, const Vec& x);
Vec embed_gstar(const QuasitriangularBialgebra& B, const Vec& xi);
std::pair<Vec, Vec> split_double(const QuasitriangularBialgebra& B, const Vec& d);

}  // namespace qlb

#endif
