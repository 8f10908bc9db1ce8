#ifndef QLB_LIE_HPP
#define QLB_LIE_HPP

#include <string>
#include <vector>

#include "qlb/linalg.hpp"
#include "qlb/types.hpp"

namespace qlb {

/// Lie algebra given by structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k.
/// Constants are stored in full (not just i < j) and validated, not assumed.
struct LieAlgebra {
  std::string name;
  std::vector<std::string> basis_names;
  Tensor3 c;

  Index dim() const { return static_cast<Index>(basis_names.size()); }
  Space space() const { return Space{name, dim()}; }
  Space dual_space() const { return Space{name + "*", dim()}; }
};

/// Zero-initialized structure constants for the given basis.
LieAlgebra make_algebra(std::string name, std::vector<std::string> basis_names);

struct ValidationIssue {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  Index i, j, k;  // for Jacobi, the basis triple; for antisymmetry, (i,j)
                  // plus the coefficient index k
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Checks antisymmetry c(i,j,k) = -c(j,i,k) and the Jacobi identity on all
/// basis triples. Empty report iff L is a Lie algebra.
ValidationReport validate(const LieAlgebra& L);

/// Bilinear bracket expansion through the structure constants.
Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);

/// ad(x): y -> [x, y].
LinearMap ad(const LieAlgebra& L, const Vec& x);

/// Coadjoint action on the dual: <ad*_x xi, y> = -<xi, [x, y]>, i.e. the
/// negative transpose of ad(x).
LinearMap ad_star(const LieAlgebra& L, const Vec& x);

/// Block direct sum of two algebras.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b,
                      const std::string& name);

}  // namespace qlb

#endif
