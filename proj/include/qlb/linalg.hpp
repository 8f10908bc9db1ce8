#ifndef QLB_LINALG_HPP
#define QLB_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qlb/types.hpp"

namespace qlb {

/// Canonical reduced row-echelon basis of the span of the given rows.
/// Canonical means: unique per subspace, so equality is entrywise.
SubspaceBasis rref(const Space& ambient, const Mat& rows);
SubspaceBasis rref(const std::vector<Vec>& rows);

SubspaceBasis zero_subspace(const Space& ambient);
SubspaceBasis whole_space(const Space& ambient);

/// Exact kernel/image in canonical form; dim kernel + dim image = dim domain.
SubspaceBasis kernel(const LinearMap& m);
SubspaceBasis image(const LinearMap& m);

/// Intersection of two subspaces of the same ambient space (Zassenhaus).
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Sum of two subspaces of the same ambient space.
SubspaceBasis span_union(const SubspaceBasis& a, const SubspaceBasis& b);

/// Membership test against a canonical basis.
bool contains(const SubspaceBasis& s, const Vec& v);
bool contains(const SubspaceBasis& s, const ColVec& v);

/// Coefficients of v in the basis rows of s (throws DomainError if v is
/// outside the span). Exact: read off the pivot coordinates, then verify.
ColVec coords_in(const SubspaceBasis& s, const ColVec& v);

/// Linear combination of the basis rows of s with the given coefficients.
ColVec from_coords(const SubspaceBasis& s, const ColVec& coeffs);

/// First-pivot particular solution of A x = b (free variables set to 0);
/// nullopt if inconsistent.
std::optional<ColVec> solve(const Mat& a, const ColVec& b);

/// Exact rank.
Index rank(const Mat& a);

/// Deterministic complement chart for ambient/w: the complement is spanned
/// by the coordinate directions of the non-pivot columns of w's echelon
/// form, in increasing index order.
QuotientChart quotient_chart(const Space& ambient, const SubspaceBasis& w,
                             const std::string& chart_tag);
QuotientChart quotient_chart(const Space& ambient, const SubspaceBasis& w);

/// Project a vector of the ambient space to the complement chart.
Vec project(const QuotientChart& q, const Vec& v);

/// Lift a chart vector back to the ambient space (section of the projector).
Vec lift(const QuotientChart& q, const Vec& chart_vec);

/// Deterministic right inverse s of m on the subspace `onto` of m's
/// codomain: m(s(y)) = y for every y in span(onto). The domain of s is a
/// fresh chart space (tag `section_domain_tag`) whose basis is understood as
/// the rows of `onto`; each basis vector is sent to the first-pivot preimage.
/// Throws UnsolvableError if onto is not contained in image(m).
LinearMap solve_right_inverse(const LinearMap& m, const SubspaceBasis& onto,
                              const std::string& section_domain_tag);

/// The inclusion map of the chart space of `solve_right_inverse` (or any
/// chart whose basis is the rows of `sub`) into the ambient space.
LinearMap inclusion_map(const SubspaceBasis& sub, const std::string& chart_tag);

}  // namespace qlb

#endif
