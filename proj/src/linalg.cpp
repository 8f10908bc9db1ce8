#include "qlb/linalg.hpp"

#include <utility>

namespace qlb {

namespace {

// In-place Gauss-Jordan. Returns the pivot columns in increasing order.
// Deterministic: pivot = first row (from `row` down) with a nonzero entry in
// the current column. Exact arithmetic, so any nonzero pivot is as good as
// any other.
std::vector<Index> gauss_jordan(Mat& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = 1 / Rational(m(row, col));
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      if (m(r, col) != 0) m.row(r) -= m(r, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

SubspaceBasis rref(const Space& ambient, const Mat& rows) {
  if (rows.cols() != ambient.dim)
    throw TagMismatchError("rref: row length " + std::to_string(rows.cols()) +
                           " does not match dim of '" + ambient.tag + "'");
  Mat m = rows;
  std::vector<Index> pivots = gauss_jordan(m);
  const Index r = static_cast<Index>(pivots.size());
  return SubspaceBasis{ambient, m.topRows(r), std::move(pivots)};
}

SubspaceBasis rref(const std::vector<Vec>& rows) {
  if (rows.empty())
    throw TagMismatchError("rref: cannot infer ambient space of an empty list; "
                           "use rref(ambient, rows)");
  const Space& ambient = rows.front().ambient;
  Mat m(static_cast<Index>(rows.size()), ambient.dim);
  for (Index i = 0; i < m.rows(); ++i) {
    require_same_space(rows[static_cast<std::size_t>(i)].ambient, ambient, "rref");
    m.row(i) = rows[static_cast<std::size_t>(i)].coords.transpose();
  }
  return rref(ambient, m);
}

SubspaceBasis zero_subspace(const Space& ambient) {
  return SubspaceBasis{ambient, Mat::Zero(0, ambient.dim), {}};
}

SubspaceBasis whole_space(const Space& ambient) {
  std::vector<Index> pivots(static_cast<std::size_t>(ambient.dim));
  for (Index i = 0; i < ambient.dim; ++i) pivots[static_cast<std::size_t>(i)] = i;
  return SubspaceBasis{ambient, Mat::Identity(ambient.dim, ambient.dim),
                       std::move(pivots)};
}

SubspaceBasis kernel(const LinearMap& f) {
  Mat m = f.m;
  const std::vector<Index> pivots = gauss_jordan(m);
  // Standard kernel basis from the RREF: one vector per free column. With
  // free columns visited in increasing order this already is a canonical
  // echelon basis up to pivot normalization; run rref once more to land in
  // the canonical form.
  std::vector<Index> free_cols;
  {
    std::size_t pi = 0;
    for (Index c = 0; c < f.m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Mat basis = Mat::Zero(static_cast<Index>(free_cols.size()), f.m.cols());
  for (std::size_t v = 0; v < free_cols.size(); ++v) {
    const Index fc = free_cols[v];
    basis(static_cast<Index>(v), fc) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(static_cast<Index>(v), pivots[r]) = -m(static_cast<Index>(r), fc);
  }
  return rref(f.domain, basis);
}

SubspaceBasis image(const LinearMap& f) {
  return rref(f.codomain, f.m.transpose());
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_same_space(a.ambient, b.ambient, "intersect");
  const Index n = a.ambient.dim;
  // Zassenhaus: row reduce [A A; B 0]; rows with vanishing left half carry a
  // basis of the intersection in their right half.
  Mat block = Mat::Zero(a.dim() + b.dim(), 2 * n);
  block.block(0, 0, a.dim(), n) = a.rows;
  block.block(0, n, a.dim(), n) = a.rows;
  block.block(a.dim(), 0, b.dim(), n) = b.rows;
  gauss_jordan(block);
  std::vector<Index> hits;
  for (Index r = 0; r < block.rows(); ++r) {
    bool left_zero = true;
    for (Index c = 0; c < n && left_zero; ++c)
      if (block(r, c) != 0) left_zero = false;
    if (left_zero) hits.push_back(r);
  }
  Mat rows(static_cast<Index>(hits.size()), n);
  for (std::size_t i = 0; i < hits.size(); ++i)
    rows.row(static_cast<Index>(i)) = block.block(hits[i], n, 1, n);
  return rref(a.ambient, rows);
}

SubspaceBasis span_union(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_same_space(a.ambient, b.ambient, "span_union");
  Mat rows(a.dim() + b.dim(), a.ambient.dim);
  rows.topRows(a.dim()) = a.rows;
  rows.bottomRows(b.dim()) = b.rows;
  return rref(a.ambient, rows);
}

bool contains(const SubspaceBasis& s, const ColVec& v) {
  // Reduce v against the echelon rows; membership iff the residual vanishes.
  ColVec res = v;
  for (Index r = 0; r < s.dim(); ++r) {
    const Index p = s.pivots[static_cast<std::size_t>(r)];
    if (res(p) != 0) res -= res(p) * s.rows.row(r).transpose();
  }
  for (Index i = 0; i < res.size(); ++i)
    if (res(i) != 0) return false;
  return true;
}

bool contains(const SubspaceBasis& s, const Vec& v) {
  require_same_space(s.ambient, v.ambient, "contains");
  return contains(s, v.coords);
}

ColVec coords_in(const SubspaceBasis& s, const ColVec& v) {
  ColVec coeffs(s.dim());
  ColVec res = v;
  for (Index r = 0; r < s.dim(); ++r) {
    const Index p = s.pivots[static_cast<std::size_t>(r)];
    coeffs(r) = res(p);
    if (res(p) != 0) res -= res(p) * s.rows.row(r).transpose();
  }
  for (Index i = 0; i < res.size(); ++i)
    if (res(i) != 0)
      throw DomainError("coords_in: vector not in the span (ambient '" +
                        s.ambient.tag + "')");
  return coeffs;
}

ColVec from_coords(const SubspaceBasis& s, const ColVec& coeffs) {
  return s.rows.transpose() * coeffs;
}

std::optional<ColVec> solve(const Mat& a, const ColVec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> pivots = gauss_jordan(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  ColVec x = ColVec::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Index>(r), a.cols());
  return x;
}

Index rank(const Mat& a) {
  Mat m = a;
  return static_cast<Index>(gauss_jordan(m).size());
}

QuotientChart quotient_chart(const Space& ambient, const SubspaceBasis& w,
                             const std::string& chart_tag) {
  require_same_space(ambient, w.ambient, "quotient_chart");
  std::vector<Index> free_cols;
  {
    std::size_t pi = 0;
    for (Index c = 0; c < ambient.dim; ++c) {
      if (pi < w.pivots.size() && w.pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  const Index q = static_cast<Index>(free_cols.size());
  Mat comp = Mat::Zero(q, ambient.dim);
  for (Index i = 0; i < q; ++i) comp(i, free_cols[static_cast<std::size_t>(i)]) = 1;

  // projector(v)_f = v_f - sum_r w_r[f] * v_{pivot_r}: kills w, fixes the
  // complement directions.
  Mat proj = Mat::Zero(q, ambient.dim);
  for (Index i = 0; i < q; ++i) {
    const Index f = free_cols[static_cast<std::size_t>(i)];
    proj(i, f) = 1;
    for (Index r = 0; r < w.dim(); ++r)
      proj(i, w.pivots[static_cast<std::size_t>(r)]) = -w.rows(r, f);
  }
  const Space chart{chart_tag, q};
  return QuotientChart{ambient, w, SubspaceBasis{ambient, comp, free_cols},
                       LinearMap{ambient, chart, proj}};
}

QuotientChart quotient_chart(const Space& ambient, const SubspaceBasis& w) {
  return quotient_chart(ambient, w, ambient.tag + "/W");
}

Vec project(const QuotientChart& q, const Vec& v) {
  return apply(q.projector, v);
}

Vec lift(const QuotientChart& q, const Vec& chart_vec) {
  require_same_space(q.projector.codomain, chart_vec.ambient, "lift");
  return Vec{q.ambient, q.complement.rows.transpose() * chart_vec.coords};
}

LinearMap solve_right_inverse(const LinearMap& m, const SubspaceBasis& onto,
                              const std::string& section_domain_tag) {
  require_same_space(m.codomain, onto.ambient, "solve_right_inverse");
  Mat section(m.m.cols(), onto.dim());
  for (Index j = 0; j < onto.dim(); ++j) {
    auto x = solve(m.m, onto.rows.row(j).transpose());
    if (!x)
      throw UnsolvableError("solve_right_inverse: target basis vector " +
                            std::to_string(j) + " is outside image of the map");
    section.col(j) = *x;
  }
  return LinearMap{Space{section_domain_tag, onto.dim()}, m.domain, section};
}

LinearMap inclusion_map(const SubspaceBasis& sub, const std::string& chart_tag) {
  return LinearMap{Space{chart_tag, sub.dim()}, sub.ambient,
                   sub.rows.transpose()};
}

}  // namespace qlb
