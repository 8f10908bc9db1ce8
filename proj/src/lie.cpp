#include "qlb/lie.hpp"

#include <sstream>

namespace qlb {

LieAlgebra make_algebra(std::string name, std::vector<std::string> basis_names) {
  LieAlgebra L;
  L.name = std::move(name);
  L.basis_names = std::move(basis_names);
  const Space s = L.space();
  L.c = Tensor3(s, s, s);
  return L;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "ok";
  std::ostringstream os;
  os << issues.size() << " issue(s):";
  for (const auto& v : issues) {
    if (v.kind == ValidationIssue::Kind::Antisymmetry)
      os << " antisymmetry(" << v.i << "," << v.j << ";" << v.k << ")";
    else
      os << " jacobi(" << v.i << "," << v.j << "," << v.k << ")";
  }
  return os.str();
}

ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  const Index n = L.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (L.c(i, j, k) != -L.c(j, i, k))
          rep.issues.push_back({ValidationIssue::Kind::Antisymmetry, i, j, k});

  // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0, coefficient of
  // e_k: sum_m c(i,j,m) c(m,l,k) + c(j,l,m) c(m,i,k) + c(l,i,m) c(m,j,k).
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        bool bad = false;
        for (Index k = 0; k < n && !bad; ++k) {
          Rational acc = 0;
          for (Index m = 0; m < n; ++m) {
            acc += L.c(i, j, m) * L.c(m, l, k);
            acc += L.c(j, l, m) * L.c(m, i, k);
            acc += L.c(l, i, m) * L.c(m, j, k);
          }
          if (acc != 0) bad = true;
        }
        if (bad)
          rep.issues.push_back({ValidationIssue::Kind::Jacobi, i, j, l});
      }
  return rep;
}

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y) {
  require_same_space(x.ambient, L.space(), "bracket");
  require_same_space(y.ambient, L.space(), "bracket");
  const Index n = L.dim();
  Vec out = zero_vec(L.space());
  for (Index i = 0; i < n; ++i) {
    if (x.coords(i) == 0) continue;
    for (Index j = 0; j < n; ++j) {
      if (y.coords(j) == 0) continue;
      const Rational cij = x.coords(i) * y.coords(j);
      for (Index k = 0; k < n; ++k)
        if (L.c(i, j, k) != 0) out.coords(k) += cij * L.c(i, j, k);
    }
  }
  return out;
}

LinearMap ad(const LieAlgebra& L, const Vec& x) {
  require_same_space(x.ambient, L.space(), "ad");
  const Index n = L.dim();
  Mat m = Mat::Zero(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index a = 0; a < n; ++a) {
      if (x.coords(a) == 0) continue;
      for (Index k = 0; k < n; ++k)
        if (L.c(a, j, k) != 0) m(k, j) += x.coords(a) * L.c(a, j, k);
    }
  return LinearMap{L.space(), L.space(), std::move(m)};
}

LinearMap ad_star(const LieAlgebra& L, const Vec& x) {
  LinearMap adx = ad(L, x);
  return LinearMap{L.dual_space(), L.dual_space(), -adx.m.transpose()};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b,
                      const std::string& name) {
  std::vector<std::string> names = a.basis_names;
  names.insert(names.end(), b.basis_names.begin(), b.basis_names.end());
  LieAlgebra s = make_algebra(name, std::move(names));
  const Index na = a.dim();
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j)
      for (Index k = 0; k < na; ++k) s.c(i, j, k) = a.c(i, j, k);
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      for (Index k = 0; k < b.dim(); ++k)
        s.c(na + i, na + j, na + k) = b.c(i, j, k);
  return s;
}

}  // namespace qlb
