#include "qlb/double_oracle.hpp"

namespace qlb {

DirectDouble build_direct_double(const QuasitriangularBialgebra& B) {
  const Index n = B.g().dim();
  const LieAlgebra& dual = B.dual_algebra();

  std::vector<std::string> names = B.g().basis_names;
  names.insert(names.end(), dual.basis_names.begin(), dual.basis_names.end());
  LieAlgebra d = make_algebra("D(" + B.g().name + ")", std::move(names));

  // g and g* blocks keep their own brackets.
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        d.c(i, j, k) = B.g().c(i, j, k);
        d.c(n + i, n + j, n + k) = dual.c(i, j, k);
      }

  // Mixed block: [x, xi] = ad*_x(xi) - ad*_xi(x).
  for (Index a = 0; a < n; ++a) {
    const LinearMap coad = ad_star(B.g(), basis_vec(B.space(), a));
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k) {
        d.c(a, n + i, n + k) = coad.m(k, i);
        d.c(n + i, a, n + k) = -coad.m(k, i);
      }
  }
  for (Index i = 0; i < n; ++i) {
    const LinearMap dc = dual_coadjoint(B, basis_vec(B.dual_space(), i));
    for (Index a = 0; a < n; ++a)
      for (Index k = 0; k < n; ++k) {
        d.c(a, n + i, k) = -dc.m(k, a);
        d.c(n + i, a, k) = dc.m(k, a);
      }
  }

  const ValidationReport rep = validate(d);
  if (!rep.ok())
    throw InternalInconsistencyError(
        "direct double of '" + B.g().name +
        "' violates the Lie axioms (convention bug): " + rep.summary());

  const Space ds = d.space();
  Tensor2 form = zero_tensor2(ds, ds);
  for (Index i = 0; i < n; ++i) {
    form.m(i, n + i) = 1;
    form.m(n + i, i) = 1;
  }
  return DirectDouble{B, std::move(d), std::move(form)};
}

Rational canonical_form(const DirectDouble& D, const Vec& d1, const Vec& d2) {
  require_same_space(d1.ambient, D.space(), "canonical_form");
  require_same_space(d2.ambient, D.space(), "canonical_form");
  Rational acc = 0;
  const Index n = D.B.g().dim();
  for (Index i = 0; i < n; ++i) {
    acc += d1.coords(n + i) * d2.coords(i);
    acc += d2.coords(n + i) * d1.coords(i);
  }
  return acc;
}

Report verify_manin_triple(const DirectDouble& D) {
  Report rep;
  rep.subject = D.d.name;
  const Index n = D.B.g().dim();
  const Index N = 2 * n;
  const Space ds = D.space();

  rep.add("form nondegenerate", rank(D.form.m) == N,
          "rank " + std::to_string(rank(D.form.m)) + " of " + std::to_string(N));

  bool invariant = true;
  std::string witness;
  for (Index a = 0; a < N && invariant; ++a)
    for (Index b = 0; b < N && invariant; ++b) {
      const Vec ea = basis_vec(ds, a);
      const Vec eb = basis_vec(ds, b);
      for (Index c = 0; c < N && invariant; ++c) {
        const Vec ec = basis_vec(ds, c);
        const Rational lhs =
            canonical_form(D, bracket(D.d, ea, eb), ec) +
            canonical_form(D, eb, bracket(D.d, ea, ec));
        if (lhs != 0) {
          invariant = false;
          witness = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")";
        }
      }
    }
  rep.add("form invariant", invariant, witness);

  // The two blocks close under the bracket, restrict to the original
  // brackets, and are isotropic of half dimension.
  bool g_sub = true, g_restrict = true, gstar_sub = true, gstar_restrict = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec bg = bracket(D.d, basis_vec(ds, i), basis_vec(ds, j));
      for (Index k = 0; k < n; ++k) {
        if (bg.coords(n + k) != 0) g_sub = false;
        if (bg.coords(k) != D.B.g().c(i, j, k)) g_restrict = false;
      }
      const Vec bd = bracket(D.d, basis_vec(ds, n + i), basis_vec(ds, n + j));
      for (Index k = 0; k < n; ++k) {
        if (bd.coords(k) != 0) gstar_sub = false;
        if (bd.coords(n + k) != D.B.dual_algebra().c(i, j, k))
          gstar_restrict = false;
      }
    }
  rep.add("g is a subalgebra", g_sub);
  rep.add("g bracket restricts", g_restrict);
  rep.add("g* is a subalgebra", gstar_sub);
  rep.add("g* bracket restricts", gstar_restrict);

  bool g_iso = true, gstar_iso = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (canonical_form(D, basis_vec(ds, i), basis_vec(ds, j)) != 0)
        g_iso = false;
      if (canonical_form(D, basis_vec(ds, n + i), basis_vec(ds, n + j)) != 0)
        gstar_iso = false;
    }
  rep.add("g Lagrangian", g_iso, "isotropic of dim n");
  rep.add("g* Lagrangian", gstar_iso, "isotropic of dim n");
  return rep;
}

}  // namespace qlb
