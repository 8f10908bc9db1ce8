#include "qlb/embedding.hpp"

namespace qlb {

namespace {

// Express the rows of `sub` (vectors of `within`'s ambient) in the chart of
// `within`, as a canonical subspace of the chart space.
SubspaceBasis in_chart(const SubspaceBasis& within, const Space& chart,
                       const SubspaceBasis& sub) {
  Mat rows(sub.dim(), within.dim());
  for (Index i = 0; i < sub.dim(); ++i)
    rows.row(i) = coords_in(within, sub.rows.row(i).transpose()).transpose();
  return rref(chart, rows);
}

// pi o (coords in g+- chart) o r+- as a matrix g* -> quotient chart.
Mat quotient_of_r(const QuasitriangularBialgebra& B, const SubspaceBasis& g_pm,
                  const QuotientChart& q, const LinearMap& r) {
  const Index n = B.g().dim();
  Mat m(q.projector.codomain.dim, n);
  for (Index i = 0; i < n; ++i) {
    const ColVec chart = coords_in(g_pm, (r.m.col(i)).eval());
    m.col(i) = q.projector.m * chart;
  }
  return m;
}

// Bracket on a quotient chart: lift, bracket in g, re-express, project.
Vec quotient_bracket(const QuasitriangularBialgebra& B,
                     const SubspaceBasis& g_pm, const QuotientChart& q,
                     const Vec& u, const Vec& v) {
  const Vec lu{B.space(), from_coords(g_pm, (q.complement.rows.transpose() * u.coords).eval())};
  const Vec lv{B.space(), from_coords(g_pm, (q.complement.rows.transpose() * v.coords).eval())};
  const Vec br = bracket(B.g(), lu, lv);
  const ColVec chart = coords_in(g_pm, br.coords);  // g+- is a subalgebra
  return Vec{q.projector.codomain, q.projector.m * chart};
}

}  // namespace

CayleyData cayley(const QuasitriangularBialgebra& B) {
  const std::string nm = B.g().name;
  CayleyData c;
  c.g_plus = image(B.r_plus());
  c.g_minus = image(B.r_minus());

  // n+- = r+-(Ker r-+)
  const SubspaceBasis ker_plus = kernel(B.r_plus());
  const SubspaceBasis ker_minus = kernel(B.r_minus());
  c.n_plus = rref(B.space(), (ker_minus.rows * B.r_plus().m.transpose()).eval());
  c.n_minus = rref(B.space(), (ker_plus.rows * B.r_minus().m.transpose()).eval());

  for (Index i = 0; i < c.n_plus.dim(); ++i)
    if (!contains(c.g_plus, c.n_plus.rows.row(i).transpose().eval()))
      throw InternalInconsistencyError("cayley: n+ escapes g+");
  for (Index i = 0; i < c.n_minus.dim(); ++i)
    if (!contains(c.g_minus, c.n_minus.rows.row(i).transpose().eval()))
      throw InternalInconsistencyError("cayley: n- escapes g-");

  c.gp_space = Space{"g+(" + nm + ")", c.g_plus.dim()};
  c.gm_space = Space{"g-(" + nm + ")", c.g_minus.dim()};
  c.q_plus = quotient_chart(c.gp_space, in_chart(c.g_plus, c.gp_space, c.n_plus),
                            "g+/n+(" + nm + ")");
  c.q_minus = quotient_chart(c.gm_space,
                             in_chart(c.g_minus, c.gm_space, c.n_minus),
                             "g-/n-(" + nm + ")");

  // g+- are subalgebras and n+- ideals in them.
  for (Index i = 0; i < c.g_plus.dim(); ++i) {
    const Vec gi{B.space(), c.g_plus.rows.row(i).transpose()};
    for (Index j = 0; j < c.g_plus.dim(); ++j)
      if (!contains(c.g_plus,
                    bracket(B.g(), gi,
                            Vec{B.space(), c.g_plus.rows.row(j).transpose()})))
        throw InternalInconsistencyError("cayley: g+ is not a subalgebra");
    for (Index j = 0; j < c.n_plus.dim(); ++j)
      if (!contains(c.n_plus,
                    bracket(B.g(), gi,
                            Vec{B.space(), c.n_plus.rows.row(j).transpose()})))
        throw InternalInconsistencyError("cayley: n+ is not an ideal of g+");
  }
  for (Index i = 0; i < c.g_minus.dim(); ++i) {
    const Vec gi{B.space(), c.g_minus.rows.row(i).transpose()};
    for (Index j = 0; j < c.g_minus.dim(); ++j)
      if (!contains(c.g_minus,
                    bracket(B.g(), gi,
                            Vec{B.space(), c.g_minus.rows.row(j).transpose()})))
        throw InternalInconsistencyError("cayley: g- is not a subalgebra");
    for (Index j = 0; j < c.n_minus.dim(); ++j)
      if (!contains(c.n_minus,
                    bracket(B.g(), gi,
                            Vec{B.space(), c.n_minus.rows.row(j).transpose()})))
        throw InternalInconsistencyError("cayley: n- is not an ideal of g-");
  }

  // theta via a right inverse of pi+ o r+, then verified exactly.
  const Mat m_plus = quotient_of_r(B, c.g_plus, c.q_plus, B.r_plus());
  const Mat m_minus = quotient_of_r(B, c.g_minus, c.q_minus, B.r_minus());
  const Index qp = c.q_plus.projector.codomain.dim;
  const Index qm = c.q_minus.projector.codomain.dim;
  if (qp != qm)
    throw InternalInconsistencyError("cayley: quotient dimensions differ");
  Mat right_inv(B.g().dim(), qp);
  for (Index j = 0; j < qp; ++j) {
    ColVec e = ColVec::Zero(qp);
    e(j) = 1;
    auto x = solve(m_plus, e);
    if (!x)
      throw InternalInconsistencyError("cayley: pi+ o r+ is not surjective");
    right_inv.col(j) = *x;
  }
  Mat theta = m_minus * right_inv;
  if (!mat_equal((theta * m_plus).eval(), m_minus))
    throw InternalInconsistencyError(
        "cayley: theta is not well defined (coset representative dependence)");
  // Coset independence spelled out on the kernel: r+ xi in n+ forces
  // r- xi in n-.
  {
    const LinearMap km{dual(B.space()), c.q_plus.projector.codomain, m_plus};
    const SubspaceBasis ker = kernel(km);
    for (Index i = 0; i < ker.dim(); ++i)
      if (!mat_is_zero((m_minus * ker.rows.row(i).transpose()).eval()))
        throw InternalInconsistencyError("cayley: theta not constant on cosets");
  }
  if (rank(theta) != qp)
    throw InternalInconsistencyError("cayley: theta is not invertible");
  c.theta = LinearMap{c.q_plus.projector.codomain, c.q_minus.projector.codomain,
                      std::move(theta)};

  // theta is a homomorphism for the quotient brackets.
  const Index q = qp;
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j) {
      const Vec u = basis_vec(c.q_plus.projector.codomain, i);
      const Vec v = basis_vec(c.q_plus.projector.codomain, j);
      const Vec lhs = apply(c.theta, quotient_bracket(B, c.g_plus, c.q_plus, u, v));
      const Vec rhs = quotient_bracket(B, c.g_minus, c.q_minus, apply(c.theta, u),
                                       apply(c.theta, v));
      if (!(lhs == rhs))
        throw InternalInconsistencyError("cayley: theta is not a homomorphism");
    }
  return c;
}

SubspaceBasis b_via_theta(const QuasitriangularBialgebra& B) {
  const CayleyData c = cayley(B);
  const Index n = B.g().dim();
  const Space gg = gg_space(B);

  // (g+ (+) g-) cap a inside g (+) g.
  Mat gpm_rows = Mat::Zero(c.g_plus.dim() + c.g_minus.dim(), 2 * n);
  gpm_rows.block(0, 0, c.g_plus.dim(), n) = c.g_plus.rows;
  gpm_rows.block(c.g_plus.dim(), n, c.g_minus.dim(), n) = c.g_minus.rows;
  const SubspaceBasis gpm = rref(gg, gpm_rows);

  Mat a_rows = Mat::Zero(n + B.f().dim(), 2 * n);
  for (Index i = 0; i < n; ++i) {
    a_rows(i, i) = 1;
    a_rows(i, n + i) = 1;
  }
  for (Index j = 0; j < B.f().dim(); ++j)
    a_rows.row(n + j).tail(n) = B.f().rows.row(j);
  const SubspaceBasis base = intersect(gpm, rref(gg, a_rows));

  // Impose theta pi+(x+) = pi-(x-) on the intersection.
  const Index qdim = c.q_minus.projector.codomain.dim;
  Mat cond(qdim, base.dim());
  for (Index i = 0; i < base.dim(); ++i) {
    const ColVec xp = base.rows.row(i).head(n).transpose();
    const ColVec xm = base.rows.row(i).tail(n).transpose();
    const ColVec lhs =
        c.theta.m * (c.q_plus.projector.m * coords_in(c.g_plus, xp));
    const ColVec rhs = c.q_minus.projector.m * coords_in(c.g_minus, xm);
    cond.col(i) = lhs - rhs;
  }
  const SubspaceBasis coeffs =
      kernel(LinearMap{Space{"coeff", base.dim()},
                       c.q_minus.projector.codomain, cond});
  return rref(gg, (coeffs.rows * base.rows).eval());
}

SubspaceBasis compute_W(const QuasitriangularBialgebra& B) {
  return intersect(kernel(B.r_plus()), kernel(B.r_minus()));
}

namespace {

// p(g*) = {(r+ xi, r- xi)} as a subspace of g (+) g.
SubspaceBasis p_of_gstar(const QuasitriangularBialgebra& B) {
  const Index n = B.g().dim();
  Mat rows(n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    rows.row(i).head(n) = B.r_plus().m.col(i).transpose();
    rows.row(i).tail(n) = B.r_minus().m.col(i).transpose();
  }
  return rref(gg_space(B), rows);
}

// Convert a subspace of g (+) g contained in a into the a-chart.
SubspaceBasis gg_to_a_chart(const DoubleExtension& E, const SubspaceBasis& sub) {
  const Index n = E.B.g().dim();
  Mat rows(sub.dim(), E.a.dim());
  for (Index i = 0; i < sub.dim(); ++i) {
    const Vec x1 = make_vec(E.B.space(), sub.rows.row(i).head(n).transpose());
    const Vec x2 = make_vec(E.B.space(), sub.rows.row(i).tail(n).transpose());
    rows.row(i) = E.pair_to_a(x1, x2).coords.transpose();
  }
  return rref(E.a.space(), rows);
}

}  // namespace

SubspaceBasis build_b(const DoubleExtension& E) {
  const SubspaceBasis via_theta = b_via_theta(E.B);
  const SubspaceBasis via_p = p_of_gstar(E.B);
  if (!(via_theta == via_p))
    throw InternalInconsistencyError(
        "build_b: theta description of b and p(g*) disagree");
  return gg_to_a_chart(E, via_theta);
}

namespace {

// First-pivot representative xi with (r+ xi, r- xi) = (x1, x2).
ColVec pbar_preimage(const QuasitriangularBialgebra& B, const ColVec& x1,
                     const ColVec& x2) {
  const Index n = B.g().dim();
  Mat stacked(2 * n, n);
  stacked.topRows(n) = B.r_plus().m;
  stacked.bottomRows(n) = B.r_minus().m;
  ColVec target(2 * n);
  target.head(n) = x1;
  target.tail(n) = x2;
  auto xi = solve(stacked, target);
  if (!xi)
    throw InternalInconsistencyError(
        "beta: element of b has no preimage under p");
  return *xi;
}

QuotientChart sigma_chart(const DoubleExtension& E) {
  const SubspaceBasis W = compute_W(E.B);
  const SubspaceBasis W_chart = in_chart(E.B.f_perp(), E.fperp_space, W);
  return quotient_chart(E.fperp_space, W_chart, E.fperp_space.tag + "/W");
}

Vec beta_value(const DoubleExtension& E, const QuotientChart& sigma,
               const Vec& x1, const Vec& x2) {
  const ColVec xi = pbar_preimage(E.B, x1.coords, x2.coords);
  const Vec eta =
      make_vec(E.B.dual_space(), xi) - E.section(x1 - x2);
  return project(sigma, E.fperp_coords(eta));
}

}  // namespace

Vec beta_cochain(const DoubleExtension& E, const Vec& x1, const Vec& x2) {
  require_same_space(x1.ambient, E.B.space(), "beta_cochain");
  require_same_space(x2.ambient, E.B.space(), "beta_cochain");
  const SubspaceBasis b = b_via_theta(E.B);
  ColVec pair(2 * E.B.g().dim());
  pair.head(E.B.g().dim()) = x1.coords;
  pair.tail(E.B.g().dim()) = x2.coords;
  if (!contains(b, pair))
    throw DomainError("beta_cochain: (x1, x2) is not in b");
  return beta_value(E, sigma_chart(E), x1, x2);
}

Report triple_invariants(const ExtensionAlgebra& ext, const SubalgebraTriple& t) {
  Report rep;
  rep.subject = "subalgebra triple in " + ext.total.name;
  const Index H = ext.h.dim();

  bool b_closed = true;
  for (Index i = 0; i < t.b.dim() && b_closed; ++i)
    for (Index j = 0; j < t.b.dim() && b_closed; ++j) {
      const Vec br = bracket(ext.h, Vec{ext.h.space(), t.b.rows.row(i).transpose()},
                             Vec{ext.h.space(), t.b.rows.row(j).transpose()});
      if (!contains(t.b, br)) b_closed = false;
    }
  rep.add("b is a subalgebra of h", b_closed);

  bool w_invariant = true;
  for (Index i = 0; i < t.b.dim() && w_invariant; ++i) {
    Mat act = Mat::Zero(ext.v.dim, ext.v.dim);
    for (Index k = 0; k < H; ++k)
      if (t.b.rows(i, k) != 0) act += t.b.rows(i, k) * ext.action[k];
    for (Index j = 0; j < t.W.dim() && w_invariant; ++j)
      if (!contains(t.W, Vec{ext.v, act * t.W.rows.row(j).transpose()}))
        w_invariant = false;
  }
  rep.add("W is b-invariant", w_invariant);

  // d beta (b1, b2) = b1.beta(b2) - b2.beta(b1) - beta([b1,b2])
  //                 = -sigma(alpha(b1, b2))
  bool coboundary = true;
  std::string witness;
  for (Index i = 0; i < t.b.dim(); ++i)
    for (Index j = 0; j < t.b.dim(); ++j) {
      const Vec bi{ext.h.space(), t.b.rows.row(i).transpose()};
      const Vec bj{ext.h.space(), t.b.rows.row(j).transpose()};
      // action of b_i on the quotient chart of sigma
      Mat act_i = Mat::Zero(ext.v.dim, ext.v.dim);
      Mat act_j = Mat::Zero(ext.v.dim, ext.v.dim);
      for (Index k = 0; k < H; ++k) {
        if (bi.coords(k) != 0) act_i += bi.coords(k) * ext.action[k];
        if (bj.coords(k) != 0) act_j += bj.coords(k) * ext.action[k];
      }
      const Vec beta_i = t.beta[static_cast<std::size_t>(i)];
      const Vec beta_j = t.beta[static_cast<std::size_t>(j)];
      const Vec lhs1 = project(t.sigma, Vec{ext.v, act_i * lift(t.sigma, beta_j).coords});
      const Vec lhs2 = project(t.sigma, Vec{ext.v, act_j * lift(t.sigma, beta_i).coords});
      // beta([b_i, b_j]) by expanding in the b basis
      const Vec br = bracket(ext.h, bi, bj);
      const ColVec coeff = coords_in(t.b, br.coords);
      Vec beta_br = zero_vec(t.sigma.projector.codomain);
      for (Index k = 0; k < t.b.dim(); ++k)
        beta_br = beta_br + coeff(k) * t.beta[static_cast<std::size_t>(k)];
      // sigma(alpha(b_i, b_j))
      ColVec alpha_val = ColVec::Zero(ext.v.dim);
      for (Index p = 0; p < H; ++p)
        for (Index q = 0; q < H; ++q)
          if (bi.coords(p) != 0 && bj.coords(q) != 0)
            alpha_val += bi.coords(p) * bj.coords(q) * ext.alpha[p][q];
      const Vec sigma_alpha = project(t.sigma, Vec{ext.v, alpha_val});
      const Vec dbeta = lhs1 - lhs2 - beta_br;
      if (!(dbeta == (Rational(-1) * sigma_alpha))) {
        coboundary = false;
        witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  rep.add("d(beta) = -sigma o alpha on b", coboundary, witness);
  return rep;
}

SubspaceBasis build_b_beta_W(const ExtensionAlgebra& ext,
                             const SubalgebraTriple& t) {
  const Index H = ext.h.dim();
  const Index V = ext.v.dim;
  Mat rows(t.b.dim() + t.W.dim(), H + V);
  rows.setZero();
  for (Index i = 0; i < t.b.dim(); ++i) {
    rows.row(i).head(H) = t.b.rows.row(i);
    rows.row(i).tail(V) =
        lift(t.sigma, t.beta[static_cast<std::size_t>(i)]).coords.transpose();
  }
  for (Index j = 0; j < t.W.dim(); ++j)
    rows.row(t.b.dim() + j).tail(V) = t.W.rows.row(j);
  const SubspaceBasis sub = rref(ext.total.space(), rows);

  for (Index i = 0; i < sub.dim(); ++i)
    for (Index j = 0; j < sub.dim(); ++j) {
      const Vec br =
          bracket(ext.total, Vec{ext.total.space(), sub.rows.row(i).transpose()},
                  Vec{ext.total.space(), sub.rows.row(j).transpose()});
      if (!contains(sub, br))
        throw ConstructionError("b^beta_W is not closed at basis pair (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
    }
  return sub;
}

SubspaceBasis gstar_image(const DoubleExtension& E) {
  const Index n = E.B.g().dim();
  Mat rows(n, E.ext.total.dim());
  for (Index i = 0; i < n; ++i) {
    const Vec xi = basis_vec(E.B.dual_space(), i);
    rows.row(i) =
        iso_direct_to_extension(E, embed_gstar(E.B, xi)).coords.transpose();
  }
  return rref(E.ext.total.space(), rows);
}

SubalgebraTriple gstar_triple(const DoubleExtension& E) {
  SubalgebraTriple t;
  t.b = build_b(E);
  const SubspaceBasis W = compute_W(E.B);
  t.W = in_chart(E.B.f_perp(), E.fperp_space, W);
  t.sigma = sigma_chart(E);
  for (Index i = 0; i < t.b.dim(); ++i) {
    auto [x1, x2] = E.a_to_pair(Vec{E.a.space(), t.b.rows.row(i).transpose()});
    t.beta.push_back(beta_value(E, t.sigma, x1, x2));
  }
  return t;
}

Report verify_gstar_image(const DoubleExtension& E) {
  Report rep;
  rep.subject = "image of g* in " + E.ext.total.name;
  const Index n = E.B.g().dim();

  const SubspaceBasis image = gstar_image(E);
  rep.add("embedding has rank n", image.dim() == n,
          "dim " + std::to_string(image.dim()));

  const SubalgebraTriple t = gstar_triple(E);
  rep.merge(triple_invariants(E.ext, t));

  const SubspaceBasis rebuilt = build_b_beta_W(E.ext, t);
  rep.add("image(g*) = b^beta_W", image == rebuilt);

  // W cross-check: the part of the image inside V equals W.
  Mat v_rows = Mat::Zero(E.fperp_space.dim, E.ext.total.dim());
  for (Index j = 0; j < E.fperp_space.dim; ++j)
    v_rows(j, E.a.dim() + j) = 1;
  const SubspaceBasis image_cap_v =
      intersect(image, rref(E.ext.total.space(), v_rows));
  Mat stripped(image_cap_v.dim(), E.fperp_space.dim);
  for (Index i = 0; i < image_cap_v.dim(); ++i)
    stripped.row(i) = image_cap_v.rows.row(i).tail(E.fperp_space.dim);
  rep.add("image cap V = W", rref(E.fperp_space, stripped) == t.W);

  // pbar: g*/W -> b is a well-defined isomorphism.
  Mat stacked(2 * n, n);
  stacked.topRows(n) = E.B.r_plus().m;
  stacked.bottomRows(n) = E.B.r_minus().m;
  const LinearMap p_restricted{E.B.dual_space(), gg_space(E.B), stacked};
  rep.add("Ker(xi -> (r+ xi, r- xi)) = W", kernel(p_restricted) == compute_W(E.B));
  rep.add("pbar surjects onto b", qlb::image(p_restricted) == b_via_theta(E.B));
  return rep;
}

SubalgebraTriple decompose_subalgebra(const ExtensionAlgebra& ext,
                                      const SubspaceBasis& k) {
  require_same_space(k.ambient, ext.total.space(), "decompose_subalgebra");
  const Index H = ext.h.dim();
  const Index V = ext.v.dim;
  for (Index i = 0; i < k.dim(); ++i)
    for (Index j = 0; j < k.dim(); ++j) {
      const Vec br = bracket(ext.total, Vec{k.ambient, k.rows.row(i).transpose()},
                             Vec{k.ambient, k.rows.row(j).transpose()});
      if (!contains(k, br))
        throw ConstructionError("decompose_subalgebra: k is not a subalgebra (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    }

  SubalgebraTriple t;
  t.b = rref(ext.h.space(), k.rows.leftCols(H).eval());

  Mat v_rows = Mat::Zero(V, H + V);
  v_rows.rightCols(V) = Mat::Identity(V, V);
  const SubspaceBasis k_cap_v = intersect(k, rref(ext.total.space(), v_rows));
  Mat stripped(k_cap_v.dim(), V);
  for (Index i = 0; i < k_cap_v.dim(); ++i)
    stripped.row(i) = k_cap_v.rows.row(i).rightCols(V);
  t.W = rref(ext.v, stripped);
  t.sigma = quotient_chart(ext.v, t.W, ext.v.tag + "/W");

  // beta(x) = sigma(v) for the (unique modulo W) v with (x, v) in k.
  const Mat h_parts = k.rows.leftCols(H).transpose();
  for (Index i = 0; i < t.b.dim(); ++i) {
    auto coeff = solve(h_parts, t.b.rows.row(i).transpose());
    if (!coeff)
      throw InternalInconsistencyError(
          "decompose_subalgebra: b basis vector has no preimage in k");
    const ColVec v = k.rows.rightCols(V).transpose() * *coeff;
    t.beta.push_back(project(t.sigma, Vec{ext.v, v}));
  }
  return t;
}

}  // namespace qlb
