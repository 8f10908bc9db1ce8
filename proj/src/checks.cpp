#include "qlb/checks.hpp"

namespace qlb {

namespace {

std::string pair_str(Index i, Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Report bialgebra_invariants(const QuasitriangularBialgebra& B) {
  Report rep;
  rep.subject = "bialgebra invariants of " + B.g().name;
  const Index n = B.g().dim();
  const LieAlgebra& g = B.g();

  bool omega_inv = true;
  for (Index a = 0; a < n && omega_inv; ++a) {
    const Mat A = ad(g, basis_vec(B.space(), a)).m;
    if (!mat_is_zero((A * B.omega().m + B.omega().m * A.transpose()).eval()))
      omega_inv = false;
  }
  rep.add("omega is ad-invariant", omega_inv);

  bool f_ideal = true;
  for (Index a = 0; a < n && f_ideal; ++a)
    for (Index j = 0; j < B.f().dim() && f_ideal; ++j) {
      const Vec y{B.space(), B.f().rows.row(j).transpose()};
      if (!contains(B.f(), bracket(g, basis_vec(B.space(), a), y)))
        f_ideal = false;
    }
  rep.add("f is an ideal", f_ideal);

  // f from the components of omega (rows and columns) vs Im(r+ - r-).
  Mat comp(2 * n, n);
  comp.topRows(n) = B.omega().m;
  comp.bottomRows(n) = B.omega().m.transpose();
  rep.add("f = span(components of omega) = Im(r+ - r-)",
          rref(B.space(), comp) == B.f());

  // f_perp as the annihilator of f vs Ker(r+ - r-).
  const LinearMap f_pairing{B.dual_space(), Space{"pair", B.f().dim()},
                            B.f().rows};
  rep.add("f_perp = annihilator(f) = Ker(r+ - r-)",
          kernel(f_pairing) == B.f_perp());

  bool perp_pairs = true;
  for (Index i = 0; i < B.f_perp().dim() && perp_pairs; ++i)
    for (Index j = 0; j < B.f().dim() && perp_pairs; ++j) {
      Rational acc = 0;
      for (Index l = 0; l < n; ++l)
        acc += B.f_perp().rows(i, l) * B.f().rows(j, l);
      if (acc != 0) perp_pairs = false;
    }
  rep.add("<f_perp, f> = 0", perp_pairs);

  const LieAlgebra& dual = B.dual_algebra();
  rep.add("dual bracket satisfies the Lie axioms (co-Jacobi)",
          validate(dual).ok());

  bool rp_hom = true, rm_hom = true;
  std::string witness;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec xi = basis_vec(B.dual_space(), i);
      const Vec eta = basis_vec(B.dual_space(), j);
      const Vec dual_br = bracket(dual, xi, eta);
      const Vec lhs_p = make_vec(B.space(), B.r_plus().m * dual_br.coords);
      const Vec rhs_p = bracket(g, apply(B.r_plus(), xi), apply(B.r_plus(), eta));
      if (!(lhs_p == rhs_p)) {
        rp_hom = false;
        witness = pair_str(i, j);
      }
      const Vec lhs_m = make_vec(B.space(), B.r_minus().m * dual_br.coords);
      const Vec rhs_m =
          bracket(g, apply(B.r_minus(), xi), apply(B.r_minus(), eta));
      if (!(lhs_m == rhs_m)) rm_hom = false;
    }
  rep.add("r+ is a homomorphism g* -> g", rp_hom, witness);
  rep.add("r- is a homomorphism g* -> g", rm_hom);

  bool db_antisym = true;
  for (Index k = 0; k < n && db_antisym; ++k) {
    const Mat d = cobracket(B, basis_vec(B.space(), k)).m;
    if (!mat_is_zero((d + d.transpose()).eval())) db_antisym = false;
  }
  rep.add("cobracket lands in Lambda^2 g", db_antisym);

  // delta([x,y]) = (ad_x (x) id + id (x) ad_x) delta(y) - (x <-> y).
  bool one_cocycle = true;
  for (Index a = 0; a < n && one_cocycle; ++a)
    for (Index b = 0; b < n && one_cocycle; ++b) {
      const Vec xa = basis_vec(B.space(), a);
      const Vec xb = basis_vec(B.space(), b);
      const Mat lhs = cobracket(B, bracket(g, xa, xb)).m;
      const Mat Aa = ad(g, xa).m;
      const Mat Ab = ad(g, xb).m;
      const Mat da = cobracket(B, xa).m;
      const Mat db = cobracket(B, xb).m;
      const Mat rhs =
          Aa * db + db * Aa.transpose() - (Ab * da + da * Ab.transpose());
      if (!mat_equal(lhs, rhs)) one_cocycle = false;
    }
  rep.add("cobracket is a 1-cocycle", one_cocycle);
  return rep;
}

Report lemma_suite(const QuasitriangularBialgebra& B, const DirectDouble& D) {
  Report rep;
  rep.subject = "lemma suite for " + B.g().name;
  const Index n = B.g().dim();
  const LieAlgebra& g = B.g();
  const LieAlgebra& dual = B.dual_algebra();

  // Two contraction formulas for ad*_xi: -(xi (x) id) delta(x) vs
  // (id (x) xi) delta(x).
  bool coadj = true;
  for (Index i = 0; i < n && coadj; ++i) {
    const Vec xi = basis_vec(B.dual_space(), i);
    const LinearMap first = dual_coadjoint(B, xi);
    Mat second(n, n);
    for (Index j = 0; j < n; ++j) {
      const Mat d = cobracket(B, basis_vec(B.space(), j)).m;
      second.col(j) = d * xi.coords;
    }
    if (!mat_equal(first.m, second)) coadj = false;
  }
  rep.add("coadjoint contraction formulas agree", coadj);

  // Mutual commutation of Ker p+ and Ker p-: [(id - r+)xi1, (id - r-)xi2] = 0.
  bool commute = true;
  for (Index i = 0; i < n && commute; ++i)
    for (Index j = 0; j < n && commute; ++j) {
      const Vec xi1 = basis_vec(B.dual_space(), i);
      const Vec xi2 = basis_vec(B.dual_space(), j);
      const Vec d1 = embed_gstar(B, xi1) -
                     embed_g(B, apply(B.r_plus(), xi1));
      const Vec d2 = embed_gstar(B, xi2) -
                     embed_g(B, apply(B.r_minus(), xi2));
      if (!is_zero(bracket(D.d, d1, d2))) commute = false;
    }
  rep.add("Ker p+ and Ker p- mutually commute", commute);

  // The vanishing dual expression:
  // [xi1,xi2] - ad*_{r+(xi1)}(xi2) + ad*_{r-(xi2)}(xi1) = 0.
  bool vanish = true;
  for (Index i = 0; i < n && vanish; ++i)
    for (Index j = 0; j < n && vanish; ++j) {
      const Vec xi1 = basis_vec(B.dual_space(), i);
      const Vec xi2 = basis_vec(B.dual_space(), j);
      const Vec expr =
          bracket(dual, xi1, xi2) -
          apply(ad_star(g, apply(B.r_plus(), xi1)), xi2) +
          apply(ad_star(g, apply(B.r_minus(), xi2)), xi1);
      if (!is_zero(expr)) vanish = false;
    }
  rep.add("dual expression for the commutator vanishes", vanish);

  // id - r+- are g-module maps: [x, (id - r+-)xi] = (id - r+-)(ad*_x xi).
  bool module_map = true;
  for (Index a = 0; a < n && module_map; ++a)
    for (Index i = 0; i < n && module_map; ++i) {
      const Vec x = basis_vec(B.space(), a);
      const Vec xi = basis_vec(B.dual_space(), i);
      const Vec coad = apply(ad_star(g, x), xi);
      for (const LinearMap& r : {B.r_plus(), B.r_minus()}) {
        const Vec lhs = bracket(
            D.d, embed_g(B, x),
            embed_gstar(B, xi) - embed_g(B, apply(r, xi)));
        const Vec rhs = embed_gstar(B, coad) - embed_g(B, apply(r, coad));
        if (!(lhs == rhs)) module_map = false;
      }
    }
  rep.add("id - r+- are g-module homomorphisms", module_map);

  // p+- are Lie algebra homomorphisms on the whole double.
  bool p_hom = true;
  const LinearMap pp = p_plus_map(B);
  const LinearMap pm = p_minus_map(B);
  for (Index i = 0; i < 2 * n && p_hom; ++i)
    for (Index j = 0; j < 2 * n && p_hom; ++j) {
      const Vec a = basis_vec(D.space(), i);
      const Vec b = basis_vec(D.space(), j);
      const Vec br = bracket(D.d, a, b);
      if (!(apply(pp, br) == bracket(g, apply(pp, a), apply(pp, b)))) p_hom = false;
      if (!(apply(pm, br) == bracket(g, apply(pm, a), apply(pm, b)))) p_hom = false;
    }
  rep.add("p+- are homomorphisms", p_hom);

  rep.merge(exactness_report(B));
  return rep;
}

Report cocycle_suite(const DoubleExtension& E, const DirectDouble& D) {
  Report rep;
  rep.subject = "cocycle suite for " + E.B.g().name;
  const Index H = E.a.dim();
  const Index n = E.B.g().dim();

  bool antisym = true;
  for (Index p = 0; p < H && antisym; ++p)
    for (Index q = 0; q < H && antisym; ++q)
      if (!(E.alpha_gstar[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] ==
            Rational(-1) * E.alpha_gstar[static_cast<std::size_t>(q)]
                                        [static_cast<std::size_t>(p)]))
        antisym = false;
  rep.add("alpha antisymmetric", antisym);

  bool in_fperp = true;
  for (Index p = 0; p < H && in_fperp; ++p)
    for (Index q = 0; q < H && in_fperp; ++q) {
      const Vec& val =
          E.alpha_gstar[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      for (Index j = 0; j < E.B.f().dim() && in_fperp; ++j) {
        Rational acc = 0;
        for (Index l = 0; l < n; ++l)
          acc += val.coords(l) * E.B.f().rows(j, l);
        if (acc != 0) in_fperp = false;
      }
    }
  rep.add("alpha values annihilate f", in_fperp);

  // 2-cocycle identity via the chart table and action matrices.
  bool cocycle = true;
  std::string witness;
  for (Index i = 0; i < H && cocycle; ++i)
    for (Index j = 0; j < H && cocycle; ++j)
      for (Index k = 0; k < H && cocycle; ++k) {
        ColVec acc = ColVec::Zero(E.fperp_space.dim);
        const Index tri[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : tri) {
          for (Index m = 0; m < H; ++m)
            if (E.a.c(t[0], t[1], m) != 0)
              acc += E.a.c(t[0], t[1], m) * E.ext.alpha[m][t[2]];
          acc -= E.ext.action[t[0]] * E.ext.alpha[t[1]][t[2]];
        }
        if (!mat_is_zero(acc)) {
          cocycle = false;
          witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")";
        }
      }
  rep.add("alpha is a 2-cocycle", cocycle, witness);

  // alpha equals the commutator defect of the splitting S in the oracle:
  // [S(h1), S(h2)] - S([h1,h2]) = i(alpha(h1,h2)), i = (id - r+)|_{f_perp}.
  bool defect = true;
  for (Index p = 0; p < H && defect; ++p)
    for (Index q = 0; q < H && defect; ++q) {
      const auto [x1, y1] = E.a_to_gf(basis_vec(E.a.space(), p));
      const auto [x2, y2] = E.a_to_gf(basis_vec(E.a.space(), q));
      const Vec s1 = splitting_S(E, x1, y1);
      const Vec s2 = splitting_S(E, x2, y2);
      const Vec br_d = bracket(D.d, s1, s2);
      const Vec br_a = bracket(E.a, basis_vec(E.a.space(), p),
                               basis_vec(E.a.space(), q));
      const auto [bx, by] = E.a_to_gf(br_a);
      const Vec s_br = splitting_S(E, bx, by);
      const Vec& alpha_val =
          E.alpha_gstar[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const Vec i_alpha = embed_gstar(E.B, alpha_val) -
                          embed_g(E.B, apply(E.B.r_plus(), alpha_val));
      if (!(br_d - s_br == i_alpha)) defect = false;
    }
  rep.add("alpha = commutator defect of S in the double", defect);

  // Induced action: i^{-1}([S(x,y), i(eta)]) = ad*_x(eta).
  bool induced = true;
  for (Index p = 0; p < H && induced; ++p)
    for (Index l = 0; l < E.B.f_perp().dim() && induced; ++l) {
      const auto [x, y] = E.a_to_gf(basis_vec(E.a.space(), p));
      const Vec eta{E.B.dual_space(), E.B.f_perp().rows.row(l).transpose()};
      const Vec i_eta = embed_gstar(E.B, eta) -
                        embed_g(E.B, apply(E.B.r_plus(), eta));
      const Vec br = bracket(D.d, splitting_S(E, x, y), i_eta);
      const Vec coad = apply(ad_star(E.B.g(), x), eta);
      const Vec expect = embed_gstar(E.B, coad) -
                         embed_g(E.B, apply(E.B.r_plus(), coad));
      if (!(br == expect)) induced = false;
    }
  rep.add("induced action is (x,y).eta = ad*_x(eta)", induced);

  rep.merge(triple_invariants(E.ext, gstar_triple(E)));
  return rep;
}

Report iso_suite(const DoubleExtension& E, const DirectDouble& D) {
  Report rep;
  rep.subject = "isomorphism suite for " + E.B.g().name;
  const Index N = 2 * E.B.g().dim();

  bool round_trip = true;
  for (Index i = 0; i < N && round_trip; ++i) {
    const Vec d = basis_vec(D.space(), i);
    if (!(iso_extension_to_direct(E, iso_direct_to_extension(E, d)) == d))
      round_trip = false;
    const Vec t = basis_vec(E.ext.total.space(), i);
    if (!(iso_direct_to_extension(E, iso_extension_to_direct(E, t)) == t))
      round_trip = false;
  }
  rep.add("iso and iso^-1 are mutually inverse", round_trip);

  bool pushforward = true;
  std::string witness;
  for (Index i = 0; i < N && pushforward; ++i)
    for (Index j = 0; j < N && pushforward; ++j) {
      const Vec a = basis_vec(D.space(), i);
      const Vec b = basis_vec(D.space(), j);
      const Vec lhs = iso_direct_to_extension(E, bracket(D.d, a, b));
      const Vec rhs = bracket(E.ext.total, iso_direct_to_extension(E, a),
                              iso_direct_to_extension(E, b));
      if (!(lhs == rhs)) {
        pushforward = false;
        witness = pair_str(i, j);
      }
    }
  rep.add("bracket pushforward agrees on all basis pairs", pushforward, witness);

  bool g_embed = true;
  for (Index i = 0; i < E.B.g().dim() && g_embed; ++i) {
    const Vec x = basis_vec(E.B.space(), i);
    const Vec expect =
        E.ext.include_h(E.gf_to_a(x, zero_vec(E.B.space())));
    if (!(iso_direct_to_extension(E, embed_g(E.B, x)) == expect)) g_embed = false;
  }
  rep.add("g embeds as x -> (x,0) x| 0", g_embed);

  // p o S = id on g x| f.
  bool section_splits = true;
  for (Index p = 0; p < E.a.dim() && section_splits; ++p) {
    const auto [x, y] = E.a_to_gf(basis_vec(E.a.space(), p));
    const auto [px, py] = p_combined(E.B, splitting_S(E, x, y));
    if (!(px == x && py == y)) section_splits = false;
  }
  rep.add("p o S = id", section_splits);

  bool form_match = true;
  for (Index i = 0; i < N && form_match; ++i)
    for (Index j = 0; j < N && form_match; ++j) {
      const Vec t1 = basis_vec(E.ext.total.space(), i);
      const Vec t2 = basis_vec(E.ext.total.space(), j);
      const Rational lhs = transferred_form(E, t1, t2);
      if (lhs != canonical_form(D, iso_extension_to_direct(E, t1),
                                iso_extension_to_direct(E, t2)))
        form_match = false;
      if (lhs != transferred_form(E, t2, t1)) form_match = false;
    }
  rep.add("transferred form = canonical form (and symmetric)", form_match);
  return rep;
}

Report embedding_suite(const DoubleExtension& E) {
  Report rep;
  rep.subject = "embedding suite for " + E.B.g().name;
  rep.merge(verify_gstar_image(E));

  // decompose o build = id on the g* triple, and build o decompose = id on
  // the image subalgebra and on V.
  const SubalgebraTriple t = gstar_triple(E);
  const SubspaceBasis image = gstar_image(E);
  const SubalgebraTriple back = decompose_subalgebra(E.ext, image);
  bool round = back.b == t.b && back.W == t.W &&
               back.beta.size() == t.beta.size();
  for (std::size_t i = 0; round && i < t.beta.size(); ++i)
    if (!(back.beta[i] == t.beta[i])) round = false;
  rep.add("decompose(image of g*) returns its triple", round);
  rep.add("rebuild reproduces the image",
          build_b_beta_W(E.ext, back) == image);

  // k = V decomposes to (0, V, 0).
  Mat v_rows = Mat::Zero(E.fperp_space.dim, E.ext.total.dim());
  for (Index j = 0; j < E.fperp_space.dim; ++j)
    v_rows(j, E.a.dim() + j) = 1;
  const SubspaceBasis v_sub = rref(E.ext.total.space(), v_rows);
  const SubalgebraTriple tv = decompose_subalgebra(E.ext, v_sub);
  rep.add("V decomposes to (0, V, 0)",
          tv.b.dim() == 0 && tv.W.dim() == E.fperp_space.dim &&
              build_b_beta_W(E.ext, tv) == v_sub);
  return rep;
}

Report special_suite(const QuasitriangularBialgebra& B) {
  switch (classify(B)) {
    case BialgebraClass::Factorizable:
      return verify_factorizable(B);
    case BialgebraClass::Triangular: {
      Report rep = verify_triangular(B);
      rep.merge(manin_triple_jjstar(B));
      return rep;
    }
    default: {
      Report rep;
      rep.subject = "special cases";
      rep.add("general class: no corollary applies", true);
      return rep;
    }
  }
}

Report full_check(const LieAlgebra& g, const Tensor2& r) {
  Report rep;
  rep.subject = g.name;

  const ValidationReport lie_rep = validate(g);
  rep.add("Lie axioms (antisymmetry + Jacobi)", lie_rep.ok(), lie_rep.summary());
  if (!lie_rep.ok()) return rep;

  const Tensor3 cybe = cybe_tensor(g, r);
  if (!cybe.is_zero()) {
    const auto w = cybe.first_nonzero();
    rep.add("Yang-Baxter equation", false,
            "nonzero entry (" + std::to_string(w[0]) + "," +
                std::to_string(w[1]) + "," + std::to_string(w[2]) + ") = " +
                to_string(cybe(w[0], w[1], w[2])));
    return rep;
  }
  rep.add("Yang-Baxter equation", true);

  {
    const Mat omega = r.m + r.m.transpose();
    for (Index a = 0; a < g.dim(); ++a) {
      const Mat adm = ad(g, basis_vec(g.space(), a)).m;
      if (!mat_is_zero((adm * omega + omega * adm.transpose()).eval())) {
        rep.add("symmetric part of r is ad-invariant", false,
                "fails at basis index " + std::to_string(a));
        return rep;
      }
    }
  }
  rep.add("symmetric part of r is ad-invariant", true);

  const QuasitriangularBialgebra B = QuasitriangularBialgebra::create(g, r);
  rep.add("classification", true, to_string(classify(B)));
  rep.merge(bialgebra_invariants(B));

  const DirectDouble D = build_direct_double(B);
  rep.add("direct double satisfies the Lie axioms", validate(D.d).ok());
  rep.merge(verify_manin_triple(D));
  rep.merge(lemma_suite(B, D));

  const DoubleExtension E = build_double_as_extension(B);
  rep.add("extension model satisfies the Lie axioms", validate(E.ext.total).ok());
  rep.merge(cocycle_suite(E, D));
  rep.merge(iso_suite(E, D));
  rep.merge(embedding_suite(E));
  rep.merge(special_suite(B));
  return rep;
}

}  // namespace qlb
