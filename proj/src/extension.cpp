#include "qlb/extension.hpp"

namespace qlb {

//------------------------------------------------------------------------
// Generic extension h x|_alpha V
//------------------------------------------------------------------------

Vec ExtensionAlgebra::include_h(const Vec& x) const {
  require_same_space(x.ambient, h.space(), "include_h");
  Vec t = zero_vec(total.space());
  t.coords.head(h.dim()) = x.coords;
  return t;
}

Vec ExtensionAlgebra::include_v(const Vec& x) const {
  require_same_space(x.ambient, v, "include_v");
  Vec t = zero_vec(total.space());
  t.coords.tail(v.dim) = x.coords;
  return t;
}

Vec ExtensionAlgebra::project_h(const Vec& t) const {
  require_same_space(t.ambient, total.space(), "project_h");
  return Vec{h.space(), t.coords.head(h.dim())};
}

Vec ExtensionAlgebra::project_v(const Vec& t) const {
  require_same_space(t.ambient, total.space(), "project_v");
  return Vec{v, t.coords.tail(v.dim)};
}

Vec ExtensionAlgebra::assemble(const Vec& xh, const Vec& xv) const {
  return include_h(xh) + include_v(xv);
}

ExtensionAlgebra build_extension(const LieAlgebra& h, const Space& v,
                                 std::vector<Mat> action,
                                 std::vector<std::vector<ColVec>> alpha,
                                 const std::string& total_name) {
  const Index H = h.dim();
  const Index V = v.dim;
  if (static_cast<Index>(action.size()) != H)
    throw ConstructionError("build_extension: need one action matrix per basis "
                            "vector of '" + h.name + "'");
  for (const Mat& m : action)
    if (m.rows() != V || m.cols() != V)
      throw ConstructionError("build_extension: action matrix shape mismatch");
  if (static_cast<Index>(alpha.size()) != H)
    throw ConstructionError("build_extension: alpha table must be dim(h) x dim(h)");
  for (const auto& row : alpha) {
    if (static_cast<Index>(row.size()) != H)
      throw ConstructionError("build_extension: alpha table must be dim(h) x dim(h)");
    for (const ColVec& val : row)
      if (val.size() != V)
        throw ConstructionError("build_extension: alpha value has wrong length");
  }

  // rho([h_i,h_j]) = [rho_i, rho_j]
  for (Index i = 0; i < H; ++i)
    for (Index j = 0; j < H; ++j) {
      Mat lhs = Mat::Zero(V, V);
      for (Index k = 0; k < H; ++k)
        if (h.c(i, j, k) != 0) lhs += h.c(i, j, k) * action[k];
      const Mat rhs = action[i] * action[j] - action[j] * action[i];
      if (!mat_equal(lhs, rhs))
        throw ConstructionError("build_extension: action is not a representation"
                                " at basis pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }

  for (Index i = 0; i < H; ++i)
    for (Index j = 0; j < H; ++j)
      if (!mat_equal(alpha[i][j], (-alpha[j][i]).eval()))
        throw ConstructionError("build_extension: alpha not antisymmetric at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");

  // sum_cyc [ alpha([h_i,h_j], h_k) - h_i . alpha(h_j,h_k) ] = 0
  for (Index i = 0; i < H; ++i)
    for (Index j = 0; j < H; ++j)
      for (Index k = 0; k < H; ++k) {
        ColVec acc = ColVec::Zero(V);
        const Index tri[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : tri) {
          for (Index m = 0; m < H; ++m)
            if (h.c(t[0], t[1], m) != 0)
              acc += h.c(t[0], t[1], m) * alpha[m][t[2]];
          acc -= action[t[0]] * alpha[t[1]][t[2]];
        }
        if (!mat_is_zero(acc))
          throw ConstructionError("build_extension: alpha is not a 2-cocycle at"
                                  " basis triple (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) +
                                  ")");
      }

  std::vector<std::string> names = h.basis_names;
  for (Index b = 0; b < V; ++b)
    names.push_back(v.tag + "[" + std::to_string(b) + "]");
  LieAlgebra total = make_algebra(total_name, std::move(names));
  for (Index i = 0; i < H; ++i)
    for (Index j = 0; j < H; ++j) {
      for (Index k = 0; k < H; ++k) total.c(i, j, k) = h.c(i, j, k);
      for (Index b = 0; b < V; ++b) total.c(i, j, H + b) = alpha[i][j](b);
    }
  for (Index i = 0; i < H; ++i)
    for (Index b = 0; b < V; ++b)
      for (Index k = 0; k < V; ++k) {
        total.c(i, H + b, H + k) = action[i](k, b);
        total.c(H + b, i, H + k) = -action[i](k, b);
      }

  const ValidationReport rep = validate(total);
  if (!rep.ok())
    throw ConstructionError("build_extension: assembled algebra fails the Lie "
                            "axioms: " + rep.summary());
  return ExtensionAlgebra{h, v, std::move(action), std::move(alpha),
                          std::move(total)};
}

//------------------------------------------------------------------------
// p maps and exactness
//------------------------------------------------------------------------

LinearMap p_plus_map(const QuasitriangularBialgebra& B) {
  const Index n = B.g().dim();
  Mat m(n, 2 * n);
  m.leftCols(n) = Mat::Identity(n, n);
  m.rightCols(n) = B.r_plus().m;
  return LinearMap{double_space(B), B.space(), std::move(m)};
}

LinearMap p_minus_map(const QuasitriangularBialgebra& B) {
  const Index n = B.g().dim();
  Mat m(n, 2 * n);
  m.leftCols(n) = Mat::Identity(n, n);
  m.rightCols(n) = B.r_minus().m;
  return LinearMap{double_space(B), B.space(), std::move(m)};
}

Vec p_plus(const QuasitriangularBialgebra& B, const Vec& d) {
  return apply(p_plus_map(B), d);
}

Vec p_minus(const QuasitriangularBialgebra& B, const Vec& d) {
  return apply(p_minus_map(B), d);
}

Space gg_space(const QuasitriangularBialgebra& B) {
  return Space{B.g().name + "^2", 2 * B.g().dim()};
}

LinearMap p_map(const QuasitriangularBialgebra& B) {
  const Index n = B.g().dim();
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = Mat::Identity(n, n);
  m.topRightCorner(n, n) = B.r_plus().m;
  m.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  m.bottomRightCorner(n, n) = B.r_minus().m;
  return LinearMap{double_space(B), gg_space(B), std::move(m)};
}

std::pair<Vec, Vec> p_combined(const QuasitriangularBialgebra& B, const Vec& d) {
  auto [x, xi] = split_double(B, d);
  const Vec first = make_vec(B.space(), x.coords + B.r_plus().m * xi.coords);
  const Vec second = make_vec(B.space(), -(B.r_diff().m * xi.coords));
  if (!contains(B.f(), second))
    throw InternalInconsistencyError(
        "p_combined: -(r+ - r-)xi escaped span(f); Im(r+ - r-) = f is broken");
  return {first, second};
}

namespace {

// (id - r+-) g* and (id - r+) f_perp as subspaces of D: rows (-(r)xi, xi).
SubspaceBasis one_minus_r_span(const QuasitriangularBialgebra& B,
                               const LinearMap& r, const Mat& dual_rows) {
  const Index n = B.g().dim();
  Mat rows(dual_rows.rows(), 2 * n);
  for (Index i = 0; i < dual_rows.rows(); ++i) {
    const ColVec xi = dual_rows.row(i).transpose();
    rows.row(i).head(n) = (-(r.m * xi)).transpose();
    rows.row(i).tail(n) = xi.transpose();
  }
  return rref(double_space(B), rows);
}

}  // namespace

Report exactness_report(const QuasitriangularBialgebra& B) {
  Report rep;
  rep.subject = "exactness: 0 -> f_perp -> D -> g x| f -> 0 (" + B.g().name + ")";
  const Index n = B.g().dim();
  const Space dsp = double_space(B);

  // i = (id - r+)|_{f_perp} as a map from the f_perp chart into D.
  const SubspaceBasis& fperp = B.f_perp();
  Mat im(fperp.dim(), 2 * n);
  for (Index i = 0; i < fperp.dim(); ++i) {
    const ColVec eta = fperp.rows.row(i).transpose();
    im.row(i).head(n) = (-(B.r_plus().m * eta)).transpose();
    im.row(i).tail(n) = eta.transpose();
  }
  const LinearMap i_map{Space{"fp(" + B.g().name + ")", fperp.dim()}, dsp,
                        im.transpose()};

  rep.add("i injective", kernel(i_map).dim() == 0);

  const LinearMap p = p_map(B);
  const SubspaceBasis ker_p = kernel(p);
  const SubspaceBasis im_i = image(i_map);
  rep.add("image(i) = kernel(p)", im_i == ker_p,
          "dims " + std::to_string(im_i.dim()) + " / " +
              std::to_string(ker_p.dim()));

  // Image of p is the algebra a = {(x1,x2) : x2 - x1 in f}.
  const SubspaceBasis& f = B.f();
  Mat a_rows(n + f.dim(), 2 * n);
  a_rows.setZero();
  for (Index i = 0; i < n; ++i) {
    a_rows(i, i) = 1;
    a_rows(i, n + i) = 1;
  }
  for (Index j = 0; j < f.dim(); ++j)
    a_rows.row(n + j).tail(n) = f.rows.row(j);
  rep.add("image(p) = a", image(p) == rref(gg_space(B), a_rows));

  rep.add("Ker p+ = (id - r+) g*",
          kernel(p_plus_map(B)) ==
              one_minus_r_span(B, B.r_plus(), Mat::Identity(n, n)));
  rep.add("Ker p- = (id - r-) g*",
          kernel(p_minus_map(B)) ==
              one_minus_r_span(B, B.r_minus(), Mat::Identity(n, n)));
  rep.add("Ker p = (id - r+) f_perp",
          ker_p == one_minus_r_span(B, B.r_plus(), fperp.rows));

  rep.add("dim D = dim a + dim f_perp",
          2 * n == (n + f.dim()) + fperp.dim());
  return rep;
}

LinearMap choose_section(const QuasitriangularBialgebra& B) {
  return solve_right_inverse(B.r_diff(), B.f(), "f(" + B.g().name + ")");
}

namespace {

Vec section_impl(const QuasitriangularBialgebra& B, const LinearMap& s,
                 const Vec& y_in_g) {
  return apply(s, Vec{s.domain, coords_in(B.f(), y_in_g.coords)});
}

Vec alpha_impl(const QuasitriangularBialgebra& B, const LinearMap& s,
               const Vec& x1, const Vec& y1, const Vec& x2, const Vec& y2) {
  const LieAlgebra& g = B.g();
  if (!contains(B.f(), y1) || !contains(B.f(), y2))
    throw DomainError("alpha: second components must lie in span(f)");
  const Vec s_y1 = section_impl(B, s, y1);
  const Vec s_y2 = section_impl(B, s, y2);
  const Vec bracket_part =
      bracket(g, x1, y2) - bracket(g, x2, y1) + bracket(g, y1, y2);
  const Vec value = make_vec(
      g.dual_space(),
      (-(ad_star(g, x1).m * s_y2.coords) + ad_star(g, x2).m * s_y1.coords -
       ad_star(g, y1).m * s_y2.coords +
       section_impl(B, s, bracket_part).coords)
          .eval());
  if (!contains(B.f_perp(), value))
    throw InternalInconsistencyError("alpha: value escaped f_perp");
  return value;
}

}  // namespace

//------------------------------------------------------------------------
// DoubleExtension charts
//------------------------------------------------------------------------

Vec DoubleExtension::f_coords(const Vec& y_in_g) const {
  require_same_space(y_in_g.ambient, B.space(), "f_coords");
  return Vec{f_space, coords_in(B.f(), y_in_g.coords)};
}

Vec DoubleExtension::f_lift(const Vec& y_chart) const {
  require_same_space(y_chart.ambient, f_space, "f_lift");
  return Vec{B.space(), from_coords(B.f(), y_chart.coords)};
}

Vec DoubleExtension::fperp_coords(const Vec& eta) const {
  require_same_space(eta.ambient, B.dual_space(), "fperp_coords");
  return Vec{fperp_space, coords_in(B.f_perp(), eta.coords)};
}

Vec DoubleExtension::fperp_lift(const Vec& eta_chart) const {
  require_same_space(eta_chart.ambient, fperp_space, "fperp_lift");
  return Vec{B.dual_space(), from_coords(B.f_perp(), eta_chart.coords)};
}

std::pair<Vec, Vec> DoubleExtension::a_to_pair(const Vec& a_chart) const {
  auto [x, y] = a_to_gf(a_chart);
  return {x, x + y};
}

Vec DoubleExtension::pair_to_a(const Vec& x1, const Vec& x2) const {
  return gf_to_a(x1, x2 - x1);
}

std::pair<Vec, Vec> DoubleExtension::a_to_gf(const Vec& a_chart) const {
  require_same_space(a_chart.ambient, a.space(), "a_to_gf");
  const Index n = B.g().dim();
  const Vec x = make_vec(B.space(), a_chart.coords.head(n));
  const Vec y = f_lift(Vec{f_space, a_chart.coords.tail(B.f().dim())});
  return {x, y};
}

Vec DoubleExtension::gf_to_a(const Vec& x, const Vec& y) const {
  require_same_space(x.ambient, B.space(), "gf_to_a");
  const Vec yf = f_coords(y);  // DomainError if y escapes f
  Vec out = zero_vec(a.space());
  out.coords.head(B.g().dim()) = x.coords;
  out.coords.tail(B.f().dim()) = yf.coords;
  return out;
}

Vec DoubleExtension::section(const Vec& y_in_g) const {
  return apply(s, f_coords(y_in_g));
}

//------------------------------------------------------------------------
// Splitting, cocycle, construction
//------------------------------------------------------------------------

Vec splitting_S(const DoubleExtension& E, const Vec& x, const Vec& y) {
  require_same_space(x.ambient, E.B.space(), "splitting_S");
  if (!contains(E.B.f(), y))
    throw DomainError("splitting_S: y is not in span(f)");
  const Vec sy = E.section(y);
  const Vec g_part = x + apply(E.B.r_plus(), sy);
  Vec d = zero_vec(double_space(E.B));
  d.coords.head(x.coords.size()) = g_part.coords;
  d.coords.tail(sy.coords.size()) = -sy.coords;
  return d;
}

Vec alpha_cocycle(const DoubleExtension& E, const Vec& x1, const Vec& y1,
                  const Vec& x2, const Vec& y2) {
  return alpha_impl(E.B, E.s, x1, y1, x2, y2);
}

DoubleExtension build_double_as_extension(const QuasitriangularBialgebra& B) {
  const Index n = B.g().dim();
  const Index k = B.f().dim();
  const Index m = B.f_perp().dim();
  const Space f_space{"f(" + B.g().name + ")", k};
  const Space fperp_space{"fp(" + B.g().name + ")", m};
  const LinearMap s = choose_section(B);

  // The algebra a on the adapted basis {(e_i,e_i)} then {(0,y_j)}.
  std::vector<Vec> first, second;
  std::vector<std::string> names = B.g().basis_names;
  for (Index i = 0; i < n; ++i) {
    first.push_back(basis_vec(B.space(), i));
    second.push_back(basis_vec(B.space(), i));
  }
  for (Index j = 0; j < k; ++j) {
    first.push_back(zero_vec(B.space()));
    second.push_back(make_vec(B.space(), B.f().rows.row(j).transpose().eval()));
    names.push_back("f[" + std::to_string(j) + "]");
  }
  LieAlgebra a = make_algebra("a(" + B.g().name + ")", names);
  for (Index p = 0; p < n + k; ++p)
    for (Index q = 0; q < n + k; ++q) {
      const Vec b1 = bracket(B.g(), first[p], first[q]);
      const Vec b2 = bracket(B.g(), second[p], second[q]);
      // a-chart coordinates: (b1, f-coordinates of b2 - b1)
      const ColVec fc = coords_in(B.f(), (b2 - b1).coords);
      for (Index i = 0; i < n; ++i) a.c(p, q, i) = b1.coords(i);
      for (Index j = 0; j < k; ++j) a.c(p, q, n + j) = fc(j);
    }

  // Action of a on the f_perp chart: (x1,x2).eta = ad*_{x1}(eta).
  std::vector<Mat> action;
  for (Index p = 0; p < n + k; ++p) {
    const LinearMap coad = ad_star(B.g(), first[p]);
    Mat act(m, m);
    for (Index l = 0; l < m; ++l) {
      const ColVec eta = B.f_perp().rows.row(l).transpose();
      act.col(l) = coords_in(B.f_perp(), (coad.m * eta).eval());
    }
    action.push_back(std::move(act));
  }

  // Cocycle table, in g*-coordinates and in chart coordinates.
  std::vector<std::vector<Vec>> alpha_gstar(
      static_cast<std::size_t>(n + k),
      std::vector<Vec>(static_cast<std::size_t>(n + k),
                       zero_vec(B.dual_space())));
  std::vector<std::vector<ColVec>> alpha_chart(
      static_cast<std::size_t>(n + k),
      std::vector<ColVec>(static_cast<std::size_t>(n + k), ColVec::Zero(m)));
  for (Index p = 0; p < n + k; ++p)
    for (Index q = 0; q < n + k; ++q) {
      const Vec x1 = first[p], y1 = second[p] - first[p];
      const Vec x2 = first[q], y2 = second[q] - first[q];
      const Vec val = alpha_impl(B, s, x1, y1, x2, y2);
      alpha_gstar[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = val;
      alpha_chart[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          coords_in(B.f_perp(), val.coords);
    }

  ExtensionAlgebra ext = build_extension(a, fperp_space, std::move(action),
                                         std::move(alpha_chart),
                                         "ext(" + B.g().name + ")");
  return DoubleExtension{B,
                         s,
                         f_space,
                         fperp_space,
                         std::move(a),
                         std::move(ext),
                         std::move(alpha_gstar)};
}

//------------------------------------------------------------------------
// The isomorphism and the transported form
//------------------------------------------------------------------------

Vec iso_direct_to_extension(const DoubleExtension& E, const Vec& d) {
  auto [x, xi] = split_double(E.B, d);
  const Vec r_plus_xi = apply(E.B.r_plus(), xi);
  const Vec r_minus_xi = apply(E.B.r_minus(), xi);
  const Vec diff = make_vec(E.B.space(), E.B.r_diff().m * xi.coords);
  const Vec eta = xi - E.section(diff);
  const Vec a_chart = E.pair_to_a(x + r_plus_xi, x + r_minus_xi);
  return E.ext.assemble(a_chart, E.fperp_coords(eta));
}

Vec iso_extension_to_direct(const DoubleExtension& E, const Vec& t) {
  const Vec a_chart = E.ext.project_h(t);
  const Vec eta = E.fperp_lift(E.ext.project_v(t));
  auto [x1, x2] = E.a_to_pair(a_chart);
  const Vec xi = eta + E.section(x1 - x2);
  const Vec x = x1 - apply(E.B.r_plus(), xi);
  return embed_g(E.B, x) + embed_gstar(E.B, xi);
}

Rational transferred_form(const DoubleExtension& E, const Vec& t1,
                          const Vec& t2) {
  auto [x1, xi1] = split_double(E.B, iso_extension_to_direct(E, t1));
  auto [x2, xi2] = split_double(E.B, iso_extension_to_direct(E, t2));
  return pairing(xi1, x2) + pairing(xi2, x1);
}

}  // namespace qlb
