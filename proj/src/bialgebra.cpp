#include "qlb/bialgebra.hpp"

#include <utility>

namespace qlb {

Tensor3 cybe_tensor(const LieAlgebra& g, const Tensor2& r) {
  require_same_space(r.left, g.space(), "cybe_tensor");
  require_same_space(r.right, g.space(), "cybe_tensor");
  const Index n = g.dim();
  const Space s = g.space();
  Tensor3 t(s, s, s);
  // [r12,r13](k,b,d) = sum_{a,c} r(a,b) r(c,d) c(a,c,k)
  // [r12,r23](a,k,d) = sum_{b,c} r(a,b) r(c,d) c(b,c,k)
  // [r13,r23](a,c,k) = sum_{b,d} r(a,b) r(c,d) c(b,d,k)
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Rational& rab = r.m(a, b);
      if (rab == 0) continue;
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d) {
          const Rational& rcd = r.m(c, d);
          if (rcd == 0) continue;
          const Rational prod = rab * rcd;
          for (Index k = 0; k < n; ++k) {
            if (g.c(a, c, k) != 0) t(k, b, d) += prod * g.c(a, c, k);
            if (g.c(b, c, k) != 0) t(a, k, d) += prod * g.c(b, c, k);
            if (g.c(b, d, k) != 0) t(a, c, k) += prod * g.c(b, d, k);
          }
        }
    }
  return t;
}

CybeViolationError::CybeViolationError(Index i_, Index j_, Index k_,
                                       const Rational& value_)
    : Error("Yang-Baxter equation fails: entry (" + std::to_string(i_) + "," +
            std::to_string(j_) + "," + std::to_string(k_) + ") = " +
            to_string(value_)),
      i(i_), j(j_), k(k_), value(value_) {}

const char* to_string(BialgebraClass c) {
  switch (c) {
    case BialgebraClass::Triangular: return "triangular";
    case BialgebraClass::Factorizable: return "factorizable";
    default: return "general";
  }
}

namespace {

// c*(i,j,k) = delta(e_k)(i,j); delta computed directly from ad matrices.
LieAlgebra build_dual_algebra(const LieAlgebra& g, const Tensor2& r) {
  std::vector<std::string> names;
  names.reserve(g.basis_names.size());
  for (const auto& b : g.basis_names) names.push_back(b + "*");
  LieAlgebra dual = make_algebra(g.name + "*", std::move(names));
  const Index n = g.dim();
  for (Index k = 0; k < n; ++k) {
    const LinearMap adk = ad(g, basis_vec(g.space(), k));
    const Mat delta = adk.m * r.m + r.m * adk.m.transpose();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) dual.c(i, j, k) = delta(i, j);
  }
  return dual;
}

}  // namespace

QuasitriangularBialgebra QuasitriangularBialgebra::create(LieAlgebra g,
                                                          Tensor2 r) {
  require_same_space(r.left, g.space(), "QuasitriangularBialgebra");
  require_same_space(r.right, g.space(), "QuasitriangularBialgebra");
  const ValidationReport rep = validate(g);
  if (!rep.ok())
    throw ConstructionError("'" + g.name + "' is not a Lie algebra: " +
                            rep.summary());
  const Tensor3 cybe = cybe_tensor(g, r);
  if (!cybe.is_zero()) {
    const auto w = cybe.first_nonzero();
    throw CybeViolationError(w[0], w[1], w[2], cybe(w[0], w[1], w[2]));
  }
  // The Yang-Baxter equation alone does not make r quasitriangular: the
  // symmetric part must be invariant, or delta(x) = (ad_x (x) id +
  // id (x) ad_x) r is not skew and defines no cobracket.
  {
    const Mat omega = r.m + r.m.transpose();
    for (Index a = 0; a < g.dim(); ++a) {
      const Mat adm = ad(g, basis_vec(g.space(), a)).m;
      if (!mat_is_zero((adm * omega + omega * adm.transpose()).eval()))
        throw ConstructionError(
            "the symmetric part of r is not ad-invariant (basis index " +
            std::to_string(a) + "); delta would not land in Lambda^2 g");
    }
  }

  QuasitriangularBialgebra B;
  B.g_ = std::move(g);
  B.r_ = std::move(r);
  const Space gs = B.g_.space();
  const Space gd = B.g_.dual_space();
  B.r_plus_ = LinearMap{gd, gs, B.r_.m.transpose()};
  B.r_minus_ = LinearMap{gd, gs, -B.r_.m};
  B.omega_ = Tensor2{gs, gs, B.r_.m + B.r_.m.transpose()};
  B.f_ = image(B.r_diff());
  B.f_perp_ = kernel(B.r_diff());
  B.dual_ = build_dual_algebra(B.g_, B.r_);
  return B;
}

Tensor2 cobracket(const QuasitriangularBialgebra& B, const Vec& x) {
  require_same_space(x.ambient, B.space(), "cobracket");
  const LinearMap adx = ad(B.g(), x);
  return Tensor2{B.space(), B.space(),
                 adx.m * B.r().m + B.r().m * adx.m.transpose()};
}

LinearMap dual_coadjoint(const QuasitriangularBialgebra& B, const Vec& xi) {
  require_same_space(xi.ambient, B.dual_space(), "dual_coadjoint");
  const Index n = B.g().dim();
  Mat m(n, n);
  for (Index j = 0; j < n; ++j) {
    const Tensor2 d = cobracket(B, basis_vec(B.space(), j));
    // ad*_xi(e_j) = -(xi (x) id) delta(e_j) = -delta(e_j)^T xi
    m.col(j) = -(d.m.transpose() * xi.coords);
  }
  return LinearMap{B.space(), B.space(), std::move(m)};
}

BialgebraClass classify(const QuasitriangularBialgebra& B) {
  if (is_zero(B.omega())) return BialgebraClass::Triangular;
  if (rank(B.omega().m) == B.g().dim()) return BialgebraClass::Factorizable;
  return BialgebraClass::General;
}

Space double_space(const QuasitriangularBialgebra& B) {
  return Space{"D(" + B.g().name + ")", 2 * B.g().dim()};
}

Vec embed_g(const QuasitriangularBialgebra& B, const Vec& x) {
  require_same_space(x.ambient, B.space(), "embed_g");
  Vec d = zero_vec(double_space(B));
  d.coords.head(B.g().dim()) = x.coords;
  return d;
}

Vec embed_gstar(const QuasitriangularBialgebra& B, const Vec& xi) {
  require_same_space(xi.ambient, B.dual_space(), "embed_gstar");
  Vec d = zero_vec(double_space(B));
  d.coords.tail(B.g().dim()) = xi.coords;
  return d;
}

std::pair<Vec, Vec> split_double(const QuasitriangularBialgebra& B,
                                 const Vec& d) {
  require_same_space(d.ambient, double_space(B), "split_double");
  const Index n = B.g().dim();
  return {Vec{B.space(), d.coords.head(n)}, Vec{B.dual_space(), d.coords.tail(n)}};
}

}  // namespace qlb
