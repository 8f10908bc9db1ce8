#include "qlb/types.hpp"

namespace qlb {

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool mat_is_zero(const Mat& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

void require_same_space(const Space& a, const Space& b, const char* where) {
  if (!(a == b))
    throw TagMismatchError(std::string(where) + ": space '" + a.tag + "' (dim " +
                           std::to_string(a.dim) + ") vs '" + b.tag + "' (dim " +
                           std::to_string(b.dim) + ")");
}

Vec zero_vec(const Space& s) { return Vec{s, ColVec::Zero(s.dim)}; }

Vec basis_vec(const Space& s, Index i) {
  Vec v = zero_vec(s);
  v.coords(i) = 1;
  return v;
}

Vec make_vec(const Space& s, ColVec coords) {
  if (coords.size() != s.dim)
    throw TagMismatchError("make_vec: " + std::to_string(coords.size()) +
                           " coordinates for space '" + s.tag + "' of dim " +
                           std::to_string(s.dim));
  return Vec{s, std::move(coords)};
}

bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.coords.size(); ++i)
    if (v.coords(i) != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_space(a.ambient, b.ambient, "Vec+");
  return Vec{a.ambient, a.coords + b.coords};
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_space(a.ambient, b.ambient, "Vec-");
  return Vec{a.ambient, a.coords - b.coords};
}

Vec operator*(const Rational& c, const Vec& v) {
  return Vec{v.ambient, (c * v.coords).eval()};
}

bool operator==(const Vec& a, const Vec& b) {
  return a.ambient == b.ambient && mat_equal(a.coords, b.coords);
}

Rational pairing(const Vec& xi, const Vec& x) {
  require_same_space(xi.ambient, dual(x.ambient), "pairing");
  Rational acc = 0;
  for (Index i = 0; i < x.coords.size(); ++i) acc += xi.coords(i) * x.coords(i);
  return acc;
}

Tensor2 zero_tensor2(const Space& a, const Space& b) {
  return Tensor2{a, b, Mat::Zero(a.dim, b.dim)};
}

bool is_zero(const Tensor2& t) {
  for (Index i = 0; i < t.m.rows(); ++i)
    for (Index j = 0; j < t.m.cols(); ++j)
      if (t.m(i, j) != 0) return false;
  return true;
}

bool operator==(const Tensor2& a, const Tensor2& b) {
  return a.left == b.left && a.right == b.right && mat_equal(a.m, b.m);
}

Tensor3::Tensor3(Space a, Space b, Space c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      data_(static_cast<std::size_t>(a_.dim * b_.dim * c_.dim), Rational(0)) {}

Rational& Tensor3::operator()(Index i, Index j, Index k) {
  return data_[static_cast<std::size_t>((i * b_.dim + j) * c_.dim + k)];
}

const Rational& Tensor3::operator()(Index i, Index j, Index k) const {
  return data_[static_cast<std::size_t>((i * b_.dim + j) * c_.dim + k)];
}

bool Tensor3::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

std::vector<Index> Tensor3::first_nonzero() const {
  for (Index i = 0; i < a_.dim; ++i)
    for (Index j = 0; j < b_.dim; ++j)
      for (Index k = 0; k < c_.dim; ++k)
        if ((*this)(i, j, k) != 0) return {i, j, k};
  return {};
}

LinearMap zero_map(const Space& domain, const Space& codomain) {
  return LinearMap{domain, codomain, Mat::Zero(codomain.dim, domain.dim)};
}

LinearMap identity_map(const Space& s) {
  return LinearMap{s, s, Mat::Identity(s.dim, s.dim)};
}

Vec apply(const LinearMap& f, const Vec& x) {
  require_same_space(f.domain, x.ambient, "apply");
  return Vec{f.codomain, f.m * x.coords};
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require_same_space(f.domain, g.codomain, "compose");
  return LinearMap{g.domain, f.codomain, f.m * g.m};
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  require_same_space(a.domain, b.domain, "LinearMap+");
  require_same_space(a.codomain, b.codomain, "LinearMap+");
  return LinearMap{a.domain, a.codomain, a.m + b.m};
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  require_same_space(a.domain, b.domain, "LinearMap-");
  require_same_space(a.codomain, b.codomain, "LinearMap-");
  return LinearMap{a.domain, a.codomain, a.m - b.m};
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.ambient == b.ambient && mat_equal(a.rows, b.rows);
}

}  // namespace qlb
