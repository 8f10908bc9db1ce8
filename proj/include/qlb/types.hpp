#ifndef QLB_TYPES_HPP
#define QLB_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qlb/rational.hpp"

namespace qlb {

//------------------------------------------------------------------------
// Errors
//------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient spaces.
struct TagMismatchError : Error {
  using Error::Error;
};

/// An argument lies outside the subspace an operation requires.
struct DomainError : Error {
  using Error::Error;
};

/// A linear system has no solution (e.g. right inverse onto a set that is
/// not contained in the image).
struct UnsolvableError : Error {
  using Error::Error;
};

/// A mathematically guaranteed identity failed; signals a convention bug in
/// this library, not bad user input.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

/// Input data violates the axioms of the structure being built.
struct ConstructionError : Error {
  using Error::Error;
};

/// An operation was called on input of the wrong classification.
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

//------------------------------------------------------------------------
// Ambient spaces and tagged values
//------------------------------------------------------------------------

/// Entrywise exact equality (shape mismatch compares unequal).
bool mat_equal(const Mat& a, const Mat& b);
bool mat_is_zero(const Mat& a);

/// A named coordinate space. Tags travel with every value; operations check
/// them and throw TagMismatchError on disagreement.
struct Space {
  std::string tag;
  Index dim = 0;

  friend bool operator==(const Space&, const Space&) = default;
};

/// The dual space tag convention: "g" -> "g*".
inline Space dual(const Space& s) { return Space{s.tag + "*", s.dim}; }

void require_same_space(const Space& a, const Space& b, const char* where);

/// Coordinate vector in a tagged space.
struct Vec {
  Space ambient;
  ColVec coords;
};

Vec zero_vec(const Space& s);
Vec basis_vec(const Space& s, Index i);
Vec make_vec(const Space& s, ColVec coords);

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
bool operator==(const Vec& a, const Vec& b);

/// Natural pairing <xi, x> of a dual vector against a vector; xi must be
/// tagged with the dual of x's space.
Rational pairing(const Vec& xi, const Vec& x);

/// Element of V1 (x) V2 stored as a dense matrix: sum m(i,j) e_i (x) f_j.
struct Tensor2 {
  Space left;
  Space right;
  Mat m;
};

Tensor2 zero_tensor2(const Space& a, const Space& b);
bool is_zero(const Tensor2& t);
bool operator==(const Tensor2& a, const Tensor2& b);

/// Order-3 tensor on three tagged spaces, dense row-major storage.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Space a, Space b, Space c);

  const Space& space_a() const { return a_; }
  const Space& space_b() const { return b_; }
  const Space& space_c() const { return c_; }

  Rational& operator()(Index i, Index j, Index k);
  const Rational& operator()(Index i, Index j, Index k) const;

  bool is_zero() const;

  /// Lexicographically first nonzero entry, as {i, j, k}; empty if zero.
  std::vector<Index> first_nonzero() const;

 private:
  Space a_, b_, c_;
  std::vector<Rational> data_;
};

/// Linear map stored as a (codomain dim) x (domain dim) matrix.
struct LinearMap {
  Space domain;
  Space codomain;
  Mat m;
};

LinearMap zero_map(const Space& domain, const Space& codomain);
LinearMap identity_map(const Space& s);
Vec apply(const LinearMap& f, const Vec& x);
LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);

/// Canonical basis of a subspace: rows in reduced row-echelon form, leading
/// entries 1, pivot columns strictly increasing. Equality of subspaces is
/// entrywise equality of these matrices.
struct SubspaceBasis {
  Space ambient;
  Mat rows;                   // dim() x ambient.dim
  std::vector<Index> pivots;  // one per row, strictly increasing

  Index dim() const { return rows.rows(); }
};

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

/// Splits an ambient space as subspace (+) complement, with the projector
/// onto the complement's own coordinate chart.
struct QuotientChart {
  Space ambient;
  SubspaceBasis subspace;    // the part quotiented out
  SubspaceBasis complement;  // non-pivot coordinate directions, in increasing index order
  LinearMap projector;       // ambient -> complement chart
};

}  // namespace qlb

#endif
