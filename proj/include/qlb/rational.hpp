#ifndef QLB_RATIONAL_HPP
#define QLB_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <string>

namespace Eigen {

/// Adapts GMP's canonical rational type as an Eigen scalar. Exact: no
/// epsilon, no rounding anywhere.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace qlb {

/// The only scalar type of the library. Always reduced, denominator > 0
/// (GMP canonical form; arithmetic preserves it).
using Rational = mpq_class;

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ColVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced rational from an integer pair. den must be nonzero.
inline Rational frac(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (decimal digits only). Returns nullopt on any
/// malformed input, including zero denominators and unreduced garbage like
/// "1/-2" (GMP accepts a sign only on the numerator; we re-canonicalize).
std::optional<Rational> parse_rational(const std::string& text);

/// Serializes as "p" or "p/q"; inverse of parse_rational.
std::string to_string(const Rational& q);

}  // namespace qlb

#endif
