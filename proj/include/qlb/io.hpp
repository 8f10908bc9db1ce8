#ifndef QLB_IO_HPP
#define QLB_IO_HPP

#include <string>

#include "qlb/bialgebra.hpp"

namespace qlb {

/// A parsed input file: the algebra plus its candidate r-matrix (zero when
/// the file has no "r" field). Parsing is strict about shapes and rational
/// syntax; violations throw ParseError.
struct BialgebraInput {
  LieAlgebra g;
  Tensor2 r;
};

/// File schema (JSON, UTF-8):
///   {
///     "name": "sl2",
///     "dim": 3,
///     "basis": ["e", "f", "h"],
///     "brackets": { "i,j": [[k, "p/q"], ...], ... },   // 0-based
///     "r": [[i, j, "p/q"], ...]                        // optional
///   }
/// Bracket keys are written with i < j; when only one orientation of a pair
/// appears, the mirrored constants are filled by antisymmetry. A file may
/// supply both orientations explicitly (validation then decides whether
/// they are consistent). Unlisted brackets and r entries are zero.
BialgebraInput parse_bialgebra(const std::string& json_text,
                               const std::string& origin);
BialgebraInput read_bialgebra_file(const std::string& path);

/// Chart metadata attached to a serialized double: which output basis
/// vectors span g / f / f_perp, and the embedded image of g* as coordinate
/// rows.
struct DoubleCharts {
  std::string model;  // "direct" or "extension"
  std::vector<Index> g, f, f_perp;         // index blocks where applicable
  std::vector<std::vector<std::string>> f_rows, f_perp_rows;  // direct model
  std::vector<std::vector<std::string>> gstar_image_rows;
};

/// Deterministic serialization (byte-identical for equal inputs).
std::string serialize_algebra(const LieAlgebra& L, const Tensor2* r,
                              const DoubleCharts* charts);

std::string serialize_input(const BialgebraInput& in);

}  // namespace qlb

#endif
