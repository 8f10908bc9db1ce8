#ifndef QLB_COMMANDS_HPP
#define QLB_COMMANDS_HPP

#include <iosfwd>
#include <string>

namespace qlb {

/// Exit codes shared by all commands: 0 pass, 1 mathematical failure,
/// 2 I/O or parse failure.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitParseFailure = 2;

/// verify: Lie axioms + Yang-Baxter + classification, as a printed report.
int cmd_verify(const std::string& path, std::ostream& out);

/// classify: prints triangular / factorizable / general.
int cmd_classify(const std::string& path, std::ostream& out);

/// double: writes the structure constants of the chosen model ("direct" or
/// "extension"), dim 2n, with chart metadata, to `out_path`.
int cmd_double(const std::string& path, const std::string& model,
               const std::string& out_path, std::ostream& out);

/// check: runs every invariant of every module; exit 0 iff all pass.
int cmd_check(const std::string& path, std::ostream& out);

}  // namespace qlb

#endif
