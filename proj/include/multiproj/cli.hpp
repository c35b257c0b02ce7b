#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multiproj/hilbert.hpp"

namespace multiproj::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_infeasible = 1; // infeasible verdict or failed verification
inline constexpr int exit_parse = 2;
inline constexpr int exit_arity = 3;
inline constexpr int exit_ambient = 4;

/// Runs the command line given as argv-style arguments (program name
/// excluded). Regular output goes to out, diagnostics to err; the return
/// value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Text renderers. run() uses these for its text format; tests rebuild the
// text from parsed JSON through the same functions.
std::string render_table_text(const std::vector<int>& dims, int s, const std::vector<int>& t,
                              const std::vector<int>& flat_table);
std::string render_border_text(const std::vector<int>& dims, int s, const std::vector<int>& t,
                               const std::vector<BorderArray>& arrays);
std::string render_partitions_text(const std::vector<int>& alpha,
                                   const std::vector<int>& alpha_conjugate,
                                   const std::vector<int>& beta,
                                   const std::vector<int>& beta_conjugate);

} // namespace multiproj::cli
