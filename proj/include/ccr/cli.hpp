#pragma once

#include "ccr/grid.hpp"
#include "ccr/scalar.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccr::cli {

enum class Command { Operators, TraceParadox, Converge, Dispersion, Apply };
enum class Format { Csv, Json };

struct RunConfig {
    Command command = Command::Operators;
    int n = 2;
    std::string ell = "1";
    std::string hbar = "1";
    Boundary boundary = Boundary::Open;
    std::optional<NumericMode> mode;  ///< unset: exact where legal, float otherwise
    Format format = Format::Csv;
    std::string output;               ///< empty: standard output

    std::string emit;                 // operators
    std::string function;             // converge, apply
    std::string window = "4";         // converge
    std::string ell0 = "0.5";         // converge
    int steps = 5;                    // converge
    int wave_mode = 0;                // dispersion
    std::string op;                   // apply
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

/// Executes one validated configuration, writing the artifact to `out` (or the
/// configured file) and diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (program name excluded) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccr::cli
