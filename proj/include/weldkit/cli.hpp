#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weldkit/moves.hpp"
#include "weldkit/search.hpp"

namespace weld {

enum class Subcommand { Parse, Invariants, Surface, Census, HomCount, Search, MovieCheck, Render };
enum class ReportFormat { Text, Tsv };

struct RunConfig {
  Subcommand subcommand = Subcommand::Parse;
  std::vector<std::string> inputs;  // "-" reads standard input
  Theory theory = Theory::Welded;
  std::vector<std::string> groups;  // empty: the default panel
  SearchLimits limits;
  ReportFormat format = ReportFormat::Text;
  std::optional<std::string> out;  // report goes here instead of `out`
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitReject = 3;

/// Runs one subcommand. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace weld
