#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace relsig {

enum class Command { signature, subsig, bp, genfunc, poly, modules, verify };

enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::signature;
  std::string input_path;
  std::optional<std::vector<unsigned>> set_m;  // 1-indexed components
  std::optional<std::uint64_t> trials;         // verify only
  std::uint64_t seed = 0;
  bool all_subsets = false;                    // verify only
  OutputFormat format = OutputFormat::text;
  bool show_steps = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;          // includes oracle disagreement
inline constexpr int parse = 2;
inline constexpr int size_guard = 3;
inline constexpr int not_semicoherent = 4;
inline constexpr int usage = 5;
}  // namespace exit_code

/// Executes one command against one input system and renders the result to
/// `out` (diagnostics go to `err`). Returns an exit_code value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace relsig
