#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lindep/gf.hpp"
#include "lindep/spectra.hpp"
#include "lindep/verifier.hpp"

namespace lindep::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapacity = 2,
  kMismatch = 3,
};

enum class Command { build, charpoly, verify, invariants };
enum class Format { json, dot, csv, markdown };

struct CliConfig {
  Command command = Command::build;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t n = 0;
  // Ascending coefficients, e.g. {1, 1, 1} for x^2 + x + 1.
  std::optional<std::vector<gf::Coeff>> modulus_override;
  spectra::MatrixKind matrix = spectra::MatrixKind::adjacency;
  std::optional<Format> format;
  std::optional<std::string> out;
  verifier::Bounds bounds;
  bool strict = false;
};

// Parses "1,0,1" into coefficients. Throws std::invalid_argument.
std::vector<gf::Coeff> parse_modulus(const std::string& text);

// Full command line including the program name. Writes the command output to
// `out` (or --out) and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_command(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lindep::cli
