#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qf/verify.hpp"

namespace qf::cli {

struct Options {
  std::uint64_t seed = 1;
  unsigned order = 24;
  unsigned window = 6;
  unsigned dmax = 8;
  unsigned k_bound = 6;
  /// Replaces sigma in the verify batteries (mutation testing).
  SigmaFn sigma;
};

struct Result {
  /// JSON document on success, empty otherwise.
  std::string output;
  /// Human-readable diagnostic on failure.
  std::string diagnostic;
  /// 0 success, 1 mathematical failure, 2 malformed input.
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Executes one command on a JSON input document.
Result run(const std::string& command, const std::string& input, const Options& options = {});

}  // namespace qf::cli
