#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "discloc/fincat.hpp"

namespace discloc::cli {

enum class Format { text, json, dot };

struct RunConfig {
  std::string command;
  std::string category;  // positional input
  std::string structure;
  std::string monad;
  std::string ring, algebra, map;
  std::string subcat;
  std::string truncated;
  std::string weak = "isos";
  Caps caps;
  std::size_t max_ring_size = 16;
  std::size_t max_homs = std::size_t{1} << 16;
  Format format = Format::text;
  std::string emit_dot;
};

/// What a command produced: exit 0 pass, 1 negative verdict.
struct Outcome {
  int status = 0;
  nlohmann::json report;
  std::string text;
  std::string dot;
};

Outcome run_command(const RunConfig& config);

}  // namespace discloc::cli
