// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/encoders.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbenc::cli {

enum class OutputKind { Dimacs, Opb };

struct TagBinding {
  Tag tag = 0;
  std::vector<EncoderKind> encoders;
};

struct CliConfig {
  std::optional<std::string> input_path; // standard input when absent
  OutputKind output = OutputKind::Dimacs;
  /// Uniform mode: every constraint tagged 1 and translated by this encoder.
  std::optional<EncoderKind> encoder;
  /// Per-constraint mode: constraint i of the file carries tag i.
  std::vector<TagBinding> bindings;
  bool stats = false;
  bool comments = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
/// The formula was written, but normalization already proved it UNSAT.
inline constexpr int kExitUnsat = 20;

struct RunResult {
  int exit_code = kExitOk;
  std::string out; // DIMACS or OPB
  std::string err; // diagnostics and statistics
};

/// Parses `<tag>=<name>[,<name>...]`.
TagBinding parse_tag_binding(std::string_view text);

/// Runs the pipeline on OPB text: parse, build, assign encoders, translate.
RunResult run_text(const CliConfig &config, std::string_view opb);

/// Reads config.input_path (or `in` when unset) and calls run_text.
RunResult run(const CliConfig &config, std::istream &in);

} // namespace pbenc::cli
