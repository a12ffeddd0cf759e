// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

// pbenc: translate an OPB file into DIMACS CNF or normalized OPB.

#include "pbenc/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  using namespace pbenc;

  CLI::App app{"Translate pseudo-Boolean constraints (OPB) to CNF or OPB"};
  std::string input;
  std::string kind = "dimacs";
  std::string encoder;
  std::vector<std::string> tags;
  cli::CliConfig config;

  app.add_option("--input,-i", input, "OPB file (default: standard input)");
  app.add_option("--output-kind", kind, "dimacs or opb")
      ->check(CLI::IsMember({"dimacs", "opb"}));
  auto *enc = app.add_option(
      "--encoder,-e", encoder,
      "encoder for all constraints: direct, bdd, adder, watchdog, bargraph, pb");
  auto *tag = app.add_option(
      "--tag,-t", tags,
      "<t>=<enc>[,<enc>...]: encoders for the t-th constraint of the file");
  enc->excludes(tag);
  app.add_flag("--stats", config.stats,
               "per-constraint clause and variable counts on stderr");
  app.add_flag("--comments", config.comments, "emit a c-comment preamble");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!input.empty())
      config.input_path = input;
    config.output =
        kind == "opb" ? cli::OutputKind::Opb : cli::OutputKind::Dimacs;
    if (!encoder.empty()) {
      auto k = encoder_from_name(encoder);
      if (!k) {
        std::cerr << "error: unknown encoder '" << encoder << "'\n";
        return cli::kExitError;
      }
      config.encoder = *k;
    }
    for (const auto &t : tags)
      config.bindings.push_back(cli::parse_tag_binding(t));
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitError;
  }

  auto result = cli::run(config, std::cin);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
