// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbenc/cli.hpp"

#include "pbenc/opb.hpp"
#include "pbenc/output.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace pbenc::cli {

namespace {

EncoderKind encoder_or_throw(std::string_view name) {
  auto kind = encoder_from_name(name);
  if (!kind)
    throw Error("unknown encoder '" + std::string(name) +
                "' (expected direct, bdd, adder, watchdog, bargraph or pb)");
  return *kind;
}

void check_kind(EncoderKind kind, OutputKind output) {
  bool cnf = is_cnf_encoder(kind);
  if (cnf && output == OutputKind::Opb)
    throw Error("encoder '" + std::string(encoder_name(kind)) +
                "' produces CNF; use --output-kind dimacs");
  if (!cnf && output == OutputKind::Dimacs)
    throw Error("encoder 'pb' requires --output-kind opb");
}

std::string stats_block(const OutputProblem &p) {
  std::ostringstream os;
  std::size_t clauses = 0, aux = 0;
  for (const auto &r : p.records()) {
    os << "c constraint " << r.constraint << " tag " << r.tag << " encoder "
       << encoder_name(r.encoder) << ": " << r.clauses << " clauses, "
       << r.aux << " aux\n";
    clauses += r.clauses;
    aux += r.aux;
  }
  os << "c total: " << p.records().size() << " translations, " << clauses
     << " clauses, " << aux << " aux\n";
  return os.str();
}

} // namespace

TagBinding parse_tag_binding(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == text.size())
    throw Error("malformed tag binding '" + std::string(text) +
                "' (expected <tag>=<encoder>[,<encoder>...])");
  TagBinding b;
  std::string tag(text.substr(0, eq));
  std::size_t used = 0;
  try {
    b.tag = std::stoll(tag, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != tag.size())
    throw Error("malformed tag '" + tag + "' in binding");
  std::string_view rest = text.substr(eq + 1);
  while (true) {
    auto comma = rest.find(',');
    b.encoders.push_back(encoder_or_throw(rest.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    rest = rest.substr(comma + 1);
  }
  return b;
}

RunResult run_text(const CliConfig &config, std::string_view opb) {
  RunResult result;
  try {
    if (config.encoder && !config.bindings.empty())
      throw Error("--encoder and --tag are mutually exclusive");

    OpbDocument doc = parse_opb(opb);
    bool per_tag = !config.bindings.empty();
    OpbModel built =
        build_model(doc, per_tag ? TagMode::PerConstraint : TagMode::Uniform);

    std::unique_ptr<OutputProblem> problem;
    if (config.output == OutputKind::Dimacs)
      problem = std::make_unique<CnfProblem>();
    else
      problem = std::make_unique<PbProblem>();

    if (per_tag) {
      for (const auto &b : config.bindings) {
        if (b.tag < 1 || static_cast<std::size_t>(b.tag) > doc.constraints.size())
          throw Error("tag " + std::to_string(b.tag) +
                      " refers to no constraint (file has " +
                      std::to_string(doc.constraints.size()) + ")");
        for (EncoderKind k : b.encoders) {
          check_kind(k, config.output);
          problem->assign_encoder(b.tag, k);
        }
      }
    } else {
      EncoderKind k = config.encoder.value_or(
          config.output == OutputKind::Dimacs ? EncoderKind::Bdd
                                              : EncoderKind::PbBasic);
      check_kind(k, config.output);
      problem->assign_encoder(1, k);
    }

    problem->read(built.model);
    if (auto *cnf = dynamic_cast<CnfProblem *>(problem.get()))
      result.out = cnf->get_output(DimacsOptions{config.comments});
    else
      result.out = problem->get_output();

    if (config.stats)
      result.err += stats_block(*problem);
    for (std::size_t i : built.impossible_equalities)
      result.err += "error: equality on line " +
                    std::to_string(doc.constraints[i].line) +
                    " has a bound outside the reachable range\n";
    if (problem->unsat_detected()) {
      result.err += "error: the problem is unsatisfiable (detected during "
                    "translation)\n";
      result.exit_code = kExitUnsat;
    }
  } catch (const Error &e) {
    result.out.clear();
    result.err += std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitError;
  }
  return result;
}

RunResult run(const CliConfig &config, std::istream &in) {
  std::ostringstream text;
  if (config.input_path) {
    std::ifstream file(*config.input_path);
    if (!file) {
      RunResult r;
      r.exit_code = kExitError;
      r.err = "error: cannot open '" + *config.input_path + "'\n";
      return r;
    }
    text << file.rdbuf();
  } else {
    text << in.rdbuf();
  }
  return run_text(config, text.str());
}

} // namespace pbenc::cli
