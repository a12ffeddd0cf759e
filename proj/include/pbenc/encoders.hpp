// Copyright 2026 The pbenc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pbenc/formula.hpp"
#include "pbenc/normalize.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pbenc {

enum class EncoderKind { Direct, Bdd, Adder, Watchdog, Bargraph, PbBasic };

/// Name used on the command line ("direct", "bdd", ...).
std::string_view encoder_name(EncoderKind kind);
std::optional<EncoderKind> encoder_from_name(std::string_view name);
/// Every kind except PbBasic.
bool is_cnf_encoder(EncoderKind kind);
inline constexpr EncoderKind kCnfEncoders[] = {
    EncoderKind::Direct, EncoderKind::Bdd, EncoderKind::Adder,
    EncoderKind::Watchdog, EncoderKind::Bargraph};

/// One clause per root-to-False path of the ROBDD, made of the negations of
/// the literals taken on high edges along the path. No auxiliary variables.
CnfFormula encode_direct(const RawConstraint &r, VarAllocator &alloc);

/// Clause count encode_direct would produce, without building the clauses.
BigInt direct_clause_count(const RawConstraint &r);

/// One auxiliary d_n per ROBDD node meaning "the sub-constraint at n holds":
/// (d_root), and per node on literal l: (~d_n | ~l | d_high), (~d_n | d_low).
CnfFormula encode_bdd(const RawConstraint &r, VarAllocator &alloc);

/// Binary adder network: coefficient bits are bucketed by weight, buckets are
/// reduced with full and half adders, and the binary sum is compared with the
/// bound.
CnfFormula encode_adder(const RawConstraint &r, VarAllocator &alloc);

struct TotalizerResult {
  /// outputs[j-1] is implied by unit propagation once j inputs are true.
  std::vector<Lit> outputs;
  CnfFormula formula;
};

/// Balanced unary adder over `inputs` (nonempty), "at least" direction only.
TotalizerResult totalizer(std::span<const Lit> inputs, VarAllocator &alloc);

/// Single global watchdog over the whole constraint: a literal w implied by
/// unit propagation once the true literals sum past the bound, plus (~w).
CnfFormula encode_bargraph(const RawConstraint &r, VarAllocator &alloc);

/// Per-literal watchdogs: for each term (a, l), a watchdog over the other
/// terms with bound b - a, joined to l by (~w | ~l).
CnfFormula encode_watchdog(const RawConstraint &r, VarAllocator &alloc);

/// Dispatches to one of the CNF encoders. Throws for PbBasic.
CnfFormula encode_cnf(EncoderKind kind, const RawConstraint &r,
                      VarAllocator &alloc);

/// OPB normal form: sum over terms of +-a * x >= bound' over plain variables.
PbOutputConstraint encode_pb_basic(const RawConstraint &r);

} // namespace pbenc
