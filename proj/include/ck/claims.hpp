#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ck/laurent.hpp"

namespace ck {

/// Seed + dimensions fully determine every random point and character, so a
/// fixed config reproduces reports byte for byte.
struct RunConfig {
  int degree_cap = 6;
  Window window{-8, 8};
  std::uint64_t seed = 20260810;
  bool flip_coproduct = false;  // debug mutation: swaps the coproduct factors
};

struct VerificationReport {
  std::string claim_id;
  bool pass = false;
  std::string witness;  // residual / diagnostic on failure, summary on pass
  double timing_ms = 0.0;
};

/// Stable identifiers, one per acceptance criterion, in criterion order.
const std::vector<std::string>& claim_ids();

VerificationReport run_claim(const std::string& id, const RunConfig& config);

/// Runs every claim in a small work pool; results in claim_ids() order.
std::vector<VerificationReport> run_all_claims(const RunConfig& config);

}  // namespace ck
