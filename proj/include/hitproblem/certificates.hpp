#pragma once

#include <nlohmann/json.hpp>

#include "hitproblem/steenrod.hpp"

namespace hitp {

// Machine-checkable certificate files. Every certificate re-verifies using
// only the P^k evaluator and linear solving; the quotient machinery is never
// trusted during a recheck.
//
// Schema: { "schema_version": 1, "type": ..., "p": ..., "h": ..., ... }

inline constexpr int kCertificateSchemaVersion = 1;

nlohmann::ordered_json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(u32 p, u32 h, const nlohmann::ordered_json& j);

nlohmann::ordered_json make_hit_witness_certificate(const HitDecomposition& w);

// f with P^1(f) = 0 that is not P^1 of anything.
nlohmann::ordered_json make_thm24_certificate(u32 p, u32 h, u64 n, const Polynomial& f);

// A polynomial asserted to lie outside the hit subspace of its degree.
nlohmann::ordered_json make_not_hit_certificate(u32 p, u32 h, u64 n, const Polynomial& f,
                                                const nlohmann::ordered_json& context);

struct RecheckResult {
  bool pass = false;
  std::string message;
};

RecheckResult recheck_certificate(const nlohmann::ordered_json& cert);

}  // namespace hitp
