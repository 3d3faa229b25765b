#pragma once

#include <cstdint>
#include <string>

namespace permident {

enum class IdentityId {
    theorem1,
    vanishing,
    theorem2,
    recurrence,
    perA,
    theorem3_per_det,
    even_cycle_expansion,
    cyclo_even,
    cyclo_odd,
    cycle_lemma,
    derangement_sums,
    wang_sun_det,
    sun_congruence,
};

const char* to_string(IdentityId id);

// One verification outcome. status is pass exactly when the lhs and rhs
// texts are equal; elapsed_ms is informational and excluded from all
// determinism guarantees.
struct VerdictRecord {
    IdentityId identity;
    int n = 0;
    std::uint64_t seed = 0;
    int trial = 0;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    long elapsed_ms = 0;
};

// Single-line JSON with fixed key order:
// {"identity": ..., "n": ..., "seed": ..., "trial": ..., "lhs": "p/q",
//  "rhs": "p/q", "status": "pass"|"fail", "elapsed_ms": int}
std::string to_json(const VerdictRecord& r);

std::string to_human(const VerdictRecord& r);

} // namespace permident
