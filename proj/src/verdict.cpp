#include "permident/verdict.hpp"

#include <sstream>

namespace permident {

const char* to_string(IdentityId id) {
    switch (id) {
        case IdentityId::theorem1: return "theorem1";
        case IdentityId::vanishing: return "vanishing";
        case IdentityId::theorem2: return "theorem2";
        case IdentityId::recurrence: return "recurrence";
        case IdentityId::perA: return "perA";
        case IdentityId::theorem3_per_det: return "theorem3_per_det";
        case IdentityId::even_cycle_expansion: return "even_cycle_expansion";
        case IdentityId::cyclo_even: return "cyclo_even";
        case IdentityId::cyclo_odd: return "cyclo_odd";
        case IdentityId::cycle_lemma: return "cycle_lemma";
        case IdentityId::derangement_sums: return "derangement_sums";
        case IdentityId::wang_sun_det: return "wang_sun_det";
        case IdentityId::sun_congruence: return "sun_congruence";
    }
    return "unknown";
}

std::string to_json(const VerdictRecord& r) {
    std::ostringstream os;
    os << "{\"identity\": \"" << to_string(r.identity) << "\""
       << ", \"n\": " << r.n
       << ", \"seed\": " << r.seed
       << ", \"trial\": " << r.trial
       << ", \"lhs\": \"" << r.lhs << "\""
       << ", \"rhs\": \"" << r.rhs << "\""
       << ", \"status\": \"" << (r.pass ? "pass" : "fail") << "\""
       << ", \"elapsed_ms\": " << r.elapsed_ms
       << "}";
    return os.str();
}

std::string to_human(const VerdictRecord& r) {
    std::ostringstream os;
    os << to_string(r.identity) << " n=" << r.n << " seed=" << r.seed
       << " trial=" << r.trial << " " << (r.pass ? "pass" : "FAIL")
       << " lhs=" << r.lhs << " rhs=" << r.rhs << " (" << r.elapsed_ms << " ms)";
    return os.str();
}

} // namespace permident
