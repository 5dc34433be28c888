#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace circix {

/// Thrown when an input exceeds a documented size limit. The exhaustive
/// searches in this library are exponential; the limits keep every supported
/// call at desk scale.
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace limits {

/// CIRCIX_LIMIT_OVERRIDE=<int> raises every limit below to at least that
/// value, at the caller's risk.
inline long override_value() {
    static const long value = [] {
        const char* env = std::getenv("CIRCIX_LIMIT_OVERRIDE");
        return env != nullptr ? std::atol(env) : 0L;
    }();
    return value;
}

inline long raised(long def) { return override_value() > def ? override_value() : def; }

inline long iso_max_n() { return raised(12); }
inline long clique_max_n() { return raised(24); }
inline long chromatic_max_n() { return raised(16); }
inline long circular_max_n() { return raised(12); }          // omega_c / chi_c searches
inline long circular_perfect_max_n() { return raised(10); }  // 2^n - 1 induced subgraphs
inline long perfect_max_n() { return raised(12); }
inline long confusion_max_vertices() { return raised(4096); }  // q^(n t)
inline long exhaustive_max_n() { return raised(6); }
inline long exhaustive_max_q() { return raised(3); }

inline void check(bool ok, const std::string& what) {
    if (!ok) throw limit_error("instance too large: " + what +
                               " (set CIRCIX_LIMIT_OVERRIDE to raise limits)");
}

}  // namespace limits
}  // namespace circix
