#pragma once

#include "hc/rational.hpp"

#include <cstdint>

namespace hc {

/// Process-wide configuration. Set once before computing; read-only afterwards.
struct SessionConfig {
    int zeta_order = 12;     ///< N in {3, 6, 12}
    Rat prec = Rat(10);      ///< absolute truncation order for infinite expansions
    std::uint64_t seed = 1;
};

const SessionConfig& session();
void set_session(const SessionConfig& cfg);

/// Absolute order at which otherwise-exact infinite expansions are cut.
/// Thread-local so that nested computations can raise it temporarily.
Rat working_prec();

class PrecisionGuard {
public:
    explicit PrecisionGuard(const Rat& p);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    Rat saved_;
    bool had_;
};

} // namespace hc
