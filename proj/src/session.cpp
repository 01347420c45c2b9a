#include "hc/session.hpp"

#include <optional>
#include <stdexcept>

namespace hc {

namespace {
SessionConfig g_config;
thread_local std::optional<Rat> t_prec;
}

const SessionConfig& session() { return g_config; }

void set_session(const SessionConfig& cfg)
{
    if (cfg.zeta_order != 3 && cfg.zeta_order != 6 && cfg.zeta_order != 12)
        throw std::invalid_argument("zeta order must be 3, 6 or 12");
    if (cfg.prec <= 0) throw std::invalid_argument("precision must be positive");
    g_config = cfg;
}

Rat working_prec() { return t_prec ? *t_prec : g_config.prec; }

PrecisionGuard::PrecisionGuard(const Rat& p) : had_(t_prec.has_value())
{
    if (had_) saved_ = *t_prec;
    t_prec = p;
}

PrecisionGuard::~PrecisionGuard()
{
    if (had_)
        t_prec = saved_;
    else
        t_prec.reset();
}

} // namespace hc
