#include "manetsim/mac.hpp"

namespace manetsim {

void MacTimings::validate() const
{
    if (t_rts <= 0 || t_cts <= 0 || t_ack <= 0 || t_sifs <= 0 || t_difs <= 0 || slot <= 0)
        throw std::invalid_argument("mac: all durations must be > 0");
    if (cw_min < 0 || cw_min > cw_max)
        throw std::invalid_argument("mac: need 0 <= cw_min <= cw_max");
    if (retry_limit < 1)
        throw std::invalid_argument("mac: retry_limit must be >= 1");
}

} // namespace manetsim
