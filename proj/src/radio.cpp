#include "manetsim/radio.hpp"

namespace manetsim {

void RadioParams::validate() const
{
    if (tx_power <= 0.0)
        throw std::invalid_argument("radio: tx_power must be > 0");
    if (tx_gain < 0.0 || rx_gain < 0.0)
        throw std::invalid_argument("radio: antenna gains must be >= 0");
    if (tx_antenna_height <= 0.0 || rx_antenna_height <= 0.0)
        throw std::invalid_argument("radio: antenna heights must be > 0");
    if (system_loss < 1.0)
        throw std::invalid_argument("radio: system_loss must be >= 1");
    if (rx_threshold < 0.0 || carrier_sense_threshold < 0.0)
        throw std::invalid_argument("radio: thresholds must be >= 0");
    if (carrier_sense_threshold > rx_threshold)
        throw std::invalid_argument("radio: carrier_sense_threshold must be <= rx_threshold");
}

} // namespace manetsim
