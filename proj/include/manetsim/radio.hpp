#ifndef MANETSIM_RADIO_HPP
#define MANETSIM_RADIO_HPP

#include <stdexcept>

#include "manetsim/types.hpp"

namespace manetsim {

// Two-ray-ground radio parameters. Defaults approximate the classic
// WaveLAN DSSS setup: with these, received_power(250 m) ~= 3.6526e-10 W
// and received_power(550 m) ~= 1.5592e-11 W, which are the default
// reception and carrier-sense thresholds (see RunConfig).
struct RadioParams {
    Watts tx_power = 0.28183815;     // P_t
    double tx_gain = 1.0;            // G_t
    double rx_gain = 1.0;            // G_r
    double tx_antenna_height = 1.5;  // h_t, meters
    double rx_antenna_height = 1.5;  // h_r, meters
    double system_loss = 1.0;        // L >= 1
    Watts rx_threshold = 0.0;        // 0 = derive from reference distance
    Watts carrier_sense_threshold = 0.0;

    void validate() const;
};

struct LinkQuality {
    Watts lq = 0.0;
};

enum class ReceptionClass { Deliverable, CarrierSenseOnly, Undetectable };

// Two-ray ground received power: P_t G_t G_r h_t^2 h_r^2 / (d^4 L).
// Applied at all distances; co-located nodes are a scenario bug, not a
// model input.
inline Watts received_power(const RadioParams& p, double dist_m)
{
    if (dist_m <= 0.0)
        throw std::logic_error("received_power: distance must be positive");
    const double d2 = dist_m * dist_m;
    const double h = p.tx_antenna_height * p.tx_antenna_height *
                     p.rx_antenna_height * p.rx_antenna_height;
    return p.tx_power * p.tx_gain * p.rx_gain * h / (d2 * d2 * p.system_loss);
}

// Link quality is the received power itself.
inline LinkQuality link_quality(Watts pr)
{
    return LinkQuality{pr};
}

inline ReceptionClass classify_reception(Watts pr, const RadioParams& p)
{
    if (pr >= p.rx_threshold)
        return ReceptionClass::Deliverable;
    if (pr >= p.carrier_sense_threshold)
        return ReceptionClass::CarrierSenseOnly;
    return ReceptionClass::Undetectable;
}

} // namespace manetsim

#endif
