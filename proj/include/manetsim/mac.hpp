#ifndef MANETSIM_MAC_HPP
#define MANETSIM_MAC_HPP

#include <stdexcept>

#include "manetsim/predict.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

// DCF timing set. Frame durations are explicit constants rather than
// bitrate-derived so the channel-occupation inputs stay visible in config.
// Defaults follow 802.11 DSSS conventions: 20 us slots, 10/50 us SIFS/DIFS,
// and 1 Mb/s control frames with the 192 us long preamble.
struct MacTimings {
    Seconds t_rts = 352e-6;
    Seconds t_cts = 304e-6;
    Seconds t_ack = 304e-6;
    Seconds t_sifs = 10e-6;
    Seconds t_difs = 50e-6;
    Seconds slot = 20e-6;
    int cw_min = 31;   // slots
    int cw_max = 1023; // slots
    int retry_limit = 7;

    void validate() const;
};

// Channel occupation due to MAC contention: the RTS/CTS handshake plus the
// three SIFS gaps of the four-way exchange.
inline Seconds channel_occupation(const MacTimings& t)
{
    return t.t_rts + t.t_cts + 3.0 * t.t_sifs;
}

// Smoothed access-contention time t_ac plus the fixed channel occupation.
// t_ac is measured per node as head-of-line-to-RTS time and smoothed with
// an EWMA; congestion around the node drives it up.
struct MacOverheadEstimator {
    Seconds c_oc = 0.0;
    Seconds t_ac_ewma = 0.0;
    double alpha = 0.5;

    void observe_access_contention(Seconds sample)
    {
        if (sample < 0.0)
            throw std::logic_error("observe_access_contention: negative sample");
        t_ac_ewma = alpha * sample + (1.0 - alpha) * t_ac_ewma;
    }

    Seconds mac_overhead() const { return c_oc + t_ac_ewma; }
};

enum class FailureReason { HighRss, LowRssOrUnknown };
enum class DropKind { Collision, RetryExceed, MacBusy, Duplicate };

struct XmitFailure {
    NodeId neighbor = kNoNode;
    FailureReason reason = FailureReason::LowRssOrUnknown;
    DropKind drop_kind = DropKind::RetryExceed;
};

// Cross-layer failure reason: the neighbor counts as reachable (HighRss)
// only when three distinct-time samples exist and their Lagrange
// extrapolation at the failure time clears the reception threshold. A
// never-heard neighbor can never yield HighRss.
inline FailureReason failure_reason(const RssHistory& history, Seconds now, Watts rx_threshold)
{
    if (!history.full())
        return FailureReason::LowRssOrUnknown;
    if (lagrange_predict(history, now) >= rx_threshold)
        return FailureReason::HighRss;
    return FailureReason::LowRssOrUnknown;
}

} // namespace manetsim

#endif
