#ifndef MANETSIM_PREDICT_HPP
#define MANETSIM_PREDICT_HPP

#include <array>
#include <stdexcept>

#include "manetsim/types.hpp"

namespace manetsim {

struct RssSample {
    Seconds time = 0.0;
    Watts power = 0.0;
};

struct NotEnoughSamples : std::runtime_error {
    NotEnoughSamples() : std::runtime_error("rss prediction needs 3 distinct-time samples") {}
};

// The last three received signals from one neighbor, oldest first.
// Samples closer together than coalesce_eps replace the newest entry
// instead of shifting the window; the pairwise time differences feed
// divisions and must stay well conditioned.
class RssHistory {
public:
    static constexpr Seconds kDefaultCoalesceEps = 1e-6;

    void record(Seconds t, Watts p, Seconds coalesce_eps = kDefaultCoalesceEps)
    {
        if (count_ > 0 && t - samples_[count_ - 1].time < coalesce_eps) {
            samples_[count_ - 1] = RssSample{t, p}; // newest wins
            return;
        }
        if (count_ == 3) {
            samples_[0] = samples_[1];
            samples_[1] = samples_[2];
            samples_[2] = RssSample{t, p};
        } else {
            samples_[count_++] = RssSample{t, p};
        }
    }

    bool full() const { return count_ == 3; }
    int size() const { return count_; }
    const RssSample& operator[](int i) const { return samples_[i]; }
    Seconds last_time() const { return count_ ? samples_[count_ - 1].time : 0.0; }
    void clear() { count_ = 0; }

private:
    std::array<RssSample, 3> samples_{};
    int count_ = 0;
};

// Three-point Lagrange extrapolation of the RSS series at t_pt: the unique
// quadratic through (t1,P1),(t2,P2),(t3,P3). The raw value is returned
// unclamped; extrapolations may go negative and callers treat negative as
// below any threshold.
inline Watts lagrange_predict(const RssHistory& h, Seconds t_pt)
{
    if (!h.full() || h[0].time >= h[1].time || h[1].time >= h[2].time)
        throw NotEnoughSamples{};
    const double t1 = h[0].time, t2 = h[1].time, t3 = h[2].time;
    const double l1 = ((t_pt - t2) * (t_pt - t3)) / ((t1 - t2) * (t1 - t3));
    const double l2 = ((t_pt - t1) * (t_pt - t3)) / ((t2 - t1) * (t2 - t3));
    const double l3 = ((t_pt - t1) * (t_pt - t2)) / ((t3 - t1) * (t3 - t2));
    return l1 * h[0].power + l2 * h[1].power + l3 * h[2].power;
}

// Predict time: how far ahead of the newest sample the RSS is evaluated.
inline Seconds predict_time(Seconds t3, Seconds t_dp)
{
    return t3 + t_dp;
}

struct DiscoveryInputs {
    Seconds t_warning = 0.0; // one-hop transmission time of a warning packet
    Seconds t_rreq = 0.0;
    Seconds t_rrep = 0.0;
    int n_as = 0; // hops from the predicting node to the route source
    int n_sd = 0; // hops source -> destination (current route as the estimate)
};

// Discovery period: the time a preemptive re-discovery needs, i.e. the
// warning's travel to the source plus one RREQ/RREP round trip.
inline Seconds discovery_period(const DiscoveryInputs& in)
{
    return in.t_warning * in.n_as + in.t_rreq * in.n_sd + in.t_rrep * in.n_sd;
}

// True iff the history is full and the extrapolated RSS at
// last-sample-time + t_dp falls below threshold.
inline bool link_about_to_fail(const RssHistory& h, Seconds t_dp, Watts threshold)
{
    if (!h.full())
        return false;
    return lagrange_predict(h, predict_time(h.last_time(), t_dp)) < threshold;
}

} // namespace manetsim

#endif
