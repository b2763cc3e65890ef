#ifndef MANETSIM_ENGINE_HPP
#define MANETSIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <queue>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "manetsim/rng.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

// Handle for a scheduled event; permits cancellation until the event fires.
struct EventHandle {
    std::uint64_t seq = 0;
    bool valid() const { return seq != 0; }
    void clear() { seq = 0; }
};

// Optional event-trace log: one line per processed event,
//   <time> <node> <kind> <detail>
// Handlers append further lines in the same format for protocol-level
// happenings (warn_origin, data_deliver, ...). The format is stable so
// traces can be diffed byte-for-byte between runs.
class TraceSink {
public:
    void attach(std::ostream* out) { out_ = out; }
    bool enabled() const { return out_ != nullptr; }
    void line(Seconds t, NodeId node, std::string_view kind, std::string_view detail);

private:
    std::ostream* out_ = nullptr;
};

// Deterministic discrete-event core. A single virtual clock, a queue that
// dequeues in (fire_time, sequence) order, and one seeded random stream
// shared by every stochastic model in the run. Strictly single-threaded;
// run several engines in parallel for independent runs.
class Engine {
public:
    explicit Engine(std::uint64_t seed = 1) : rng_(seed) {}

    Seconds now() const { return now_; }
    Rng& rng() { return rng_; }
    TraceSink& trace() { return trace_; }

    // Enqueues fn at now + delay. delay < 0 is a programming error and
    // aborts the run. kind/node only feed the trace.
    EventHandle schedule(Seconds delay, const char* kind, NodeId node,
                         std::function<void()> fn);

    // True if the event was still pending.
    bool cancel(EventHandle& h);

    // Processes every event with fire_time <= end in order, then advances
    // the clock to end.
    void run_until(Seconds end);

    std::size_t pending() const { return heap_.size() - cancelled_.size(); }

private:
    struct Item {
        Seconds t;
        std::uint64_t seq;
        const char* kind;
        NodeId node;
        std::function<void()> fn;
    };
    struct Later {
        bool operator()(const Item& a, const Item& b) const
        {
            if (a.t != b.t)
                return a.t > b.t;
            return a.seq > b.seq;
        }
    };

    Seconds now_ = 0.0;
    std::uint64_t next_seq_ = 1;
    std::priority_queue<Item, std::vector<Item>, Later> heap_;
    std::unordered_set<std::uint64_t> cancelled_;
    Rng rng_;
    TraceSink trace_;
};

} // namespace manetsim

#endif
