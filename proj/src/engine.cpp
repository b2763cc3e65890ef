#include "manetsim/engine.hpp"

#include <cstdio>
#include <stdexcept>

namespace manetsim {

void TraceSink::line(Seconds t, NodeId node, std::string_view kind, std::string_view detail)
{
    if (!out_)
        return;
    char head[64];
    std::snprintf(head, sizeof(head), "%.9f %d ", t, node);
    *out_ << head << kind;
    if (!detail.empty())
        *out_ << ' ' << detail;
    *out_ << '\n';
}

EventHandle Engine::schedule(Seconds delay, const char* kind, NodeId node,
                             std::function<void()> fn)
{
    if (delay < 0.0)
        throw std::logic_error("Engine::schedule: negative delay");
    const std::uint64_t seq = next_seq_++;
    heap_.push(Item{now_ + delay, seq, kind, node, std::move(fn)});
    return EventHandle{seq};
}

bool Engine::cancel(EventHandle& h)
{
    if (!h.valid())
        return false;
    const bool inserted = cancelled_.insert(h.seq).second;
    h.clear();
    return inserted;
}

void Engine::run_until(Seconds end)
{
    if (end < now_)
        throw std::logic_error("Engine::run_until: end before current time");
    while (!heap_.empty() && heap_.top().t <= end) {
        Item item = std::move(const_cast<Item&>(heap_.top()));
        heap_.pop();
        if (!cancelled_.empty() && cancelled_.erase(item.seq))
            continue;
        now_ = item.t; // heap order guarantees now_ never regresses
        trace_.line(now_, item.node, item.kind, {});
        item.fn();
    }
    now_ = end;
    if (heap_.empty())
        cancelled_.clear();
}

} // namespace manetsim
