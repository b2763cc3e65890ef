#ifndef MANETSIM_TYPES_HPP
#define MANETSIM_TYPES_HPP

#include <cmath>
#include <cstdint>

namespace manetsim {

using NodeId = std::int32_t;

inline constexpr NodeId kBroadcastAddr = -1;
inline constexpr NodeId kNoNode = -2;

// Virtual time is double-precision seconds throughout; every quantity the
// model uses (10 us SIFS .. 200 s runs) fits comfortably.
using Seconds = double;
using Watts = double;

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Position& a, const Position& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace manetsim

#endif
