#ifndef MANETSIM_PACKETS_HPP
#define MANETSIM_PACKETS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

// ---------------------------------------------------------------------------
// Routing control messages
// ---------------------------------------------------------------------------

// Extended route request. Wire layout (big-endian, 32 bytes):
//   type:u8  reserved:u16  hop_count:u8
//   broadcast_id:u32
//   dest_addr:u32  dest_seq:u32
//   src_addr:u32   src_seq:u32
//   cost_fpd:f64
// cost_fpd starts at the 65536 sentinel at the originator and accumulates
// the minimum link fpd along the forwarding path.
struct RreqMessage {
    static constexpr std::uint8_t kType = 1;
    static constexpr double kFpdInit = 65536.0; // 2^16
    static constexpr std::size_t kWireSize = 32;

    std::uint8_t type = kType;
    std::uint8_t hop_count = 0;
    std::uint32_t broadcast_id = 0;
    std::uint32_t dest_addr = 0;
    std::uint32_t dest_seq = 0;
    std::uint32_t src_addr = 0;
    std::uint32_t src_seq = 0;
    double cost_fpd = kFpdInit;

    std::array<std::uint8_t, kWireSize> serialize() const;
    static RreqMessage parse(const std::array<std::uint8_t, kWireSize>& buf);

    bool operator==(const RreqMessage&) const = default;
};

struct RrepMessage {
    std::uint32_t dest_addr = 0; // route destination the reply describes
    std::uint32_t dest_seq = 0;
    std::uint32_t src_addr = 0;  // requester the reply travels to
    std::uint8_t hop_count = 0;  // hops from the replier to dest
    double path_fpd = 0.0;       // bottleneck fpd of the selected path
    Seconds lifetime = 0.0;
};

struct RerrMessage {
    struct Unreachable {
        std::uint32_t dest_addr;
        std::uint32_t dest_seq;
    };
    std::vector<Unreachable> dests;
};

// Preemptive warning, forwarded hop-by-hop along the reverse path from the
// predicting node toward the route source.
struct WarnMessage {
    NodeId origin = kNoNode;
    NodeId dest_of_route = kNoNode;
    NodeId src_of_route = kNoNode;
    Seconds predicted_fail_time = 0.0;
};

// ---------------------------------------------------------------------------
// Data traffic
// ---------------------------------------------------------------------------

struct DataPacket {
    std::uint64_t packet_id = 0;
    NodeId flow_src = kNoNode;
    NodeId flow_dst = kNoNode;
    Seconds gen_time = 0.0;
    int payload_bytes = 0;
};

using NetPacket = std::variant<DataPacket, RreqMessage, RrepMessage, RerrMessage, WarnMessage>;
using NetPacketPtr = std::shared_ptr<const NetPacket>;

// ---------------------------------------------------------------------------
// MAC frames
// ---------------------------------------------------------------------------

enum class FrameKind : std::uint8_t { Rts, Cts, Data, Ack };

// One over-the-air frame. Rts/Cts/Ack carry no payload; Data carries a
// NetPacket (CBR data or a routing message) and may be broadcast
// (rx == kBroadcastAddr), in which case there is no RTS/CTS/ACK exchange.
struct Frame {
    FrameKind kind = FrameKind::Data;
    NodeId tx = kNoNode;
    NodeId rx = kBroadcastAddr;
    Seconds duration = 0.0;
    std::uint32_t mac_seq = 0; // per-transmitter counter, for duplicate detection
    NetPacketPtr payload;

    bool is_broadcast() const { return rx == kBroadcastAddr; }
};

const char* frame_kind_name(FrameKind k);
const char* packet_kind_name(const NetPacket& p);
bool is_routing_packet(const NetPacket& p);

} // namespace manetsim

#endif
