#include "manetsim/packets.hpp"

#include <bit>
#include <cstring>

namespace manetsim {

namespace {

void put_u16(std::uint8_t* p, std::uint16_t v)
{
    p[0] = static_cast<std::uint8_t>(v >> 8);
    p[1] = static_cast<std::uint8_t>(v);
}

void put_u32(std::uint8_t* p, std::uint32_t v)
{
    p[0] = static_cast<std::uint8_t>(v >> 24);
    p[1] = static_cast<std::uint8_t>(v >> 16);
    p[2] = static_cast<std::uint8_t>(v >> 8);
    p[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t get_u32(const std::uint8_t* p)
{
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

} // namespace

std::array<std::uint8_t, RreqMessage::kWireSize> RreqMessage::serialize() const
{
    std::array<std::uint8_t, kWireSize> buf{};
    buf[0] = type;
    put_u16(&buf[1], 0); // reserved
    buf[3] = hop_count;
    put_u32(&buf[4], broadcast_id);
    put_u32(&buf[8], dest_addr);
    put_u32(&buf[12], dest_seq);
    put_u32(&buf[16], src_addr);
    put_u32(&buf[20], src_seq);
    const auto bits = std::bit_cast<std::uint64_t>(cost_fpd);
    put_u32(&buf[24], static_cast<std::uint32_t>(bits >> 32));
    put_u32(&buf[28], static_cast<std::uint32_t>(bits));
    return buf;
}

RreqMessage RreqMessage::parse(const std::array<std::uint8_t, kWireSize>& buf)
{
    RreqMessage m;
    m.type = buf[0];
    m.hop_count = buf[3];
    m.broadcast_id = get_u32(&buf[4]);
    m.dest_addr = get_u32(&buf[8]);
    m.dest_seq = get_u32(&buf[12]);
    m.src_addr = get_u32(&buf[16]);
    m.src_seq = get_u32(&buf[20]);
    const std::uint64_t bits =
        (std::uint64_t(get_u32(&buf[24])) << 32) | get_u32(&buf[28]);
    m.cost_fpd = std::bit_cast<double>(bits);
    return m;
}

const char* frame_kind_name(FrameKind k)
{
    switch (k) {
    case FrameKind::Rts: return "RTS";
    case FrameKind::Cts: return "CTS";
    case FrameKind::Data: return "DATA";
    case FrameKind::Ack: return "ACK";
    }
    return "?";
}

const char* packet_kind_name(const NetPacket& p)
{
    struct Visitor {
        const char* operator()(const DataPacket&) const { return "CBR"; }
        const char* operator()(const RreqMessage&) const { return "RREQ"; }
        const char* operator()(const RrepMessage&) const { return "RREP"; }
        const char* operator()(const RerrMessage&) const { return "RERR"; }
        const char* operator()(const WarnMessage&) const { return "WARN"; }
    };
    return std::visit(Visitor{}, p);
}

bool is_routing_packet(const NetPacket& p)
{
    return !std::holds_alternative<DataPacket>(p);
}

} // namespace manetsim
