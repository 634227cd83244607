"""Upper-layer decoders: ARP, spanning-tree BPDUs and SNAP protocol naming."""

from __future__ import annotations

import struct
from dataclasses import dataclass
from fractions import Fraction
from ipaddress import IPv4Address
from typing import Optional, Union

from .frame_model import (
    ETHER_TYPES,
    OUIS,
    SNAP_PROTOCOLS,
    DissectedFrame,
    FrameKind,
    LlcHeader,
    MacAddress,
    SnapHeader,
    lsap_name,
)

ETHERTYPE_ARP = 0x0806
SAP_BPDU = 0x42
ARP_LEN = 28
BPDU_CONFIG_LEN = 35

ARP_OPCODES = {1: "request", 2: "reply"}


class DecodeError(ValueError):
    pass


class TruncatedArp(DecodeError):
    pass


class UnsupportedArpGeometry(DecodeError):
    pass


class NotBpdu(DecodeError):
    pass


class TruncatedBpdu(DecodeError):
    pass


@dataclass(frozen=True)
class ArpPacket:
    hardware_type: int
    protocol_type: int
    hardware_size: int
    protocol_size: int
    opcode: int
    sender_mac: MacAddress
    sender_ip: IPv4Address
    target_mac: MacAddress
    target_ip: IPv4Address

    @property
    def opcode_name(self) -> str:
        return ARP_OPCODES.get(self.opcode, f"unknown (0x{self.opcode:04x})")

    wire_length = ARP_LEN


_ARP = struct.Struct("!HHBBH6s4s6s4s")


def decode_arp(payload) -> ArpPacket:
    if len(payload) < ARP_LEN:
        raise TruncatedArp(f"ARP needs {ARP_LEN} octets, got {len(payload)}")
    htype, ptype, hlen, plen, op, sha, spa, tha, tpa = _ARP.unpack_from(payload)
    if (hlen, plen) != (6, 4):
        raise UnsupportedArpGeometry(f"hardware/protocol sizes {hlen}/{plen}, expected 6/4")
    return ArpPacket(htype, ptype, hlen, plen, op,
                     MacAddress(sha), IPv4Address(spa),
                     MacAddress(tha), IPv4Address(tpa))


@dataclass(frozen=True)
class StpBpdu:
    protocol_identifier: int
    protocol_version: int
    bpdu_type: int
    flags: int
    root_priority: int
    root_mac: MacAddress
    root_path_cost: int
    bridge_priority: int
    bridge_mac: MacAddress
    port_identifier: int
    message_age_raw: int
    max_age_raw: int
    hello_time_raw: int
    forward_delay_raw: int

    wire_length = BPDU_CONFIG_LEN

    @property
    def topology_change(self) -> bool:
        return bool(self.flags & 0x01)

    @property
    def topology_change_ack(self) -> bool:
        return bool(self.flags & 0x80)

    # Timer fields are carried in units of 1/256 second.
    @property
    def message_age(self) -> Fraction:
        return Fraction(self.message_age_raw, 256)

    @property
    def max_age(self) -> Fraction:
        return Fraction(self.max_age_raw, 256)

    @property
    def hello_time(self) -> Fraction:
        return Fraction(self.hello_time_raw, 256)

    @property
    def forward_delay(self) -> Fraction:
        return Fraction(self.forward_delay_raw, 256)


_BPDU = struct.Struct("!HBBBH6sIH6sHHHHH")


def decode_stp_bpdu(payload, llc: LlcHeader) -> StpBpdu:
    if llc.dsap != SAP_BPDU or llc.ssap != SAP_BPDU:
        raise NotBpdu(f"SAPs 0x{llc.dsap:02x}/0x{llc.ssap:02x} are not spanning tree")
    if len(payload) < BPDU_CONFIG_LEN:
        raise TruncatedBpdu(f"BPDU needs {BPDU_CONFIG_LEN} octets, got {len(payload)}")
    (proto, version, btype, flags, rprio, rmac, cost, bprio, bmac,
     port, age, max_age, hello, delay) = _BPDU.unpack_from(payload)
    return StpBpdu(proto, version, btype, flags, rprio, MacAddress(rmac), cost,
                   bprio, MacAddress(bmac), port, age, max_age, hello, delay)


def identify_snap_protocol(snap: SnapHeader) -> str:
    if snap.pid_is_ether_type:
        return ETHER_TYPES.name(snap.pid)
    try:
        return SNAP_PROTOCOLS[(bytes(snap.oui), snap.pid)]
    except KeyError:
        return f"OUI {snap.oui.hex(':')} PID 0x{snap.pid:04x}"


@dataclass(frozen=True)
class OpaquePayload:
    """A payload shown by protocol name and hex only."""

    name: str
    data: bytes
    note: Optional[str] = None


Decoded = Union[ArpPacket, StpBpdu, OpaquePayload]


def payload_name(frame: DissectedFrame) -> str:
    kind = frame.kind
    if kind is FrameKind.ETHERNET_II:
        return ETHER_TYPES.name(frame.type_or_length)
    if kind is FrameKind.IEEE_8023_SNAP:
        return identify_snap_protocol(frame.snap)
    if kind is FrameKind.IEEE_8023_LLC:
        return lsap_name(frame.llc.dsap)
    if kind is FrameKind.NOVELL_RAW:
        return "IPX"
    return "undecoded"


def decode_payload(frame: DissectedFrame) -> Decoded:
    """Decode whatever upper layer is known; fall back to a named opaque payload."""
    payload = frame.payload
    kind = frame.kind
    try:
        if kind is FrameKind.ETHERNET_II and frame.type_or_length == ETHERTYPE_ARP:
            return decode_arp(payload)
        if (kind is FrameKind.IEEE_8023_LLC
                and frame.llc.dsap == SAP_BPDU and frame.llc.ssap == SAP_BPDU):
            return decode_stp_bpdu(payload, frame.llc)
    except DecodeError as exc:
        return OpaquePayload(payload_name(frame), bytes(payload), str(exc))
    return OpaquePayload(payload_name(frame), bytes(payload))


def oui_name(oui: bytes) -> str:
    return OUIS.name(bytes(oui))
