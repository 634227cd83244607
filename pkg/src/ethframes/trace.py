"""Indented text traces in the style of ethereal's packet-details pane."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .dissector import decode_trailer
from .frame_model import (
    ETHER_TYPES,
    HEADER_LEN,
    LSAPS,
    OUIS,
    DissectedFrame,
    FrameKind,
    MacAddress,
    Span,
)
from .payload import (
    ARP_LEN,
    ArpPacket,
    Decoded,
    OpaquePayload,
    StpBpdu,
    decode_payload,
    identify_snap_protocol,
)

INDENT = "  "

LINK_TITLES = {
    FrameKind.ETHERNET_II: "Ethernet II",
    FrameKind.IEEE_8023_LLC: "IEEE 802.3 Ethernet",
    FrameKind.IEEE_8023_SNAP: "IEEE 802.3 Ethernet",
    FrameKind.NOVELL_RAW: "Novell raw IEEE 802.3",
}

U_FUNCTIONS = {
    0x03: "UI", 0x0F: "DM", 0x43: "DISC", 0x63: "UA",
    0x6F: "SABME", 0x87: "FRMR", 0xAF: "XID", 0xE3: "TEST",
}
S_FUNCTIONS = {0: "RR", 1: "RNR", 2: "REJ", 3: "Unknown"}

STP_VERSIONS = {0: "Spanning Tree", 2: "Rapid Spanning Tree", 3: "Multiple Spanning Tree"}
BPDU_TYPES = {0x00: "Configuration", 0x02: "Rapid/Multiple Spanning Tree",
              0x80: "Topology Change Notification"}


def _mac(mac: MacAddress) -> str:
    if mac.is_broadcast():
        return f"{mac} (Broadcast)"
    return str(mac)


def _named(registry, code, width: int) -> str:
    return f"{registry.get(code, 'Unknown')} (0x{code:0{width}x})"


def _sap(sap: int) -> str:
    return f"{LSAPS.get(sap & 0xFE, 'Unknown')} (0x{sap:02x})"


def control_field(ctrl: int) -> str:
    if ctrl & 0x01 == 0:
        return f"I, N(S)={ctrl >> 1} (0x{ctrl:02x})"
    if ctrl & 0x03 == 0x01:
        return f"S, func={S_FUNCTIONS[(ctrl >> 2) & 0x03]} (0x{ctrl:02x})"
    pf = " P" if ctrl & 0x10 else ""
    func = U_FUNCTIONS.get(ctrl & ~0x10 & 0xFF, "Unknown")
    return f"U{pf}, func={func} (0x{ctrl:02x})"


def _seconds(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return repr(float(value))  # n/256 is exact in binary


def _flag_line(flags: int, bit: int, label: str) -> str:
    pattern = ["."] * 8
    pattern[7 - bit] = str((flags >> bit) & 1)
    dots = "".join(pattern[:4]) + " " + "".join(pattern[4:])
    state = "Yes" if flags >> bit & 1 else "No"
    return f"{dots} = {label}: {state}"


def _upper_length(decoded: Decoded) -> int:
    if isinstance(decoded, OpaquePayload):
        return len(decoded.data)
    return decoded.wire_length


def trace_spans(frame: DissectedFrame, decoded: Decoded) -> List[Tuple[str, Span]]:
    """Byte ranges the trace accounts for, labelled by the block that shows them."""
    n = len(frame.raw)
    if frame.kind is FrameKind.TOO_SHORT:
        return [("data", (0, n))] if n else []
    spans = [("link", (0, HEADER_LEN))]
    if frame.llc is not None:
        spans.append(("llc", (HEADER_LEN, 3)))
    if frame.snap is not None:
        spans.append(("snap", (HEADER_LEN + 3, 5)))
    off, length = frame.payload_span
    if not frame.kind.is_valid:
        if n > HEADER_LEN:
            spans.append(("data", (HEADER_LEN, n - HEADER_LEN)))
        return spans
    used = min(_upper_length(decoded), length)
    if used:
        spans.append(("upper", (off, used)))
    if frame.kind is FrameKind.ETHERNET_II and isinstance(decoded, ArpPacket):
        pad = decode_trailer(frame, ARP_LEN)
        if pad is not None:
            spans.append(("trailer", pad))
    elif used < length:
        spans.append(("extra", (off + used, length - used)))
    if frame.trailer_span is not None:
        spans.append(("trailer", frame.trailer_span))
    return spans


def _hex(raw: bytes, span: Span) -> str:
    off, n = span
    return raw[off:off + n].hex()


def render_trace(frame: DissectedFrame, decoded: Optional[Decoded] = None) -> str:
    if decoded is None:
        decoded = decode_payload(frame)
    raw = frame.raw
    spans = trace_spans(frame, decoded)
    trailer = "".join(_hex(raw, s) for label, s in spans if label == "trailer")
    extra = "".join(_hex(raw, s) for label, s in spans if label == "extra")
    lines: List[str] = []

    def block(title: str, *fields: str) -> None:
        lines.append(title)
        lines.extend(INDENT + f for f in fields)

    kind = frame.kind
    if kind is FrameKind.TOO_SHORT:
        block(f"Invalid frame ({kind.reason})",
              f"Length: {len(raw)}", f"Data: {raw.hex()}")
        return "\n".join(lines) + "\n"

    link = [f"Destination: {_mac(frame.dst)}", f"Source: {_mac(frame.src)}"]
    t = frame.type_or_length
    if not kind.is_valid:
        link.append(f"Type/Length: 0x{t:04x}")
        link.extend(f"Data: {_hex(raw, s)}" for label, s in spans if label == "data")
        block(f"Invalid frame ({kind.reason})", *link)
        return "\n".join(lines) + "\n"

    if kind is FrameKind.ETHERNET_II:
        link.append(f"Type: {_named(ETHER_TYPES, t, 4)}")
    else:
        link.append(f"Length: {t}")
    if trailer:
        link.append(f"Trailer: {trailer}")
    block(LINK_TITLES[kind], *link)

    if frame.llc is not None:
        llc = frame.llc
        fields = [
            f"DSAP: {_sap(llc.dsap)}",
            f"IG Bit: {'Group' if llc.ig_bit else 'Individual'}",
            f"SSAP: {_sap(llc.ssap)}",
            f"CR Bit: {'Response' if llc.cr_bit else 'Command'}",
            f"Control field: {control_field(llc.control)}",
        ]
        if frame.snap is not None:
            snap = frame.snap
            fields.append(f"Organization Code: {OUIS.get(snap.oui, 'Unknown')} "
                          f"(0x{snap.oui.hex()})")
            name = identify_snap_protocol(snap)
            if name.startswith(("OUI ", "unknown")):
                name = "Unknown"
            fields.append(f"PID: {name} (0x{snap.pid:04x})")
        block("Logical-Link Control", *fields)

    if isinstance(decoded, ArpPacket):
        block(*_arp_lines(decoded))
    elif isinstance(decoded, StpBpdu):
        block(*_bpdu_lines(decoded))
    elif kind is FrameKind.NOVELL_RAW:
        data = decoded.data
        fields = [f"Checksum: 0x{data[:2].hex()}"]
        if len(data) > 2:
            fields.append(f"Data: {data[2:].hex()}")
        block("IPX", *fields)
    else:
        fields = [f"Length: {len(decoded.data)}", f"Bytes: {decoded.data.hex()}"]
        if decoded.note:
            fields.append(f"Note: {decoded.note}")
        block(f"Data ({decoded.name})", *fields)
    if extra:
        block("Extra data", f"Bytes: {extra}")
    return "\n".join(lines) + "\n"


def _arp_lines(arp: ArpPacket) -> List[str]:
    op = arp.opcode_name
    if arp.opcode in (1, 2):
        op = f"{op} (0x{arp.opcode:04x})"
    hw = "Ethernet" if arp.hardware_type == 1 else "Unknown"
    title = "Address Resolution Protocol"
    if arp.opcode in (1, 2):
        title += f" ({arp.opcode_name})"
    return [
        title,
        f"Hardware type: {hw} (0x{arp.hardware_type:04x})",
        f"Protocol type: {_named(ETHER_TYPES, arp.protocol_type, 4)}",
        f"Hardware size: {arp.hardware_size}",
        f"Protocol size: {arp.protocol_size}",
        f"Opcode: {op}",
        f"Sender MAC address: {_mac(arp.sender_mac)}",
        f"Sender IP address: {arp.sender_ip} ({arp.sender_ip})",
        f"Target MAC address: {_mac(arp.target_mac)}",
        f"Target IP address: {arp.target_ip} ({arp.target_ip})",
    ]


def _bpdu_lines(b: StpBpdu) -> List[str]:
    proto = "Spanning Tree Protocol" if b.protocol_identifier == 0 else "Unknown"
    return [
        "Spanning Tree Protocol",
        f"Protocol Identifier: {proto} (0x{b.protocol_identifier:04x})",
        f"Protocol Version Identifier: "
        f"{STP_VERSIONS.get(b.protocol_version, 'Unknown')} ({b.protocol_version})",
        f"BPDU Type: {BPDU_TYPES.get(b.bpdu_type, 'Unknown')} (0x{b.bpdu_type:02x})",
        f"BPDU flags: 0x{b.flags:02x}",
        INDENT + _flag_line(b.flags, 7, "Topology Change Acknowledgment"),
        INDENT + _flag_line(b.flags, 0, "Topology Change"),
        f"Root Identifier: {b.root_priority} / {b.root_mac}",
        f"Root Path Cost: {b.root_path_cost}",
        f"Bridge Identifier: {b.bridge_priority} / {b.bridge_mac}",
        f"Port identifier: 0x{b.port_identifier:04x}",
        f"Message Age: {_seconds(b.message_age)}",
        f"Max Age: {_seconds(b.max_age)}",
        f"Hello Time: {_seconds(b.hello_time)}",
        f"Forward Delay: {_seconds(b.forward_delay)}",
    ]
