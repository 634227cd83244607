"""Shared link-layer types and the static protocol-name registries."""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Optional, Tuple

HEADER_LEN = 14
LLC_LEN = 3
SNAP_LEN = 5
MIN_FRAME = 60
MAX_FRAME = 1514
MAX_PAYLOAD = 1500
MAX_LLC_PAYLOAD = MAX_PAYLOAD - LLC_LEN
MAX_SNAP_PAYLOAD = MAX_PAYLOAD - LLC_LEN - SNAP_LEN
MIN_ETHER_TYPE = 0x0600

# Raw frames are plain immutable ``bytes``; no preamble, SOF or FCS.
RawFrame = bytes
Span = Tuple[int, int]


def is_length_conformant(frame: bytes) -> bool:
    return MIN_FRAME <= len(frame) <= MAX_FRAME


@dataclass(frozen=True, slots=True)
class MacAddress:
    octets: bytes

    def __post_init__(self):
        if not isinstance(self.octets, bytes):
            object.__setattr__(self, "octets", bytes(self.octets))
        if len(self.octets) != 6:
            raise ValueError(f"MAC address needs 6 octets, got {len(self.octets)}")

    @classmethod
    def parse(cls, text: str) -> MacAddress:
        parts = text.replace("-", ":").split(":")
        if len(parts) != 6 or not all(len(p) == 2 for p in parts):
            raise ValueError(f"not a MAC address: {text!r}")
        return cls(bytes(int(p, 16) for p in parts))

    def is_broadcast(self) -> bool:
        return self.octets == b"\xff\xff\xff\xff\xff\xff"

    def is_group(self) -> bool:
        return bool(self.octets[0] & 0x01)

    def __bytes__(self) -> bytes:
        return self.octets

    def __str__(self) -> str:
        return self.octets.hex(":")


BROADCAST = MacAddress(b"\xff" * 6)


class FrameKind(enum.Enum):
    """Classification verdict: one of the four frame formats or an invalid reason."""

    ETHERNET_II = "EthernetII"
    IEEE_8023_LLC = "Ieee8023Llc"
    IEEE_8023_SNAP = "Ieee8023Snap"
    NOVELL_RAW = "NovellRaw"
    TOO_SHORT = "Invalid(TooShort)"
    TYPE_LENGTH_GAP = "Invalid(TypeLengthGap)"
    LENGTH_EXCEEDS_FRAME = "Invalid(LengthExceedsFrame)"
    TRUNCATED_LLC = "Invalid(TruncatedLlc)"
    TRUNCATED_SNAP = "Invalid(TruncatedSnap)"

    @property
    def is_valid(self) -> bool:
        return not self.value.startswith("Invalid")

    @property
    def reason(self) -> Optional[str]:
        """Reason code for invalid verdicts, e.g. ``"TypeLengthGap"``."""
        if self.is_valid:
            return None
        return self.value[len("Invalid("):-1]

    @classmethod
    def from_name(cls, name: str) -> FrameKind:
        for kind in cls:
            if name in (kind.value, kind.name, kind.reason):
                return kind
        raise ValueError(f"unknown frame kind: {name!r}")

    def __str__(self) -> str:
        return self.value


def sap_value(sap: int) -> int:
    """Upper 7 bits of a DSAP/SSAP byte; the low bit is the I/G or C/R flag."""
    return (sap & 0xFF) >> 1


@dataclass(frozen=True, slots=True)
class LlcHeader:
    dsap: int
    ssap: int
    control: int

    @property
    def ig_bit(self) -> int:
        """0 = individual, 1 = group."""
        return self.dsap & 0x01

    @property
    def cr_bit(self) -> int:
        """0 = command, 1 = response."""
        return self.ssap & 0x01

    def __bytes__(self) -> bytes:
        return bytes((self.dsap, self.ssap, self.control))


@dataclass(frozen=True, slots=True)
class SnapHeader:
    oui: bytes
    pid: int

    def __post_init__(self):
        if len(self.oui) != 3:
            raise ValueError("OUI must be 3 octets")

    @property
    def pid_is_ether_type(self) -> bool:
        return self.oui == b"\x00\x00\x00"

    def __bytes__(self) -> bytes:
        return self.oui + self.pid.to_bytes(2, "big")


@dataclass(frozen=True, slots=True)
class DissectedFrame:
    """Structured view over ``raw``. Spans are ``(offset, length)`` into it.

    ``dst``, ``src`` and ``type_or_length`` are None only for
    ``FrameKind.TOO_SHORT`` frames, which have no complete header.
    """

    raw: bytes
    kind: FrameKind
    dst: Optional[MacAddress]
    src: Optional[MacAddress]
    type_or_length: Optional[int]
    llc: Optional[LlcHeader]
    snap: Optional[SnapHeader]
    payload_span: Span
    trailer_span: Optional[Span]
    length_conformant: bool

    @property
    def payload(self) -> memoryview:
        off, n = self.payload_span
        return memoryview(self.raw)[off:off + n]

    @property
    def trailer(self) -> bytes:
        if self.trailer_span is None:
            return b""
        off, n = self.trailer_span
        return self.raw[off:off + n]


class Registry(Mapping):
    """Read-only code-to-name table whose lookups never fail."""

    def __init__(self, entries: Mapping, width: int = 4):
        self._entries = dict(entries)
        self._width = width

    def extended(self, more: Mapping) -> Registry:
        return Registry({**self._entries, **more}, self._width)

    def name(self, code) -> str:
        try:
            return self._entries[code]
        except KeyError:
            return f"unknown ({self.hex(code)})"

    def hex(self, code) -> str:
        if isinstance(code, (bytes, bytearray)):
            return "0x" + bytes(code).hex()
        return f"0x{code:0{self._width}x}"

    def __getitem__(self, code):
        return self._entries[code]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)


ETHER_TYPES = Registry({
    0x0800: "IP",
    0x0806: "ARP",
    0x8035: "RARP",
    0x809B: "AppleTalk",
    0x8137: "IPX",
    0x86DD: "IPv6",
})

# Keyed by SAP byte with the I/G (C/R) bit cleared.
LSAPS = Registry({
    0x00: "NULL LSAP",
    0x06: "IP",
    0x42: "Spanning Tree BPDU",
    0xAA: "SNAP",
    0xE0: "NetWare",
    0xF0: "NetBIOS",
    0xFE: "ISO Network Layer",
}, width=2)

OUIS = Registry({
    b"\x00\x00\x00": "Encapsulated Ethernet",
    b"\x00\x00\x0c": "Cisco",
}, width=6)

SNAP_PROTOCOLS = Registry({
    (b"\x00\x00\x0c", 0x2000): "CDP",
    (b"\x00\x00\x0c", 0x2003): "VTP",
    (b"\x00\x00\x0c", 0x2004): "DTP",
})


def lsap_name(sap: int, registry: Registry = LSAPS) -> str:
    if (sap & 0xFE) in registry:
        return registry[sap & 0xFE]
    return registry.name(sap)
