"""Deterministic synthetic captures with a requested mix of frame kinds."""

from __future__ import annotations

import random
import struct
from collections.abc import Mapping
from typing import Dict, List

from .builder import build_8023_llc, build_8023_snap, build_ethernet_ii, build_novell_raw
from .frame_model import (
    MAX_LLC_PAYLOAD,
    MAX_PAYLOAD,
    MAX_SNAP_PAYLOAD,
    FrameKind,
    LlcHeader,
    MacAddress,
)
from .pcap import PcapRecord

MIX_KEYS = {
    "e2": FrameKind.ETHERNET_II,
    "llc": FrameKind.IEEE_8023_LLC,
    "snap": FrameKind.IEEE_8023_SNAP,
    "novell": FrameKind.NOVELL_RAW,
}

_ETHER_TYPES = (0x0800, 0x0806, 0x86DD, 0x8137)
_SAPS = (0x06, 0x42, 0xE0, 0xF0, 0xFE)
_SNAP_IDS = ((b"\x00\x00\x00", 0x0800), (b"\x00\x00\x00", 0x0806),
             (b"\x00\x00\x0c", 0x2000), (b"\x00\x00\x0c", 0x2003))
_BASE_TS = 1_113_955_200


def parse_mix(text: str) -> Dict[FrameKind, int]:
    """Parse ``e2=6318,llc=88,snap=5`` into per-kind counts; omitted kinds are 0."""
    mix = {kind: 0 for kind in MIX_KEYS.values()}
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key.strip() not in MIX_KEYS:
            raise ValueError(f"bad mix entry {item!r}; expected one of "
                             f"{', '.join(k + '=<n>' for k in MIX_KEYS)}")
        count = int(value)
        if count < 0:
            raise ValueError(f"negative count in {item!r}")
        mix[MIX_KEYS[key.strip()]] = count
    return mix


def _size(rng: random.Random, cap: int) -> int:
    # Mostly small frames, with an occasional full-size one.
    if rng.random() < 0.1:
        return rng.randint(0, cap)
    return min(cap, int(rng.expovariate(1 / 48)))


def _body(rng: random.Random, n: int) -> bytes:
    data = bytearray(rng.randbytes(n))
    if data[:2] == b"\xff\xff":
        data[0] = 0
    return bytes(data)


def _arp(rng: random.Random) -> bytes:
    return struct.pack("!HHBBH6s4s6s4s", 1, 0x0800, 6, 4, rng.choice((1, 2)),
                       rng.randbytes(6), rng.randbytes(4), rng.randbytes(6), rng.randbytes(4))


def _bpdu(rng: random.Random) -> bytes:
    root = rng.randbytes(6)
    return struct.pack("!HBBBH6sIH6sHHHHH", 0, 0, 0, rng.choice((0x00, 0x01, 0x80)),
                       0x8000, root, rng.choice((0, 4, 19, 100)), 0x8000, rng.randbytes(6),
                       0x8000 | rng.randint(1, 48), 0, 20 * 256, 2 * 256, 15 * 256)


def random_frame(rng: random.Random, kind: FrameKind) -> bytes:
    dst = MacAddress(rng.randbytes(6))
    src = MacAddress(rng.randbytes(6))
    if kind is FrameKind.ETHERNET_II:
        ether_type = rng.choice(_ETHER_TYPES) if rng.random() < 0.9 else rng.randint(0x0600, 0xFFFF)
        if ether_type == 0x0806:
            return build_ethernet_ii(dst, src, ether_type, _arp(rng))
        return build_ethernet_ii(dst, src, ether_type, _body(rng, _size(rng, MAX_PAYLOAD)))
    if kind is FrameKind.IEEE_8023_LLC:
        sap = rng.choice(_SAPS)
        if sap == 0x42:
            return build_8023_llc(dst, src, LlcHeader(sap, sap, 0x03), _bpdu(rng))
        return build_8023_llc(dst, src, LlcHeader(sap, sap, 0x03),
                              _body(rng, _size(rng, MAX_LLC_PAYLOAD)))
    if kind is FrameKind.IEEE_8023_SNAP:
        oui, pid = rng.choice(_SNAP_IDS)
        return build_8023_snap(dst, src, oui, pid, _body(rng, _size(rng, MAX_SNAP_PAYLOAD)))
    if kind is FrameKind.NOVELL_RAW:
        n = max(2, _size(rng, MAX_PAYLOAD))
        return build_novell_raw(dst, src, b"\xff\xff" + rng.randbytes(n - 2))
    raise ValueError(f"cannot generate {kind}")


def generate_corpus(mix: Mapping, seed: int = 0) -> List[PcapRecord]:
    rng = random.Random(seed)
    kinds = [kind for kind in MIX_KEYS.values() for _ in range(mix.get(kind, 0))]
    rng.shuffle(kinds)
    records = []
    for i, kind in enumerate(kinds):
        frame = random_frame(rng, kind)
        records.append(PcapRecord.of(frame, _BASE_TS + i // 100, (i % 100) * 10_000))
    return records
