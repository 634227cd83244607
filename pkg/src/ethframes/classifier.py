"""Decide which of the four Ethernet frame formats a byte sequence uses."""

from __future__ import annotations

from .frame_model import (
    HEADER_LEN,
    LLC_LEN,
    MAX_PAYLOAD,
    MIN_ETHER_TYPE,
    SNAP_LEN,
    FrameKind,
)

SNAP_SIGNATURE = b"\xaa\xaa\x03"
IPX_NO_CHECKSUM = b"\xff\xff"


def classify(frame: bytes) -> FrameKind:
    """Return the verdict for ``frame``. Never raises; bad frames get an Invalid kind.

    The 2-byte field after the source address is an EtherType when
    >= 0x0600 and an 802.3 length when <= 1500; values in between are
    rejected. Length-field frames are then told apart by their first data
    bytes: FF FF (raw IPX), AA AA 03 (LLC with SNAP), anything else (LLC).
    Truncation is judged against the declared length, not the captured
    byte count, so trailing pad is never mistaken for header.
    """
    n = len(frame)
    if n < HEADER_LEN:
        return FrameKind.TOO_SHORT
    t = (frame[12] << 8) | frame[13]
    if t >= MIN_ETHER_TYPE:
        return FrameKind.ETHERNET_II
    if t > MAX_PAYLOAD:
        return FrameKind.TYPE_LENGTH_GAP
    if t > n - HEADER_LEN:
        return FrameKind.LENGTH_EXCEEDS_FRAME
    if t >= 2 and frame[14:16] == IPX_NO_CHECKSUM:
        return FrameKind.NOVELL_RAW
    if t < LLC_LEN:
        return FrameKind.TRUNCATED_LLC
    if frame[14:17] == SNAP_SIGNATURE:
        if t < LLC_LEN + SNAP_LEN:
            return FrameKind.TRUNCATED_SNAP
        return FrameKind.IEEE_8023_SNAP
    return FrameKind.IEEE_8023_LLC
