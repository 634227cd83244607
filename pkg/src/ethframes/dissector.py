"""Split a raw frame into addresses, LLC/SNAP headers, payload and trailer spans."""

from __future__ import annotations

from typing import Optional

from .classifier import classify
from .frame_model import (
    HEADER_LEN,
    MAX_FRAME,
    MAX_PAYLOAD,
    MIN_FRAME,
    DissectedFrame,
    FrameKind,
    LlcHeader,
    MacAddress,
    SnapHeader,
    Span,
)

_LLC_KINDS = (FrameKind.IEEE_8023_LLC, FrameKind.IEEE_8023_SNAP)


def dissect(frame: bytes) -> DissectedFrame:
    frame = bytes(frame)
    n = len(frame)
    kind = classify(frame)
    conformant = MIN_FRAME <= n <= MAX_FRAME
    if kind is FrameKind.TOO_SHORT:
        return DissectedFrame(frame, kind, None, None, None, None, None,
                              (0, 0), None, conformant)

    dst = MacAddress(frame[0:6])
    src = MacAddress(frame[6:12])
    t = (frame[12] << 8) | frame[13]
    llc = snap = None
    trailer: Optional[Span] = None

    if kind is FrameKind.ETHERNET_II:
        # Pad cannot be told from data without an upper-layer length;
        # only bytes past the 1500-byte data cap are split off here.
        body = min(n - HEADER_LEN, MAX_PAYLOAD)
        payload = (HEADER_LEN, body)
        if HEADER_LEN + body < n:
            trailer = (HEADER_LEN + body, n - HEADER_LEN - body)
    elif not kind.is_valid:
        payload = (HEADER_LEN, 0)
    else:
        end = HEADER_LEN + t
        if kind in _LLC_KINDS:
            llc = LlcHeader(frame[14], frame[15], frame[16])
        if kind is FrameKind.IEEE_8023_SNAP:
            snap = SnapHeader(frame[17:20], (frame[20] << 8) | frame[21])
            start = 22
        elif kind is FrameKind.IEEE_8023_LLC:
            start = 17
        else:
            start = HEADER_LEN
        payload = (start, end - start)
        if end < n:
            trailer = (end, n - end)

    return DissectedFrame(frame, kind, dst, src, t, llc, snap,
                          payload, trailer, conformant)


def decode_trailer(frame: DissectedFrame, upper_layer_length: int) -> Optional[Span]:
    """Span of Ethernet II payload bytes left over after the upper-layer packet.

    Returns None when the upper layer consumes the whole payload.
    """
    if frame.kind is not FrameKind.ETHERNET_II:
        raise ValueError(f"trailer refinement applies to EthernetII frames, not {frame.kind}")
    off, n = frame.payload_span
    if upper_layer_length < 0 or upper_layer_length > n:
        raise ValueError(
            f"upper-layer length {upper_layer_length} exceeds payload length {n}")
    if upper_layer_length == n:
        return None
    return (off + upper_layer_length, n - upper_layer_length)
