"""Build wire-valid frames in each of the four formats, zero-padded to 60 octets."""

from __future__ import annotations

from .classifier import IPX_NO_CHECKSUM, SNAP_SIGNATURE
from .frame_model import (
    MAX_LLC_PAYLOAD,
    MAX_PAYLOAD,
    MAX_SNAP_PAYLOAD,
    MIN_ETHER_TYPE,
    MIN_FRAME,
    LlcHeader,
    MacAddress,
)


class BuildError(ValueError):
    pass


class NotAnEtherType(BuildError):
    pass


class PayloadTooLarge(BuildError):
    pass


class AmbiguousHeader(BuildError):
    pass


class NotRawIpx(BuildError):
    pass


def _pad(frame: bytes) -> bytes:
    if len(frame) < MIN_FRAME:
        return frame + bytes(MIN_FRAME - len(frame))
    return frame


def _check_size(payload: bytes, limit: int) -> None:
    if len(payload) > limit:
        raise PayloadTooLarge(f"payload of {len(payload)} octets exceeds {limit}")


def build_raw_unchecked(dst: MacAddress, src: MacAddress, type_or_length: int,
                        body: bytes = b"", pad: bool = False) -> bytes:
    """Assemble a frame with no validation, for negative-path tests."""
    frame = bytes(dst) + bytes(src) + type_or_length.to_bytes(2, "big") + bytes(body)
    return _pad(frame) if pad else frame


def build_ethernet_ii(dst: MacAddress, src: MacAddress, ether_type: int,
                      payload: bytes) -> bytes:
    if not MIN_ETHER_TYPE <= ether_type <= 0xFFFF:
        raise NotAnEtherType(f"0x{ether_type:04x} is below 0x0600")
    _check_size(payload, MAX_PAYLOAD)
    return build_raw_unchecked(dst, src, ether_type, payload, pad=True)


def build_8023_llc(dst: MacAddress, src: MacAddress, llc: LlcHeader,
                   payload: bytes) -> bytes:
    _check_size(payload, MAX_LLC_PAYLOAD)
    header = bytes(llc)
    if header == SNAP_SIGNATURE:
        raise AmbiguousHeader("AA AA 03 announces SNAP; use build_8023_snap")
    if header[:2] == IPX_NO_CHECKSUM:
        raise AmbiguousHeader("DSAP=SSAP=FF is read as a raw Novell frame")
    return build_raw_unchecked(dst, src, len(header) + len(payload),
                               header + bytes(payload), pad=True)


def build_8023_snap(dst: MacAddress, src: MacAddress, oui: bytes, pid: int,
                    payload: bytes) -> bytes:
    if len(oui) != 3:
        raise ValueError("OUI must be 3 octets")
    _check_size(payload, MAX_SNAP_PAYLOAD)
    body = SNAP_SIGNATURE + bytes(oui) + pid.to_bytes(2, "big") + bytes(payload)
    return build_raw_unchecked(dst, src, len(body), body, pad=True)


def build_novell_raw(dst: MacAddress, src: MacAddress, ipx_payload: bytes) -> bytes:
    if bytes(ipx_payload[:2]) != IPX_NO_CHECKSUM:
        raise NotRawIpx("raw IPX must start with the FF FF checksum word")
    _check_size(ipx_payload, MAX_PAYLOAD)
    return build_raw_unchecked(dst, src, len(ipx_payload), ipx_payload, pad=True)
