"""Classic (microsecond) pcap reading and writing, Ethernet link type only."""

from __future__ import annotations

import struct
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import BinaryIO

MAGIC = 0xA1B2C3D4
LINKTYPE_ETHERNET = 1
DEFAULT_SNAPLEN = 65535
FILE_HEADER_LEN = 24
RECORD_HEADER_LEN = 16
_CHUNK = 1 << 16


class PcapError(Exception):
    pass


class BadMagic(PcapError):
    def __init__(self, magic: bytes):
        super().__init__(f"bad magic {magic.hex() or '(empty file)'}: not a classic pcap file")


class UnsupportedLinkType(PcapError):
    def __init__(self, linktype: int):
        self.linktype = linktype
        super().__init__(f"unsupported link type {linktype} (only 1, Ethernet, is read)")


class TruncatedRecord(PcapError):
    def __init__(self, index: int, what: str):
        self.index = index
        super().__init__(f"record {index}: truncated {what}")


class MalformedRecord(PcapError):
    def __init__(self, index: int, what: str):
        self.index = index
        super().__init__(f"record {index}: {what}")


class RecordTooLarge(PcapError):
    pass


@dataclass(frozen=True)
class PcapFileHeader:
    magic: int = MAGIC
    version_major: int = 2
    version_minor: int = 4
    thiszone: int = 0
    sigfigs: int = 0
    snaplen: int = DEFAULT_SNAPLEN
    linktype: int = LINKTYPE_ETHERNET


@dataclass(frozen=True)
class PcapRecord:
    ts_sec: int
    ts_usec: int
    incl_len: int
    orig_len: int
    frame: bytes

    @classmethod
    def of(cls, frame: bytes, ts_sec: int = 0, ts_usec: int = 0,
           orig_len: int | None = None) -> PcapRecord:
        frame = bytes(frame)
        return cls(ts_sec, ts_usec, len(frame),
                   len(frame) if orig_len is None else orig_len, frame)


_HEADER = "IHHiIII"
_RECORD = "IIII"


class PcapReader:
    """Iterate over the records of a pcap stream.

    The global header is parsed on construction, so a bad magic or link
    type fails immediately; records are read lazily.
    """

    def __init__(self, stream: BinaryIO):
        self.stream = stream
        raw = stream.read(FILE_HEADER_LEN)
        if len(raw) < 4:
            raise BadMagic(raw)
        if raw[:4] == MAGIC.to_bytes(4, "little"):
            self.byteorder = "<"
        elif raw[:4] == MAGIC.to_bytes(4, "big"):
            self.byteorder = ">"
        else:
            raise BadMagic(raw[:4])
        if len(raw) < FILE_HEADER_LEN:
            raise PcapError("truncated pcap file header")
        self.header = PcapFileHeader(*struct.unpack(self.byteorder + _HEADER, raw))
        if self.header.linktype != LINKTYPE_ETHERNET:
            raise UnsupportedLinkType(self.header.linktype)
        self._record = struct.Struct(self.byteorder + _RECORD)

    def _read_exact(self, n: int) -> bytes:
        # Chunked so a lying length field cannot force one huge allocation.
        parts = []
        while n > 0:
            chunk = self.stream.read(min(n, _CHUNK))
            if not chunk:
                break
            parts.append(chunk)
            n -= len(chunk)
        return b"".join(parts)

    def __iter__(self) -> Iterator[PcapRecord]:
        snaplen = self.header.snaplen
        index = 0
        while True:
            raw = self.stream.read(RECORD_HEADER_LEN)
            if not raw:
                return
            if len(raw) < RECORD_HEADER_LEN:
                raise TruncatedRecord(index, "record header")
            ts_sec, ts_usec, incl_len, orig_len = self._record.unpack(raw)
            if incl_len > snaplen:
                raise MalformedRecord(index, f"incl_len {incl_len} exceeds snaplen {snaplen}")
            frame = self._read_exact(incl_len)
            if len(frame) < incl_len:
                raise TruncatedRecord(index, f"frame data ({len(frame)} of {incl_len} octets)")
            yield PcapRecord(ts_sec, ts_usec, incl_len, orig_len, frame)
            index += 1


def read_pcap(stream: BinaryIO) -> Iterator[PcapRecord]:
    return iter(PcapReader(stream))


def write_pcap(records: Iterable[PcapRecord], stream: BinaryIO,
               snaplen: int = DEFAULT_SNAPLEN) -> int:
    """Write a native-order pcap file and return the number of octets written."""
    h = PcapFileHeader(snaplen=snaplen)
    written = stream.write(struct.pack("=" + _HEADER, h.magic, h.version_major,
                                       h.version_minor, h.thiszone, h.sigfigs,
                                       h.snaplen, h.linktype))
    record = struct.Struct("=" + _RECORD)
    for rec in records:
        if len(rec.frame) > snaplen:
            raise RecordTooLarge(f"{len(rec.frame)}-octet frame exceeds snaplen {snaplen}")
        if rec.incl_len != len(rec.frame):
            raise ValueError(f"incl_len {rec.incl_len} does not match {len(rec.frame)} stored octets")
        written += stream.write(record.pack(rec.ts_sec, rec.ts_usec, rec.incl_len, rec.orig_len))
        written += stream.write(rec.frame)
    return written
