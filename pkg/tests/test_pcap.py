import io
import struct

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ethframes.pcap import (
    BadMagic,
    MalformedRecord,
    PcapReader,
    PcapRecord,
    RecordTooLarge,
    TruncatedRecord,
    UnsupportedLinkType,
    read_pcap,
    write_pcap,
)
from golden import ARP_FRAME, BPDU_FRAME, CDP_FRAME


def _write(records, **kw):
    buf = io.BytesIO()
    n = write_pcap(records, buf, **kw)
    assert n == len(buf.getvalue())
    return buf.getvalue()


def byte_swap(data: bytes) -> bytes:
    """Rewrite every header field of a native little-endian pcap in big-endian order."""
    out = bytearray(data)
    out[0:24] = struct.pack(">IHHiIII", *struct.unpack("<IHHiIII", data[0:24]))
    pos = 24
    while pos < len(data):
        fields = struct.unpack("<IIII", data[pos:pos + 16])
        out[pos:pos + 16] = struct.pack(">IIII", *fields)
        pos += 16 + fields[2]
    return bytes(out)


def test_header_only():
    data = _write([])
    assert len(data) == 24
    assert list(read_pcap(io.BytesIO(data))) == []


def test_one_frame():
    rec = PcapRecord.of(ARP_FRAME, 1, 2)
    data = _write([rec])
    assert len(data) == 24 + 16 + 60
    (back,) = read_pcap(io.BytesIO(data))
    assert back == rec
    assert back.incl_len == back.orig_len == 60


def test_written_header_fields():
    reader = PcapReader(io.BytesIO(_write([])))
    h = reader.header
    assert (h.magic, h.version_major, h.version_minor) == (0xA1B2C3D4, 2, 4)
    assert (h.thiszone, h.sigfigs, h.snaplen, h.linktype) == (0, 0, 65535, 1)


@pytest.mark.skipif(struct.pack("=I", 1) != struct.pack("<I", 1), reason="swap oracle assumes a little-endian host")
def test_byte_swapped_file_reads_identically():
    records = [PcapRecord.of(f, i, 7 * i) for i, f in enumerate((ARP_FRAME, BPDU_FRAME, CDP_FRAME))]
    native = _write(records)
    swapped = byte_swap(native)
    assert swapped != native
    assert PcapReader(io.BytesIO(swapped)).byteorder == ">"
    assert list(read_pcap(io.BytesIO(swapped))) == list(read_pcap(io.BytesIO(native))) == records


records_st = st.lists(st.builds(
    lambda frame, sec, usec, extra: PcapRecord(sec, usec, len(frame), len(frame) + extra, frame),
    st.binary(max_size=1600), st.integers(0, 2**32 - 1), st.integers(0, 999_999),
    st.integers(0, 1000)), max_size=20)


@given(records_st)
def test_round_trip(records):
    assert list(read_pcap(io.BytesIO(_write(records)))) == records


def test_bad_magic():
    with pytest.raises(BadMagic, match="bad magic"):
        PcapReader(io.BytesIO(b"this is not a pcap file at all"))
    with pytest.raises(BadMagic):
        PcapReader(io.BytesIO(b""))
    nano = struct.pack("<IHHiIII", 0xA1B23C4D, 2, 4, 0, 0, 65535, 1)
    with pytest.raises(BadMagic):
        PcapReader(io.BytesIO(nano))


def test_unsupported_link_type():
    raw = struct.pack("<IHHiIII", 0xA1B2C3D4, 2, 4, 0, 0, 65535, 105)
    with pytest.raises(UnsupportedLinkType) as info:
        PcapReader(io.BytesIO(raw))
    assert info.value.linktype == 105


def test_truncated_record_keeps_earlier_records():
    data = _write([PcapRecord.of(ARP_FRAME), PcapRecord.of(BPDU_FRAME)])
    got = []
    with pytest.raises(TruncatedRecord) as info:
        for rec in read_pcap(io.BytesIO(data[:-5])):
            got.append(rec)
    assert info.value.index == 1
    assert "record 1" in str(info.value)
    assert got == [PcapRecord.of(ARP_FRAME)]

    with pytest.raises(TruncatedRecord) as info:
        list(read_pcap(io.BytesIO(data[:24 + 16 + 60 + 8])))
    assert info.value.index == 1


def test_lying_incl_len_is_refused_before_reading():
    header = struct.pack("<IHHiIII", 0xA1B2C3D4, 2, 4, 0, 0, 65535, 1)
    rec = struct.pack("<IIII", 0, 0, 0xFFFFFFF0, 0xFFFFFFF0)

    class Guarded(io.BytesIO):
        def read(self, n=-1):
            assert n is not None and 0 <= n <= 65535
            return super().read(n)

    with pytest.raises(MalformedRecord):
        list(read_pcap(Guarded(header + rec + b"abc")))


def test_write_rejects_oversized_frames():
    with pytest.raises(RecordTooLarge):
        _write([PcapRecord.of(bytes(100))], snaplen=64)


def test_6411_record_corpus_reads_back():
    from ethframes.corpus import generate_corpus, parse_mix
    records = generate_corpus(parse_mix("e2=6318,llc=88,snap=5"), seed=1)
    data = _write(records)
    back = list(read_pcap(io.BytesIO(data)))
    assert len(back) == 6411
    assert back == records
