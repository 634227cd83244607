import pytest
from hypothesis import given
from hypothesis import strategies as st

from ethframes.frame_model import (
    ETHER_TYPES,
    LSAPS,
    SNAP_PROTOCOLS,
    FrameKind,
    LlcHeader,
    MacAddress,
    Registry,
    SnapHeader,
    is_length_conformant,
    lsap_name,
    sap_value,
)

# One-line oracle: halving by integer division, not a shift.
SAP_TABLE = [b // 2 for b in range(256)]


def test_sap_value_matches_table():
    assert [sap_value(b) for b in range(256)] == SAP_TABLE


@pytest.mark.parametrize("byte, value, low", [(0x42, 0x21, 0), (0x00, 0x00, 0), (0xAB, 0x55, 1)])
def test_sap_value_examples(byte, value, low):
    assert sap_value(byte) == value
    assert LlcHeader(byte, byte, 3).ig_bit == low
    assert LlcHeader(byte, byte, 3).cr_bit == low


def test_seven_bits_give_128_protocols():
    assert len({sap_value(b) for b in range(256)}) == 128


@given(st.binary(min_size=6, max_size=6))
def test_mac_text_round_trip(octets):
    mac = MacAddress(octets)
    text = str(mac)
    assert text == text.lower()
    assert len(text) == 17
    assert MacAddress.parse(text) == mac


def test_mac_flags():
    assert MacAddress.parse("ff:ff:ff:ff:ff:ff").is_broadcast()
    assert MacAddress.parse("ff:ff:ff:ff:ff:ff").is_group()
    assert MacAddress.parse("01:80:c2:00:00:00").is_group()
    assert not MacAddress.parse("01:80:c2:00:00:00").is_broadcast()
    assert not MacAddress.parse("00:b0:d0:49:2a:b9").is_group()


@pytest.mark.parametrize("octets", [b"", b"\x00" * 5, b"\x00" * 7])
def test_mac_needs_six_octets(octets):
    with pytest.raises(ValueError):
        MacAddress(octets)


def test_mac_parse_rejects_garbage():
    with pytest.raises(ValueError):
        MacAddress.parse("00:11:22:33:44")


def test_registry_minimum_contents():
    assert ETHER_TYPES[0x0800] == "IP"
    assert ETHER_TYPES[0x0806] == "ARP"
    assert LSAPS[0x06] == "IP"
    assert LSAPS[0x42] == "Spanning Tree BPDU"
    assert LSAPS[0xAA] == "SNAP"
    assert SNAP_PROTOCOLS[(b"\x00\x00\x0c", 0x2000)] == "CDP"


def test_registry_lookup_is_total():
    for code in range(0x10000):
        assert ETHER_TYPES.name(code).isprintable()
    for sap in range(256):
        assert lsap_name(sap).isprintable()
    assert ETHER_TYPES.name(0x1234) == "unknown (0x1234)"
    assert lsap_name(0x12) == "unknown (0x12)"
    assert lsap_name(0x43) == "Spanning Tree BPDU"


def test_registry_extension_leaves_original_alone():
    more = ETHER_TYPES.extended({0x88CC: "LLDP"})
    assert more.name(0x88CC) == "LLDP"
    assert ETHER_TYPES.name(0x88CC) == "unknown (0x88cc)"
    assert isinstance(more, Registry) and more.name(0x0800) == "IP"


def test_length_conformance_bounds():
    assert not is_length_conformant(bytes(59))
    assert is_length_conformant(bytes(60))
    assert is_length_conformant(bytes(1514))
    assert not is_length_conformant(bytes(1515))


def test_frame_kind_names():
    assert str(FrameKind.ETHERNET_II) == "EthernetII"
    assert FrameKind.TYPE_LENGTH_GAP.reason == "TypeLengthGap"
    assert FrameKind.ETHERNET_II.reason is None
    assert FrameKind.from_name("Invalid(TruncatedSnap)") is FrameKind.TRUNCATED_SNAP
    assert FrameKind.from_name("Ieee8023Llc") is FrameKind.IEEE_8023_LLC
    assert sum(k.is_valid for k in FrameKind) == 4
    with pytest.raises(ValueError):
        FrameKind.from_name("Token Ring")


def test_snap_header_oui_semantics():
    assert SnapHeader(b"\x00\x00\x00", 0x0800).pid_is_ether_type
    assert not SnapHeader(b"\x00\x00\x0c", 0x2000).pid_is_ether_type
    with pytest.raises(ValueError):
        SnapHeader(b"\x00\x00", 0x0800)
