"""Classify, dissect, build and count the four Ethernet link-layer frame formats."""

from .builder import (
    AmbiguousHeader,
    BuildError,
    NotAnEtherType,
    NotRawIpx,
    PayloadTooLarge,
    build_8023_llc,
    build_8023_snap,
    build_ethernet_ii,
    build_novell_raw,
    build_raw_unchecked,
)
from .classifier import classify
from .dissector import decode_trailer, dissect
from .frame_model import (
    BROADCAST,
    ETHER_TYPES,
    LSAPS,
    OUIS,
    SNAP_PROTOCOLS,
    DissectedFrame,
    FrameKind,
    LlcHeader,
    MacAddress,
    Registry,
    SnapHeader,
    is_length_conformant,
    sap_value,
)
from .payload import (
    ArpPacket,
    OpaquePayload,
    StpBpdu,
    decode_arp,
    decode_payload,
    decode_stp_bpdu,
    identify_snap_protocol,
)
from .pcap import PcapRecord, PcapReader, read_pcap, write_pcap
from .stats import CaptureStats, accumulate, collect, merge, render_report
from .trace import render_trace

__version__ = "0.1.0"
