"""ethframes command line: stats, trace, generate and classify."""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Optional, Sequence

from .classifier import classify
from .corpus import MIX_KEYS, generate_corpus, parse_mix
from .dissector import dissect
from .frame_model import HEADER_LEN, FrameKind
from .pcap import PcapError, read_pcap, write_pcap
from .stats import collect, render_report
from .trace import render_trace

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3
EXIT_IO = 4


class _Fail(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _records(path: str) -> Iterator:
    try:
        stream = open(path, "rb")
    except OSError as exc:
        raise _Fail(f"cannot open {path}: {exc.strerror}", EXIT_IO)
    with stream:
        try:
            yield from read_pcap(stream)
        except PcapError as exc:
            raise _Fail(f"{path}: {exc}", EXIT_BAD_INPUT)


def cmd_stats(args) -> int:
    stats = collect((dissect(rec.frame), rec.orig_len) for rec in _records(args.capture))
    sys.stdout.write(render_report(stats, args.format))
    return EXIT_OK


def cmd_trace(args) -> int:
    shown = 0
    out = sys.stdout
    for index, rec in enumerate(_records(args.capture)):
        if args.first is not None and shown >= args.first:
            break
        frame = dissect(rec.frame)
        if args.kind is not None and frame.kind is not args.kind:
            continue
        if shown:
            out.write("\n")
        out.write(f"Frame {index + 1}: {rec.incl_len} bytes captured, {rec.orig_len} on wire\n")
        out.write(render_trace(frame))
        shown += 1
    return EXIT_OK


def cmd_generate(args) -> int:
    records = generate_corpus(args.mix, args.seed)
    try:
        with open(args.output, "wb") as stream:
            write_pcap(records, stream)
    except OSError as exc:
        raise _Fail(f"cannot write {args.output}: {exc.strerror}", EXIT_IO)
    return EXIT_OK


def cmd_classify(args) -> int:
    frame = args.frame
    kind = classify(frame)
    if kind is FrameKind.TOO_SHORT:
        print(kind)
        return EXIT_OK
    t = int.from_bytes(frame[12:HEADER_LEN], "big")
    if kind is FrameKind.ETHERNET_II:
        print(f"{kind} type=0x{t:04x}")
    elif kind.is_valid:
        print(f"{kind} length={t}")
    else:
        print(f"{kind} field=0x{t:04x}")
    return EXIT_OK


def _kind(text: str) -> FrameKind:
    if text in MIX_KEYS:
        return MIX_KEYS[text]
    try:
        return FrameKind.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _mix(text: str):
    try:
        return parse_mix(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _hex_frame(text: str) -> bytes:
    digits = "".join(text.split()).replace(":", "")
    if len(digits) % 2:
        raise argparse.ArgumentTypeError("hex string has an odd number of digits")
    if len(digits) < 2 * HEADER_LEN:
        raise argparse.ArgumentTypeError(f"need at least {2 * HEADER_LEN} hex digits")
    try:
        return bytes.fromhex(digits)
    except ValueError:
        raise argparse.ArgumentTypeError("not a hex string")


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ethframes",
        description="Classify, dissect and count Ethernet II, 802.3/LLC, "
                    "802.3/SNAP and raw Novell frames in pcap files.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="frame-kind population report")
    p.add_argument("capture")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("trace", help="per-frame protocol trace")
    p.add_argument("capture")
    p.add_argument("--first", type=_non_negative, metavar="N")
    p.add_argument("--kind", type=_kind, help="e.g. EthernetII, Ieee8023Snap, "
                                              "Invalid(TypeLengthGap), or e2/llc/snap/novell")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("generate", help="write a synthetic capture")
    p.add_argument("output")
    p.add_argument("--mix", type=_mix, required=True,
                   help="e2=<n>,llc=<n>,snap=<n>,novell=<n>")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("classify", help="classify one frame given as hex")
    p.add_argument("frame", type=_hex_frame, metavar="HEX")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"ethframes: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
