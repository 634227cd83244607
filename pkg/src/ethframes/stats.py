"""Per-frame-kind population counts and byte totals for a capture."""

from __future__ import annotations

import io
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Optional

from .frame_model import DissectedFrame, FrameKind

_EMPTY: Mapping = MappingProxyType({})


def _freeze(values: dict, counts: dict) -> Mapping:
    # Only kinds actually seen are kept, in FrameKind order.
    return MappingProxyType({k: values[k] for k in FrameKind if counts.get(k)})


@dataclass(frozen=True)
class CaptureStats:
    counts: Mapping = field(default=_EMPTY)
    byte_sums: Mapping = field(default=_EMPTY)
    min_frame: Optional[int] = None
    max_frame: Optional[int] = None

    @property
    def total_frames(self) -> int:
        return sum(self.counts.values())

    @property
    def total_bytes(self) -> int:
        return sum(self.byte_sums.values())

    @property
    def mean_frame(self) -> Optional[Fraction]:
        if not self.total_frames:
            return None
        return Fraction(self.total_bytes, self.total_frames)

    def count(self, kind: FrameKind) -> int:
        return self.counts.get(kind, 0)

    def percentages(self) -> dict:
        """Share of frames per kind in tenths of a percent, summing to exactly 1000.

        Largest-remainder rounding keeps the rendered column at 100.0 total.
        """
        total = self.total_frames
        if not total:
            return {}
        exact = {k: Fraction(1000 * c, total) for k, c in self.counts.items()}
        tenths = {k: int(q) for k, q in exact.items()}
        short = 1000 - sum(tenths.values())
        order = sorted(exact, key=lambda k: (-(exact[k] - tenths[k]), list(FrameKind).index(k)))
        for k in order[:short]:
            tenths[k] += 1
        return tenths

    def __eq__(self, other):
        if not isinstance(other, CaptureStats):
            return NotImplemented
        return (dict(self.counts) == dict(other.counts)
                and dict(self.byte_sums) == dict(other.byte_sums)
                and self.min_frame == other.min_frame
                and self.max_frame == other.max_frame)

    __hash__ = None


def _min(a, b):
    return b if a is None else a if b is None else min(a, b)


def _max(a, b):
    return b if a is None else a if b is None else max(a, b)


def accumulate(stats: CaptureStats, frame: DissectedFrame,
               wire_length: Optional[int] = None) -> CaptureStats:
    size = len(frame.raw) if wire_length is None else wire_length
    counts = dict(stats.counts)
    sums = dict(stats.byte_sums)
    counts[frame.kind] = counts.get(frame.kind, 0) + 1
    sums[frame.kind] = sums.get(frame.kind, 0) + size
    return CaptureStats(_freeze(counts, counts), _freeze(sums, counts),
                        _min(stats.min_frame, size), _max(stats.max_frame, size))


def merge(a: CaptureStats, b: CaptureStats) -> CaptureStats:
    counts = {k: a.count(k) + b.count(k) for k in FrameKind}
    sums = {k: a.byte_sums.get(k, 0) + b.byte_sums.get(k, 0) for k in FrameKind}
    return CaptureStats(_freeze(counts, counts), _freeze(sums, counts),
                        _min(a.min_frame, b.min_frame), _max(a.max_frame, b.max_frame))


def collect(items: Iterable) -> CaptureStats:
    """Single-pass stats over ``(DissectedFrame, wire_length)`` pairs."""
    counts: dict = {}
    sums: dict = {}
    lo = hi = None
    for frame, size in items:
        counts[frame.kind] = counts.get(frame.kind, 0) + 1
        sums[frame.kind] = sums.get(frame.kind, 0) + size
        lo, hi = _min(lo, size), _max(hi, size)
    return CaptureStats(_freeze(counts, counts), _freeze(sums, counts), lo, hi)


def _pct(tenths: int) -> str:
    return f"{tenths // 10}.{tenths % 10}"


def _mean(stats: CaptureStats) -> str:
    mean = stats.mean_frame
    if mean is None:
        return "0.0"
    tenths = (mean * 10 + Fraction(1, 2)).__floor__()
    return _pct(tenths)


def render_report(stats: CaptureStats, format: str = "text") -> str:
    pct = stats.percentages()
    rows = [(str(k), stats.counts[k], stats.byte_sums[k], _pct(pct[k]))
            for k in FrameKind if stats.count(k)]
    total_pct = "100.0" if stats.total_frames else "0.0"
    out = io.StringIO()
    if format in ("csv", "delimited"):
        out.write("kind,count,bytes,percent\n")
        for row in rows:
            out.write(",".join(map(str, row)) + "\n")
        out.write(f"TOTAL,{stats.total_frames},{stats.total_bytes},{total_pct}\n")
        return out.getvalue()
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")

    width = max([len(r[0]) for r in rows] + [len("TOTAL")])
    out.write(f"{'kind':<{width}}  {'frames':>8}  {'bytes':>12}  {'percent':>7}\n")
    for name, count, nbytes, p in rows:
        out.write(f"{name:<{width}}  {count:>8}  {nbytes:>12}  {p:>7}\n")
    out.write(f"{'TOTAL':<{width}}  {stats.total_frames:>8}  "
              f"{stats.total_bytes:>12}  {total_pct:>7}\n")
    out.write("\n")
    out.write(f"min frame:  {stats.min_frame or 0}\n")
    out.write(f"max frame:  {stats.max_frame or 0}\n")
    out.write(f"mean frame: {_mean(stats)}\n")
    return out.getvalue()
