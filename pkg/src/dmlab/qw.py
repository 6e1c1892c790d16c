"""Quasi wreath graphs: bit sequences, segment profiles, builders, and the
distance-magic classifier.

A quasi wreath graph QW(S) of order 2m lives on two m-cycles (x_0..x_{m-1}
and y_0..y_{m-1}); position i carries a "rung" pair of edges when s_i = 0 and
a "crossing" pair when s_i = 1.  Vertex convention everywhere: x_i -> i,
y_i -> m + i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import InvalidSequenceError
from .graph import Graph

TYPE_A = "A"          # segment length = 3 (mod 4)
TYPE_B = "B"          # segment length = 1 (mod 4)
TYPE_OTHER = "OTHER"  # even length; never distance magic


@dataclass(frozen=True)
class QWSequence:
    """Validated bit sequence of the quasi wreath construction."""

    bits: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def order(self) -> int:
        return 2 * len(self.bits)


def validate_sequence(bits: Sequence[int]) -> QWSequence:
    """Check the construction rules: s_0 = 0, s_{m-1} = 1, no two consecutive zeros."""
    bits = tuple(int(b) for b in bits)
    m = len(bits)
    if m < 3:
        raise InvalidSequenceError(f"sequence length must be >= 3, got {m}")
    if any(b not in (0, 1) for b in bits):
        raise InvalidSequenceError("sequence entries must be 0 or 1")
    if bits[0] != 0:
        raise InvalidSequenceError("s_0 must be 0")
    if bits[-1] != 1:
        raise InvalidSequenceError("s_{m-1} must be 1")
    for i in range(m - 1):
        if bits[i] == 0 and bits[i + 1] == 0:
            raise InvalidSequenceError(f"consecutive zeros at positions {i}, {i + 1}")
    return QWSequence(bits)


def parse_profile(text: str) -> Tuple[int, ...]:
    """Parse the CLI profile syntax, e.g. "11,3,5,3,7,5,3"."""
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidSequenceError(f"malformed profile {text!r}") from None
    if not parts:
        raise InvalidSequenceError("empty profile")
    return parts


def profile_to_sequence(parts: Sequence[int]) -> QWSequence:
    """(a_1,...,a_r) -> [0,1,...,1, 0,1,...,1, ...] with a_k - 1 ones per run."""
    parts = tuple(int(a) for a in parts)
    if not parts:
        raise InvalidSequenceError("profile needs at least one part")
    for a in parts:
        if a < 2:
            raise InvalidSequenceError(f"profile parts must be >= 2, got {a}")
    bits: List[int] = []
    for a in parts:
        bits.append(0)
        bits.extend([1] * (a - 1))
    return validate_sequence(bits)


def sequence_to_profile(seq: QWSequence) -> Tuple[int, ...]:
    """Run lengths between consecutive zero bits (inverse of profile_to_sequence)."""
    zeros = [i for i, b in enumerate(seq.bits) if b == 0]
    m = seq.m
    return tuple(
        (zeros[k + 1] if k + 1 < len(zeros) else m) - zeros[k] for k in range(len(zeros))
    )


def segment_type(length: int) -> str:
    if length % 4 == 3:
        return TYPE_A
    if length % 4 == 1:
        return TYPE_B
    return TYPE_OTHER


@dataclass(frozen=True)
class Segment:
    """Maximal run of blocks between consecutive zero bits.

    Segment i (1-based) starts at the zero bit k_i and covers blocks
    B_{k_i+1} .. B_{k_i+length}.
    """

    index: int     # 1-based
    start: int     # k_i, position of the zero bit
    length: int
    kind: str      # TYPE_A / TYPE_B / TYPE_OTHER


def segments(seq: QWSequence) -> List[Segment]:
    parts = sequence_to_profile(seq)
    zeros = [i for i, b in enumerate(seq.bits) if b == 0]
    return [
        Segment(index=i + 1, start=zeros[i], length=parts[i], kind=segment_type(parts[i]))
        for i in range(len(parts))
    ]


@dataclass(frozen=True)
class Classification:
    distance_magic: bool
    reason: str | None = None


def classify(seq: QWSequence) -> Classification:
    """Distance magic iff every segment length is odd and the number of
    segments of length = 1 (mod 4) is even."""
    segs = segments(seq)
    even = [s for s in segs if s.kind == TYPE_OTHER]
    if even:
        where = ", ".join(f"segment {s.index} (length {s.length})" for s in even)
        return Classification(False, f"segments of even length: {where}")
    b_count = sum(1 for s in segs if s.kind == TYPE_B)
    if b_count % 2:
        return Classification(
            False, f"odd number of type-B segments (length = 1 mod 4): {b_count}"
        )
    return Classification(True)


def build_qw(seq: QWSequence) -> Graph:
    """Order-2m graph of the construction: cycle edges on both rows, plus a
    rung pair {x_i,y_i},{x_{i+1},y_{i+1}} when s_i = 0 and a crossing pair
    {x_i,y_{i+1}},{x_{i+1},y_i} when s_i = 1 (indices mod m)."""
    m = seq.m
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges.append((i, j))          # x_i -- x_{i+1}
        edges.append((m + i, m + j))  # y_i -- y_{i+1}
        if seq.bits[i] == 0:
            edges.append((i, m + i))
            edges.append((j, m + j))
        else:
            edges.append((i, m + j))
            edges.append((j, m + i))
    return Graph(2 * m, edges)


def build_wreath(k: int) -> Graph:
    """Wreath graph W(k): N(u_i) = N(v_i) = {u_{i+-1}, v_{i+-1}}.

    u_i -> i, v_i -> k + i.
    """
    if k < 3:
        raise InvalidSequenceError(f"wreath parameter must be >= 3, got {k}")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges.extend([(i, j), (k + i, k + j), (i, k + j), (j, k + i)])
    return Graph(2 * k, edges)
