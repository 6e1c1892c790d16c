"""Labeling data model and verification.

The centered scheme (labels {1-n, 3-n, ..., n-1}, target weight 0) is the
internal canonical representation; the standard 1..n scheme exists at I/O
boundaries only.  Conversion: standard = (centered + n + 1) / 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Tuple

from .errors import DmlabError, OddOrderError, OrderMismatchError
from .graph import Graph
from .qw import QWSequence

# sums of four labels stay far inside machine-int range below this
MAX_LABELING_ORDER = 2 ** 30

SCHEMA = "dmlab/1"


def centered_label_set(n: int) -> range:
    """N = {1-n, 3-n, ..., n-1}; requires n even so labels are odd integers."""
    if n % 2:
        raise OddOrderError(f"centered label set needs even order, got {n}")
    return range(1 - n, n, 2)


@dataclass(frozen=True)
class CenteredLabeling:
    """Vertex-indexed labels intended to be a bijection onto centered_label_set(order).

    The bijection is not enforced at construction so that broken labelings can
    be fed to verify() and reported.
    """

    order: int
    labels: Tuple[int, ...]

    def __post_init__(self):
        if self.order > MAX_LABELING_ORDER:
            raise DmlabError(f"order {self.order} exceeds supported bound {MAX_LABELING_ORDER}")
        if len(self.labels) != self.order:
            raise OrderMismatchError(
                f"{len(self.labels)} labels for order {self.order}"
            )

    def is_bijection(self) -> bool:
        return sorted(self.labels) == list(centered_label_set(self.order))


@dataclass(frozen=True)
class StandardLabeling:
    """Vertex-indexed permutation of {1, ..., order}."""

    order: int
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.order:
            raise OrderMismatchError(f"{len(self.labels)} labels for order {self.order}")

    def is_bijection(self) -> bool:
        return sorted(self.labels) == list(range(1, self.order + 1))


@dataclass(frozen=True)
class VerificationReport:
    """Per-vertex weights plus the overall distance magic verdict."""

    weights: Tuple[int, ...]
    bijective: bool
    ok: bool
    first_violation: int | None  # vertex whose weight misses the target, if any


def verify(g: Graph, lab: CenteredLabeling) -> VerificationReport:
    """Distance magic check in the centered scheme (target weight 0).

    All weights are computed even after a violation, for diagnostics.
    """
    if lab.order != g.n:
        raise OrderMismatchError(f"labeling order {lab.order} != graph order {g.n}")
    weights = tuple(sum(lab.labels[w] for w in g.neighbors[v]) for v in range(g.n))
    bijective = lab.is_bijection()
    first = next((v for v, w in enumerate(weights) if w != 0), None)
    return VerificationReport(weights, bijective, bijective and first is None, first)


def verify_standard(g: Graph, lab: StandardLabeling) -> VerificationReport:
    """Same check in the standard scheme; target is r(n+1)/2 for r-regular g."""
    if lab.order != g.n:
        raise OrderMismatchError(f"labeling order {lab.order} != graph order {g.n}")
    degrees = {g.degree(v) for v in range(g.n)}
    if len(degrees) != 1:
        raise DmlabError("standard-scheme verification target needs a regular graph")
    r = degrees.pop()
    target2 = r * (g.n + 1)  # 2 * target, avoids fractions for odd r*(n+1)
    weights = tuple(sum(lab.labels[w] for w in g.neighbors[v]) for v in range(g.n))
    bijective = lab.is_bijection()
    first = next((v for v, w in enumerate(weights) if 2 * w != target2), None)
    return VerificationReport(weights, bijective, bijective and first is None, first)


def to_standard(lab: CenteredLabeling) -> StandardLabeling:
    n = lab.order
    return StandardLabeling(n, tuple((x + n + 1) // 2 for x in lab.labels))


def from_standard(lab: StandardLabeling) -> CenteredLabeling:
    n = lab.order
    return CenteredLabeling(n, tuple(2 * x - 1 - n for x in lab.labels))


def wreath_labeling(k: int) -> CenteredLabeling:
    """Distance magic labeling of W(k): pair (u_i, v_i) gets +-(2k - 2i - 1)."""
    if k < 3:
        raise DmlabError(f"wreath parameter must be >= 3, got {k}")
    labels = [0] * (2 * k)
    for i in range(k):
        labels[i] = 2 * k - 2 * i - 1
        labels[k + i] = -(2 * k - 2 * i - 1)
    return CenteredLabeling(2 * k, tuple(labels))


def block_labels(seq: QWSequence, lab: CenteredLabeling) -> Tuple[int, ...]:
    """Block label of B_i is l(x_i) + l(y_i)."""
    m = seq.m
    if lab.order != 2 * m:
        raise OrderMismatchError(f"labeling order {lab.order} != 2m = {2 * m}")
    return tuple(lab.labels[i] + lab.labels[m + i] for i in range(m))


def check_block_recurrence(seq: QWSequence, bl: Tuple[int, ...]) -> bool:
    """Block-label recurrence every distance magic labeling must satisfy:

        s_i = s_{i+1} = 1:  l_{i+2} = -l_i
        s_i = 0, s_{i+1}=1: l_{i+2} = -(l_i + l_{i+1}) / 2
        s_i = 1, s_{i+1}=0: l_{i+2} = -2 l_i - l_{i+1}
    """
    m = seq.m
    if len(bl) != m:
        raise OrderMismatchError(f"{len(bl)} block labels for m = {m}")
    bits = seq.bits
    for i in range(m):
        si, sj = bits[i], bits[(i + 1) % m]
        nxt = bl[(i + 2) % m]
        if si == 1 and sj == 1:
            if nxt != -bl[i]:
                return False
        elif si == 0 and sj == 1:
            if 2 * nxt != -(bl[i] + bl[(i + 1) % m]):
                return False
        else:  # si == 1, sj == 0; (0,0) is excluded by sequence validation
            if nxt != -2 * bl[i] - bl[(i + 1) % m]:
                return False
    return True


# ---------------------------------------------------------------------------
# JSON interchange: {"schema": "dmlab/1", "order": n, "scheme": ..., "labels": [...]}
# ---------------------------------------------------------------------------

def labeling_to_json(lab) -> str:
    if isinstance(lab, CenteredLabeling):
        scheme = "centered"
    elif isinstance(lab, StandardLabeling):
        scheme = "standard"
    else:
        raise TypeError(f"not a labeling: {lab!r}")
    return json.dumps(
        {"schema": SCHEMA, "order": lab.order, "scheme": scheme, "labels": list(lab.labels)}
    )


def labeling_from_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DmlabError(f"malformed labeling JSON: {exc}") from None
    try:
        order = int(doc["order"])
        scheme = doc["scheme"]
        labels = tuple(int(x) for x in doc["labels"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DmlabError(f"bad labeling document: {exc}") from None
    if scheme == "centered":
        return CenteredLabeling(order, labels)
    if scheme == "standard":
        return StandardLabeling(order, labels)
    raise DmlabError(f"unknown labeling scheme {scheme!r}")
