"""Overlap and prefix graphs over an instance, and exact cycle covers.

The *overlap* matrix holds ov-lengths, with the diagonal carrying each
string's longest proper border (the weight of overlapping a string with a
fresh copy of itself).  The *prefix* matrix is its complement:
``prefix[i][j] = |s_i| - overlap[i][j]``, so minimum cycle covers of the
prefix matrix and maximum cycle covers of the overlap matrix are the same
permutations.

Cycle covers are computed exactly with scipy's assignment solver.  Self-loop
edges (fixed points of the permutation) are allowed by default; the max-path
reduction masks the diagonal instead, because a path can never use a loop
edge (see atsp.cycle_cover_path).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import words

_LOOP_BAN = 1 << 40  # dwarfs any realistic total weight


class MatrixKind(enum.Enum):
    OVERLAP = "overlap"
    PREFIX = "prefix"


@dataclass(frozen=True)
class Instance:
    """A normalized set of input strings: distinct and substring-free."""

    strings: tuple[str, ...]
    provenance: tuple[str, ...] | None = None

    def __post_init__(self):
        ss = self.strings
        if len(ss) < 2:
            raise ValueError("degenerate instance")
        if len(set(ss)) != len(ss):
            raise ValueError("instance strings must be distinct")
        for i, s in enumerate(ss):
            for j, t in enumerate(ss):
                if i != j and s in t:
                    raise ValueError(f"string {i!r} is a substring of string {j!r}")

    def __len__(self) -> int:
        return len(self.strings)

    @property
    def total_length(self) -> int:
        return sum(len(s) for s in self.strings)


class DegenerateInstanceError(ValueError):
    """Fewer than two strings survive normalization."""

    def __init__(self, survivors):
        super().__init__("degenerate instance")
        self.survivors = list(survivors)


def normalize(raw: Sequence[str]) -> tuple[Instance, list[tuple[str, str]]]:
    """Drop duplicates and substrings of other inputs, keeping first occurrences.

    Returns the instance together with a removal log of (reason, string)
    pairs.  Raises DegenerateInstanceError (carrying the survivors) when
    fewer than two strings remain.
    """
    if not raw:
        raise DegenerateInstanceError([])
    log: list[tuple[str, str]] = []
    seen: set[str] = set()
    deduped: list[str] = []
    for s in raw:
        if s in seen:
            log.append(("duplicate", s))
        else:
            seen.add(s)
            deduped.append(s)
    survivors = []
    for s in deduped:
        if any(s != t and s in t for t in deduped):
            log.append(("substring", s))
        else:
            survivors.append(s)
    if len(survivors) < 2:
        raise DegenerateInstanceError(survivors)
    return Instance(strings=tuple(survivors)), log


@dataclass(frozen=True)
class WeightMatrix:
    n: int
    w: np.ndarray
    kind: MatrixKind

    def __post_init__(self):
        if self.w.shape != (self.n, self.n):
            raise ValueError("weight matrix must be n x n")


def overlap_matrix(strings: Sequence[str]) -> WeightMatrix:
    n = len(strings)
    w = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(strings):
        for j, v in enumerate(strings):
            if i == j:
                w[i, j] = len(words.longest_border(u))
            else:
                w[i, j] = words.overlap_len(u, v)
    return WeightMatrix(n=n, w=w, kind=MatrixKind.OVERLAP)


def prefix_matrix_from_overlap(strings: Sequence[str], ov: WeightMatrix) -> WeightMatrix:
    lengths = np.array([len(s) for s in strings], dtype=np.int64)
    return WeightMatrix(n=ov.n, w=lengths[:, None] - ov.w, kind=MatrixKind.PREFIX)


def build_matrices(inst: Instance | Sequence[str]) -> tuple[WeightMatrix, WeightMatrix]:
    """Overlap and prefix matrices of an instance (or a plain string list)."""
    strings = inst.strings if isinstance(inst, Instance) else tuple(inst)
    ov = overlap_matrix(strings)
    return ov, prefix_matrix_from_overlap(strings, ov)


@dataclass(frozen=True)
class CycleCover:
    """A permutation (perm[i] = successor of node i) split into cycles.

    Cycles are canonical: each starts at its smallest node and the list is
    sorted by those smallest nodes.
    """

    perm: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    total_weight: int


def _decompose(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        node = start
        while not seen[node]:
            seen[node] = True
            cyc.append(node)
            node = perm[node]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def _assignment_cover(m: WeightMatrix, maximize: bool, allow_loops: bool) -> CycleCover:
    w = m.w
    if not allow_loops:
        if m.n == 1:
            raise ValueError("a single node admits no loop-free cycle cover")
        w = w.copy()
        np.fill_diagonal(w, -_LOOP_BAN if maximize else _LOOP_BAN)
    rows, cols = linear_sum_assignment(w, maximize=maximize)
    perm = tuple(int(cols[i]) for i in np.argsort(rows))
    if not allow_loops and any(perm[i] == i for i in range(m.n)):
        raise AssertionError("assignment picked a banned loop edge")
    total = int(m.w[np.arange(m.n), list(perm)].sum())
    return CycleCover(perm=perm, cycles=_decompose(perm), total_weight=total)


def min_cycle_cover(m: WeightMatrix) -> CycleCover:
    """Exact minimum-weight cycle cover (self-loops allowed)."""
    return _assignment_cover(m, maximize=False, allow_loops=True)


def max_cycle_cover(m: WeightMatrix, allow_loops: bool = True) -> CycleCover:
    """Exact maximum-weight cycle cover.

    ``allow_loops=False`` forbids fixed points, which is the right model when
    the cover feeds a path construction (loop edges cannot appear on a path).
    """
    return _assignment_cover(m, maximize=True, allow_loops=allow_loops)


@dataclass(frozen=True)
class CycleStats:
    """Per-cycle weight summary over an overlap matrix.

    M: lightest edge weight, O: total edge weight, L: sum of the supplied
    per-node period lengths, delta_O: (3/2)L - O in exact rationals.
    """

    nodes: tuple[int, ...]
    M: int
    O: int
    L: int
    delta_O: Fraction = field(compare=False)


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    return [(cycle[t], cycle[(t + 1) % len(cycle)]) for t in range(len(cycle))]


def cycle_stats(cover: CycleCover, m: WeightMatrix,
                lengths: Sequence[int]) -> list[CycleStats]:
    """M / O / L / delta_O for every cycle; ``lengths`` supplies the per-node
    period metadata (it is not recomputed from the strings, since short
    repetition prefixes can have accidentally smaller periods)."""
    if len(lengths) != m.n:
        raise ValueError("lengths must match matrix dimension")
    out = []
    for cyc in cover.cycles:
        ws = [int(m.w[i, j]) for i, j in cycle_edges(cyc)]
        total = sum(ws)
        length = sum(lengths[i] for i in cyc)
        out.append(CycleStats(nodes=cyc, M=min(ws), O=total, L=length,
                              delta_O=Fraction(3, 2) * length - total))
    return out
