"""Maximum-weight directed Hamiltonian path solvers behind one interface.

Three interchangeable strategies:

* exact_max_path: Held-Karp dynamic programming over node subsets, exact but
  exponential (guarded by a configurable node limit).
* cycle_cover_path: exact maximum cycle cover with the diagonal masked out,
  then drop the lightest edge of every cycle and chain the resulting paths.
  Guarantees at least half the optimal path weight.
* greedy_max_path: repeatedly commit the heaviest edge that still extends to
  a Hamiltonian path.

A 2/3-approximation slot would drop in behind the same signature
(``WeightMatrix -> PathSolution``); the exact solver stands in for it at the
instance sizes this package targets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import WeightMatrix, cycle_edges, max_cycle_cover


class SolverTag(enum.Enum):
    EXACT = "exact"
    CYCLE_COVER_HALF = "half"
    GREEDY = "greedy"


class SolverLimitError(ValueError):
    """The exact solver was asked for more nodes than its configured limit."""


@dataclass(frozen=True)
class PathSolution:
    order: tuple[int, ...]
    weight: int
    solver_tag: SolverTag
    ratio_guarantee: Fraction

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("order must visit every node exactly once")


def _path_weight(w, order) -> int:
    return sum(int(w[order[t]][order[t + 1]]) for t in range(len(order) - 1))


DEFAULT_EXACT_LIMIT = 16


def exact_max_path(m: WeightMatrix, limit: int = DEFAULT_EXACT_LIMIT) -> PathSolution:
    """Maximum-weight Hamiltonian path by subset DP, O(2^n n^2).

    Ties resolve to the lexicographically smallest node order, obtained by
    computing best suffix weights first and then rebuilding the path greedily
    from the front, always taking the smallest feasible node.
    """
    n = m.n
    if n == 0:
        raise ValueError("empty matrix")
    if n > limit:
        raise SolverLimitError(f"exact solver limit: n={n} exceeds {limit}")
    if n == 1:
        return PathSolution(order=(0,), weight=0, solver_tag=SolverTag.EXACT,
                            ratio_guarantee=Fraction(1))
    w = m.w.tolist()
    full = (1 << n) - 1
    # best[mask][first]: max weight of a path visiting exactly `mask`,
    # starting at `first`
    best = [[0] * n for _ in range(full + 1)]
    masks = sorted(range(1, full + 1), key=lambda x: x.bit_count())
    for mask in masks:
        if mask.bit_count() < 2:
            continue
        row = best[mask]
        for first in range(n):
            bit = 1 << first
            if not mask & bit:
                continue
            rest = mask ^ bit
            sub = best[rest]
            wf = w[first]
            cand = None
            nxt = rest
            while nxt:
                j = (nxt & -nxt).bit_length() - 1
                v = wf[j] + sub[j]
                if cand is None or v > cand:
                    cand = v
                nxt &= nxt - 1
            row[first] = cand
    total = max(best[full])
    mask = full
    cur = min(j for j in range(n) if best[full][j] == total)
    order = [cur]
    while mask.bit_count() > 1:
        rest = mask ^ (1 << cur)
        target = best[mask][cur]
        cur = min(j for j in range(n)
                  if (rest >> j) & 1 and w[order[-1]][j] + best[rest][j] == target)
        order.append(cur)
        mask = rest
    return PathSolution(order=tuple(order), weight=total,
                        solver_tag=SolverTag.EXACT, ratio_guarantee=Fraction(1))


def cycle_cover_path(m: WeightMatrix) -> PathSolution:
    """Max cycle cover (no loop edges), lightest edge of each cycle dropped.

    The surviving arcs of each cycle form a path; paths are then chained in
    ascending order of their smallest node.  When several edges of a cycle
    tie for lightest, the first one met while walking the cycle from its
    smallest node is dropped.
    """
    n = m.n
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return PathSolution(order=(0,), weight=0,
                            solver_tag=SolverTag.CYCLE_COVER_HALF,
                            ratio_guarantee=Fraction(1, 2))
    cover = max_cycle_cover(m, allow_loops=False)
    pieces = []
    for cyc in cover.cycles:
        edges = cycle_edges(cyc)
        weights = [int(m.w[i, j]) for i, j in edges]
        drop = weights.index(min(weights))
        # removing edge cyc[drop] -> cyc[drop+1] leaves the walk that starts
        # right after it
        k = len(cyc)
        piece = tuple(cyc[(drop + 1 + t) % k] for t in range(k))
        pieces.append(piece)
    pieces.sort(key=min)
    order = tuple(node for piece in pieces for node in piece)
    return PathSolution(order=order, weight=_path_weight(m.w, order),
                        solver_tag=SolverTag.CYCLE_COVER_HALF,
                        ratio_guarantee=Fraction(1, 2))


def greedy_max_path(m: WeightMatrix) -> PathSolution:
    """Heaviest-feasible-edge greedy; ties broken by smallest (i, j) pair."""
    n = m.n
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return PathSolution(order=(0,), weight=0, solver_tag=SolverTag.GREEDY,
                            ratio_guarantee=Fraction(1, 2))
    w = m.w
    edges = sorted(((i, j) for i in range(n) for j in range(n) if i != j),
                   key=lambda e: (-int(w[e[0], e[1]]), e))
    succ = [-1] * n
    pred = [-1] * n
    tail = list(range(n))  # end of the chain each node currently belongs to
    chosen = 0
    for i, j in edges:
        if chosen == n - 1:
            break
        if succ[i] != -1 or pred[j] != -1:
            continue
        if tail[j] == i:  # would close a cycle
            continue
        succ[i] = j
        pred[j] = i
        # only chain heads are ever asked for their tail, so updating the
        # merged chain's head is enough
        head = i
        while pred[head] != -1:
            head = pred[head]
        tail[head] = tail[j]
        chosen += 1
    start = next(v for v in range(n) if pred[v] == -1)
    order = []
    node = start
    while node != -1:
        order.append(node)
        node = succ[node]
    return PathSolution(order=tuple(order), weight=_path_weight(w, order),
                        solver_tag=SolverTag.GREEDY,
                        ratio_guarantee=Fraction(1, 2))
