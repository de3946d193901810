"""The superstring construction pipeline and its baselines.

The main route reduces the instance to a small set of *representatives*:

1. exact minimum cycle cover of the prefix graph,
2. per cycle, read off the cycle string s(C) (concatenated prefix parts,
   whose length is the cycle's weight), take the nice rotation w(C) of it,
   and emit the shortest prefix of w(C) repeated forever that contains every
   member of the cycle,
3. solve a maximum-path problem on the overlap graph of the representatives
   and merge them along the resulting order.

``solve_s1`` runs this with a pluggable path solver, ``solve_s2`` with the
cycle-cover/drop-lightest-edge solver, and ``solve_combined`` returns the
shorter of the two.  ``greedy_superstring`` and ``exact_superstring`` are the
classic baselines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import words
from .atsp import PathSolution, cycle_cover_path, exact_max_path
from .graph import Instance, build_matrices, min_cycle_cover, overlap_matrix


@dataclass(frozen=True)
class Representative:
    """Compressed stand-in for one cycle of the minimum cycle cover.

    ``text`` contains every member string of the cycle; it is a prefix of
    ``nice.word`` repeated forever.  ``l`` is the cycle's prefix-graph weight
    (the period the cycle winds around), the quantity the weight accounting
    runs on.
    """

    text: str
    nice: words.NiceWord
    l: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Solution:
    """A superstring plus bookkeeping.

    ``total_overlap`` is the saving over plain concatenation,
    ``sum(|s_i|) - length``; for solutions built by merging the instance
    strings in ``order`` it equals the sum of consecutive overlaps.
    """

    order: tuple[int, ...]
    text: str
    length: int
    total_overlap: int
    algorithm: str

    def __post_init__(self):
        if self.length != len(self.text):
            raise ValueError("length field must match the text")


PathSolver = Callable[..., PathSolution]


def _merge_texts(texts: Sequence[str]) -> str:
    """pref(t1,t2) pref(t2,t3) ... t_last: the shortest string containing the
    given texts in the given order."""
    out = []
    for a, b in zip(texts, texts[1:]):
        out.append(words.prefix_part(a, b))
    out.append(texts[-1])
    return "".join(out)


def _solution(inst: Instance, order, text, algorithm) -> Solution:
    return Solution(order=tuple(order), text=text, length=len(text),
                    total_overlap=inst.total_length - len(text),
                    algorithm=algorithm)


def merge_order(inst: Instance, order: Sequence[int]) -> Solution:
    """Merge the instance strings in the given visiting order."""
    if sorted(order) != list(range(len(inst))):
        raise ValueError("order must be a permutation of the instance indices")
    text = _merge_texts([inst.strings[i] for i in order])
    return _solution(inst, order, text, "merge")


def cycle_string(inst: Instance, cycle: Sequence[int]) -> str:
    """Concatenated prefix parts read along the cycle; |s(C)| = cycle weight."""
    k = len(cycle)
    return "".join(
        words.prefix_part(inst.strings[cycle[t]], inst.strings[cycle[(t + 1) % k]])
        for t in range(k))


def representative(inst: Instance, cycle: Sequence[int]) -> Representative:
    """Shortest prefix of w(C) repeated forever that contains all cycle members.

    Every member is a substring of s(C) repeated forever, so it occurs in the
    w(C)-power at an offset below |s(C)|; the result is therefore shorter
    than |s(C)| + max member length.  Unary cycle strings get the degenerate
    single-letter NiceWord.  A non-primitive s(C) cannot arise from an exact
    minimum cover; if one is ever fed in, its primitive root is used as the
    repeating base (the accounting length ``l`` stays |s(C)| either way).
    """
    s_c = cycle_string(inst, cycle)
    base = s_c
    if len(base) >= 2 and not words.is_primitive(base):
        p = words.min_period(base)
        base = base[:p]
    nice = words.nice_rotation(base)
    members = [inst.strings[i] for i in cycle]
    window = words.w_string_prefix(nice, len(s_c) + max(len(m) for m in members))
    need = 0
    for m in members:
        at = window.find(m)
        if at < 0:
            raise AssertionError(f"cycle member {m!r} missing from {window!r}")
        need = max(need, at + len(m))
    return Representative(text=window[:need], nice=nice, l=len(s_c),
                          members=tuple(cycle))


def representatives(inst: Instance) -> list[Representative]:
    """Representatives of all cycles of an exact minimum prefix-graph cover."""
    _, pref = build_matrices(inst)
    cover = min_cycle_cover(pref)
    return [representative(inst, cyc) for cyc in cover.cycles]


def _appearance_order(inst: Instance, text: str) -> tuple[int, ...]:
    pos = [(text.find(s), i) for i, s in enumerate(inst.strings)]
    if any(p < 0 for p, _ in pos):
        raise AssertionError("pipeline output lost an input string")
    return tuple(i for _, i in sorted(pos))


def solve_s1(inst: Instance, path_solver: PathSolver = exact_max_path,
             algorithm: str | None = None) -> Solution:
    """Cycle-cover reduction followed by a max-path solve over representatives."""
    reps = representatives(inst)
    if len(reps) == 1:
        text = reps[0].text
    else:
        path = path_solver(overlap_matrix([r.text for r in reps]))
        text = _merge_texts([reps[i].text for i in path.order])
    if algorithm is None:
        algorithm = f"s1[{getattr(path_solver, '__name__', 'custom')}]"
    return _solution(inst, _appearance_order(inst, text), text, algorithm)


def solve_s2(inst: Instance) -> Solution:
    """Same reduction, with the drop-lightest-cycle-edge path construction."""
    return solve_s1(inst, path_solver=cycle_cover_path, algorithm="s2")


def solve_combined(inst: Instance, path_solver: PathSolver = exact_max_path) -> Solution:
    """The shorter of solve_s1 and solve_s2 (ties favour s1)."""
    s1 = solve_s1(inst, path_solver)
    s2 = solve_s2(inst)
    winner = s1 if s1.length <= s2.length else s2
    return Solution(order=winner.order, text=winner.text, length=winner.length,
                    total_overlap=winner.total_overlap,
                    algorithm=f"combined({winner.algorithm})")


def greedy_superstring(inst: Instance) -> Solution:
    """Repeatedly merge the pair of current strings with the largest overlap.

    Ties pick the smallest (i, j) pair of carried indices; the merged string
    replaces both and keeps the smaller index.
    """
    chains: dict[int, str] = {i: s for i, s in enumerate(inst.strings)}
    ov_cache: dict[tuple[int, int], int] = {}

    def ov(i, j):
        key = (i, j)
        if key not in ov_cache:
            ov_cache[key] = words.overlap_len(chains[i], chains[j])
        return ov_cache[key]

    while len(chains) > 1:
        keys = sorted(chains)
        best = None
        for i in keys:
            for j in keys:
                if i == j:
                    continue
                cand = (-ov(i, j), i, j)
                if best is None or cand < best:
                    best = cand
        _, i, j = best
        merged = words.prefix_part(chains[i], chains[j]) + chains[j]
        keep, drop = min(i, j), max(i, j)
        del chains[drop]
        chains[keep] = merged
        ov_cache = {k: v for k, v in ov_cache.items()
                    if keep not in k and drop not in k}
    (text,) = chains.values()
    return _solution(inst, _appearance_order(inst, text), text, "greedy")


def exact_superstring(inst: Instance, limit: int = 16) -> Solution:
    """Optimal superstring via the exact max-path solver on the overlap graph."""
    ov, _ = build_matrices(inst)
    path = exact_max_path(ov, limit=limit)
    sol = merge_order(inst, path.order)
    return Solution(order=sol.order, text=sol.text, length=sol.length,
                    total_overlap=sol.total_overlap, algorithm="exact")


def validate_superstring(inst: Instance, text: str) -> bool:
    """True iff every instance string occurs in ``text``."""
    return all(s in text for s in inst.strings)
