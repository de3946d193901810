"""Brute-force oracles, kept deliberately naive and independent of the library.

Everything here is written from the definitions (enumerate, compare, take the
extreme) so that it can referee the optimized implementations.
"""

from __future__ import annotations

import itertools


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))]


def min_rotation_index(w):
    """1-based index of the lexicographically smallest rotation, earliest on ties."""
    best, best_i = None, None
    for i, r in enumerate(rotations(w)):
        if best is None or r < best:
            best, best_i = r, i
    return best_i + 1


def max_rotation_index(w):
    best, best_i = None, None
    for i, r in enumerate(rotations(w)):
        if best is None or r > best:
            best, best_i = r, i
    return best_i + 1


def borders(w):
    """All proper borders of w, by explicit char-by-char comparison."""
    out = []
    for k in range(1, len(w)):
        if all(w[i] == w[len(w) - k + i] for i in range(k)):
            out.append(w[:k])
    return out


def longest_border(w):
    bs = borders(w)
    return bs[-1] if bs else ""


def min_period(w):
    for p in range(1, len(w) + 1):
        if all(w[i] == w[i + p] for i in range(len(w) - p)):
            return p
    raise AssertionError("unreachable: |w| is always a period")


def is_primitive(w):
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w[:d] * (n // d) == w:
            return False
    return True


def overlap(u, v):
    """Longest suffix of u that is a prefix of v; proper border when u == v."""
    limit = len(u) - 1 if u == v else min(len(u), len(v))
    best = ""
    for k in range(1, limit + 1):
        if all(u[len(u) - k + i] == v[i] for i in range(k)):
            best = v[:k]
    return best


def merge_in_order(strings, order):
    text = strings[order[0]]
    for idx in order[1:]:
        s = strings[idx]
        ov = overlap(text, s) if text != s else ""
        # overlap() treats equal inputs as self-overlap; distinct instance
        # strings never collide here, guard is for safety only.
        text = text[: len(text) - len(ov)] + s
    return text


def exact_superstring_length(strings):
    """Minimum superstring length by trying every order."""
    return min(len(merge_in_order(strings, p))
               for p in itertools.permutations(range(len(strings))))


def best_assignment(weights, maximize=False):
    """(total, perm) over all permutations; ties broken by smallest perm tuple."""
    n = len(weights)
    best_total, best_perm = None, None
    for p in itertools.permutations(range(n)):
        total = sum(weights[i][p[i]] for i in range(n))
        key = (-total if maximize else total, p)
        if best_total is None or key < (best_total, best_perm):
            best_total, best_perm = key[0], p
    return (-best_total if maximize else best_total), best_perm


def max_path_weight(weights):
    """Maximum Hamiltonian-path weight by trying every order."""
    n = len(weights)
    if n == 1:
        return 0
    return max(sum(weights[p[i]][p[i + 1]] for i in range(n - 1))
               for p in itertools.permutations(range(n)))


def binary_strings(max_len):
    for n in range(1, max_len + 1):
        for bits in itertools.product("ab", repeat=n):
            yield "".join(bits)
