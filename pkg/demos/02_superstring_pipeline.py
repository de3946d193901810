"""
The superstring pipeline, step by step
======================================

How an instance flows through cycle cover -> representatives -> max path,
and how the result compares with the greedy and exact baselines.
"""

from superstring import (
    build_matrices,
    exact_superstring,
    greedy_superstring,
    min_cycle_cover,
    normalize,
    representatives,
    solve_combined,
    solve_s1,
    solve_s2,
)

inst, removed = normalize(["abab", "babb", "bba", "aab", "abab"])
print("instance:", inst.strings, "dropped:", removed)

# Step 1: the prefix (distance) graph and its exact minimum cycle cover.
ov, pref = build_matrices(inst)
print("overlap matrix:\n", ov.w)
cover = min_cycle_cover(pref)
print("minimum cycle cover:", cover.cycles, "weight", cover.total_weight)

# Step 2: one representative per cycle.  Each is a prefix of some nice
# word's infinite repetition and contains all of its cycle's strings.
for rep in representatives(inst):
    print(f"cycle {rep.members}: period word {rep.nice.word!r} "
          f"(alpha {rep.nice.alpha}), representative {rep.text!r}")

# Step 3: a maximum-path solve over the representatives' overlap graph,
# done twice -- once with the exact path solver, once with the
# cover-and-drop-lightest-edge construction -- and the better result kept.
s1 = solve_s1(inst)
s2 = solve_s2(inst)
s0 = solve_combined(inst)
print("s1:", s1.length, s1.text)
print("s2:", s2.length, s2.text)
print("combined:", s0.length, s0.text)

# Baselines for context.
print("greedy:", greedy_superstring(inst).length)
print("exact: ", exact_superstring(inst).length)
