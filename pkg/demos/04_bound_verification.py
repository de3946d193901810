"""
Verifying the overlap bounds empirically
========================================

Every inequality ships as an executable check returning an exact-rational
report; seeded fuzz campaigns sweep them across random nice-word pairs,
random cycles, and cycles produced by the pipeline itself.
"""

from superstring import check_cycle_bounds, check_pair_bounds, gen_tight_2cycle
from superstring.bounds import (
    pair_fuzz,
    pipeline_cycle_fuzz,
    verify_rotation_positions,
)

# Pair checks on the tight two-word family: the overlap cap o12 < l1 + a2
# holds with slack exactly 1 in both directions.
f = gen_tight_2cycle(1)
for direction in (f.nodes, f.nodes[::-1]):
    for rep in check_pair_bounds(*direction):
        if rep.check_id == "overlap_cap":
            print(f"{rep.check_id}: {rep.lhs} < {rep.rhs}  holds={rep.holds}")

# Where the extreme rotations of the first word may start, once the overlap
# onto the second word is at least one full period of it.
rep = verify_rotation_positions(f.nodes[0], f.nodes[1])
print(rep.check_id, "applicable:", rep.applicable, "holds:", rep.holds)
print("  ", rep.inputs)

# Cycle-level checks, including the central 2M + 7O <= 11L.
for rep in check_cycle_bounds(f):
    if rep.applicable:
        print(f"{rep.check_id:<28} {str(rep.lhs):>8} <= {rep.rhs}")

# Seeded campaigns; identical seeds give identical outcomes.
print()
r = pair_fuzz(2000, seed=42)
print(f"pair fuzz:     {r.checks_run} checks, {r.checks_failed} failed")
r = pipeline_cycle_fuzz(2000, seed=42)
print(f"pipeline fuzz: {r.checks_run} checks, {r.checks_failed} failed")
