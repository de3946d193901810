"""
Families where the cycle weight bound is tight
==============================================

For every cycle of non-equivalent nice words, 2M + 7O <= 11L, where M is the
lightest overlap on the cycle, O the total overlap and L the total period
length.  Two parameterized families leave a constant gap (17 and 28), so the
bound cannot be improved; a third family shows a path whose total overlap
approaches 3/2 of the periods, the ceiling for chained overlaps.
"""

from fractions import Fraction

from superstring import gen_greedy_path, gen_tight_2cycle, gen_tight_3cycle
from superstring.bounds import cycle_quantities
from superstring.words import overlap_len

print("two-word family: gap 11L - (2M + 7O) stays exactly 17")
for k in (1, 2, 8, 32, 64):
    f = gen_tight_2cycle(k)
    ls, _, os, M, O, L, _ = cycle_quantities(f)
    ratio = Fraction(2 * M + 7 * O, 11 * L)
    print(f"  k={k:>2}  lengths={ls}  overlaps={os}  gap={11 * L - 2 * M - 7 * O}"
          f"  (2M+7O)/(11L)={float(ratio):.5f}")

print("\nthree-word family: gap stays exactly 28")
for n in (1, 2, 8, 32, 64):
    f = gen_tight_3cycle(n)
    ls, _, os, M, O, L, _ = cycle_quantities(f)
    print(f"  n={n:>2}  lengths={ls}  overlaps={os}  gap={11 * L - 2 * M - 7 * O}")

print("\nchain family: path overlap over total periods approaches 3/2")
for n in (6, 12, 24, 40):
    inst, expected = gen_greedy_path(n)
    xs = inst.strings
    got = [overlap_len(xs[i + 1], xs[i]) for i in range(len(xs) - 1)]
    assert got == expected
    ratio = sum(expected) / sum(range(3, n + 1))
    print(f"  n={n:>2}  consecutive overlaps {got[:6]}...  ratio={ratio:.4f}")
