"""
Deciding signed degree sequences by reduction
=============================================

Is a given integer sequence the signed degree sequence of some signed graph?
The deciders answer by repeatedly removing the largest entry and spreading
the loss over the survivors, a signed take on the Havel-Hakimi idea.
"""

from sdegree import (
    choose_m,
    is_s_graphical_branching,
    is_s_graphical_deterministic,
    normalize_standard,
    reduce_hakimi,
)

# Normalisation first: sort non-increasing and pick the orientation whose
# head is positive and magnitude-dominant.  Negating a sequence never changes
# realizability (flip every edge sign of a witness), so one orientation
# speaks for both.
for seq in ([2, 1, 1, 0], [-1, -1], [1, 0, -1, -2], [1, 1, 1], [3, 1]):
    print(f"normalize {seq!r:>18} -> {normalize_standard(seq)}")
print()

# One reduction step, shift parameter s: drop the head d1, subtract 1 from
# the next d1+s entries, keep the middle, add 1 to the last s.
seq = [1, 1, 0, -1, -1]
for s in (0, 1):
    print(f"reduce_hakimi({seq}, s={s}) -> {reduce_hakimi(seq, s)}")

# The branching decider tries every admissible shift; the deterministic one
# follows the single pivot-chosen shift of choose_m.  Both are exact.
print(f"choose_m({seq}) -> {choose_m(seq)}")
print()

CASES = [
    [1, 1],
    [1, -1],
    [2, 2, 2],
    [2, 2, -1, -1],
    [1, 0, -1, -2],
    [3, 3, -3, -3],
    [5, 5, 5, 5, 5, 5],
    [4, 3, 2, 1, 0, -1, -2, -3, -4],
]

print(f"{'sequence':>30}  branching  deterministic")
for seq in CASES:
    b = is_s_graphical_branching(seq)
    d = is_s_graphical_deterministic(seq)
    print(f"{str(seq):>30}  {str(b):>9}  {str(d):>13}")

# Note [1, -1]: sum parity and magnitude bounds both pass, yet no graph
# exists because the lone possible edge cannot be positive at one end and
# negative at the other.  The reduction sees through this.
