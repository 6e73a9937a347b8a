"""Braid moves on Lusztig data and the transported weight invariant.

Run:  python demos/demo_braid_moves.py
"""
import random

from snaketsys.lusztig import LusztigDatum, apply_three_move, two_move, weight
from snaketsys.quivers import HeightFunction

# A Lusztig datum is a reduced word together with one nonnegative count per
# letter.  Swapping commuting letters swaps the counts; a braid move (i,j,i)
# -> (j,i,j) transforms the three counts piecewise-linearly:
#     (a, b, c) -> (b + c - m, m, a + b - m),   m = min(a, c).
d = LusztigDatum(2, (1, 2, 1), (1, 0, 0))
print("before:", d.word, d.counts)
d2 = apply_three_move(d, 1)
print("after: ", d2.word, d2.counts)
print("back:  ", apply_three_move(d2, 1).counts)

# The weighted sum of inversion roots never moves.
rng = random.Random(0)
_, word = HeightFunction.canonical(4, 0).compatible_reading()
d = LusztigDatum(4, word, tuple(rng.randint(0, 9) for _ in word))
w0 = weight(d)
print("\nstart weight:", w0)
for step in range(500):
    twos = [r for r in range(len(d.word) - 1) if abs(d.word[r] - d.word[r + 1]) >= 2]
    threes = [r for r in range(1, len(d.word) - 1)
              if d.word[r - 1] == d.word[r + 1] and abs(d.word[r] - d.word[r - 1]) == 1]
    kind, r = rng.choice([("2", r) for r in twos] + [("3", r) for r in threes])
    d = two_move(d, r) if kind == "2" else apply_three_move(d, r)
print("after 500 random moves:", weight(d), "(unchanged)" if weight(d) == w0 else "(BUG)")
