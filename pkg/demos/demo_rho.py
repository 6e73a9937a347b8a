"""Transport twisted-adapted data to the untwisted window, step by step.

Run:  python demos/demo_rho.py
"""
from snaketsys.lusztig import Carrier, GAMMA_BIG_THETA, rho_step, unit_datum, vj_carrier
from snaketsys.quivers import Vertex
from snaketsys.snakes import translate_twisted

# The carriers V<j> interpolate between the twisted staircase window
# (j = n0) and the untwisted one (j = n+1).  One step applies the braid
# transform to the triples straddling rows j and j+1 and shifts the two
# leftover boundary slots of row j by a half step.
n0, n = 4, 7
P = (Vertex(5, 8), Vertex(5, 12), Vertex(4, 17), Vertex(4, 19))
print("snake P (doubled k):", [(v.i, v.k2) for v in P])

d = unit_datum(Carrier(GAMMA_BIG_THETA, n), P)
for j in range(n0, n + 1):
    d = rho_step(j, d)
    print(f"after rho_<{j}> on {vj_carrier(n0, j + 1).name}:",
          sorted((v.i, v.k2) for v, c in d.nonzero().items()))

# The closed-form translation produces the same indicator datum directly.
dagger = translate_twisted(n0, P)
print("translated snake:      ", sorted((v.i, v.k2) for v in dagger))
