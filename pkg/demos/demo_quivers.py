"""Walk through height functions, windows and root labels.

Run:  python demos/demo_quivers.py
"""
from snaketsys.quivers import HeightFunction, Vertex, phi_closed_form, quiver_ascii

# An untwisted height function assigns integers to the Dynkin nodes with
# steps of exactly 1; it orients the A_n diagram and pins down a repetition
# quiver on vertices (i, k).
xi = HeightFunction.untwisted([2, 1, 2, 3, 4])
print("height values:", [v // 2 for v in xi.values2])
print("sinks:", sorted(xi.sinks()), " sources:", sorted(xi.sources()))

# The window Gamma holds exactly n(n+1)/2 vertices; reading it in any
# arrow-compatible order spells a reduced word of the longest Weyl element,
# and the inversion sequence labels each vertex with a positive root.
order, word = xi.compatible_reading()
print("\nreading word:", "".join(map(str, word)))
print("\nGamma with root labels:")
print(quiver_ascii(xi, 0, 20, phi_labels=True))

# On the two canonical 0/1 height functions the labels follow a closed
# form; compare it with the inversion-sequence labelling.
hf = HeightFunction.canonical(5, 0)
v = Vertex(3, 4)  # the point (3,2)
print("\ncanonical window, vertex (3,2):", hf.phi(v), "=", phi_closed_form(5, v))

# The twisted flavor adds a half-integer value at the middle node; its row
# of the quiver is twice as dense and splits into upward/downward halves.
tw = HeightFunction.big_theta(3)
print("\ntwisted staircase:", [f"{v}/2" for v in tw.values2])
print(quiver_ascii(tw, 0, 16, phi_labels=True))
for k2 in (5, 7):
    print(f"region of (3,{k2}/2):", tw.region(Vertex(3, k2)).name)
