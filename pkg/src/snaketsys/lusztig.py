"""Lusztig data, 2/3-moves, the word chain V<j> and the transport map rho.

A LusztigDatum binds a reduced word to its tuple of nonnegative counts so the
two cannot fall out of sync.  A VertexDatum keys the counts by quiver
vertices instead; on vertex-keyed data 2-moves act trivially, so rho is a
pure composition of 3-moves located by vertex coordinates.

The chain of carriers V<n0>, ..., V<n+1> interpolates between the window of
the twisted staircase big_theta (V<n0>) and that of its untwisted companion
theta (V<n+1>).  One step rho_<j> applies the piecewise-linear 3-move
transform to the triples

    (c_{j,j+2r-1/2}, c_{j+1,j+2r}, c_{j,j+2r+1/2}),   r in [0, n-j-1],

writing the results to (j+1, j+2r-1/2), (j, j+2r), (j+1, j+2r+1/2), shifts
the two leftover boundary keys of row j by -+1/2, and carries everything
else by identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from . import roots
from .errors import NotBraidPattern, NotCommuting, NotLongestWord, WrongCarrier
from .quivers import HeightFunction, Vertex

GAMMA_THETA = "gamma-theta"    # window of the untwisted staircase theta
GAMMA_BIG_THETA = "gamma-THETA"  # window of the twisted staircase big_theta


# -- word-keyed data -----------------------------------------------------


@dataclass(frozen=True)
class LusztigDatum:
    n: int
    word: tuple[int, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) != len(self.counts):
            raise ValueError("word and counts must have equal length")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        for i in self.word:
            roots.check_node(self.n, i)


def three_move(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Piecewise-linear transform (a,b,c) -> (b+c-m, m, a+b-m), m = min(a,c)."""
    m = min(a, c)
    return (b + c - m, m, a + b - m)


def two_move(d: LusztigDatum, r: int) -> LusztigDatum:
    """Swap commuting letters (and their counts) at positions r, r+1."""
    w, c = d.word, d.counts
    if not 0 <= r < len(w) - 1:
        raise IndexError("2-move position out of range")
    if abs(w[r] - w[r + 1]) < 2:
        raise NotCommuting(f"letters {w[r]}, {w[r+1]} do not commute")
    w2 = w[:r] + (w[r + 1], w[r]) + w[r + 2:]
    c2 = c[:r] + (c[r + 1], c[r]) + c[r + 2:]
    return LusztigDatum(d.n, w2, c2)


def apply_three_move(d: LusztigDatum, r: int) -> LusztigDatum:
    """Braid move at the (i,j,i) pattern centered at position r."""
    w, c = d.word, d.counts
    if not 1 <= r < len(w) - 1:
        raise IndexError("3-move position out of range")
    i, j = w[r - 1], w[r]
    if w[r + 1] != i or abs(i - j) != 1:
        raise NotBraidPattern(f"letters {w[r-1:r+2]} are not an (i,j,i) braid pattern")
    a, b, cc = three_move(c[r - 1], c[r], c[r + 1])
    w2 = w[:r - 1] + (j, i, j) + w[r + 2:]
    c2 = c[:r - 1] + (a, b, cc) + c[r + 2:]
    return LusztigDatum(d.n, w2, c2)


def star_datum(d: LusztigDatum) -> LusztigDatum:
    """Word reversed and starred, counts reversed (dual datum of a w0-word)."""
    if not roots.is_longest_word(d.n, d.word):
        raise NotLongestWord("star duality is defined for reduced words of w0")
    w2 = tuple(roots.star(d.n, i) for i in reversed(d.word))
    return LusztigDatum(d.n, w2, tuple(reversed(d.counts)))


def weight(d: LusztigDatum) -> tuple[int, ...]:
    """Sum of counts[r] * beta_r as a simple-root coefficient vector."""
    betas = roots.inversion_sequence(d.n, d.word)
    v = [0] * (d.n + 1)
    for c, b in zip(d.counts, betas):
        for j in range(b.lo, b.hi + 1):
            v[j] += c * b.sign
    return tuple(v[1:])


# -- vertex-keyed data ---------------------------------------------------


@dataclass(frozen=True)
class Carrier:
    """Named key set for vertex-keyed data: a Gamma window or a V<j>."""

    name: str
    n: int

    def __post_init__(self):
        kind, _, arg = self.name.partition(":")
        if kind in (GAMMA_THETA, GAMMA_BIG_THETA):
            if arg or self.n % 2 == 0 or self.n < 3:
                raise WrongCarrier(f"{self.name!r} needs odd n >= 3")
        elif kind == "vj":
            j = int(arg)
            n0 = (self.n + 1) // 2
            if self.n % 2 == 0 or not n0 <= j <= self.n + 1:
                raise WrongCarrier(f"vj carrier needs j in [n0, n+1], got {j}")
        elif kind == "gamma-delta":
            if int(arg) not in (0, 1):
                raise WrongCarrier("gamma-delta carrier needs delta in {0, 1}")
        else:
            raise WrongCarrier(f"unknown carrier {self.name!r}")

    @property
    def n0(self) -> int:
        return (self.n + 1) // 2

    def vertices(self) -> frozenset[Vertex]:
        return _carrier_vertices(self.name, self.n)

    def height_function(self) -> HeightFunction:
        """The window-defining height function, for Gamma carriers."""
        kind, _, arg = self.name.partition(":")
        if kind == GAMMA_THETA:
            return HeightFunction.theta(self.n0)
        if kind == GAMMA_BIG_THETA:
            return HeightFunction.big_theta(self.n0)
        if kind == "gamma-delta":
            return HeightFunction.canonical(self.n, int(arg))
        raise WrongCarrier(f"{self.name!r} is not a Gamma carrier")


@lru_cache(maxsize=None)
def _carrier_vertices(name: str, n: int) -> frozenset[Vertex]:
    kind, _, arg = name.partition(":")
    n0 = (n + 1) // 2
    if kind == GAMMA_THETA:
        return frozenset(HeightFunction.theta(n0).gamma_vertices())
    if kind == GAMMA_BIG_THETA:
        return frozenset(HeightFunction.big_theta(n0).gamma_vertices())
    if kind == "gamma-delta":
        return frozenset(HeightFunction.canonical(n, int(arg)).gamma_vertices())
    j = int(arg)
    if j == n0:
        return _carrier_vertices(GAMMA_BIG_THETA, n)
    if j == n + 1:
        return _carrier_vertices(GAMMA_THETA, n)
    theta = HeightFunction.theta(n0)
    verts = {v for v in theta.gamma_vertices() if v.i < j}
    # middle row j: half-integer chain (j, j - 3/2 + m), m in [0, 2n-2j+1]
    verts.update(Vertex(j, 2 * j - 3 + 2 * m) for m in range(0, 2 * n - 2 * j + 2))
    # rows above j keep the big_theta grid (i, i - 1 + 2m), m in [0, n-i]
    for i in range(j + 1, n + 1):
        verts.update(Vertex(i, 2 * i - 2 + 4 * m) for m in range(0, n - i + 1))
    assert len(verts) == roots.num_positive_roots(n)
    return frozenset(verts)


def vj_carrier(n0: int, j: int) -> Carrier:
    n = 2 * n0 - 1
    if j == n0:
        return Carrier(GAMMA_BIG_THETA, n)
    if j == n + 1:
        return Carrier(GAMMA_THETA, n)
    return Carrier(f"vj:{j}", n)


@dataclass(frozen=True)
class VertexDatum:
    carrier: Carrier
    counts: dict[Vertex, int] = field(default_factory=dict)

    def __post_init__(self):
        keys = self.carrier.vertices()
        bad = [v for v in self.counts if v not in keys]
        if bad:
            raise WrongCarrier(f"keys {bad[:3]} outside carrier {self.carrier.name}")
        if any(c < 0 for c in self.counts.values()):
            raise ValueError("counts must be nonnegative")

    def get(self, v: Vertex) -> int:
        return self.counts.get(v, 0)

    def nonzero(self) -> dict[Vertex, int]:
        return {v: c for v, c in sorted(self.counts.items()) if c != 0}


def unit_datum(carrier: Carrier, points: Sequence[Vertex]) -> VertexDatum:
    """e(P): indicator datum of a vertex sequence (multiplicities add)."""
    counts: dict[Vertex, int] = {}
    for v in points:
        counts[v] = counts.get(v, 0) + 1
    return VertexDatum(carrier, counts)


def rho_step(j: int, d: VertexDatum) -> VertexDatum:
    """One 3-move layer rho_<j>: data on V<j> -> data on V<j+1>."""
    n = d.carrier.n
    n0 = (n + 1) // 2
    if not n0 <= j <= n:
        raise WrongCarrier(f"rho step index {j} outside [n0, n]")
    if d.carrier.vertices() != vj_carrier(n0, j).vertices():
        raise WrongCarrier(f"datum carrier {d.carrier.name} is not V<{j}>")
    src = d.get
    out: dict[Vertex, int] = {}
    for r in range(0, n - j):
        a, b, c = three_move(
            src(Vertex(j, 2 * j + 4 * r - 1)),
            src(Vertex(j + 1, 2 * j + 4 * r)),
            src(Vertex(j, 2 * j + 4 * r + 1)),
        )
        out[Vertex(j + 1, 2 * j + 4 * r - 1)] = a
        out[Vertex(j, 2 * j + 4 * r)] = b
        out[Vertex(j + 1, 2 * j + 4 * r + 1)] = c
    # leftover boundary keys of row j reshift by -+1/2
    if j > n0:
        out[Vertex(j, 2 * j - 4)] = src(Vertex(j, 2 * j - 3))
    out[Vertex(j, 2 * (2 * n - j))] = src(Vertex(j, 4 * n - 2 * j - 1))
    target = vj_carrier(n0, j + 1)
    for v in target.vertices():
        if v.i not in (j, j + 1):
            out[v] = src(v)
    assert set(out) == set(target.vertices())
    return VertexDatum(target, {v: c for v, c in out.items() if c != 0})


def rho(d: VertexDatum) -> VertexDatum:
    """Transport twisted-adapted data to untwisted-adapted data.

    Composite rho_<n> o ... o rho_<n0> from the big_theta window to the
    theta window; satisfies B^Theta(c) = B^theta(rho(c)).
    """
    n = d.carrier.n
    n0 = (n + 1) // 2
    if d.carrier.vertices() != _carrier_vertices(GAMMA_BIG_THETA, n):
        raise WrongCarrier("rho expects a datum on the big_theta window")
    for j in range(n0, n + 1):
        d = rho_step(j, d)
    return d


# -- JSON round-trip -----------------------------------------------------


def datum_to_json(d: VertexDatum) -> dict:
    entries = [{"i": v.i, "k2": v.k2, "c": c} for v, c in sorted(d.counts.items(), key=lambda t: (t[0].k2, t[0].i)) if c != 0]
    return {"carrier": d.carrier.name, "entries": entries}


def datum_from_json(obj: Mapping, n: int) -> VertexDatum:
    carrier = Carrier(str(obj["carrier"]), n)
    counts: dict[Vertex, int] = {}
    for e in obj["entries"]:
        v = Vertex(int(e["i"]), int(e["k2"]))
        counts[v] = counts.get(v, 0) + int(e["c"])
    return VertexDatum(carrier, counts)
