"""Height functions, repetition quivers, the window Gamma, phi and duality.

Half-integer coordinates are stored as doubled integers throughout (k2 = 2k),
so all arithmetic stays exact.  A vertex (i, k) of the repetition quiver is
the pair Vertex(i, k2); a height function stores its doubled values.

Untwisted height functions take integer values with |xi_i - xi_{i+1}| = 1.
Twisted ones (n = 2*n0 - 1) take a half-integer value at the middle node n0,
where the quiver row is twice as dense (d_{n0} = 1 instead of 2).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import roots
from .errors import NotSinkOrSource, OutsideWindow
from .roots import Root

UNTWISTED = "untwisted"
TWISTED = "twisted"


class Vertex(NamedTuple):
    i: int
    k2: int  # doubled spectral coordinate, k = k2/2

    def __str__(self) -> str:
        return f"({self.i},{self.k2 // 2})" if self.k2 % 2 == 0 else f"({self.i},{self.k2}/2)"


class Region(enum.Enum):
    """Row classification of a twisted repetition quiver."""

    LT = "lt"  # i < n0
    GT = "gt"  # i > n0
    U = "U"    # middle row, outgoing arrows point upward (to n0 - 1)
    D = "D"    # middle row, outgoing arrows point downward (to n0 + 1)


@dataclass(frozen=True)
class HeightFunction:
    n: int
    flavor: str
    values2: tuple[int, ...]
    n0: int | None = None

    def __post_init__(self):
        if self.n < 1 or len(self.values2) != self.n:
            raise ValueError("values must assign one height per node")
        if self.flavor == UNTWISTED:
            if self.n0 is not None:
                raise ValueError("untwisted height function takes no n0")
            if any(v % 2 for v in self.values2):
                raise ValueError("untwisted heights must be integers")
            for i in range(1, self.n):
                if abs(self.values2[i] - self.values2[i - 1]) != 2:
                    raise ValueError(f"|xi_{i} - xi_{i+1}| != 1")
        elif self.flavor == TWISTED:
            n0 = self.n0
            if n0 is None or n0 < 2 or self.n != 2 * n0 - 1:
                raise ValueError("twisted height function needs n = 2*n0 - 1, n0 >= 2")
            for i in range(1, self.n + 1):
                if i != n0 and self.values2[i - 1] % 2:
                    raise ValueError(f"xi_{i} must be an integer")
            if self.values2[n0 - 1] % 2 == 0:
                raise ValueError("xi_n0 must be a half-integer")
            for i in range(1, self.n):
                if i in (n0 - 1, n0):
                    continue
                if abs(self.values2[i] - self.values2[i - 1]) != 2:
                    raise ValueError(f"|xi_{i} - xi_{i+1}| != 1")
            lo = min(self.values2[n0 - 2], self.values2[n0])
            if abs(self.values2[n0 - 2] - self.values2[n0]) != 2:
                raise ValueError("|xi_{n0-1} - xi_{n0+1}| != 1")
            if abs(self.values2[n0 - 1] - lo) != 1:
                raise ValueError("|xi_n0 - min(xi_{n0-1}, xi_{n0+1})| != 1/2")
        else:
            raise ValueError(f"unknown flavor {self.flavor!r}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def untwisted(values: Iterable[int]) -> "HeightFunction":
        vals = tuple(values)
        return HeightFunction(len(vals), UNTWISTED, tuple(2 * v for v in vals))

    @staticmethod
    def twisted(values2: Iterable[int], n0: int) -> "HeightFunction":
        vals2 = tuple(values2)
        return HeightFunction(len(vals2), TWISTED, vals2, n0)

    @staticmethod
    def canonical(n: int, delta: int) -> "HeightFunction":
        """The 0/1-valued untwisted function with xi_1 = delta."""
        if delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")
        return HeightFunction.untwisted([(i + 1 + delta) % 2 for i in range(1, n + 1)])

    @staticmethod
    def theta(n0: int) -> "HeightFunction":
        """Untwisted companion of big_theta: i on [1,n0], i-2 above."""
        n = 2 * n0 - 1
        return HeightFunction.untwisted([i if i <= n0 else i - 2 for i in range(1, n + 1)])

    @staticmethod
    def big_theta(n0: int) -> "HeightFunction":
        """Twisted i, n0-1/2, i-1 staircase on [1, 2*n0-1]."""
        n = 2 * n0 - 1
        vals2 = []
        for i in range(1, n + 1):
            if i < n0:
                vals2.append(2 * i)
            elif i == n0:
                vals2.append(2 * n0 - 1)
            else:
                vals2.append(2 * (i - 1))
        return HeightFunction.twisted(vals2, n0)

    # -- basic structure ----------------------------------------------

    @property
    def twisted_flavor(self) -> bool:
        return self.flavor == TWISTED

    def xi2(self, i: int) -> int:
        roots.check_node(self.n, i)
        return self.values2[i - 1]

    def d2(self, i: int) -> int:
        """Doubled translation step of row i (2*d_i is the k2 modulus)."""
        return 2 if (self.twisted_flavor and i == self.n0) else 4

    def ntilde2(self) -> int:
        return 2 * self.n if self.twisted_flavor else 2 * (self.n + 1)

    def shifted(self, p2: int) -> "HeightFunction":
        """Add the integer p = p2/2 to every height (p2 must be even)."""
        if p2 % 2:
            raise ValueError("shift must be an integer (even doubled value)")
        return HeightFunction(self.n, self.flavor, tuple(v + p2 for v in self.values2), self.n0)

    def is_vertex(self, v: Vertex) -> bool:
        if not 1 <= v.i <= self.n:
            return False
        return (v.k2 - self.xi2(v.i)) % self.d2(v.i) == 0

    def _arrow_step2(self, i: int, j: int) -> int:
        # doubled min(d_i, d_j)/2
        return min(self.d2(i), self.d2(j)) // 2

    def arrow_targets(self, v: Vertex) -> list[Vertex]:
        out = []
        for j in (v.i - 1, v.i + 1):
            if 1 <= j <= self.n:
                w = Vertex(j, v.k2 + self._arrow_step2(v.i, j))
                if self.is_vertex(w):
                    out.append(w)
        return out

    def has_arrow(self, v: Vertex, w: Vertex) -> bool:
        if not (self.is_vertex(v) and self.is_vertex(w)):
            return False
        return abs(v.i - w.i) == 1 and w.k2 - v.k2 == self._arrow_step2(v.i, w.i)

    def preceq(self, v: Vertex, w: Vertex) -> bool:
        """Oriented-path reachability v -> ... -> w (reflexive)."""
        if not (self.is_vertex(v) and self.is_vertex(w)):
            return False
        if v == w:
            return True
        frontier = {v}
        while frontier:
            nxt = set()
            for u in frontier:
                for t in self.arrow_targets(u):
                    if t == w:
                        return True
                    if t.k2 < w.k2:
                        nxt.add(t)
            frontier = nxt
        return False

    def prec(self, v: Vertex, w: Vertex) -> bool:
        return v != w and self.preceq(v, w)

    # -- sinks, sources, reflections ----------------------------------

    def sinks(self) -> set[int]:
        out = set()
        for i in range(1, self.n + 1):
            nbrs = [j for j in (i - 1, i + 1) if 1 <= j <= self.n]
            if all(self.xi2(i) < self.xi2(j) for j in nbrs):
                out.add(i)
        return out

    def sources(self) -> set[int]:
        out = set()
        for i in range(1, self.n + 1):
            nbrs = [j for j in (i - 1, i + 1) if 1 <= j <= self.n]
            if all(self.xi2(i) - self.d2(i) > self.xi2(j) - self.d2(j) for j in nbrs):
                out.add(i)
        return out

    def reflect_height(self, i: int) -> "HeightFunction":
        """s_i xi: raise a sink / lower a source by its step d_i."""
        vals = list(self.values2)
        if i in self.sinks():
            vals[i - 1] = self.values2[i - 1] + self.d2(i)
        elif i in self.sources():
            vals[i - 1] = self.values2[i - 1] - self.d2(i)
        else:
            raise NotSinkOrSource(f"node {i} is neither a sink nor a source")
        return HeightFunction(self.n, self.flavor, tuple(vals), self.n0)

    # -- duality and regions ------------------------------------------

    def dualize(self, v: Vertex, sign: int = 1) -> Vertex:
        """D^sign (i,k) = (i*, k - sign*ntilde)."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return Vertex(roots.star(self.n, v.i), v.k2 - sign * self.ntilde2())

    def region(self, v: Vertex) -> Region:
        if not self.twisted_flavor:
            raise ValueError("regions exist only for twisted height functions")
        if not self.is_vertex(v):
            raise ValueError(f"{v} is not a vertex of this quiver")
        n0 = self.n0
        if v.i < n0:
            return Region.LT
        if v.i > n0:
            return Region.GT
        if self.has_arrow(v, Vertex(n0 + 1, v.k2 + 1)):
            return Region.D
        return Region.U

    # -- the finite window Gamma --------------------------------------

    def gamma_vertices(self) -> tuple[Vertex, ...]:
        """All N = n(n+1)/2 vertices with xi_i <= k <= n-1+xi_{i*}."""
        return _gamma_vertices(self)

    def in_gamma(self, v: Vertex) -> bool:
        if not self.is_vertex(v):
            return False
        top2 = 2 * (self.n - 1) + self.xi2(roots.star(self.n, v.i))
        return self.xi2(v.i) <= v.k2 <= top2

    def compatible_reading(self, reverse_rows: bool = False) -> tuple[tuple[Vertex, ...], tuple[int, ...]]:
        """A topological order of Gamma and its node word.

        Arrows strictly increase k2, so any k2-ascending order is compatible.
        Ties break by ascending row (descending when reverse_rows, used to
        check reading-independence).
        """
        key = (lambda v: (v.k2, -v.i)) if reverse_rows else (lambda v: (v.k2, v.i))
        order = tuple(sorted(self.gamma_vertices(), key=key))
        return order, tuple(v.i for v in order)

    def phi(self, v: Vertex) -> Root:
        """Positive root attached to a window vertex by the inversion sequence."""
        m = phi_map(self)
        if v not in m:
            raise OutsideWindow(f"{v} is not in the Gamma window")
        return m[v]


@lru_cache(maxsize=None)
def _gamma_vertices(hf: HeightFunction) -> tuple[Vertex, ...]:
    out = []
    for i in range(1, hf.n + 1):
        lo2 = hf.xi2(i)
        top2 = 2 * (hf.n - 1) + hf.xi2(roots.star(hf.n, i))
        out.extend(Vertex(i, k2) for k2 in range(lo2, top2 + 1, hf.d2(i)))
    out.sort(key=lambda v: (v.k2, v.i))
    expected = roots.num_positive_roots(hf.n)
    assert len(out) == expected, f"|Gamma| = {len(out)} != {expected}"
    return tuple(out)


@lru_cache(maxsize=None)
def phi_map(hf: HeightFunction) -> dict[Vertex, Root]:
    order, word = hf.compatible_reading()
    betas = roots.inversion_sequence(hf.n, word)
    return dict(zip(order, betas))


def phi_closed_form(n: int, v: Vertex) -> Root:
    """Interval root at (i,k) for the canonical 0/1 height functions."""
    if v.k2 % 2:
        raise ValueError("canonical height functions have integer coordinates")
    i, k = v.i, v.k2 // 2
    x = i - k if i - k > 0 else k - i + 1
    y = i + k if i + k <= n else 2 * n + 1 - i - k
    return Root(x, y, +1)


# -- rendering ---------------------------------------------------------


def _fmt_k2(k2: int) -> str:
    return str(k2 // 2) if k2 % 2 == 0 else f"{k2}/2"


def quiver_dot(hf: HeightFunction, k2_lo: int, k2_hi: int, phi_labels: bool = False) -> str:
    """DOT of the quiver restricted to a k2 window ("i:k2" vertex labels).

    With phi_labels, restricts to the Gamma window and appends the root.
    """
    if phi_labels:
        verts = [v for v in hf.gamma_vertices() if k2_lo <= v.k2 <= k2_hi]
    else:
        verts = []
        for i in range(1, hf.n + 1):
            lo2 = hf.xi2(i)
            start = k2_lo + (lo2 - k2_lo) % hf.d2(i)
            verts.extend(Vertex(i, k2) for k2 in range(start, k2_hi + 1, hf.d2(i)))
    vset = set(verts)
    lines = ["digraph repetition_quiver {", "  rankdir=LR;"]
    for v in sorted(vset, key=lambda u: (u.k2, u.i)):
        label = f"{v.i}:{v.k2}"
        if phi_labels:
            label += "\\n" + str(hf.phi(v))
        lines.append(f'  "{v.i}:{v.k2}" [label="{label}"];')
    for v in sorted(vset, key=lambda u: (u.k2, u.i)):
        for w in hf.arrow_targets(v):
            if w in vset:
                lines.append(f'  "{v.i}:{v.k2}" -> "{w.i}:{w.k2}";')
    lines.append("}")
    return "\n".join(lines)


def quiver_ascii(hf: HeightFunction, k2_lo: int, k2_hi: int, phi_labels: bool = False) -> str:
    """Plain-text (i \\ k) grid of the requested window."""
    if phi_labels:
        cells = {v: str(hf.phi(v)) for v in hf.gamma_vertices() if k2_lo <= v.k2 <= k2_hi}
    else:
        cells = {}
        for i in range(1, hf.n + 1):
            lo2 = hf.xi2(i)
            start = k2_lo + (lo2 - k2_lo) % hf.d2(i)
            for k2 in range(start, k2_hi + 1, hf.d2(i)):
                cells[Vertex(i, k2)] = "*"
    if not cells:
        return "(empty window)"
    cols = sorted({v.k2 for v in cells})
    width = max(len(_fmt_k2(c)) for c in cols)
    width = max(width, max(len(s) for s in cells.values()))
    head = "i\\k  " + " ".join(_fmt_k2(c).rjust(width) for c in cols)
    lines = [head]
    for i in range(1, hf.n + 1):
        row = [cells.get(Vertex(i, c), "").rjust(width) for c in cols]
        lines.append(f"{i:<4} " + " ".join(row))
    return "\n".join(lines)
