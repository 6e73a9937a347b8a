"""Dominant-monomial realizations of cuspidal and snake modules.

Three modes.  qdatum_A (untwisted quivers) realizes the vertex (i,k) as
Y_{i,-k}; qdatum_B (twisted quivers) as Y_{min(i,i*),-2k}; custom mode reads
a finite table over the window Gamma and extends it to the whole quiver by
the duality shift Y_{j,l} -> Y_{j*, l +- h_dual} per application of D.

Only relative spectral parameters matter, so they are bare integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import roots
from .errors import MissingTableEntry
from .quivers import TWISTED, UNTWISTED, HeightFunction, Vertex

QDATUM_A = "qdatum_A"
QDATUM_B = "qdatum_B"
CUSTOM = "custom"


class Monomial:
    """Laurent monomial in variables Y_{node,spectral}; exponents add."""

    __slots__ = ("factors",)

    def __init__(self, factors: Mapping[tuple[int, int], int] | None = None):
        self.factors = {k: e for k, e in (factors or {}).items() if e != 0}

    @staticmethod
    def one() -> "Monomial":
        return Monomial()

    @staticmethod
    def y(node: int, spectral: int, exp: int = 1) -> "Monomial":
        return Monomial({(node, spectral): exp})

    def __mul__(self, other: "Monomial") -> "Monomial":
        out = dict(self.factors)
        for k, e in other.factors.items():
            out[k] = out.get(k, 0) + e
        return Monomial(out)

    def __pow__(self, e: int) -> "Monomial":
        return Monomial({k: v * e for k, v in self.factors.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.factors == other.factors

    def __hash__(self):
        return hash(frozenset(self.factors.items()))

    def is_dominant(self) -> bool:
        return all(e > 0 for e in self.factors.values())

    def dual_shift(self, g0_rank: int, h_dual: int, t: int = 1) -> "Monomial":
        """Apply the duality substitution Y_{j,l} -> Y_{j*, l + h_dual} t times."""
        out = {}
        for (j, l), e in self.factors.items():
            jj = roots.star(g0_rank, j) if t % 2 else j
            out[(jj, l + t * h_dual)] = e
        return Monomial(out)

    def _sorted(self):
        return sorted(self.factors.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for (j, l), e in self._sorted():
            s = f"Y_{{{j},{l}}}"
            if e != 1:
                s += f"^{e}"
            parts.append(s)
        return "".join(parts)

    def latex(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for (j, l), e in self._sorted():
            s = f"Y_{{{j},{l}}}"
            if e != 1:
                s += f"^{{{e}}}"
            parts.append(s)
        return "".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"node": j, "spectral": l, "exp": e}
            for (j, l), e in self._sorted()
        ]

    @staticmethod
    def from_json(entries) -> "Monomial":
        out = {}
        for f in entries:
            key = (int(f["node"]), int(f["spectral"]))
            out[key] = out.get(key, 0) + int(f["exp"])
        return Monomial(out)

    __repr__ = __str__


@dataclass(frozen=True)
class Realization:
    mode: str
    h_dual: int
    g0_rank: int
    table: dict[Vertex, Monomial] | None = None

    @staticmethod
    def qdatum_a(n: int) -> "Realization":
        return Realization(QDATUM_A, n + 1, n)

    @staticmethod
    def qdatum_b(n0: int) -> "Realization":
        return Realization(QDATUM_B, 2 * n0 - 1, n0)

    @staticmethod
    def custom(h_dual: int, table: Mapping[Vertex, Monomial], g0_rank: int | None = None) -> "Realization":
        # classical subalgebras of type A have h_dual = rank + 1
        return Realization(CUSTOM, h_dual, g0_rank if g0_rank is not None else h_dual - 1, dict(table))


def cuspidal_monomial(real: Realization, xi: HeightFunction, v: Vertex) -> Monomial:
    """Highest dominant monomial of the cuspidal module at a quiver vertex."""
    if not xi.is_vertex(v):
        raise MissingTableEntry(f"{v} is not a vertex of the quiver")
    if real.mode == QDATUM_A:
        if xi.flavor != UNTWISTED:
            raise ValueError("qdatum_A realizes untwisted quivers")
        return Monomial.y(v.i, -v.k2 // 2)
    if real.mode == QDATUM_B:
        if xi.flavor != TWISTED:
            raise ValueError("qdatum_B realizes twisted quivers")
        return Monomial.y(min(v.i, roots.star(xi.n, v.i)), -v.k2)
    if real.table is None:
        raise MissingTableEntry("custom realization has no table")
    if v in real.table:
        return real.table[v]
    # slide v into the window along D and shift the table entry back
    nt2 = xi.ntilde2()
    reach = abs(v.k2) // nt2 + xi.n + 3
    for t in range(-reach, reach + 1):
        u = Vertex(v.i if t % 2 == 0 else roots.star(xi.n, v.i), v.k2 + t * nt2)
        if xi.in_gamma(u):
            if u not in real.table:
                raise MissingTableEntry(f"table lacks the window vertex {u}")
            return real.table[u].dual_shift(real.g0_rank, real.h_dual, t)
    raise MissingTableEntry(f"could not slide {v} into the window")


def snake_monomial(real: Realization, xi: HeightFunction, points: Sequence[Vertex]) -> tuple[Monomial, bool]:
    """Formal product of cuspidal monomials along a snake.

    Exact (equal to the highest monomial of the snake module) in the qdatum
    modes, where spectral parameters decrease along the snake; a formal
    product only in custom mode.
    """
    m = Monomial.one()
    for v in points:
        m = m * cuspidal_monomial(real, xi, v)
    return m, real.mode != CUSTOM


@dataclass(frozen=True)
class RelationMonomials:
    b: Monomial
    c: Monomial
    a: Monomial
    d: Monomial
    q: Monomial
    r: Monomial
    exact: bool

    def identity_holds(self) -> bool:
        return self.b * self.c == self.a * self.d


def relation_monomials(rel, real: Realization) -> RelationMonomials:
    """Monomials of all six terms; the slice identity m(B)m(C) = m(A)m(D)
    is asserted exactly."""
    xi = rel.xi
    b, eb = snake_monomial(real, xi, rel.term_b)
    c, ec = snake_monomial(real, xi, rel.term_c)
    a, ea = snake_monomial(real, xi, rel.term_a)
    d, ed = snake_monomial(real, xi, rel.term_d)
    q, eq = snake_monomial(real, xi, rel.first_q)
    r, er = snake_monomial(real, xi, rel.first_r)
    out = RelationMonomials(b, c, a, d, q, r, all([eb, ec, ea, ed, eq, er]))
    assert out.identity_holds(), "slice multiset identity violated"
    return out


def relation_monomials_text(mon: RelationMonomials) -> str:
    return (
        f"[{mon.b}][{mon.c}] = [{mon.a}][{mon.d}] + [{mon.q}][{mon.r}]"
        + ("" if mon.exact else "   (formal products; custom table)")
    )


def relation_monomials_latex(mon: RelationMonomials) -> str:
    return (
        f"[{mon.b.latex()}][{mon.c.latex()}] = "
        f"[{mon.a.latex()}][{mon.d.latex()}] + [{mon.q.latex()}][{mon.r.latex()}]"
    )


def relation_monomials_json(mon: RelationMonomials) -> dict:
    return {
        "B": mon.b.to_json(),
        "C": mon.c.to_json(),
        "A": mon.a.to_json(),
        "D": mon.d.to_json(),
        "Q": mon.q.to_json(),
        "R": mon.r.to_json(),
        "exact": mon.exact,
        "identity_holds": mon.identity_holds(),
    }


# -- custom table file format ---------------------------------------------


def table_to_json(real: Realization) -> dict:
    assert real.mode == CUSTOM and real.table is not None
    entries = [
        {"i": v.i, "k2": v.k2, "monomial": m.to_json()}
        for v, m in sorted(real.table.items(), key=lambda t: (t[0].k2, t[0].i))
    ]
    return {"h_dual": real.h_dual, "g0_rank": real.g0_rank, "entries": entries}


def realization_from_json(obj: Mapping, xi: HeightFunction) -> Realization:
    """Load a custom table and check it covers the whole window of xi."""
    h_dual = int(obj["h_dual"])
    g0_rank = int(obj.get("g0_rank", h_dual - 1))
    table = {}
    for e in obj["entries"]:
        table[Vertex(int(e["i"]), int(e["k2"]))] = Monomial.from_json(e["monomial"])
    missing = [v for v in xi.gamma_vertices() if v not in table]
    if missing:
        raise MissingTableEntry(f"table misses window vertices, e.g. {missing[:3]}")
    return Realization.custom(h_dual, table, g0_rank)
