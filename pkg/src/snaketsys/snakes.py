"""Snake combinatorics: position predicates, Q/R socle pairs, translation.

All operations take the governing height function explicitly.  The twisted
Q/R formulas and the twisted-to-untwisted translation are stated on the
staircase pair (big_theta, theta); data on a parity-shifted twisted quiver
is aligned internally by an integer shift and shifted back, so callers may
use any twisted height function whose quiver matches one of the two parity
classes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import lusztig
from .errors import NotPrimeSnake, NotPrimeSnakePair, NotSnake, OutsideWindow
from .quivers import TWISTED, UNTWISTED, HeightFunction, Region, Vertex


class QRPair(NamedTuple):
    q: tuple[Vertex, ...]
    r: tuple[Vertex, ...]


@dataclass(frozen=True)
class Snake:
    """A vertex sequence bundled with its height function (JSON unit)."""

    xi: HeightFunction
    points: tuple[Vertex, ...]

    def __post_init__(self):
        if not self.points:
            raise NotSnake("a snake is nonempty")
        for v in self.points:
            if not self.xi.is_vertex(v):
                raise NotSnake(f"{v} is not a vertex of the quiver")


# -- position predicates -------------------------------------------------


def in_snake_position(xi: HeightFunction, v: Vertex, w: Vertex) -> bool:
    if not (xi.is_vertex(v) and xi.is_vertex(w)):
        return False
    if xi.flavor == UNTWISTED:
        return xi.preceq(Vertex(v.i, v.k2 + 4), w)
    step = 2 if v.i == xi.n0 else 4
    if not xi.preceq(Vertex(v.i, v.k2 + step), w):
        return False
    rv, rw = xi.region(v), xi.region(w)
    if rv in (Region.LT, Region.U):
        return rw in (Region.LT, Region.D)
    return rw in (Region.GT, Region.U)


def in_prime_snake_position(xi: HeightFunction, v: Vertex, w: Vertex) -> bool:
    return in_snake_position(xi, v, w) and xi.preceq(w, xi.dualize(v, -1))


def is_snake(xi: HeightFunction, points: Sequence[Vertex]) -> bool:
    if not points or not all(xi.is_vertex(v) for v in points):
        return False
    return all(in_snake_position(xi, points[s], points[s + 1]) for s in range(len(points) - 1))


def is_prime_snake(xi: HeightFunction, points: Sequence[Vertex]) -> bool:
    if not points or not all(xi.is_vertex(v) for v in points):
        return False
    return all(in_prime_snake_position(xi, points[s], points[s + 1]) for s in range(len(points) - 1))


def split_prime(xi: HeightFunction, points: Sequence[Vertex]) -> list[tuple[Vertex, ...]]:
    """Cut a snake at every pair failing the prime condition."""
    if not is_snake(xi, points):
        raise NotSnake("split_prime expects a snake")
    out: list[tuple[Vertex, ...]] = []
    start = 0
    for s in range(len(points) - 1):
        if not in_prime_snake_position(xi, points[s], points[s + 1]):
            out.append(tuple(points[start:s + 1]))
            start = s + 1
    out.append(tuple(points[start:]))
    return out


# -- Q/R socle positions ---------------------------------------------------


def _exact_div(num: int, den: int) -> int:
    assert num % den == 0, f"{num} not divisible by {den}"
    return num // den


def qr_untwisted(xi: HeightFunction, v: Vertex, w: Vertex) -> QRPair:
    """Socle positions of a prime pair: Q toward row 1, R toward row n."""
    if xi.flavor != UNTWISTED:
        raise NotPrimeSnakePair("qr_untwisted needs an untwisted height function")
    if not in_prime_snake_position(xi, v, w):
        raise NotPrimeSnakePair(f"{w} is not in prime snake position w.r.t. {v}")
    n = xi.n
    (i, k2), (ip, kp2) = v, w
    diff2 = kp2 - k2
    if diff2 == 2 * (i + ip):
        q: tuple[Vertex, ...] = ()
    else:
        assert diff2 < 2 * (i + ip)
        qv = Vertex(_exact_div(2 * (i + ip) - diff2, 4), _exact_div(2 * (i - ip) + k2 + kp2, 2))
        q = (qv,)
    if diff2 == 2 * (2 * n + 2 - i - ip):
        r: tuple[Vertex, ...] = ()
    else:
        assert diff2 < 2 * (2 * n + 2 - i - ip)
        rv = Vertex(_exact_div(2 * (i + ip) + diff2, 4), _exact_div(2 * (ip - i) + k2 + kp2, 2))
        r = (rv,)
    for u in q + r:
        assert xi.is_vertex(u), f"{u} fell off the quiver"
    return QRPair(q, r)


def twisted_parity_shift2(xi: HeightFunction) -> int:
    """Even doubled shift aligning xi's quiver with big_theta's parity class."""
    ref = HeightFunction.big_theta(xi.n0)
    s2 = (xi.values2[0] - ref.values2[0]) % 4
    assert s2 in (0, 2)
    for i in range(1, xi.n + 1):
        if i != xi.n0:
            assert (xi.xi2(i) - s2 - ref.xi2(i)) % 4 == 0, "twisted quiver parity mismatch"
    return s2


def _qr_twisted_normalized(hf: HeightFunction, v: Vertex, w: Vertex) -> QRPair:
    """Q/R on the big_theta parity class; v, w already a prime pair."""
    n0 = hf.n0
    theta2 = HeightFunction.big_theta(n0).values2

    def direct(v: Vertex, w: Vertex) -> QRPair:
        (i, k2), (ip, kp2) = v, w
        t_i, t_ip = theta2[i - 1], theta2[ip - 1]
        diff2 = kp2 - k2
        if diff2 == t_i + t_ip:
            q: tuple[Vertex, ...] = ()
        else:
            assert diff2 < t_i + t_ip
            q = (Vertex(_exact_div(t_i + t_ip - diff2, 4), _exact_div(t_i - t_ip + k2 + kp2, 2)),)
        if i < n0 and ip < n0:
            if diff2 < 2 * (2 * n0 - i - ip):
                r: tuple[Vertex, ...] = (
                    Vertex(_exact_div(2 * (i + ip) + diff2, 4), _exact_div(2 * (ip - i) + k2 + kp2, 2)),
                )
            else:
                r = (Vertex(n0, 2 * n0 - 2 * i + k2 - 1), Vertex(n0, 2 * ip + kp2 - 2 * n0 + 1))
        elif i < n0 and ip == n0:
            r = (Vertex(n0, 2 * n0 - 2 * i + k2 - 1),)
        elif i == n0 and ip < n0:
            r = (Vertex(n0, 2 * ip + kp2 - 2 * n0 + 1),)
        else:
            r = ()
        return QRPair(q, r)

    if hf.region(v) in (Region.LT, Region.U):
        pair = direct(v, w)
    else:
        sub = direct(hf.dualize(v), hf.dualize(w))
        pair = QRPair(
            tuple(hf.dualize(u, -1) for u in sub.r),
            tuple(hf.dualize(u, -1) for u in sub.q),
        )
    for u in pair.q + pair.r:
        assert hf.is_vertex(u), f"{u} fell off the quiver"
    return pair


def qr_twisted(xi: HeightFunction, v: Vertex, w: Vertex) -> QRPair:
    """Twisted socle positions; the downward branch is D-conjugated."""
    if xi.flavor != TWISTED:
        raise NotPrimeSnakePair("qr_twisted needs a twisted height function")
    if not in_prime_snake_position(xi, v, w):
        raise NotPrimeSnakePair(f"{w} is not in prime snake position w.r.t. {v}")
    s2 = twisted_parity_shift2(xi)
    hf = HeightFunction.big_theta(xi.n0)
    pair = _qr_twisted_normalized(hf, Vertex(v.i, v.k2 - s2), Vertex(w.i, w.k2 - s2))
    return QRPair(
        tuple(Vertex(u.i, u.k2 + s2) for u in pair.q),
        tuple(Vertex(u.i, u.k2 + s2) for u in pair.r),
    )


def qr_pair(xi: HeightFunction, v: Vertex, w: Vertex) -> QRPair:
    return qr_untwisted(xi, v, w) if xi.flavor == UNTWISTED else qr_twisted(xi, v, w)


def qr_sequences(xi: HeightFunction, points: Sequence[Vertex]) -> QRPair:
    """Concatenated pairwise Q/R outputs of a prime snake, empties dropped."""
    if len(points) < 2:
        raise NotPrimeSnake("qr_sequences needs a prime snake of length >= 2")
    if not is_prime_snake(xi, points):
        raise NotPrimeSnake("qr_sequences expects a prime snake")
    qs: list[Vertex] = []
    rs: list[Vertex] = []
    for s in range(len(points) - 1):
        pair = qr_pair(xi, points[s], points[s + 1])
        qs.extend(pair.q)
        rs.extend(pair.r)
    return QRPair(tuple(qs), tuple(rs))


# -- twisted -> untwisted translation -------------------------------------


def _x_minus(n0: int, theta2, v: Vertex, region: Region) -> Vertex | None:
    if region == Region.D:
        return None
    t = theta2[v.i - 1]
    return Vertex(_exact_div(t + v.k2 + 4, 4), _exact_div(t + v.k2 - 4, 2))


def _x_plus(n0: int, n: int, theta2, v: Vertex, region: Region) -> Vertex | None:
    if region == Region.U:
        return None
    t = theta2[v.i - 1]
    return Vertex(_exact_div(t - v.k2 + 4 * n, 4), _exact_div(-t + v.k2 + 4 * n, 2))


def _x_mid(theta2, v: Vertex, w: Vertex, region_v: Region) -> Vertex | None:
    if region_v == Region.U:
        return None
    t, tp = theta2[v.i - 1], theta2[w.i - 1]
    return Vertex(_exact_div(t + tp - v.k2 + w.k2, 4), _exact_div(-t + tp + v.k2 + w.k2, 2))


def translate_twisted(n0: int, points: Sequence[Vertex], validate: bool = False) -> tuple[Vertex, ...]:
    """The untwisted shadow P-dagger of a snake in the big_theta window.

    Points left of the middle row are kept; every maximal segment in the
    closed right half is replaced by its X^-/X/X^+ sequence.  The result is
    a snake in the theta window satisfying rho(e(P)) = e(P-dagger); pass
    validate=True to assert that equality on the spot.
    """
    big = HeightFunction.big_theta(n0)
    theta = HeightFunction.theta(n0)
    n = big.n
    for v in points:
        if not big.in_gamma(v):
            raise OutsideWindow(f"{v} is outside the big_theta window")
    if not is_snake(big, points):
        raise NotSnake("translate_twisted expects a snake")
    theta2 = big.values2
    regions = [big.region(v) for v in points]
    out: list[Vertex] = []
    s = 0
    while s < len(points):
        if regions[s] == Region.LT:
            out.append(points[s])
            s += 1
            continue
        e = s
        while e + 1 < len(points) and regions[e + 1] != Region.LT:
            e += 1
        seg: list[Vertex | None] = [_x_minus(n0, theta2, points[s], regions[s])]
        for t in range(s, e):
            seg.append(_x_mid(theta2, points[t], points[t + 1], regions[t]))
        seg.append(_x_plus(n0, n, theta2, points[e], regions[e]))
        out.extend(u for u in seg if u is not None)
        s = e + 1
    result = tuple(out)
    for v in result:
        assert theta.in_gamma(v), f"translated point {v} left the theta window"
    assert is_snake(theta, result), "translation did not produce a snake"
    if validate:
        src = lusztig.unit_datum(lusztig.Carrier(lusztig.GAMMA_BIG_THETA, n), points)
        want = lusztig.unit_datum(lusztig.Carrier(lusztig.GAMMA_THETA, n), result)
        got = lusztig.rho(src)
        assert got.nonzero() == want.nonzero(), "rho disagrees with translation"
    return result


# -- random generation -----------------------------------------------------


def snake_candidates(xi: HeightFunction, v: Vertex, prime: bool, k2_hi: int | None = None) -> list[Vertex]:
    """Vertices in (prime) snake position w.r.t. v, k2-bounded for sampling."""
    hi = v.k2 + xi.ntilde2() if prime else (k2_hi if k2_hi is not None else v.k2 + xi.ntilde2())
    pred = in_prime_snake_position if prime else in_snake_position
    out = []
    for i in range(1, xi.n + 1):
        lo2 = xi.xi2(i)
        d2 = xi.d2(i)
        start = v.k2 + 1 + (lo2 - v.k2 - 1) % d2
        for k2 in range(start, hi + 1, d2):
            w = Vertex(i, k2)
            if xi.is_vertex(w) and pred(xi, v, w):
                out.append(w)
    return out


def random_snake(
    xi: HeightFunction,
    rng: random.Random,
    length: int,
    prime: bool = False,
    k2_lo: int = 0,
    in_gamma: bool = False,
) -> tuple[Vertex, ...]:
    """Forward-grown random (prime) snake; may stop short at a dead end."""
    if in_gamma:
        first = rng.choice(xi.gamma_vertices())
    else:
        span = 2 * xi.ntilde2()
        while True:
            i = rng.randint(1, xi.n)
            k2 = rng.randint(k2_lo, k2_lo + span)
            k2 -= (k2 - xi.xi2(i)) % xi.d2(i)
            if k2_lo <= k2:
                first = Vertex(i, k2)
                break
    points = [first]
    for _ in range(length - 1):
        cands = snake_candidates(xi, points[-1], prime)
        if in_gamma:
            cands = [w for w in cands if xi.in_gamma(w)]
        if not cands:
            break
        points.append(rng.choice(cands))
    return tuple(points)


# -- JSON ------------------------------------------------------------------


def snake_to_json(xi: HeightFunction, points: Sequence[Vertex]) -> dict:
    obj = {
        "flavor": xi.flavor,
        "xi": list(xi.values2),
        "points": [{"i": v.i, "k2": v.k2} for v in points],
    }
    if xi.flavor == TWISTED:
        obj["n0"] = xi.n0
    return obj


def snake_from_json(obj: dict) -> Snake:
    flavor = obj["flavor"]
    values2 = [int(x) for x in obj["xi"]]
    if flavor == TWISTED:
        xi = HeightFunction.twisted(values2, int(obj["n0"]))
    else:
        xi = HeightFunction(len(values2), UNTWISTED, tuple(values2))
    points = tuple(Vertex(int(p["i"]), int(p["k2"])) for p in obj["points"])
    return Snake(xi, points)
