"""Farey complex fixture: a concrete flag complex with exact oracles.

Vertices are slopes p/q in lowest terms together with infinity = 1/0;
two slopes span an edge exactly when |p s - q r| = 1, and every
pairwise-adjacent triple spans a triangle (the Farey tessellation), so
the complex is flag.  The fixture drives the contraction engine of
:mod:`goeritz.contract` at desk scale: remoteness of p/q is the
denominator q, the base vertex is infinity, and the blocking oracle is
computed from the mediant structure.

Everything rests on one fact about the Farey graph: the neighbours of
p/q with a strictly smaller denominator are exactly the two
Stern-Brocot parents, the unique adjacent pair (a, b) with a + b = p/q
componentwise.  Both witness searches below therefore only ever look at
parents, and the search cannot fail: if no parent of v with smaller
denominator works, then some member of X has a denominator strictly
above q(v), so the maximal-remoteness member v' has v itself as a
parent, and w' = v is an admissible replacement (every member of X is
adjacent to v already).

This module is an analogue used as an engine fixture, not a model of
the disk complex the rest of the package is about.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

from .simplicial import Complex

__all__ = [
    "Slope",
    "INFINITY",
    "slope",
    "parse_slope",
    "det_intersection",
    "adjacent",
    "remoteness",
    "mediant",
    "parents",
    "neighbours",
    "WitnessNotFound",
    "blocking",
    "build",
    "AxiomReport",
    "verify_axioms",
    "random_based_loop",
    "BASE",
]


@dataclass(frozen=True, slots=True)
class Slope:
    """A slope p/q in lowest terms with q >= 0; 1/0 is infinity."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError("denominator must be non-negative")
        if self.q == 0 and self.p != 1:
            raise ValueError("infinity is represented as 1/0")
        if self.q > 0 and gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")

    def __lt__(self, other: "Slope") -> bool:
        # deterministic enumeration order, not numeric order
        return (self.q, self.p) < (other.q, other.p)

    def __str__(self) -> str:
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


INFINITY = Slope(1, 0)
BASE = INFINITY


def slope(p: int, q: int) -> Slope:
    """Normalize a fraction to a Slope."""
    if q == 0:
        if p == 0:
            raise ValueError("0/0 is not a slope")
        return INFINITY
    if q < 0:
        p, q = -p, -q
    g = gcd(abs(p), q)
    return Slope(p // g, q // g)


def parse_slope(text: str) -> Slope:
    """Parse 'inf', 'p/q' or a bare integer."""
    text = text.strip()
    if text == "inf":
        return INFINITY
    if "/" in text:
        top, bottom = text.split("/", 1)
        return slope(int(top), int(bottom))
    return Slope(int(text), 1)


def det_intersection(u: Slope, v: Slope) -> int:
    """|p s - q r|, the geometric intersection number of the slopes."""
    return abs(u.p * v.q - u.q * v.p)


def adjacent(u: Slope, v: Slope) -> bool:
    """Equal or intersecting once."""
    return u == v or det_intersection(u, v) == 1


def remoteness(v: Slope) -> int:
    """Denominator: 0 exactly at the base vertex (infinity)."""
    return v.q


def mediant(u: Slope, v: Slope) -> Slope:
    return slope(u.p + v.p, u.q + v.q)


def parents(v: Slope) -> tuple[Slope, Slope]:
    """The unique adjacent pair with mediant v.

    For q >= 2 both parents have strictly smaller denominator; for an
    integer n/1 they are (infinity, n-1).  Infinity itself has no
    parents.
    """
    if v.q == 0:
        raise ValueError("infinity has no parents")
    if v.q == 1:
        return (INFINITY, Slope(v.p - 1, 1))
    s = pow(v.p, -1, v.q)  # p*s = 1 + r*q for some r
    r = (s * v.p - 1) // v.q
    a = Slope(r, s)
    b = Slope(v.p - r, v.q - s)
    if a.p * b.q < b.p * a.q:  # ascending numeric order
        return (a, b)
    return (b, a)


def neighbours(v: Slope, bound: int) -> list[Slope]:
    """Farey neighbours of v along the chain parent + k*v, |k| <= bound.

    For infinity this is the integer slopes -bound..bound.  The chain
    covers every neighbour as the bound grows.
    """
    if v == INFINITY:
        return [Slope(n, 1) for n in range(-bound, bound + 1)]
    a = parents(v)[0]
    out = []
    for k in range(-bound, bound + 1):
        p, q = a.p + k * v.p, a.q + k * v.q
        if (p, q) != (0, 0):
            out.append(slope(p, q))
    return sorted(set(out))


class WitnessNotFound(RuntimeError):
    """No admissible blocking witness exists (never raised in practice;
    see the module docstring)."""


def blocking(x_members: Iterable[Slope], v: Slope) -> tuple[int, object]:
    """Blocking value and witness for an adjacency pair (X, v).

    Returns (0, w) when some vertex w adjacent to v and to every member
    of X has smaller remoteness than v; the candidates are exactly the
    parents of v.  Otherwise returns (sum of member remotenesses,
    (v', w')) where v' is a maximal-remoteness member and w' a parent
    of v' adjacent to v and to every member of X adjacent to v'.
    """
    xs = tuple(sorted(x_members))
    if remoteness(v) == 0:
        raise ValueError("blocking needs a vertex of positive remoteness")
    for u in xs:
        if not adjacent(u, v):
            raise ValueError(f"{u} is not adjacent to {v}: not an adjacency pair")
    for w in parents(v):
        # for an integer slope the second parent has the same
        # denominator, so it is not a legal witness
        if remoteness(w) < remoteness(v) and all(adjacent(u, w) for u in xs):
            return 0, w
    value = sum(remoteness(u) for u in xs)
    max_r = max(remoteness(u) for u in xs)
    for vp in xs:
        if remoteness(vp) != max_r or remoteness(vp) == 0:
            continue
        for wp in parents(vp):
            if remoteness(wp) >= remoteness(vp):
                continue
            if adjacent(wp, v) and all(
                adjacent(u, wp) for u in xs if adjacent(u, vp)
            ):
                return value, (vp, wp)
    raise WitnessNotFound(f"no witness for X={[str(u) for u in xs]}, v={v}")


def build(n: int, window: tuple[int, int] = (0, 1)) -> Complex:
    """Truncated Farey complex: slopes with denominator at most n and
    value inside the window, plus infinity.

    >>> sorted(str(v) for v in build(1).vertices())
    ['0/1', '1/1', 'inf']
    """
    if n < 1:
        raise ValueError("need n >= 1")
    lo, hi = Fraction(window[0]), Fraction(window[1])
    verts = [INFINITY]
    for q in range(1, n + 1):
        p_lo = -(-lo.numerator * q // lo.denominator)  # ceil(lo*q)
        p_hi = hi.numerator * q // hi.denominator  # floor(hi*q)
        for p in range(p_lo, p_hi + 1):
            if gcd(abs(p), q) == 1:
                verts.append(Slope(p, q))
    verts = sorted(set(verts))
    nbrs: dict[Slope, set[Slope]] = {u: set() for u in verts}
    simplices: list[tuple] = [(u,) for u in verts]
    for i, u in enumerate(verts):
        for w in verts[i + 1 :]:
            if det_intersection(u, w) == 1:
                nbrs[u].add(w)
                nbrs[w].add(u)
                simplices.append((u, w))
    for u in verts:
        for w in sorted(nbrs[u]):
            if not u < w:
                continue
            for z in sorted(nbrs[u] & nbrs[w]):
                if w < z:
                    simplices.append((u, w, z))
    return Complex(simplices)


@dataclass
class AxiomReport:
    """Outcome of sampling the oracle axioms on a truncated complex."""

    n: int
    samples: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_axioms(n: int = 10, samples: int = 500, seed: int = 0) -> AxiomReport:
    """Sample random adjacency pairs in build(n) and check every clause
    of the blocking contract, including the strict decrease after a
    replacement.  Violations are reported verbatim, never repaired."""
    report = AxiomReport(n, samples)
    complex_ = build(n)
    verts = sorted(complex_.vertices())
    for u in verts:
        if remoteness(u) == 0 and not adjacent(u, BASE):
            report.violations.append(f"remoteness 0 at {u} outside the base star")
    positive = [u for u in verts if remoteness(u) > 0]
    stars = {u: sorted(w for w in verts if adjacent(w, u)) for u in positive}
    rng = random.Random(seed)
    for _ in range(samples):
        v = rng.choice(positive)
        xs = tuple(rng.choice(stars[v]) for _ in range(rng.randint(0, 3)))
        try:
            value, witness = blocking(xs, v)
        except WitnessNotFound as err:
            report.violations.append(str(err))
            continue
        if value == 0:
            w = witness
            if not adjacent(w, v):
                report.violations.append(f"b=0 witness {w} not adjacent to {v}")
            if remoteness(w) >= remoteness(v):
                report.violations.append(f"b=0 witness {w} no closer than {v}")
            for u in xs:
                if not adjacent(u, w):
                    report.violations.append(f"b=0 witness {w} misses {u}")
        else:
            vp, wp = witness
            if vp not in xs:
                report.violations.append(f"b>0 member {vp} not in X")
                continue
            if remoteness(wp) >= remoteness(vp):
                report.violations.append(f"b>0 replacement {wp} no closer than {vp}")
            if not adjacent(wp, v):
                report.violations.append(f"b>0 replacement {wp} not adjacent to {v}")
            for u in xs:
                if adjacent(u, vp) and not adjacent(u, wp):
                    report.violations.append(
                        f"b>0 replacement {wp} misses {u} adjacent to {vp}"
                    )
            ys = list(xs)
            ys.remove(vp)
            ys.append(wp)
            new_value, _ = blocking(tuple(ys), v)
            if new_value >= value:
                report.violations.append(
                    f"blocking did not decrease: {value} -> {new_value} at {v}"
                )
    return report


def random_based_loop(
    seed: int, max_denominator: int = 50, min_steps: int = 3, max_steps: int = 8
) -> list[Slope]:
    """A seeded random based loop: a neighbour walk away from infinity
    followed by a parent descent back home."""
    rng = random.Random(seed)
    path = [INFINITY]
    current = INFINITY
    for _ in range(rng.randint(min_steps, max_steps)):
        options = [
            u
            for u in neighbours(current, 4)
            if u.q <= max_denominator and abs(u.p) <= 3 * max_denominator
        ]
        current = rng.choice(options)
        path.append(current)
    while current != INFINITY:
        options = [u for u in parents(current) if u.q < current.q]
        current = rng.choice(options)
        if current != INFINITY:
            path.append(current)
    return path
