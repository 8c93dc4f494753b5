"""Small simplicial complexes of dimension at most two.

A complex is a downward-closed family of nonempty vertex sets of size
one, two or three.  Vertex labels are opaque: anything hashable and
mutually sortable works (strings, tuples, the Slope values of
:mod:`goeritz.farey`).

Two vertices are adjacent when they are equal or span an edge; the star
of v is the full subcomplex on the vertices adjacent to v, and the link
is the boundary part of the star away from v.  A complex is flag when
every three pairwise-adjacent distinct vertices span a triangle.

The barycentric subdivision has one vertex per simplex, labelled by the
sorted tuple of the original labels, and one simplex per chain in the
face order.  Removing the open stars of the original vertices leaves
the full subcomplex on the edge and triangle barycenters.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Hashable, Iterable

__all__ = ["Complex", "remove_open_stars"]

Label = Hashable


def _label_sorted(labels: Iterable[Label]) -> tuple:
    """Deterministic tuple of labels, naturally ordered when possible."""
    try:
        return tuple(sorted(labels))
    except TypeError:
        return tuple(sorted(labels, key=repr))


def _as_simplex(vertices: Iterable[Label]) -> frozenset:
    s = frozenset(vertices)
    if not 1 <= len(s) <= 3:
        raise ValueError(f"simplex must have 1..3 vertices, got {len(s)}")
    return s


class Complex:
    """An abstract simplicial complex of dimension at most 2."""

    __slots__ = ("_simplices",)

    def __init__(self, simplices: Iterable[Iterable[Label]] = ()):
        closed: set[frozenset] = set()
        for raw in simplices:
            s = _as_simplex(raw)
            closed.add(s)
            for r in range(1, len(s)):
                for face in combinations(tuple(s), r):
                    closed.add(frozenset(face))
        self._simplices = frozenset(closed)

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable[Label]]) -> "Complex":
        return cls(maximal)

    # -- basic queries ------------------------------------------------

    def simplices(self, dim: int | None = None) -> frozenset:
        if dim is None:
            return self._simplices
        return frozenset(s for s in self._simplices if len(s) == dim + 1)

    def vertices(self) -> frozenset:
        return frozenset(v for s in self._simplices if len(s) == 1 for v in s)

    def has(self, simplex: Iterable[Label]) -> bool:
        return frozenset(simplex) in self._simplices

    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(s) for s in self._simplices), default=0) - 1

    def maximal_simplices(self) -> list[tuple]:
        out = [
            s
            for s in self._simplices
            if not any(s < t for t in self._simplices)
        ]
        tuples = [_label_sorted(s) for s in out]
        try:
            return sorted(tuples)
        except TypeError:
            return sorted(tuples, key=repr)

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"Complex(V={len(self.simplices(0))}, E={len(self.simplices(1))}, F={len(self.simplices(2))})"

    # -- adjacency, star, link ----------------------------------------

    def _require_vertex(self, v: Label) -> None:
        if frozenset([v]) not in self._simplices:
            raise ValueError(f"unknown vertex {v!r}")

    def adjacent(self, w: Label, v: Label) -> bool:
        """True when w and v are equal or span an edge."""
        self._require_vertex(w)
        self._require_vertex(v)
        return w == v or frozenset([w, v]) in self._simplices

    def full_subcomplex(self, keep: Iterable[Label]) -> "Complex":
        """All simplices whose vertices all lie in `keep`."""
        keep = set(keep)
        return _raw(s for s in self._simplices if s <= keep)

    def star(self, v: Label) -> "Complex":
        """The full subcomplex on all vertices adjacent to v (v included)."""
        self._require_vertex(v)
        near = {u for u in self.vertices() if self.adjacent(u, v)}
        return self.full_subcomplex(near)

    def link(self, v: Label) -> "Complex":
        """Simplices not containing v whose join with v lies in the complex."""
        self._require_vertex(v)
        return _raw(
            s
            for s in self._simplices
            if v not in s and (s | {v}) in self._simplices
        )

    # -- structure tests ----------------------------------------------

    def is_flag(self) -> bool:
        """Every pairwise-adjacent vertex triple spans a triangle."""
        neighbours: dict[Label, set] = {v: set() for v in self.vertices()}
        for e in self.simplices(1):
            u, w = tuple(e)
            neighbours[u].add(w)
            neighbours[w].add(u)
        for e in self.simplices(1):
            u, w = tuple(e)
            for z in neighbours[u] & neighbours[w]:
                if frozenset([u, w, z]) not in self._simplices:
                    return False
        return True

    def euler_characteristic(self) -> int:
        return (
            len(self.simplices(0))
            - len(self.simplices(1))
            + len(self.simplices(2))
        )

    def _components(self) -> list[set]:
        neighbours: dict[Label, set] = {v: set() for v in self.vertices()}
        for e in self.simplices(1):
            u, w = tuple(e)
            neighbours[u].add(w)
            neighbours[w].add(u)
        seen: set = set()
        parts = []
        for v in neighbours:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for w in neighbours[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            parts.append(comp)
        return parts

    def is_connected(self) -> bool:
        return len(self._components()) <= 1

    def is_acyclic_graph(self) -> bool:
        """For 1-dimensional complexes: no cycles."""
        if self.simplices(2):
            raise ValueError("acyclicity test requires a 1-dimensional complex")
        return len(self.simplices(1)) + len(self._components()) == len(
            self.simplices(0)
        )

    # -- subdivision ----------------------------------------------------

    def barycentric(self) -> "Complex":
        """Barycentric subdivision; barycenters are labelled by the
        sorted tuple of the original simplex labels."""
        label = {s: _label_sorted(s) for s in self._simplices}
        out: set[frozenset] = set()
        for s in self._simplices:
            out.add(frozenset([label[s]]))
        by_size: dict[int, list[frozenset]] = {1: [], 2: [], 3: []}
        for s in self._simplices:
            by_size[len(s)].append(s)
        for t in by_size[2] + by_size[3]:
            for r in range(1, len(t)):
                for face in combinations(tuple(t), r):
                    out.add(frozenset([label[frozenset(face)], label[t]]))
        for t in by_size[3]:
            for mid in combinations(tuple(t), 2):
                for low in mid:
                    out.add(
                        frozenset(
                            [label[frozenset([low])], label[frozenset(mid)], label[t]]
                        )
                    )
        return _raw(out)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        """JSON-ready dict; labels are stringified."""
        return {
            "max_simplices": [
                [str(v) for v in s] for s in self.maximal_simplices()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Complex":
        if "max_simplices" not in data:
            raise ValueError('expected a "max_simplices" key')
        return cls(data["max_simplices"])

    @classmethod
    def from_json(cls, text: str) -> "Complex":
        return cls.from_json_dict(json.loads(text))

    def to_dot(self) -> str:
        """GraphViz rendering of a complex of dimension at most 1."""
        if self.simplices(2):
            raise ValueError("dot export requires a 1-dimensional complex")
        verts = sorted(self.vertices(), key=str)
        ids = {v: f"n{i}" for i, v in enumerate(verts)}
        lines = ["graph complex {"]
        for v in verts:
            lines.append(f'  {ids[v]} [label="{v}"];')
        for e in sorted((tuple(sorted(e, key=str)) for e in self.simplices(1))):
            u, w = e
            lines.append(f"  {ids[u]} -- {ids[w]};")
        lines.append("}")
        return "\n".join(lines)


def _raw(simplices: Iterable[frozenset]) -> Complex:
    # internal: the family is already downward closed
    c = Complex.__new__(Complex)
    c._simplices = frozenset(simplices)
    return c


def remove_open_stars(subdivision: Complex, original_vertices: Iterable[Label]) -> Complex:
    """Drop the open stars of the original vertices from a barycentric
    subdivision, leaving the full subcomplex on the remaining barycenters.

    `original_vertices` holds the labels the complex had before
    subdividing; their barycenters carry the labels `(v,)`.
    """
    removed = {(v,) for v in original_vertices}
    keep = [u for u in subdivision.vertices() if u not in removed]
    return subdivision.full_subcomplex(keep)
