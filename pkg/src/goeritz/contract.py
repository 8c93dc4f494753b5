"""Certified contraction of simplicial loops in a flag complex.

The engine sees a complex only through three oracles:

  adjacent(u, v)   reflexive adjacency: equal vertices or an edge
  remoteness(v)    a non-negative integer with r^-1(0) inside the star
                   of the base vertex
  blocking(X, v)   for a multiset X of at most two neighbours of v,
                   either (0, w) with w adjacent to v and to all of X
                   and r(w) < r(v), or (value > 0, (v', w')) where
                   v' in X, r(w') < r(v'), every member of X adjacent
                   to v' is adjacent to w', w' is adjacent to v, and
                   replacing v' by w' strictly lowers the value

A based loop is a cyclic vertex list whose consecutive entries are
adjacent.  The engine repeatedly looks at a position of maximal
remoteness n > 0 (ties: lowest index), queries blocking with the two
neighbouring images, and either relabels the position to the b = 0
witness or subdivides towards the offending neighbour v' with the new
image w'.  Relabels shrink the set of positions at remoteness n;
subdivisions strictly lower the blocking value at the active position;
so the triple

    (n, number of positions at remoteness n, blocking value)

drops lexicographically at every move, which both proves termination
and is asserted at runtime.  The engine stops as soon as every image is
adjacent to the base vertex, i.e. the loop lies in the base star; a
loop in the star of a vertex of a flag complex is null-homotopic.

Every run returns a replayable certificate.  Oracle answers are checked
against the contract above; a bad answer raises
OracleContractViolation rather than producing a bogus certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

__all__ = [
    "OracleContractViolation",
    "FuelExhausted",
    "Relabel",
    "Subdivide",
    "HomotopyCertificate",
    "ValidationReport",
    "contract_loop",
    "validate",
    "max_remoteness",
    "DEFAULT_FUEL",
]

Vertex = Hashable
Adjacency = Callable[[Vertex, Vertex], bool]
Remoteness = Callable[[Vertex], int]
Blocking = Callable[[tuple, Vertex], tuple]

DEFAULT_FUEL = 1_000_000


class OracleContractViolation(RuntimeError):
    """An oracle answer broke its stated contract."""


class FuelExhausted(RuntimeError):
    """The move budget ran out before the loop reached the base star."""


@dataclass(frozen=True, slots=True)
class Relabel:
    """Replace the image at `pos` (old -> new)."""

    pos: int
    old: Vertex
    new: Vertex


@dataclass(frozen=True, slots=True)
class Subdivide:
    """Insert a new position with image `insert` at index `pos`,
    between the old positions pos-1 and pos (mod length)."""

    pos: int
    insert: Vertex


@dataclass(frozen=True, slots=True)
class HomotopyCertificate:
    """A replayable move list taking the input loop into the base star."""

    moves: tuple
    final: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        object.__setattr__(self, "final", tuple(self.final))

    def to_json_dict(self, encode: Callable[[Vertex], str] = str) -> dict:
        moves = []
        for m in self.moves:
            if isinstance(m, Relabel):
                moves.append(
                    {"type": "relabel", "pos": m.pos, "old": encode(m.old), "new": encode(m.new)}
                )
            else:
                moves.append({"type": "subdivide", "pos": m.pos, "insert": encode(m.insert)})
        return {"moves": moves, "final": [encode(v) for v in self.final]}

    def to_json(self, encode: Callable[[Vertex], str] = str) -> str:
        return json.dumps(self.to_json_dict(encode), indent=2)

    @classmethod
    def from_json_dict(
        cls, data: dict, decode: Callable[[str], Vertex] = lambda s: s
    ) -> "HomotopyCertificate":
        moves: list = []
        for m in data["moves"]:
            if m["type"] == "relabel":
                moves.append(Relabel(m["pos"], decode(m["old"]), decode(m["new"])))
            elif m["type"] == "subdivide":
                moves.append(Subdivide(m["pos"], decode(m["insert"])))
            else:
                raise ValueError(f"unknown move type {m['type']!r}")
        return cls(moves, [decode(v) for v in data["final"]])


def max_remoteness(remoteness: Remoteness, loop: Iterable[Vertex]) -> int:
    return max(remoteness(v) for v in loop)


def _reflexive(adjacent: Adjacency) -> Adjacency:
    return lambda u, v: u == v or adjacent(u, v)


def contract_loop(
    adjacent: Adjacency,
    remoteness: Remoteness,
    blocking: Blocking,
    loop: Sequence[Vertex],
    base: Vertex,
    fuel: int = DEFAULT_FUEL,
) -> HomotopyCertificate:
    """Contract a based loop into the star of the base vertex.

    Raises ValueError for an invalid input loop, FuelExhausted when the
    move budget runs out, OracleContractViolation when an oracle answer
    contradicts its contract.
    """
    adj = _reflexive(adjacent)
    cur = list(loop)
    if not cur:
        raise ValueError("loop must be nonempty")
    if cur[0] != base:
        raise ValueError("loop must start at the base vertex")
    m = len(cur)
    for idx, v in enumerate(cur):
        if not adj(v, cur[(idx + 1) % m]):
            raise ValueError(f"loop images at {idx}, {(idx + 1) % m} are not adjacent")

    def remote_checked(v: Vertex) -> int:
        r = remoteness(v)
        if r < 0:
            raise OracleContractViolation(f"negative remoteness {r} at {v!r}")
        if r == 0 and not adj(v, base):
            raise OracleContractViolation(
                f"remoteness 0 at {v!r} which is not adjacent to the base"
            )
        return r

    moves: list = []
    prev_measure: tuple[int, int, int] | None = None
    while True:
        m = len(cur)
        rs = [remote_checked(v) for v in cur]
        if all(adj(v, base) for v in cur):
            return HomotopyCertificate(moves, list(cur))
        n = max(rs)
        i = rs.index(n)
        v = cur[i]
        left_i, right_i = (i - 1) % m, (i + 1) % m
        x_pair = (cur[left_i], cur[right_i])
        value, witness = blocking(x_pair, v)
        measure = (n, rs.count(n), value)
        if prev_measure is not None and not measure < prev_measure:
            raise OracleContractViolation(
                f"progress measure did not decrease: {prev_measure} -> {measure}"
            )
        prev_measure = measure
        if fuel <= 0:
            raise FuelExhausted(
                f"fuel exhausted with {m} positions at max remoteness {n}"
            )
        fuel -= 1
        if value == 0:
            w = witness
            if not adj(w, v):
                raise OracleContractViolation(f"b=0 witness {w!r} not adjacent to {v!r}")
            if remote_checked(w) >= n:
                raise OracleContractViolation(
                    f"b=0 witness {w!r} does not lower remoteness below {n}"
                )
            for u in x_pair:
                if not adj(u, w):
                    raise OracleContractViolation(
                        f"b=0 witness {w!r} not adjacent to neighbour image {u!r}"
                    )
            moves.append(Relabel(i, v, w))
            cur[i] = w
        else:
            vp, wp = witness
            if vp not in x_pair:
                raise OracleContractViolation(
                    f"b>0 witness member {vp!r} is not a neighbour image"
                )
            if remote_checked(wp) >= remote_checked(vp):
                raise OracleContractViolation(
                    f"b>0 replacement {wp!r} does not lower remoteness below {vp!r}"
                )
            for u in x_pair:
                if adj(u, vp) and not adj(u, wp):
                    raise OracleContractViolation(
                        f"b>0 replacement {wp!r} misses neighbour {u!r} of {vp!r}"
                    )
            if not adj(wp, v):
                raise OracleContractViolation(
                    f"b>0 replacement {wp!r} not adjacent to active image {v!r}"
                )
            sides = [j for j in sorted({left_i, right_i}) if cur[j] == vp]
            j = sides[0]
            if j == right_i:
                insert_at = i + 1  # slot between i and its right neighbour
            else:
                insert_at = i if i > 0 else m  # slot between the left neighbour and i
            moves.append(Subdivide(insert_at, wp))
            cur.insert(insert_at, wp)


@dataclass
class ValidationReport:
    """Replay outcome; truthy exactly when the certificate is valid."""

    ok: bool
    failed_move: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate(
    adjacent: Adjacency,
    certificate: HomotopyCertificate,
    loop: Sequence[Vertex],
    base: Vertex,
) -> ValidationReport:
    """Replay a certificate against the initial loop.

    Each relabel must stay adjacent to the old image and to both
    neighbouring images; each subdivision must be adjacent to both
    flanking images; the replayed loop must equal the recorded final
    loop, which must lie in the star of the base vertex.
    """
    adj = _reflexive(adjacent)
    cur = list(loop)
    for idx, move in enumerate(certificate.moves):
        m = len(cur)
        if isinstance(move, Relabel):
            if not 0 <= move.pos < m:
                return ValidationReport(False, idx, f"relabel position {move.pos} out of range")
            if cur[move.pos] != move.old:
                return ValidationReport(
                    False, idx, f"relabel expected {move.old!r} at {move.pos}, found {cur[move.pos]!r}"
                )
            for u in (move.old, cur[(move.pos - 1) % m], cur[(move.pos + 1) % m]):
                if not adj(move.new, u):
                    return ValidationReport(
                        False, idx, f"relabel image {move.new!r} not adjacent to {u!r}"
                    )
            cur[move.pos] = move.new
        elif isinstance(move, Subdivide):
            if not 1 <= move.pos <= m:
                return ValidationReport(
                    False, idx, f"subdivide position {move.pos} out of range"
                )
            flanks = (cur[move.pos - 1], cur[move.pos % m])
            for u in flanks:
                if not adj(move.insert, u):
                    return ValidationReport(
                        False, idx, f"inserted image {move.insert!r} not adjacent to {u!r}"
                    )
            cur.insert(move.pos, move.insert)
        else:
            return ValidationReport(False, idx, f"unknown move {move!r}")
    if cur != list(certificate.final):
        return ValidationReport(False, None, "replayed loop differs from recorded final loop")
    for v in cur:
        if not adj(v, base):
            return ValidationReport(False, None, f"final image {v!r} outside the base star")
    return ValidationReport(True)
