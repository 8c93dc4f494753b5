"""The three finite-normal-form stabilizer groups behind the amalgam.

The genus-2 Goeritz group decomposes as an amalgamated free product of
two vertex stabilizers over an edge stabilizer.  All three have exact
normal forms on small integer data, worked out here once and reused by
the rewriting engine in :mod:`goeritz.amalgam`.

Pair stabilizer  (infinite):
    generated by b and the involution g, with the central involution
    t = b g b^-1 g.  Relations: g^2 = t^2 = 1, t central, g b g = t b.
    Every element is uniquely  b^k t^e g^d  with k in Z and e, d bits,
    so the group is (Z x Z/2) semidirect Z/2.

Triple stabilizer  (order 12):
    generated by the order-3 element d, the involution g with
    g d g = d^-1, and a central involution a.  Every element is
    uniquely  d^m g^c a^e, giving S_3 x Z/2.

Edge stabilizer  (order 4):
    the Klein group {1, g, a, ga}.  It embeds in the pair stabilizer by
    g -> g, a -> t and in the triple stabilizer by inclusion.

Multiplying out the normal forms only ever needs two exchange rules:

    g . b^k = b^k . t^k g        (pair side)
    g . d^m = d^(-m) . g         (triple side)

with t and a passing through everything.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "PairStabilizer",
    "TripleStabilizer",
    "EdgeStabilizer",
    "PAIR_IDENTITY",
    "PAIR_B",
    "PAIR_G",
    "PAIR_T",
    "TRIPLE_IDENTITY",
    "TRIPLE_D",
    "TRIPLE_G",
    "TRIPLE_A",
    "EDGE_IDENTITY",
    "EDGE_G",
    "EDGE_A",
    "EDGE_GA",
    "triple_elements",
    "edge_elements",
]


@dataclass(frozen=True, slots=True)
class EdgeStabilizer:
    """Klein four-group element g^c a^e with bits c, e."""

    g: int
    a: int

    def __post_init__(self) -> None:
        if self.g not in (0, 1) or self.a not in (0, 1):
            raise ValueError(f"edge stabilizer bits must be 0/1, got {self}")

    def __mul__(self, other: "EdgeStabilizer") -> "EdgeStabilizer":
        return EdgeStabilizer((self.g + other.g) % 2, (self.a + other.a) % 2)

    def inverse(self) -> "EdgeStabilizer":
        return self  # every element squares to the identity

    def in_pair(self) -> "PairStabilizer":
        """Embed into the pair stabilizer: g -> g, a -> t."""
        return PairStabilizer(0, self.a, self.g)

    def in_triple(self) -> "TripleStabilizer":
        """Embed into the triple stabilizer: g -> g, a -> a."""
        return TripleStabilizer(0, self.g, self.a)

    def is_identity(self) -> bool:
        return self.g == 0 and self.a == 0

    def __str__(self) -> str:
        return ("g" * self.g + "a" * self.a) or "1"


@dataclass(frozen=True, slots=True)
class PairStabilizer:
    """Element b^k t^t_bit g^g_bit of the pair stabilizer."""

    k: int
    t: int
    g: int

    def __post_init__(self) -> None:
        if self.t not in (0, 1) or self.g not in (0, 1):
            raise ValueError(f"pair stabilizer bits must be 0/1, got {self}")

    def __mul__(self, other: "PairStabilizer") -> "PairStabilizer":
        # move other's b^m leftwards past our trailing g^g: each pass
        # across g contributes one central t per power of b
        m, extra_t = other.k, (self.g * other.k) % 2
        return PairStabilizer(
            self.k + m,
            (self.t + other.t + extra_t) % 2,
            (self.g + other.g) % 2,
        )

    def inverse(self) -> "PairStabilizer":
        if self.g == 0:
            return PairStabilizer(-self.k, self.t, 0)
        return PairStabilizer(-self.k, (self.t + self.k) % 2, 1)

    def decompose(self) -> tuple[int, EdgeStabilizer]:
        """Split as b^k times an edge stabilizer element."""
        return self.k, EdgeStabilizer(self.g, self.t)

    def is_identity(self) -> bool:
        return self.k == 0 and self.t == 0 and self.g == 0

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append(f"b^{self.k}")
        if self.t:
            parts.append("t")
        if self.g:
            parts.append("g")
        return " ".join(parts) or "1"


@dataclass(frozen=True, slots=True)
class TripleStabilizer:
    """Element d^d_pow g^g_bit a^a_bit of the triple stabilizer."""

    d: int
    g: int
    a: int

    def __post_init__(self) -> None:
        if self.d not in (0, 1, 2):
            raise ValueError(f"d power must be 0..2, got {self}")
        if self.g not in (0, 1) or self.a not in (0, 1):
            raise ValueError(f"triple stabilizer bits must be 0/1, got {self}")

    def __mul__(self, other: "TripleStabilizer") -> "TripleStabilizer":
        # dihedral exchange: g d^m = d^-m g; a is central
        m = other.d if self.g == 0 else (-other.d) % 3
        return TripleStabilizer(
            (self.d + m) % 3,
            (self.g + other.g) % 2,
            (self.a + other.a) % 2,
        )

    def inverse(self) -> "TripleStabilizer":
        if self.g == 1:
            return self  # reflections are involutions
        return TripleStabilizer((-self.d) % 3, 0, self.a)

    def decompose(self) -> tuple[int, EdgeStabilizer]:
        """Split as d^m times an edge stabilizer element."""
        return self.d, EdgeStabilizer(self.g, self.a)

    def is_identity(self) -> bool:
        return self.d == 0 and self.g == 0 and self.a == 0

    def __str__(self) -> str:
        parts = []
        if self.d:
            parts.append(f"d^{self.d}")
        if self.g:
            parts.append("g")
        if self.a:
            parts.append("a")
        return " ".join(parts) or "1"


PAIR_IDENTITY = PairStabilizer(0, 0, 0)
PAIR_B = PairStabilizer(1, 0, 0)
PAIR_T = PairStabilizer(0, 1, 0)
PAIR_G = PairStabilizer(0, 0, 1)

TRIPLE_IDENTITY = TripleStabilizer(0, 0, 0)
TRIPLE_D = TripleStabilizer(1, 0, 0)
TRIPLE_G = TripleStabilizer(0, 1, 0)
TRIPLE_A = TripleStabilizer(0, 0, 1)

EDGE_IDENTITY = EdgeStabilizer(0, 0)
EDGE_G = EdgeStabilizer(1, 0)
EDGE_A = EdgeStabilizer(0, 1)
EDGE_GA = EdgeStabilizer(1, 1)


def triple_elements() -> tuple[TripleStabilizer, ...]:
    """All twelve elements of the triple stabilizer, in lexicographic order."""
    return tuple(
        TripleStabilizer(d, g, a)
        for d in range(3)
        for g in range(2)
        for a in range(2)
    )


def edge_elements() -> tuple[EdgeStabilizer, ...]:
    """All four elements of the edge stabilizer."""
    return (EDGE_IDENTITY, EDGE_G, EDGE_A, EDGE_GA)
