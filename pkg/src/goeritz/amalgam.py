"""Normal forms and the word problem for the genus-2 Goeritz group.

The group is the amalgamated free product of the pair stabilizer and
the triple stabilizer over the Klein four edge stabilizer (see
:mod:`goeritz.stabilizers`).  Choosing the coset transversals

    pair side:   { b^k : k in Z }
    triple side: { 1, d, d^2 }

every group element has a unique expression

    c_1 c_2 ... c_n . h

where h lies in the edge stabilizer and the c_i are nontrivial
transversal representatives alternating between the two sides.  We call
the c_i syllables.  Words are rewritten right to left: the normal form
of a suffix is maintained and each new letter is multiplied on from the
left.  A letter merges with the leading syllable of its own side, the
merge is re-split into transversal a part and an edge-stabilizer part, and
the edge-stabilizer part is pushed rightwards into the tail using the
exchange rules

    g . b^k = b^k . t^k g      g . d^m = d^(-m) . g

with t and a central.  Pushing never trivializes a syllable, so the
alternating shape survives and equality of group elements is literal
equality of normal forms.

Input words use one character per generator: b/B for the pair-side
generator and its inverse, g for the common involution, d/D for the
order-3 generator and its inverse.  The macros a (central involution of
the triple side) and t (its pair-side alias) both expand to "bgBg".
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .stabilizers import (
    EDGE_IDENTITY,
    EdgeStabilizer,
    PairStabilizer,
    TripleStabilizer,
)

__all__ = [
    "GENERATOR_ALPHABET",
    "Syllable",
    "NormalForm",
    "IDENTITY_NF",
    "parse",
    "invert_word",
    "random_word",
    "normal_form",
    "mul_nf",
    "inv_nf",
    "are_equal",
    "nf_to_word",
    "DEFAULT_RELATORS",
    "PresentationReport",
    "verify_presentation",
    "random_consequence",
]

GENERATOR_ALPHABET = "bBgdD"
_MACROS = {"a": "bgBg", "t": "bgBg"}
_INVERSE_CHAR = {"b": "B", "B": "b", "g": "g", "d": "D", "D": "d"}


def parse(text: str) -> str:
    """Expand macros and validate a generator word.

    >>> parse("a")
    'bgBg'
    >>> parse("bD")
    'bD'
    """
    out = []
    for ch in text:
        if ch in _MACROS:
            out.append(_MACROS[ch])
        elif ch in GENERATOR_ALPHABET:
            out.append(ch)
        else:
            raise ValueError(
                f"invalid character {ch!r}; expected one of 'bBgdDat'"
            )
    return "".join(out)


def invert_word(word: str) -> str:
    """Formal inverse of a generator word."""
    return "".join(_INVERSE_CHAR[ch] for ch in reversed(parse(word)))


def random_word(rng: random.Random, length: int) -> str:
    """Uniform random generator word of the given length."""
    return "".join(rng.choice(GENERATOR_ALPHABET) for _ in range(length))


@dataclass(frozen=True, slots=True)
class Syllable:
    """One alternating block: factor "P" carries b^power with power != 0,
    factor "Q" carries d^power with power in {1, 2}."""

    factor: str
    power: int

    def __post_init__(self) -> None:
        if self.factor == "P":
            if self.power == 0:
                raise ValueError("pair syllable with zero power")
        elif self.factor == "Q":
            if self.power not in (1, 2):
                raise ValueError(f"triple syllable power must be 1 or 2, got {self.power}")
        else:
            raise ValueError(f"unknown factor {self.factor!r}")

    def __str__(self) -> str:
        letter = "b" if self.factor == "P" else "d"
        return f"{self.factor}({letter}^{self.power})"


@dataclass(frozen=True, slots=True)
class NormalForm:
    """Alternating syllables followed by an edge-stabilizer tail."""

    syllables: tuple[Syllable, ...] = ()
    tail: EdgeStabilizer = EDGE_IDENTITY

    def __post_init__(self) -> None:
        for left, right in zip(self.syllables, self.syllables[1:]):
            if left.factor == right.factor:
                raise ValueError(f"syllables do not alternate: {left} {right}")

    def is_identity(self) -> bool:
        return not self.syllables and self.tail.is_identity()

    def __str__(self) -> str:
        head = " ".join(str(s) for s in self.syllables)
        tail = f"tail={self.tail}"
        return f"{head} | {tail}" if head else tail


IDENTITY_NF = NormalForm()


def _push(
    he: EdgeStabilizer, syllables: tuple[Syllable, ...], tail: EdgeStabilizer
) -> tuple[tuple[Syllable, ...], EdgeStabilizer]:
    # slide an edge-stabilizer element rightwards across the syllables
    if he.g == 0:
        # t/a is central in both factors: nothing changes on the way
        return syllables, (tail if he.a == 0 else he * tail)
    a_bit = he.a
    out = []
    for s in syllables:
        if s.factor == "P":
            a_bit = (a_bit + s.power) % 2  # g b^k = b^k t^k g
            out.append(s)
        else:
            out.append(Syllable("Q", (-s.power) % 3))  # g d^m = d^-m g
    return tuple(out), EdgeStabilizer(1, a_bit) * tail


def _mul_pair_left(elem: PairStabilizer, nf: NormalForm) -> NormalForm:
    syllables = nf.syllables
    if syllables and syllables[0].factor == "P":
        combined = elem * PairStabilizer(syllables[0].power, 0, 0)
        rest = syllables[1:]
    else:
        combined = elem
        rest = syllables
    k, he = combined.decompose()
    rest, tail = _push(he, rest, nf.tail)
    if k != 0:
        rest = (Syllable("P", k),) + rest
    return NormalForm(rest, tail)


def _mul_triple_left(elem: TripleStabilizer, nf: NormalForm) -> NormalForm:
    syllables = nf.syllables
    if syllables and syllables[0].factor == "Q":
        combined = elem * TripleStabilizer(syllables[0].power, 0, 0)
        rest = syllables[1:]
    else:
        combined = elem
        rest = syllables
    m, he = combined.decompose()
    rest, tail = _push(he, rest, nf.tail)
    if m != 0:
        rest = (Syllable("Q", m),) + rest
    return NormalForm(rest, tail)


_LETTER_ACTION = {
    "b": ("P", PairStabilizer(1, 0, 0)),
    "B": ("P", PairStabilizer(-1, 0, 0)),
    "g": ("P", PairStabilizer(0, 0, 1)),
    "d": ("Q", TripleStabilizer(1, 0, 0)),
    "D": ("Q", TripleStabilizer(2, 0, 0)),
}


def normal_form(word: str) -> NormalForm:
    """Normal form of a generator word.

    >>> str(normal_form("bd"))
    'P(b^1) Q(d^1) | tail=1'
    >>> normal_form("gg").is_identity()
    True
    """
    nf = IDENTITY_NF
    for ch in reversed(parse(word)):
        side, elem = _LETTER_ACTION[ch]
        nf = _mul_pair_left(elem, nf) if side == "P" else _mul_triple_left(elem, nf)
    return nf


def mul_nf(u: NormalForm, v: NormalForm) -> NormalForm:
    """Product of two normal forms."""
    result = _mul_pair_left(u.tail.in_pair(), v)
    for s in reversed(u.syllables):
        if s.factor == "P":
            result = _mul_pair_left(PairStabilizer(s.power, 0, 0), result)
        else:
            result = _mul_triple_left(TripleStabilizer(s.power, 0, 0), result)
    return result


def inv_nf(u: NormalForm) -> NormalForm:
    """Inverse of a normal form."""
    result = IDENTITY_NF
    for s in u.syllables:
        if s.factor == "P":
            result = _mul_pair_left(PairStabilizer(-s.power, 0, 0), result)
        else:
            result = _mul_triple_left(TripleStabilizer((-s.power) % 3, 0, 0), result)
    return _mul_pair_left(u.tail.inverse().in_pair(), result)


def are_equal(u: str, v: str) -> bool:
    """Word problem: do two generator words define the same element?

    >>> are_equal("ad", "da")
    True
    >>> are_equal("bd", "db")
    False
    """
    return normal_form(u) == normal_form(v)


def nf_to_word(nf: NormalForm) -> str:
    """A generator word spelling out a normal form."""
    parts = []
    for s in nf.syllables:
        if s.factor == "P":
            parts.append(("b" if s.power > 0 else "B") * abs(s.power))
        else:
            parts.append("d" * s.power)
    parts.append("g" * nf.tail.g + "a" * nf.tail.a)
    return "".join(parts)


def _commutator(u: str, v: str) -> str:
    return parse(u) + parse(v) + invert_word(u) + invert_word(v)


# defining relators of the finite presentation on b, g, d (a = bgBg)
DEFAULT_RELATORS: tuple[tuple[str, str], ...] = (
    ("g^2", "gg"),
    ("d^3", "ddd"),
    ("(gd)^2", "gdgd"),
    ("a^2", parse("aa")),
    ("[a,b]", _commutator("a", "b")),
    ("[a,d]", _commutator("a", "d")),
)


def random_consequence(rng: random.Random, max_len: int = 200) -> str:
    """A random product of conjugated relators, length at most max_len.

    Every such word is a consequence of the defining relators, hence
    must normalize to the identity.
    """
    count = rng.randint(1, 3)
    budget = max_len // count
    parts = []
    for _ in range(count):
        name, relator = DEFAULT_RELATORS[rng.randrange(len(DEFAULT_RELATORS))]
        conj_len = max(0, (budget - len(relator)) // 2)
        u = random_word(rng, rng.randint(0, conj_len))
        parts.append(u + relator + invert_word(u))
    word = "".join(parts)
    assert len(word) <= max_len
    return word


@dataclass
class PresentationReport:
    """Outcome of checking the relators and sampled consequences."""

    relator_results: list[tuple[str, bool]]
    consequences_checked: int
    consequence_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.relator_results) and not self.consequence_failures


def verify_presentation(
    consequences: int = 1000, max_len: int = 200, seed: int = 0
) -> PresentationReport:
    """Check that every defining relator, and a seeded sample of products
    of conjugated relators, normalizes to the identity."""
    relator_results = [
        (name, normal_form(word).is_identity()) for name, word in DEFAULT_RELATORS
    ]
    rng = random.Random(seed)
    failures = []
    for _ in range(consequences):
        word = random_consequence(rng, max_len)
        if not normal_form(word).is_identity():
            failures.append(word)
    return PresentationReport(relator_results, consequences, failures)
