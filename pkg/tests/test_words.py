"""Free-group word machinery: reduction, cyclic words, primitivity.

The primitivity oracle is cross-checked against an independent one:
in rank 2 the primitive elements with a fixed primitive abelianization
(a, b) form a single conjugacy class, represented by the Christoffel
word of slope b/a with signs adjusted.  Conjugacy of cyclically reduced
words is equality of canonical rotations, so the check is exact.
"""

import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goeritz.words import (
    CyclicWord,
    Letter,
    Primitivity,
    ReducedWord,
    abelianize,
    cyclic_reduce,
    format_word,
    is_primitive,
    iter_cyclically_reduced,
    mixed_sign_criterion,
    parse_word,
    reduce,
)

ALPHABET = "xXyY"


def random_text(rng, length):
    return "".join(rng.choice(ALPHABET) for _ in range(length))


def test_parse_format_roundtrip():
    for text in ("", "x", "xy", "xYxY", "xxxyyy"):
        assert format_word(parse_word(text)) == text


def test_parse_reduces():
    assert format_word(parse_word("xX")) == ""
    assert format_word(parse_word("xyYX")) == ""
    assert format_word(parse_word("xyYx")) == "xx"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("xz")


def test_letter_inverse():
    for letter in (Letter("x", 1), Letter("x", -1), Letter("y", 1), Letter("y", -1)):
        assert letter.inverse().inverse() == letter
        assert letter.inverse() != letter


def test_reduced_word_inverse():
    rng = random.Random(0)
    for _ in range(200):
        w = parse_word(random_text(rng, rng.randint(0, 12)))
        assert format_word(reduce(list(w) + list(w.inverse()))) == ""


def test_cyclic_reduce_strips_conjugation():
    assert format_word(cyclic_reduce(parse_word("xxyX"))) == "xy"
    assert format_word(cyclic_reduce(parse_word("Yxy"))) == "x"
    assert len(cyclic_reduce(parse_word("xyXY"))) == 4


def test_cyclic_word_rotation_invariance():
    rng = random.Random(1)
    for _ in range(200):
        w = cyclic_reduce(parse_word(random_text(rng, rng.randint(1, 10))))
        if len(w) == 0:
            continue
        letters = list(w)
        k = rng.randrange(len(letters))
        rotated = cyclic_reduce(reduce(letters[k:] + letters[:k]))
        assert rotated == w


def test_conjugation_invariance():
    rng = random.Random(2)
    for _ in range(200):
        w = parse_word(random_text(rng, rng.randint(1, 8)))
        c = parse_word(random_text(rng, rng.randint(0, 6)))
        conj = reduce(list(c) + list(w) + list(c.inverse()))
        assert cyclic_reduce(conj) == cyclic_reduce(w)


@given(st.text(alphabet=ALPHABET, max_size=30), st.text(alphabet=ALPHABET, max_size=30))
@settings(max_examples=200)
def test_abelianize_is_homomorphic(s, t):
    a = abelianize(parse_word(s))
    b = abelianize(parse_word(t))
    both = abelianize(parse_word(s + t))
    assert both == (a[0] + b[0], a[1] + b[1])


def test_mixed_sign_examples():
    certified = Primitivity.CERTIFIED_NON_PRIMITIVE
    inconclusive = Primitivity.INCONCLUSIVE
    assert mixed_sign_criterion(cyclic_reduce(parse_word("xyXY"))) is certified
    assert mixed_sign_criterion(cyclic_reduce(parse_word("xyxY"))) is certified
    assert mixed_sign_criterion(cyclic_reduce(parse_word("xy"))) is inconclusive
    assert mixed_sign_criterion(cyclic_reduce(parse_word("xY"))) is inconclusive
    assert mixed_sign_criterion(cyclic_reduce(parse_word("xxyxy"))) is inconclusive
    with pytest.raises(ValueError):
        mixed_sign_criterion(cyclic_reduce(parse_word("xX")))


def christoffel(a, b):
    """Lower Christoffel word with a letters x and b letters y (a, b >= 0,
    coprime, not both zero), the standard primitive of that abelianization."""
    n = a + b
    out = []
    for t in range(1, n + 1):
        out.append("x" if (t * b) // n == ((t - 1) * b) // n else "y")
    return "".join(out)


def reference_is_primitive(word):
    """Independent oracle: compare against the signed Christoffel word."""
    a, b = abelianize(word)
    if gcd(abs(a), abs(b)) != 1:
        return False
    text = christoffel(abs(a), abs(b))
    if a < 0:
        text = text.replace("x", "X")
    if b < 0:
        text = text.replace("y", "Y")
    return cyclic_reduce(word) == cyclic_reduce(parse_word(text))


def test_christoffel_construction():
    assert christoffel(1, 0) == "x"
    assert christoffel(0, 1) == "y"
    assert christoffel(1, 1) == "xy"
    assert christoffel(2, 1) == "xxy"
    assert christoffel(3, 2) == "xxyxy"


def test_primitive_basic_examples():
    assert is_primitive(parse_word("x"))
    assert is_primitive(parse_word("Y"))
    assert is_primitive(parse_word("xy"))
    assert is_primitive(parse_word("xY"))
    assert is_primitive(parse_word("xxy"))
    assert is_primitive(parse_word("yxY"))  # conjugate of x
    assert not is_primitive(parse_word(""))
    assert not is_primitive(parse_word("xx"))
    assert not is_primitive(parse_word("xyXY"))
    assert not is_primitive(parse_word("xxyy"))


def test_primitive_matches_reference_exhaustively():
    for letters in iter_cyclically_reduced(8):
        w = ReducedWord(letters)
        assert is_primitive(w) == reference_is_primitive(w), format_word(w)


def test_primitive_matches_reference_on_random_long_words():
    rng = random.Random(3)
    for _ in range(300):
        w = parse_word(random_text(rng, rng.randint(9, 24)))
        assert is_primitive(w) == reference_is_primitive(w), format_word(w)


def test_primitive_invariant_under_inversion_and_conjugation():
    rng = random.Random(4)
    for _ in range(200):
        w = parse_word(random_text(rng, rng.randint(1, 10)))
        c = parse_word(random_text(rng, rng.randint(0, 5)))
        conj = reduce(list(c) + list(w) + list(c.inverse()))
        assert is_primitive(w) == is_primitive(w.inverse()) == is_primitive(conj)


def test_enumeration_counts_match_brute_force():
    from collections import Counter

    by_length = Counter(len(letters) for letters in iter_cyclically_reduced(6))
    assert by_length[0] == 0  # the empty word is not enumerated
    for n in range(1, 7):
        assert by_length[n] == 3**n + 2 + (-1) ** n


def test_enumeration_agrees_with_filter():
    seen = {tuple(l.index for l in letters) for letters in iter_cyclically_reduced(4)}
    expected = set()
    for n in range(1, 5):
        for code in range(4**n):
            digits = tuple((code // 4**i) % 4 for i in range(n))
            w = parse_word("".join(ALPHABET[d] for d in digits))
            if len(w) == n:
                cyc = cyclic_reduce(w)
                if len(cyc) == n and tuple(l.index for l in w) == digits:
                    expected.add(digits)
    # enumeration yields one tuple per word, not one per conjugacy class
    assert seen == expected


@given(st.text(alphabet=ALPHABET, max_size=40))
@settings(max_examples=300)
def test_reduction_is_idempotent(s):
    w = parse_word(s)
    assert reduce(list(w)) == w


def test_cyclic_word_requires_canonical_input():
    with pytest.raises(ValueError):
        CyclicWord((Letter("x", 1), Letter("x", -1)))
