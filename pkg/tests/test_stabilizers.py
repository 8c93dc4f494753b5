"""Finite normal forms for the two vertex stabilizers and the edge group.

Each multiplication law is checked against an independent faithful
model.  The pair side embeds into GL_2 over Laurent polynomials: the
infinite-order generator goes to diag(v, -v), the swap involution to
the permutation matrix, and the central involution to -I.  The triple
side embeds into S_3 x Z/2 as (permutation, bit) pairs.  Both models
are exact, so agreement on products pins the laws completely.
"""

import random

import pytest
import sympy

from goeritz.stabilizers import (
    EDGE_A,
    EDGE_G,
    EDGE_GA,
    EDGE_IDENTITY,
    PAIR_B,
    PAIR_G,
    PAIR_IDENTITY,
    PAIR_T,
    TRIPLE_A,
    TRIPLE_D,
    TRIPLE_G,
    TRIPLE_IDENTITY,
    EdgeStabilizer,
    PairStabilizer,
    TripleStabilizer,
    edge_elements,
    triple_elements,
)

V = sympy.Symbol("v")
MAT_B = sympy.Matrix([[V, 0], [0, -V]])
MAT_G = sympy.Matrix([[0, 1], [1, 0]])
MAT_T = -sympy.eye(2)


def pair_matrix(e):
    """Faithful image of b^k t^t g^g."""
    return sympy.simplify(MAT_B**e.k * MAT_T**e.t * MAT_G**e.g)


def random_pair(rng):
    return PairStabilizer(rng.randint(-8, 8), rng.randint(0, 1), rng.randint(0, 1))


def test_pair_matrix_model_respects_relations():
    # t is the commutator of the other two generators and is central
    comm = pair_matrix(PAIR_B) * pair_matrix(PAIR_G) \
        * pair_matrix(PAIR_B) ** -1 * pair_matrix(PAIR_G) ** -1
    assert sympy.simplify(comm - pair_matrix(PAIR_T)) == sympy.zeros(2)
    assert pair_matrix(PAIR_G) ** 2 == sympy.eye(2)
    assert pair_matrix(PAIR_T) ** 2 == sympy.eye(2)


def test_pair_multiplication_matches_matrices():
    rng = random.Random(0)
    for _ in range(400):
        x, y = random_pair(rng), random_pair(rng)
        product = x * y
        expected = sympy.simplify(pair_matrix(x) * pair_matrix(y))
        assert sympy.simplify(pair_matrix(product) - expected) == sympy.zeros(2)


def test_pair_matrix_model_is_faithful_on_small_box():
    seen = {}
    for k in range(-3, 4):
        for t in range(2):
            for g in range(2):
                key = sympy.ImmutableMatrix(pair_matrix(PairStabilizer(k, t, g)))
                assert key not in seen
                seen[key] = (k, t, g)


def test_pair_inverses():
    rng = random.Random(1)
    for _ in range(200):
        x = random_pair(rng)
        assert x * x.inverse() == PAIR_IDENTITY
        assert x.inverse() * x == PAIR_IDENTITY


def test_pair_associativity_random():
    rng = random.Random(2)
    for _ in range(300):
        x, y, z = (random_pair(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_pair_t_is_central_and_g_conjugates_b():
    assert PAIR_T * PAIR_B == PAIR_B * PAIR_T
    assert PAIR_T * PAIR_G == PAIR_G * PAIR_T
    # g b g = b t: the swap flips the sign block
    assert PAIR_G * PAIR_B * PAIR_G == PAIR_B * PAIR_T


def test_pair_decompose():
    rng = random.Random(3)
    for _ in range(100):
        x = random_pair(rng)
        k, tail = x.decompose()
        assert PairStabilizer(k, 0, 0) * tail.in_pair() == x


# --- triple side -----------------------------------------------------------

ROTATION = (1, 2, 0)
SWAP = (0, 2, 1)
IDENT = (0, 1, 2)


def compose(p, q):
    return tuple(p[q[i]] for i in range(3))


def perm_power(p, n):
    out = IDENT
    for _ in range(n % 3):
        out = compose(out, p)
    return out


def triple_perm(e):
    """Faithful image of d^d g^g a^a in S_3 x Z/2."""
    perm = perm_power(ROTATION, e.d)
    if e.g:
        perm = compose(perm, SWAP)
    return (perm, e.a)


def test_triple_perm_model_respects_relations():
    assert perm_power(ROTATION, 3) == IDENT
    assert compose(SWAP, SWAP) == IDENT
    gd = compose(SWAP, ROTATION)
    assert compose(gd, gd) == IDENT


def test_triple_enumeration_is_the_full_group():
    elements = triple_elements()
    assert len(elements) == 12
    assert len(set(elements)) == 12
    images = {triple_perm(e) for e in elements}
    assert len(images) == 12


def test_triple_multiplication_matches_permutations_exhaustively():
    elements = triple_elements()
    for x in elements:
        for y in elements:
            px, bx = triple_perm(x)
            py, by = triple_perm(y)
            expected = (compose(px, py), (bx + by) % 2)
            assert triple_perm(x * y) == expected


def test_triple_associativity_exhaustively():
    elements = triple_elements()
    for x in elements:
        for y in elements:
            for z in elements:
                assert (x * y) * z == x * (y * z)


def test_triple_inverses_and_involutions():
    for x in triple_elements():
        assert x * x.inverse() == TRIPLE_IDENTITY
        assert x.inverse() * x == TRIPLE_IDENTITY
        if x.g == 1:
            assert x * x == TRIPLE_IDENTITY  # reflections are involutions
    assert TRIPLE_D * TRIPLE_D * TRIPLE_D == TRIPLE_IDENTITY
    assert (TRIPLE_G * TRIPLE_D) * (TRIPLE_G * TRIPLE_D) == TRIPLE_IDENTITY


def test_triple_a_is_central():
    for x in triple_elements():
        assert x * TRIPLE_A == TRIPLE_A * x


def test_triple_decompose():
    for x in triple_elements():
        d, tail = x.decompose()
        assert TripleStabilizer(d, 0, 0) * tail.in_triple() == x


# --- edge group ------------------------------------------------------------


def test_edge_group_is_klein_four():
    elements = edge_elements()
    assert len(elements) == 4
    for x in elements:
        assert x * x == EDGE_IDENTITY
        assert x.inverse() == x
        for y in elements:
            assert x * y == y * x
    assert EDGE_G * EDGE_A == EDGE_GA


def test_edge_embeddings_are_homomorphisms():
    for x in edge_elements():
        for y in edge_elements():
            assert (x * y).in_pair() == x.in_pair() * y.in_pair()
            assert (x * y).in_triple() == x.in_triple() * y.in_triple()


def test_edge_embeddings_are_injective_and_send_a_to_t():
    pair_images = {x.in_pair() for x in edge_elements()}
    triple_images = {x.in_triple() for x in edge_elements()}
    assert len(pair_images) == len(triple_images) == 4
    assert EDGE_A.in_pair() == PAIR_T
    assert EDGE_G.in_pair() == PAIR_G
    assert EDGE_A.in_triple() == TRIPLE_A
    assert EDGE_G.in_triple() == TRIPLE_G


def test_validation_rejects_bad_fields():
    with pytest.raises(ValueError):
        PairStabilizer(0, 2, 0)
    with pytest.raises(ValueError):
        TripleStabilizer(3, 0, 0)
    with pytest.raises(ValueError):
        EdgeStabilizer(0, -1)
