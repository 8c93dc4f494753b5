"""Coset-tree balls, the left action, stabilizers and the quotient."""

import random

import pytest

from goeritz.amalgam import Syllable, parse, random_word
from goeritz.tree import (
    PAIR,
    TRIPLE,
    CosetVertex,
    act,
    act_edge,
    ball,
    base_edge,
    base_pair_vertex,
    base_triple_vertex,
    edge_endpoints,
    is_tree,
    quotient,
    rep_word,
    stabilizer_of,
    to_dot,
)


def test_base_objects():
    assert base_pair_vertex().kind == PAIR
    assert base_triple_vertex().kind == TRIPLE
    pair_end, triple_end = edge_endpoints(base_edge())
    assert pair_end == base_pair_vertex()
    assert triple_end == base_triple_vertex()


def test_small_ball_counts():
    b = ball(1, 2)
    assert len(b.vertices) == 8
    assert len(b.edges) == 7
    kinds = [v.kind for v in b.vertices]
    # base edge, 2 new triple vertices off the pair side (powers +-1, +-2
    # give 4), 2 new pair vertices off the triple side
    assert kinds.count(PAIR) == 3
    assert kinds.count(TRIPLE) == 5


def test_balls_are_trees():
    for radius in range(1, 5):
        for max_power in range(1, 4):
            assert is_tree(ball(radius, max_power))


def test_ball_grows_with_parameters():
    small = ball(2, 1)
    bigger_radius = ball(3, 1)
    bigger_power = ball(2, 2)
    assert small.vertex_set < bigger_radius.vertex_set
    assert small.vertex_set < bigger_power.vertex_set


def test_ball_argument_validation():
    with pytest.raises(ValueError):
        ball(-1, 2)
    with pytest.raises(ValueError):
        ball(2, 0)
    with pytest.raises(RuntimeError):
        ball(12, 3, cap=1000)


def test_edges_connect_pair_to_triple():
    b = ball(3, 2)
    for edge in b.edges:
        pair_end, triple_end = edge_endpoints(edge)
        assert pair_end.kind == PAIR
        assert triple_end.kind == TRIPLE
        assert pair_end in b.vertex_set
        assert triple_end in b.vertex_set


def test_identity_acts_trivially():
    b = ball(2, 2)
    for v in b.vertices:
        assert act("", v) == v


def test_action_is_homomorphic():
    rng = random.Random(0)
    b = ball(2, 2)
    for _ in range(200):
        u = random_word(rng, rng.randint(0, 8))
        w = random_word(rng, rng.randint(0, 8))
        v = rng.choice(b.vertices)
        assert act(u + w, v) == act(u, act(w, v))


def test_action_preserves_adjacency():
    rng = random.Random(1)
    b = ball(2, 2)
    for _ in range(100):
        u = random_word(rng, rng.randint(0, 6))
        edge = rng.choice(b.edges)
        pair_end, triple_end = edge_endpoints(edge)
        moved = act_edge(u, edge)
        assert edge_endpoints(moved) == (act(u, pair_end), act(u, triple_end))


def test_generator_stabilizers():
    words = ["b", "B", "g", "d", "D", parse("t"), parse("a"), "bd", ""]
    fixing_pair = stabilizer_of(base_pair_vertex(), words)
    fixing_triple = stabilizer_of(base_triple_vertex(), words)
    assert "b" in fixing_pair and "g" in fixing_pair and parse("t") in fixing_pair
    assert "d" not in fixing_pair and "bd" not in fixing_pair
    assert "d" in fixing_triple and "g" in fixing_triple
    assert "b" not in fixing_triple
    assert "" in fixing_pair and "" in fixing_triple


def test_rep_word_recovers_vertex():
    b = ball(3, 2)
    bases = {PAIR: base_pair_vertex(), TRIPLE: base_triple_vertex()}
    for v in b.vertices:
        assert act(rep_word(v.rep), bases[v.kind]) == v


def test_canonical_rep_rejects_own_side_trailing_syllable():
    with pytest.raises(ValueError):
        CosetVertex(PAIR, (Syllable("P", 1),))
    with pytest.raises(ValueError):
        CosetVertex(TRIPLE, (Syllable("Q", 1),))
    CosetVertex(PAIR, (Syllable("Q", 1),))  # fine: ends on the other side


def test_quotient_is_single_edge():
    report = quotient(ball(3, 2), witness_samples=20)
    assert report.vertices == (PAIR, TRIPLE)
    assert report.edges == ((PAIR, TRIPLE),)
    assert len(report.witnesses) == 20
    assert all(good for _, _, good in report.witnesses)
    assert report.ok


def test_to_dot_mentions_every_vertex_and_edge():
    b = ball(1, 2)
    dot = to_dot(b)
    assert dot.count("shape=circle") == 3
    assert dot.count("shape=box") == 5
    assert dot.count(" -- ") == 7
