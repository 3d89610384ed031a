"""Edge-list parser round-trips and line-numbered errors."""

from __future__ import annotations

import random

import pytest

from sgcorona.core import SignedGraph
from sgcorona.graphio import (
    load_signed_graph,
    parse_signed_graph,
    serialize_signed_graph,
)

from util import random_signed


def test_parse_basic():
    g = parse_signed_graph("3 2\n0 1 +\n1 2 -\n")
    assert g.n == 3
    assert g.edges == ((0, 1, 1), (1, 2, -1))
    assert g.marking is None


def test_parse_accepts_numeric_signs_and_comments():
    text = "# triangle\n3 3\n0 1 +1\n# middle comment\n1 2 -1\n\n0 2 -\n"
    g = parse_signed_graph(text)
    assert g.edges == ((0, 1, 1), (0, 2, -1), (1, 2, -1))


def test_parse_marking_line():
    g = parse_signed_graph("2 1\n0 1 -\nmarking + -\n")
    assert g.marking == (1, -1)


def test_round_trip_random():
    rng = random.Random(11)
    for _ in range(40):
        g = random_signed(rng, rng.randint(1, 7))
        if rng.random() < 0.5:
            g = g.with_marking(tuple(rng.choice((1, -1)) for _ in range(g.n)))
        assert parse_signed_graph(serialize_signed_graph(g)) == g


def test_serialize_format():
    g = SignedGraph(2, [(0, 1, -1)], marking=(1, -1))
    assert serialize_signed_graph(g) == "2 1\n0 1 -\nmarking + -\n"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty graph description"),
        ("# only comments\n", "empty graph description"),
        ("3\n", "line 1: expected header"),
        ("x 2\n0 1 +\n1 2 +\n", "line 1: bad vertex count 'x'"),
        ("2 1\n0 1\n", "line 2: expected edge line"),
        ("2 1\n0 1 0\n", "line 2: bad edge sign '0'"),
        ("# c\n2 1\n0 q +\n", "line 3: bad vertex 'q'"),
        ("2 2\n0 1 +\n", "expected 2 edge lines, found 1"),
        ("2 1\n0 1 +\nmarking +\n", "line 3: marking needs 2 entries"),
        ("2 1\n0 1 +\nmarking + 0\n", "line 3: bad marking entry '0'"),
        ("2 1\n0 1 +\n0 1 -\n", "line 3: unexpected trailing lines"),
    ],
)
def test_parse_errors_name_line(text, fragment):
    with pytest.raises(ValueError) as exc:
        parse_signed_graph(text)
    assert fragment in str(exc.value)


def test_structural_errors_come_from_graph_validation():
    with pytest.raises(ValueError):
        parse_signed_graph("2 1\n0 0 +\n")
    with pytest.raises(ValueError):
        parse_signed_graph("2 1\n0 2 +\n")


def test_load_signed_graph(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 1\n0 1 +\n", encoding="utf-8")
    assert load_signed_graph(str(path)) == SignedGraph(2, [(0, 1, 1)])
