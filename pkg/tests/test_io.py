import pytest

from homlab.errors import InvalidParameterError
from homlab.graphs import Digraph, make_cycle, petersen_graph
from homlab.io import (
    dumps_graph,
    dumps_poset,
    loads_graph,
    loads_poset,
    to_dot,
)
from homlab.posets import FinitePoset


class TestGraphJson:
    def test_round_trip_with_labels(self):
        g = petersen_graph().labeled({0: "outer", 5: "inner"})
        back = loads_graph(dumps_graph(g))
        assert back == g and back.labels == g.labels

    def test_digraph_round_trip(self):
        d = Digraph(4, ((0, 1), (1, 0), (2, 3)))
        assert loads_graph(dumps_graph(d)) == d

    def test_dumps_are_canonical(self):
        a = make_cycle(5)
        b = make_cycle(5)
        assert dumps_graph(a) == dumps_graph(b)

    def test_bad_payloads(self):
        with pytest.raises(InvalidParameterError):
            loads_graph("not json")
        with pytest.raises(InvalidParameterError):
            loads_graph('{"n": 2, "edges": [[0, 1]]}')
        with pytest.raises(InvalidParameterError):
            loads_graph('{"n": 2, "directed": false, "edges": [[0, "x"]]}')
        with pytest.raises(InvalidParameterError):
            loads_graph('{"n": -1, "directed": false, "edges": []}')
        with pytest.raises(InvalidParameterError):
            loads_graph('{"n": 2, "directed": false, "edges": [[0, 5]]}')


class TestPosetJson:
    def test_round_trip(self):
        q = FinitePoset(("a", "b", "c"), (("a", "b"), ("b", "c")))
        back = loads_poset(dumps_poset(q))
        assert back.elements == q.elements and back.relation == q.relation

    def test_closure_recomputed_on_load(self):
        q = loads_poset('{"elements": ["x", "y", "z"],'
                        ' "leq": [["x", "y"], ["y", "z"]]}')
        assert q.leq("x", "z")

    def test_bad_payloads(self):
        with pytest.raises(InvalidParameterError):
            loads_poset('{"elements": ["a"]}')
        with pytest.raises(InvalidParameterError):
            loads_poset('{"elements": ["a", "a"], "leq": []}')


class TestDot:
    def test_undirected_uses_dashes(self):
        text = to_dot(make_cycle(3))
        assert text.startswith('graph "g" {')
        assert "v0 -- v1;" in text

    def test_directed_uses_arrows(self):
        text = to_dot(Digraph(2, ((0, 1),)), name="arc")
        assert text.startswith('digraph "arc" {')
        assert "v0 -> v1;" in text

    def test_labels_become_annotations(self):
        text = to_dot(make_cycle(3).labeled({1: "mid"}))
        assert 'v1 [label="1:mid"];' in text
