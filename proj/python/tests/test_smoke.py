# Copyright 2026 The dcmkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import pytest

import dcmkit


def example_graph():
    text = open(__file__.rsplit("/python/", 1)[0] + "/tests/data/example.graph").read()
    return dcmkit.Graph.parse(text)


def test_path_graph_distances():
    g = dcmkit.Graph(4, directed=False)
    for a, b in [(0, 1), (1, 2), (2, 3)]:
        g.add_arc(a, b)
    assert dcmkit.distances_to(g, 0) == [0, 1, 2, 3]
    assert dcmkit.diameter(g) == 3
    assert dcmkit.dcm_of(g)[0] == [1, 1, 1, 1]


def test_unreachable_is_none():
    g = dcmkit.Graph(2)
    g.add_arc(0, 1)
    assert dcmkit.distances_to(g, 0) == [0, None]
    assert dcmkit.eccentricity(g, 0) == 0
    assert not dcmkit.is_strongly_connected(g)


def test_example_matrices():
    g = example_graph()
    assert len(g) == 8 and g.directed
    m = dcmkit.dcm_of(g)
    assert m[0] == [1, 2, 3, 2, 0, 0, 0, 0]
    assert dcmkit.cdcm_of(g) == dcmkit.dcm_to_cdcm(m)
    assert dcmkit.cdcm_to_dcm(dcmkit.cdcm_of(g)) == m
    assert dcmkit.canonicalize(m) == sorted(m)


def test_goodness():
    assert dcmkit.goodness([1, 3, 5, 5, 5])["good"]
    assert not dcmkit.goodness([1, 3, 3, 4])["good"]
    assert dcmkit.goodness([1, 2, 3])["very_good"]


def test_degree_sequences():
    assert dcmkit.erdos_gallai([2, 2, 2])
    assert not dcmkit.erdos_gallai([3, 1, 1])
    assert dcmkit.havel_hakimi([3, 1, 1]) is None
    g = dcmkit.havel_hakimi([3, 3, 2, 2, 2])
    assert sorted((g.in_degree(v) for v in range(5)), reverse=True) == [3, 3, 2, 2, 2]
    g = dcmkit.indegree_realize([2, 2, 1])
    assert sorted(g.in_degree(v) for v in range(3)) == [1, 2, 2]


def test_good_sequence_round_trip():
    seq = [1, 3, 6, 8, 8, 8, 8, 8]
    t = dcmkit.realize_good_sequence(seq)
    assert dcmkit.cdcm_of(t)[0] == seq


def test_screen():
    m = dcmkit.dcm_of(example_graph())
    report = dcmkit.screen(m)
    assert report.passed and report.failures == []
    bad = dcmkit.screen([[0] * 3 for _ in range(3)])
    assert not bad.passed
    assert bad.failures[0].rule == "column-0"


def test_tpp_and_reduction():
    status, triples = dcmkit.solve_tpp([9, 7, 6, 5, 2, 1])
    assert status == "positive"
    assert triples == [[0, 3, 5], [1, 2, 4]]
    assert dcmkit.solve_tpp([3, 3, 3, 1, 1, 1]) == ("negative", [])
    matrix = dcmkit.build_matrix([9, 7, 6, 5, 2, 1])
    assert len(matrix) == 38
    graph, labels = dcmkit.build_gadget([9, 7, 6, 5, 2, 1], triples)
    assert labels[0] == "x_1" and labels[-1] == "z_2"
    assert dcmkit.dcm_of(graph) == matrix
    assert dcmkit.validate_instance([9, 7, 6, 5, 2, 1], "tpp")[1] == "bounds"


def test_recognize():
    m = dcmkit.dcm_of(example_graph())
    out = dcmkit.recognize(m)
    assert out.verdict == "yes"
    assert dcmkit.verify_witness(out.witness, m)
    assert dcmkit.recognize(m, directed=False).verdict == "no"
    assert dcmkit.recognize(m, max_nodes=1).verdict == "unknown"


def test_errors():
    with pytest.raises(dcmkit.ParseError):
        dcmkit.Graph.parse("X 3\n")
    with pytest.raises(dcmkit.ModeError):
        dcmkit.graph_power(dcmkit.Graph(3, directed=True), 2)
    with pytest.raises(dcmkit.DomainError):
        dcmkit.screen([[1, 0]])
    with pytest.raises(ValueError):
        dcmkit.recognize([[1]], kind="bogus")


def test_random_graph_seeded():
    a = dcmkit.random_graph(9, 0.3, directed=False, seed=5)
    b = dcmkit.random_graph(9, 0.3, directed=False, seed=5)
    assert a == b and str(a).startswith("U 9")
