from __future__ import annotations

import random

import pytest
from helpers import bound79_corpus, oracle_proper, oracle_union_size, random_proper_coloring
from hypothesis import given
from hypothesis import strategies as st

from normalcol import generators as gen
from normalcol.coloring import (
    EdgeClass,
    EdgeColoring,
    all_distinct,
    classify_edge,
    color_set,
    combine,
    is_normal,
    is_proper,
    report,
)
from normalcol.graph import Multigraph, PreconditionError

K4_3COL = (1, 2, 3, 3, 2, 1)  # edges (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
GRAPHS = [g for _, g in bound79_corpus()]


@st.composite
def graph_and_coloring(draw, proper=True):
    g = draw(st.sampled_from(GRAPHS))
    if proper:
        col = random_proper_coloring(g, draw(st.integers(5, 8)), random.Random(draw(st.integers(0, 10**9))))
    else:
        col = draw(st.lists(st.integers(1, 6), min_size=g.m, max_size=g.m))
    return g, col


def star_pair(su, sv):
    """Two adjacent vertices with prescribed color triples; the middle color is shared."""
    (a, x1, x2), (b, y1, y2) = su, sv
    assert a == b
    g = Multigraph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    return g, [a, x1, x2, y1, y2]


class TestColorSets:
    def test_k4(self):
        g = gen.k4()
        assert all(color_set(g, K4_3COL, v) == {1, 2, 3} for v in range(4))

    def test_improper_duplicates_collapse(self):
        g = gen.k4()
        col = [1, 1, 2, 3, 2, 1]
        assert color_set(g, col, 0) == {1, 2}

    def test_theta(self):
        assert color_set(gen.theta(), [1, 2, 3], 0) == color_set(gen.theta(), [1, 2, 3], 1) == {1, 2, 3}


class TestClassify:
    @pytest.mark.parametrize("su,sv,expected", [
        ((1, 2, 3), (1, 2, 3), EdgeClass.POOR),
        ((1, 2, 3), (1, 4, 5), EdgeClass.RICH),
        ((1, 2, 3), (1, 2, 4), EdgeClass.NEITHER),
    ])
    def test_union_sizes(self, su, sv, expected):
        g, col = star_pair(su, sv)
        assert classify_edge(g, col, 0) is expected

    def test_k4_all_poor(self):
        r = report(gen.k4(), K4_3COL)
        assert (r.proper, r.poor, r.rich, r.neither) == (True, 6, 0, 0)
        assert r.is_normal

    def test_petersen_all_distinct_all_rich(self):
        p = gen.petersen()
        r = report(p, all_distinct(p))
        assert r.rich == 15 and r.is_normal

    def test_theta_poor(self):
        assert report(gen.theta(), [1, 2, 3]).poor == 3

    @given(graph_and_coloring(proper=False))
    def test_improper_classification_matches_oracle(self, gc):
        g, col = gc
        for e in range(g.m):
            size = oracle_union_size(list(g.edges), col, e)
            assert classify_edge(g, col, e).normal == (size in (3, 5))
        assert is_proper(g, col) == oracle_proper(list(g.edges), col)

    @given(graph_and_coloring(), st.permutations(range(1, 9)))
    def test_renaming_keeps_classes(self, gc, perm):
        g, col = gc
        c = EdgeColoring.from_list(col, 8)
        renamed = c.renamed({i + 1: perm[i] for i in range(8)})
        assert report(g, c).classes == report(g, renamed).classes

    @given(graph_and_coloring())
    def test_report_counts_add_up(self, gc):
        g, col = gc
        r = report(g, col)
        assert r.poor + r.rich + r.neither == g.m
        assert r.proper
        d = r.as_dict()
        num, den = map(int, d["normal_fraction"].split("/"))
        assert num * g.m == r.normal_count * den
        assert set(d["per_edge"]) <= {"poor", "rich", "neither"}


class TestEdgeColoring:
    def test_range_checked(self):
        with pytest.raises(PreconditionError):
            EdgeColoring((1, 4), 3)
        with pytest.raises(PreconditionError):
            EdgeColoring((0, 1), 3)

    def test_partial_mapping_rejected(self):
        with pytest.raises(PreconditionError):
            EdgeColoring.from_mapping(3, {0: 1, 2: 2})

    def test_compact(self):
        c = EdgeColoring.from_list([7, 3, 7, 5]).compact()
        assert c.colors == (3, 1, 3, 2) and c.k == 3

    def test_wrong_length_report(self):
        with pytest.raises(PreconditionError):
            report(gen.k4(), [1, 2, 3])

    def test_combine(self):
        c = combine([([0, 2], EdgeColoring.from_list([1, 2])), ([1], EdgeColoring.from_list([3]))], 3)
        assert c.colors == (1, 3, 2)

    def test_is_normal(self):
        assert is_normal(gen.k4(), K4_3COL)
        assert not is_normal(gen.k4(), [1] * 6)
