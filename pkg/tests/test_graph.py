"""Graph queries, generators, and PACE .gr round trips."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

import strategies
from pmckit import (
    CUBE_INDEX,
    Graph,
    GrParseError,
    InputError,
    VertexSet,
    complete,
    components,
    cube,
    cycle,
    empty_graph,
    full_components,
    generate,
    gnp,
    induced_subgraph,
    neighborhood,
    parse_gr,
    path,
    prefix_graph,
    watermelon,
    write_gr,
)

PROPERTY = settings(max_examples=80, deadline=None)


def vs(*idx):
    return VertexSet.of(*idx)


class TestConstruction:
    def test_from_edges_dedupes(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
        assert g.m == 2
        assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)

    def test_rejects_self_loop_and_out_of_range(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 2)])

    def test_edges_ascending(self):
        g = cycle(4)
        assert list(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


class TestQueries:
    def test_neighborhood_cube_corner(self, cube_graph):
        a = CUBE_INDEX["a"]
        got = neighborhood(cube_graph, vs(a))
        assert got == vs(CUBE_INDEX["b"], CUBE_INDEX["d"], CUBE_INDEX["e"])

    def test_neighborhood_empty_set(self, cube_graph):
        assert neighborhood(cube_graph, VertexSet()) == VertexSet()

    def test_neighborhood_watermelon_hub(self):
        g = watermelon(2, 3)
        assert neighborhood(g, vs(6)) == vs(0, 3)  # hub u sees both left ends

    def test_neighborhood_out_of_range(self, cube_graph):
        with pytest.raises(InputError):
            neighborhood(cube_graph, vs(9))

    def test_components_cube_separator(self, cube_graph):
        # removing {a,e,g,c} splits the cube into {b,f} and {d,h}
        got = components(cube_graph, vs(0, 4, 6, 2))
        assert got == [vs(1, 5), vs(3, 7)]

    def test_components_trivial(self):
        assert components(complete(4), VertexSet()) == [vs(0, 1, 2, 3)]
        assert components(empty_graph(3), VertexSet()) == [vs(0), vs(1), vs(2)]

    def test_full_components(self, cube_graph):
        assert full_components(cube_graph, vs(0, 4, 6, 2)) == [vs(1, 5), vs(3, 7)]
        assert full_components(path(3), vs(1)) == [vs(0), vs(2)]
        assert full_components(complete(4), vs(0, 1)) == [vs(2, 3)]

    @PROPERTY
    @given(strategies.graph_with_subset())
    def test_components_partition_leftover(self, gs):
        g, removed = gs
        comps = components(g, removed)
        union = 0
        for c in comps:
            assert c.mask & removed.mask == 0
            assert union & c.mask == 0
            union |= c.mask
        assert union == g.full_mask & ~removed.mask
        # no edge joins two distinct components
        for c in comps:
            reach = 0
            for v in c:
                reach |= g.adj[v]
            assert reach & union & ~c.mask == 0

    @PROPERTY
    @given(strategies.graph_with_subset())
    def test_full_components_subset(self, gs):
        g, s = gs
        fulls = full_components(g, s)
        all_comps = components(g, s)
        for c in fulls:
            assert c in all_comps
            assert neighborhood(g, c) == s


class TestGenerators:
    def test_cube_shape(self, cube_graph):
        assert (cube_graph.n, cube_graph.m) == (8, 12)
        assert all(cube_graph.degree(v) == 3 for v in range(8))

    def test_watermelon_shape(self):
        g = watermelon(2, 3)
        assert (g.n, g.m) == (8, 8)
        for p, q in [(1, 1), (3, 3), (4, 2), (8, 3)]:
            g = watermelon(p, q)
            assert g.n == p * q + 2
            assert g.m == p * (q - 1) + 2 * p

    def test_gnp_deterministic(self):
        assert gnp(10, 0.3, seed=1) == gnp(10, 0.3, seed=1)
        assert gnp(10, 0.3, seed=1) != gnp(10, 0.3, seed=2)

    def test_named_families(self):
        assert path(4).m == 3
        assert cycle(5).m == 5
        assert complete(5).m == 10
        assert empty_graph(4).m == 0

    def test_generate_dispatch(self):
        assert generate("cube") == cube()
        assert generate("watermelon", p=2, q=3) == watermelon(2, 3)
        with pytest.raises(InputError):
            generate("nope")
        with pytest.raises(InputError):
            generate("gnp", n=5)  # missing prob and seed
        with pytest.raises(InputError):
            generate("cube", n=3)  # extra parameter

    def test_parameter_validation(self):
        with pytest.raises(InputError):
            watermelon(0, 3)
        with pytest.raises(InputError):
            cycle(2)
        with pytest.raises(InputError):
            gnp(5, 1.5, 0)


class TestSubgraphs:
    def test_induced_subgraph_relabels(self, cube_graph):
        sub, old = induced_subgraph(cube_graph, vs(1, 5, 3, 7))
        assert old == [1, 3, 5, 7]
        assert sub.n == 4 and sub.m == 2  # edges b-f and d-h survive
        assert sub.has_edge(0, 2) and sub.has_edge(1, 3)

    def test_prefix_graph(self):
        g = cycle(5)
        pg = prefix_graph(g, 3)
        assert pg.n == 3 and list(pg.edges()) == [(0, 1), (1, 2)]


class TestGrFormat:
    def test_parse_simple(self):
        g = parse_gr("p tw 3 2\n1 2\n2 3\n")
        assert g == path(3)

    def test_comments_and_duplicates(self):
        g = parse_gr("c hello\np tw 3 3\n1 2\n2 1\nc mid\n2 3\n")
        assert g == path(3)

    def test_roundtrip(self, cube_graph):
        assert parse_gr(write_gr(cube_graph)) == cube_graph

    @PROPERTY
    @given(strategies.graphs())
    def test_roundtrip_random(self, g):
        assert parse_gr(write_gr(g)) == g

    @pytest.mark.parametrize(
        "text,line",
        [
            ("p tw 2 1\n1 1\n", 2),          # self-loop
            ("p tw 2 1\n1 3\n", 2),          # out of range
            ("1 2\np tw 2 1\n", 1),          # edge before header
            ("p tw 2 1\np tw 2 1\n", 2),     # duplicate header
            ("p foo 2 1\n1 2\n", 1),         # wrong descriptor
            ("p tw x 1\n", 1),               # non-integer
            ("p tw 2 1\n1 2 3\n", 2),        # bad edge line
        ],
    )
    def test_parse_errors_carry_line(self, text, line):
        with pytest.raises(GrParseError) as exc:
            parse_gr(text)
        assert exc.value.line == line

    def test_missing_header(self):
        with pytest.raises(GrParseError):
            parse_gr("c nothing else\n")
