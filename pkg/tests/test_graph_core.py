import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import naive_line_edges
from kalliance.graph_core import (
    Graph,
    ParseError,
    SplitMix64,
    all_graphs,
    classify,
    complete,
    complete_bipartite,
    cycle,
    degree_sequence,
    from_spec,
    generate,
    gnp,
    hypercube,
    is_connected,
    line_graph,
    neighbors_in,
    parse_edge_list,
    path,
    petersen,
    serialize,
    star,
)


def test_parse_path():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    assert list(g.degrees) == [1, 2, 1]


def test_parse_cycle_with_comments_and_duplicates():
    g = parse_edge_list("# C4\n4 5\n0 1\n1 2  # mid\n2 3\n3 0\n1 0\n")
    assert g.m == 4
    assert set(g.degrees) == {2}


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("2 1\n0 0", 2, "self-loop"),
        ("3 1\n0 3", 2, "out of range"),
        ("3 1\n0 x", 2, "non-integer"),
        ("3\n0 1", 1, "header"),
        ("a b\n", 1, "non-integer"),
        ("3 1\n0 1 2", 2, "2 tokens"),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(ParseError, match="declares 3"):
        parse_edge_list("3 3\n0 1\n1 2")
    with pytest.raises(ParseError, match="missing"):
        parse_edge_list("# nothing\n")


@given(graphs(max_n=9))
def test_serialize_roundtrip(g):
    assert parse_edge_list(serialize(g)) == g
    lines = serialize(g).splitlines()[1:]
    assert lines == sorted(lines, key=lambda s: tuple(map(int, s.split())))


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


@pytest.mark.parametrize(
    "g, seq",
    [
        (complete(4), [3, 3, 3, 3]),
        (star(4), [4, 1, 1, 1, 1]),
        (hypercube(3), [3] * 8),
        (path(4), [2, 2, 1, 1]),
    ],
)
def test_degree_sequence(g, seq):
    assert degree_sequence(g) == seq


def test_neighbors_in():
    assert neighbors_in(cycle(4), 0, {1, 3}) == 2
    assert neighbors_in(petersen(), 3, set()) == 0
    assert neighbors_in(complete(5), 0, {1, 2}) == 2


@given(graphs())
def test_handshake_and_symmetry(g):
    assert sum(g.degrees) == 2 * g.m
    for u in range(g.n):
        assert u not in g.adj[u]
        for v in g.adj[u]:
            assert u in g.adj[v]


@pytest.mark.parametrize(
    "g, n, m",
    [
        (complete(5), 5, 10),
        (hypercube(3), 8, 12),
        (petersen(), 10, 15),
        (cycle(6), 6, 6),
        (star(5), 6, 5),
        (complete_bipartite(2, 3), 5, 6),
        (path(1), 1, 0),
    ],
)
def test_family_sizes(g, n, m):
    assert (g.n, g.m) == (n, m)


def test_petersen_is_cubic_girth_five():
    g = petersen()
    assert set(g.degrees) == {3}
    # no triangles and no 4-cycles: adjacent vertices share no neighbours,
    # non-adjacent ones share exactly one
    for u in range(10):
        for v in range(u + 1, 10):
            common = len(g.adj[u] & g.adj[v])
            assert common == (0 if g.has_edge(u, v) else 1)


def test_gnp_deterministic_and_seed_sensitive():
    assert gnp(10, 0.5, seed=7) == gnp(10, 0.5, seed=7)
    assert gnp(10, 0.5, seed=7) != gnp(10, 0.5, seed=8)
    assert gnp(6, 0.0, 1).m == 0
    assert gnp(6, 1.0, 1).m == 15


def test_splitmix_reference_stream():
    # reference outputs of SplitMix64 seeded with 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


@pytest.mark.parametrize("bad", [("cycle", 2), ("complete", 0), ("gnp", 5, 1.5), ("hypercube", 0), ("nope",)])
def test_generate_rejects_bad_params(bad):
    with pytest.raises(ValueError):
        generate(*bad)


def test_from_spec():
    assert from_spec("hypercube:3") == hypercube(3)
    assert from_spec("complete_bipartite:2,3") == complete_bipartite(2, 3)
    assert from_spec("gnp:10,0.3,seed=7") == gnp(10, 0.3, seed=7)
    assert from_spec("petersen") == petersen()
    with pytest.raises(ValueError):
        from_spec("cycle:abc")
    with pytest.raises(ValueError):
        from_spec("petersen:3")


def test_is_connected():
    assert is_connected(cycle(5))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1))
    assert not is_connected(Graph(0))


def test_line_graph_small_cases():
    lg = line_graph(path(3))
    assert lg.line == complete(2)
    assert line_graph(star(3)).line == complete(3)
    lc = line_graph(cycle(4))
    assert lc.edge_of == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert set(lc.line.degrees) == {2} and is_connected(lc.line) and lc.line.m == 4
    assert lc.index_of(3, 0) == 1
    with pytest.raises(ValueError):
        line_graph(Graph(3))


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_line_graph_matches_pairwise_oracle_and_degree_identity(g):
    if g.m == 0:
        return
    lg = line_graph(g)
    es, ledges = naive_line_edges(g.edges)
    assert list(lg.edge_of) == es
    assert set(lg.line.edges) == set(ledges)
    for i, (u, v) in enumerate(lg.edge_of):
        assert lg.line.degrees[i] == g.degrees[u] + g.degrees[v] - 2
    seq = degree_sequence(g)
    if g.n >= 2:
        assert lg.line.max_degree <= seq[0] + seq[1] - 2
        assert lg.line.min_degree >= seq[-1] + seq[-2] - 2


@pytest.mark.parametrize("g", [cycle(5), complete(5), hypercube(3), petersen()])
def test_line_graph_of_regular_is_regular(g):
    d = g.degrees[0]
    assert set(line_graph(g).line.degrees) == {2 * d - 2}


def test_classify_examples():
    c6 = classify(cycle(6))
    assert (c6.kind, c6.degree) == ("regular", 2)
    k23 = classify(complete_bipartite(2, 3))
    assert (k23.kind, k23.high, k23.low) == ("semiregular_bipartite", 3, 2)
    assert k23.parts == (frozenset({0, 1}), frozenset({2, 3, 4}))
    assert str(k23) == "semiregular_bipartite(3,2)"
    assert classify(path(4)).kind == "general"
    # regular wins over semiregular compatibility
    assert classify(cycle(4)).kind == "regular"


@pytest.mark.parametrize("a, b", [(1, 2), (1, 5), (2, 3), (4, 2), (3, 5)])
def test_classify_complete_bipartite(a, b):
    cls = classify(complete_bipartite(a, b))
    assert (cls.kind, cls.high, cls.low) == ("semiregular_bipartite", max(a, b), min(a, b))


def test_classify_disjoint_stars_and_odd_cycle_mix():
    two_stars = Graph(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)])
    assert classify(two_stars).kind == "semiregular_bipartite"
    # a triangle with a pendant path has two degree values but is not bipartite
    assert classify(Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])).kind == "general"
    # star plus isolated vertex: degree 0 fits no side
    assert classify(Graph(5, [(0, 1), (0, 2), (0, 3)])).kind == "general"


def test_all_graphs_counts():
    # labeled connected graphs on n vertices: 1, 1, 4, 38, 728
    assert [sum(1 for _ in all_graphs(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]
    assert sum(1 for _ in all_graphs(4, connected=False)) == 64


def test_line_graph_degree_identity_on_seeded_gnp():
    for seed in range(200):
        g = gnp(2 + seed % 9, 0.2 + 0.1 * (seed % 7), seed=seed)
        if g.m == 0:
            continue
        lg = line_graph(g)
        assert [lg.line.degrees[i] for i in range(g.m)] == [
            g.degrees[u] + g.degrees[v] - 2 for u, v in lg.edge_of
        ]


@given(graphs(max_n=9))
def test_generated_and_random_graphs_handshake(g):
    for h in (g, complete(g.n), path(g.n)):
        assert sum(h.degrees) == 2 * h.m
