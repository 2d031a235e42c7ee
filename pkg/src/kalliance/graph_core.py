"""Simple undirected graphs: representation, edge-list I/O, families, line graphs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphClass",
    "LineGraphResult",
    "ParseError",
    "parse_edge_list",
    "serialize",
    "degree_sequence",
    "neighbors_in",
    "line_graph",
    "classify",
    "generate",
    "from_spec",
    "is_connected",
    "components",
    "all_graphs",
    "SplitMix64",
    "FAMILIES",
    "complete",
    "cycle",
    "path",
    "star",
    "complete_bipartite",
    "hypercube",
    "petersen",
    "gnp",
]


class ParseError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Neighborhoods are kept both as frozensets (``adj``) and as integer
    bitmasks (``masks``); the bitmask form is what the search code uses.
    """

    __slots__ = ("n", "edges", "adj", "masks", "degrees", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(sum(1 << w for w in s) for s in nbrs)
        self.degrees: tuple[int, ...] = tuple(len(s) for s in nbrs)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class LineGraphResult:
    line: Graph
    edge_of: tuple[tuple[int, int], ...]

    def index_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.edge_of.index(key)


@dataclass(frozen=True)
class GraphClass:
    """Structural tag used by the closed-form line-graph formulas.

    ``kind`` is ``"regular"``, ``"semiregular_bipartite"`` or ``"general"``.
    For regular graphs ``high == low == degree``; for semiregular bipartite
    graphs ``high > low`` and ``parts`` holds ``(V1, V2)`` with V1 the side of
    degree ``high``.
    """

    kind: str
    high: int | None = None
    low: int | None = None
    parts: tuple[frozenset[int], frozenset[int]] | None = None

    @property
    def degree(self) -> int | None:
        return self.high if self.kind == "regular" else None

    def __str__(self) -> str:
        if self.kind == "regular":
            return f"regular({self.high})"
        if self.kind == "semiregular_bipartite":
            return f"semiregular_bipartite({self.high},{self.low})"
        return "general"


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``.

    ``#`` starts a comment. Repeated edge lines collapse to one edge but
    still count towards ``m``.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            what = "header" if header is None else "edge line"
            raise ParseError(f"{what} needs exactly 2 tokens, got {len(tokens)}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header values must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if a < 0 or b < 0 or a >= n or b >= n:
            raise ParseError(f"vertex index out of range 0..{n - 1} in {line!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        if len(pairs) == header[1]:
            raise ParseError(f"more than {header[1]} edge lines", lineno)
        pairs.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(pairs) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(pairs)}")
    return Graph(header[0], pairs)


def serialize(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural queries


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees, reverse=True)


def neighbors_in(g: Graph, v: int, X: Iterable[int]) -> int:
    """Number of neighbours of ``v`` lying in ``X``."""
    return len(g.adj[v].intersection(X))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    reach = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reach
        reach |= nxt
    return reach == (1 << g.n) - 1


def line_graph(g: Graph) -> LineGraphResult:
    """Line graph with vertices in lexicographic order of the base edges."""
    if g.m == 0:
        raise ValueError("line graph of an edgeless graph is empty")
    edge_of = g.edges
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edge_of):
        incident[u].append(i)
        incident[v].append(i)
    ledges = []
    for inc in incident:
        ledges.extend(itertools.combinations(inc, 2))
    return LineGraphResult(Graph(len(edge_of), ledges), edge_of)


def classify(g: Graph) -> GraphClass:
    if g.n == 0:
        return GraphClass("general")
    degs = set(g.degrees)
    if len(degs) == 1:
        d = degs.pop()
        return GraphClass("regular", d, d)
    if len(degs) != 2:
        return GraphClass("general")
    high, low = max(degs), min(degs)
    v1: set[int] = set()
    v2: set[int] = set()
    for comp in components(g):
        color = {comp[0]: 0}
        queue = deque([comp[0]])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return GraphClass("general")
        sides = ({v for v in comp if color[v] == 0}, {v for v in comp if color[v] == 1})
        side_degs = [{g.degrees[v] for v in s} for s in sides]
        if side_degs == [{high}, {low}]:
            v1 |= sides[0]
            v2 |= sides[1]
        elif side_degs == [{low}, {high}]:
            v1 |= sides[1]
            v2 |= sides[0]
        else:
            return GraphClass("general")
    return GraphClass("semiregular_bipartite", high, low, (frozenset(v1), frozenset(v2)))


# ---------------------------------------------------------------------------
# generators


class SplitMix64:
    """SplitMix64 stream; ``uniform`` takes the top 53 bits."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """Star with centre 0 and ``leaves`` leaves."""
    _need(leaves >= 1, "star needs at least one leaf")
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite needs a, b >= 1")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube(d: int) -> Graph:
    _need(d >= 1, "hypercube needs d >= 1")
    n = 1 << d
    return Graph(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if not v >> i & 1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi graph: pair (u, v), u < v, in lexicographic order is kept
    iff the next SplitMix64 uniform is below ``p``."""
    _need(n >= 1, "gnp needs n >= 1")
    _need(0.0 <= p <= 1.0, "gnp needs 0 <= p <= 1")
    rng = SplitMix64(seed)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.uniform() < p])


FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "hypercube": hypercube,
    "petersen": petersen,
    "gnp": gnp,
}


def generate(family: str, *params, **kwargs) -> Graph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return fn(*params, **kwargs)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {family}: {exc}") from None


def from_spec(spec: str) -> Graph:
    """Build a graph from ``name:params``, e.g. ``gnp:10,0.3,seed=7``."""
    name, _, rest = spec.partition(":")
    args: list = []
    kwargs: dict = {}
    for tok in filter(None, (t.strip() for t in rest.split(","))):
        key, eq, val = tok.partition("=")
        raw = val if eq else key
        try:
            num = int(raw)
        except ValueError:
            try:
                num = float(raw)
            except ValueError:
                raise ValueError(f"non-numeric generator parameter {raw!r}") from None
        if eq:
            kwargs[key.strip()] = num
        else:
            args.append(num)
    return generate(name.strip(), *args, **kwargs)


def all_graphs(n: int, connected: bool = True) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (optionally only connected ones),
    enumerated by edge-subset bitmask. Isomorphic copies are not merged."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
        if not connected or is_connected(g):
            yield g
