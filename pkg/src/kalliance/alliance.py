"""Defensive k-alliance predicate and the constructive witnesses behind the
shift and line-graph bounds."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .graph_core import Graph, line_graph

VertexSet = frozenset  # frozenset[int] of vertex indices


def as_vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(v) for v in members)
    bad = sorted(v for v in s if not 0 <= v < g.n)
    if bad:
        raise ValueError(f"vertices {bad} out of range for n={g.n}")
    return s


def to_mask(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class AllianceCertificate:
    """Per-vertex margins ``deg_S(v) - deg_out(v) - k`` for every v in S."""

    k: int
    members: frozenset[int]
    margins: dict[int, int] = field(compare=False)
    satisfied: bool

    @property
    def violators(self) -> list[int]:
        return sorted(v for v, m in self.margins.items() if m < 0)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "set": sorted(self.members),
            "margins": {str(v): self.margins[v] for v in sorted(self.margins)},
            "satisfied": self.satisfied,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def is_defensive_k_alliance(g: Graph, S: Iterable[int], k: int) -> AllianceCertificate:
    members = as_vertex_set(g, S)
    if not members:
        raise ValueError("an alliance must be nonempty")
    mask = to_mask(members)
    margins = {}
    for v in sorted(members):
        inside = (g.masks[v] & mask).bit_count()
        outside = g.degrees[v] - inside
        margins[v] = inside - outside - k
        if __debug__:
            # deg(v) >= 2 deg_out(v) + k is the same test
            assert (margins[v] >= 0) == (g.degrees[v] >= 2 * outside + k)
    return AllianceCertificate(k, members, margins, all(m >= 0 for m in margins.values()))


def is_alliance_mask(g: Graph, mask: int, k: int) -> bool:
    """Bitmask fast path of the predicate, no certificate."""
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if 2 * (g.masks[v] & mask).bit_count() < g.degrees[v] + k:
            return False
        m ^= low
    return True


def shrink_alliance(g: Graph, S: Iterable[int], k: int, r: int) -> frozenset[int]:
    """Drop the ``r`` largest-indexed vertices from a k-alliance.

    Removing any r vertices costs each survivor at most r inside-neighbours and
    adds at most r outside-neighbours, so the result is a (k - 2r)-alliance.
    """
    members = as_vertex_set(g, S)
    if not members:
        raise ValueError("S must be nonempty")
    cert = is_defensive_k_alliance(g, members, k)
    if not cert.satisfied:
        raise ValueError(f"S is not a defensive {k}-alliance (violators {cert.violators})")
    if r < 0 or 2 * r > k + g.min_degree:
        raise ValueError(f"r={r} outside 0..(k + min degree)/2 = {(k + g.min_degree) / 2}")
    if r >= len(members):
        raise ValueError(f"r={r} would empty a set of size {len(members)}")
    ordered = sorted(members)
    return frozenset(ordered[: len(ordered) - r])


def max_neighbor_degree_star(g: Graph) -> tuple[int, int]:
    """Return ``(delta_star, v)``: over the maximum-degree vertices, the least
    value of the largest neighbour degree, and the smallest vertex attaining it."""
    top = g.max_degree
    if top == 0:
        raise ValueError("graph has no edges")
    best = None
    for v in range(g.n):
        if g.degrees[v] != top:
            continue
        dv = max(g.degrees[u] for u in g.adj[v])
        if best is None or dv < best[0]:
            best = (dv, v)
    return best


def star_alliance_size(g: Graph, k: int, variant: str) -> int:
    top = g.max_degree
    if variant == "maxdeg":
        if not 2 * (1 - top) <= k <= 0:
            raise ValueError(f"k={k} outside {2 * (1 - top)}..0 for the max-degree star")
        return top + -(-k // 2)
    if variant == "star":
        dstar, _ = max_neighbor_degree_star(g)
        if not 2 - dstar - top <= k <= top - dstar:
            raise ValueError(f"k={k} outside {2 - dstar - top}..{top - dstar} for the delta* star")
        return -(-(top + dstar + k) // 2)
    raise ValueError(f"unknown variant {variant!r}")


def construct_star_alliance(g: Graph, k: int, variant: str | None = None) -> frozenset[int]:
    """Defensive k-alliance of L(g) made of edges at one maximum-degree vertex.

    ``variant="maxdeg"`` uses the smallest maximum-degree vertex and takes
    ``max_degree + ceil(k/2)`` edges; ``variant="star"`` uses the smallest
    maximum-degree vertex whose neighbours all have degree at most delta* and
    takes ``ceil((max_degree + delta* + k)/2)`` edges. With no variant the
    delta* construction is used when k is in its range, else the max-degree one.
    Returned indices are line-graph vertices (positions in ``g.edges``).
    """
    if g.m == 0:
        raise ValueError("graph has no edges")
    if variant is None:
        for cand in ("star", "maxdeg"):
            try:
                star_alliance_size(g, k, cand)
            except ValueError:
                continue
            variant = cand
            break
        else:
            raise ValueError(f"k={k} outside both star-alliance ranges")
    size = star_alliance_size(g, k, variant)
    if variant == "maxdeg":
        center = g.degrees.index(g.max_degree)
    else:
        center = max_neighbor_degree_star(g)[1]
    incident = [i for i, e in enumerate(g.edges) if center in e]
    chosen = frozenset(incident[:size])
    if __debug__:
        assert is_defensive_k_alliance(line_graph(g).line, chosen, k).satisfied
    return chosen
