"""Simple graphs, edge ideals, and independence/cover combinatorics.

The depth of a tree's edge ideal equals the minimum size of a maximal
independent set, so this module also carries that formula plus uniform
random labeled trees via Prufer sequences for stress tests.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotATree, ParseError
from .ideals import Ideal

# below this, enumerate maximal independent sets by filtering all 2^n subsets
_EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n_vertices with a frozenset of (a, b) edges, a < b."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        normal = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= n_vertices and 1 <= b <= n_vertices):
                raise ValueError(f"edge ({a},{b}) out of range 1..{n_vertices}")
            normal.add((min(a, b), max(a, b)))
        return cls(n_vertices, frozenset(normal))

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmask per vertex, index 0 = vertex 1."""
        adj = [0] * self.n_vertices
        for a, b in self.edges:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return adj

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"v={self.n_vertices}"]
        lines.extend(f"{a} {b}" for a, b in sorted(self.edges))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Graph":
        n = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if n is None:
                m = re.fullmatch(r"v\s*=\s*(\d+)", line)
                if not m:
                    raise ParseError(f"line {lineno}: expected 'v=<count>' header")
                n = int(m.group(1))
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected an edge 'i j'")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex in {line!r}") from None
            edges.append((a, b))
        if n is None:
            raise ParseError("missing 'v=<count>' header")
        try:
            return cls.from_edges(n, edges)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def edge_ideal(graph: Graph) -> Ideal:
    """The ideal generated by x_i*x_j over the edges; zero for an edgeless graph."""
    return Ideal.from_supports(list(graph.edges), graph.n_vertices)


def _mis_exhaustive(adj: list[int], n: int) -> list[int]:
    out = []
    for s in range(1 << n):
        ok = True
        rem = s
        while rem:
            v = rem & -rem
            if adj[v.bit_length() - 1] & s:
                ok = False
                break
            rem ^= v
        if not ok:
            continue
        rest = ((1 << n) - 1) & ~s
        while rest:
            v = rest & -rest
            if not adj[v.bit_length() - 1] & s:
                ok = False
                break
            rest ^= v
        if ok:
            out.append(s)
    return out


def _mis_branch(adj: list[int], n: int) -> list[int]:
    """Branch on the lowest undecided vertex; track excluded-but-undominated."""
    out: list[int] = []

    def rec(undecided: int, chosen: int, pending: int) -> None:
        rem = pending
        while rem:
            v = rem & -rem
            if not adj[v.bit_length() - 1] & undecided:
                return  # can never be dominated
            rem ^= v
        if undecided == 0:
            out.append(chosen)
            return
        v = undecided & -undecided
        nb = adj[v.bit_length() - 1]
        rec(undecided & ~(v | nb), chosen | v, pending & ~nb)
        if nb & chosen:
            rec(undecided & ~v, chosen, pending)
        elif nb & undecided & ~v:
            rec(undecided & ~v, chosen, pending | v)

    rec((1 << n) - 1, 0, 0)
    out.sort()
    return out


def maximal_independent_sets(graph: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal independent sets, sorted by support mask."""
    n = graph.n_vertices
    adj = graph.adjacency_masks()
    masks = (
        _mis_exhaustive(adj, n) if n <= _EXHAUSTIVE_LIMIT else _mis_branch(adj, n)
    )
    return [
        frozenset(i + 1 for i in range(n) if m >> i & 1) for m in masks
    ]


def minimal_vertex_covers(graph: Graph) -> list[frozenset[int]]:
    """Complements of the maximal independent sets."""
    full = frozenset(range(1, graph.n_vertices + 1))
    return [full - u for u in maximal_independent_sets(graph)]


def is_tree(graph: Graph) -> bool:
    n = graph.n_vertices
    if len(graph.edges) != n - 1:
        return False
    adj = graph.adjacency_masks()
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        rem = adj[v] & ~seen
        while rem:
            w = rem & -rem
            seen |= w
            frontier.append(w.bit_length() - 1)
            rem ^= w
    return seen == (1 << n) - 1


def independence_domination(graph: Graph) -> int:
    """Minimum size of a maximal independent set."""
    return min(len(u) for u in maximal_independent_sets(graph))


def tree_depth_via_lemma(tree: Graph, free_vars: int = 0) -> int:
    """depth(S/I(T)) for a tree T, plus one per ambient variable not in T."""
    if free_vars < 0:
        raise ValueError("free_vars must be nonnegative")
    if not is_tree(tree):
        raise NotATree("tree depth formula applies to trees only")
    return independence_domination(tree) + free_vars


def tree_from_pruefer(seq: Sequence[int], n_vertices: int) -> Graph:
    """Decode a Prufer sequence of length n-2 into a labeled tree on 1..n."""
    n = n_vertices
    if n < 2:
        raise ValueError("Prufer decoding needs at least two vertices")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}")
    degree = [1] * (n + 1)
    for x in seq:
        if not 1 <= x <= n:
            raise ValueError(f"sequence entry {x} out of range 1..{n}")
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n_vertices: int, rng: np.random.Generator) -> Graph:
    """Uniform random labeled tree via a random Prufer sequence."""
    if n_vertices == 1:
        return Graph.from_edges(1, [])
    seq = rng.integers(1, n_vertices + 1, size=max(0, n_vertices - 2))
    return tree_from_pruefer([int(x) for x in seq], n_vertices)
