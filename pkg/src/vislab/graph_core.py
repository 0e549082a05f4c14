"""Simple undirected graphs: representation, text formats, structure.

Vertices are the integers 0..n-1.  Graphs are immutable once built; all
construction goes through ``Graph.from_edges`` or ``parse_graph``, which
validate the simple-graph invariants (no self-loops, no duplicate edges,
endpoints in range).

The on-disk format is a plain edge list: a header line ``n m`` followed by
m lines ``u v``, whitespace separated, LF endings.  Lines starting with
``#`` are comments and blank lines are skipped.  ``parse_graph`` reports
the offending line number on any malformed input.

Distances use the sentinel ``UNREACHABLE`` (an alias of ``None``) for
vertex pairs with no connecting path; it can never leak into arithmetic
because adding it raises.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

UNREACHABLE = None

# Bron-Kerbosch is the only routine with a hard width limit (bitmask pivoting).
CLIQUE_VERTEX_LIMIT = 64

# Guard against accidentally materializing astronomically large products.
PRODUCT_VERTEX_LIMIT = 1 << 20

EdgeList = list  # list[tuple[int, int]], endpoints normalized (small, large)


class ParseError(ValueError):
    """Raised on malformed edge-list text; the message names the bad line."""


class InstanceTooLargeError(ValueError):
    """Raised when an input exceeds a documented size cap."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with adjacency tuples.

    ``adj[v]`` is the strictly ascending tuple of neighbors of ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an iterable of endpoint pairs, validating that
        the result is simple."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = []
        for nb in self.adj:
            m = 0
            for v in nb:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj_masks[u] >> v) & 1)

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (small, large) pairs in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of an n-vertex graph, stored as a bitmask.

    Iteration is always in ascending vertex order.
    """

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("membership outside the vertex universe")

    @classmethod
    def from_ids(cls, n: int, ids: Iterable[int]) -> "VertexSet":
        m = 0
        for v in ids:
            if not (0 <= v < n):
                raise ValueError(f"vertex {v} out of range for n={n}")
            m |= 1 << v
        return cls(n, m)

    def members(self) -> tuple[int, ...]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return tuple(out)

    def add(self, v: int) -> "VertexSet":
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return VertexSet(self.n, self.mask | (1 << v))

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool((self.mask >> v) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.members()) + "}"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold ``UNREACHABLE``."""

    n: int
    rows: tuple[tuple[Optional[int], ...], ...]

    def __getitem__(self, u: int) -> tuple[Optional[int], ...]:
        return self.rows[u]


def parse_graph(text: str) -> Graph:
    """Parse edge-list text (see the module docstring for the grammar).

    Raises ``ParseError`` naming the offending line on malformed headers,
    out-of-range endpoints, self-loops, duplicate edges, or a line count
    that disagrees with the header.
    """
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_done = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not header_done:
            if len(parts) != 2:
                raise ParseError(f"line {line_no}: malformed header {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {line_no}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {line_no}: malformed header {line!r}")
            header_done = True
            continue
        if len(edges) == m:
            raise ParseError(f"line {line_no}: expected {m} edges, found extra line {line!r}")
        if len(parts) != 2:
            raise ParseError(f"line {line_no}: malformed edge {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {line_no}: malformed edge {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {line_no}: edge endpoint out of range in {line!r}")
        if u == v:
            raise ParseError(f"line {line_no}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"line {line_no}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if not header_done:
        raise ParseError("line 1: missing header")
    if len(edges) != m:
        raise ParseError(f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize a graph to the edge-list format; inverse of ``parse_graph``."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.edge_count()}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, src: int) -> list[Optional[int]]:
    """Hop distances from ``src``; unreachable vertices get ``UNREACHABLE``."""
    g.check_vertex(src)
    dist: list[Optional[int]] = [UNREACHABLE] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g.adj[v]:
            if dist[w] is UNREACHABLE:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, v)) for v in range(g.n)))


def interval(g: Graph, dmat: DistanceMatrix, u: int, v: int) -> VertexSet:
    """Vertices lying on some shortest u,v-path (endpoints included)."""
    g.check_vertex(u)
    g.check_vertex(v)
    duv = dmat[u][v]
    if duv is UNREACHABLE:
        raise ValueError(f"disconnected pair ({u}, {v})")
    mask = 0
    row_u, row_v = dmat[u], dmat[v]
    for w in range(g.n):
        a, b = row_u[w], row_v[w]
        if a is not UNREACHABLE and b is not UNREACHABLE and a + b == duv:
            mask |= 1 << w
    return VertexSet(g.n, mask)


def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    g.check_vertex(v)
    mask = g.adj_masks[v]
    if closed:
        mask |= 1 << v
    return VertexSet(g.n, mask)


def is_connected(g: Graph) -> bool:
    """One BFS from vertex 0; K_0 and K_1 count as connected."""
    if g.n <= 1:
        return True
    dist = bfs_distances(g, 0)
    return all(d is not UNREACHABLE for d in dist)


def bridges(g: Graph) -> EdgeList:
    """Cut edges via iterative DFS low-link, sorted lexicographically."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    out: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.adj[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] > disc[p]:
                    out.append((p, v) if p < v else (v, p))
    out.sort()
    return out


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All maximal cliques by pivoting Bron-Kerbosch (bitmask, n <= 64)."""
    if g.n > CLIQUE_VERTEX_LIMIT:
        raise InstanceTooLargeError(
            f"instance too large for clique enumeration (n={g.n} > {CLIQUE_VERTEX_LIMIT})"
        )
    if g.n == 0:
        return []
    masks = g.adj_masks
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pool = p | x
        pivot = -1
        best = -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            score = (p & masks[u]).bit_count()
            if score > best:
                best, pivot = score, u
            m ^= low
        cand = p & ~masks[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & masks[v], x & masks[v])
            p ^= low
            x |= low
            cand ^= low

    expand(0, (1 << g.n) - 1, 0)
    cliques = [VertexSet(g.n, m) for m in found]
    cliques.sort(key=lambda s: s.members())
    return cliques


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose open neighborhood induces a complete subgraph."""
    masks = g.adj_masks
    out = 0
    for v in range(g.n):
        nb = masks[v]
        ok = True
        m = nb
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if nb & ~masks[u] & ~low:
                ok = False
                break
            m ^= low
        if ok:
            out |= 1 << v
    return VertexSet(g.n, out)


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search plus the standard parent check."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    visited = [False] * n
    order: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for u in g.adj[best]:
            if not visited[u]:
                weight[u] += 1
    elim = order[::-1]
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    for v in range(n):
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=lambda u: pos[u])
        for u in later:
            if u != p and not g.has_edge(p, u):
                return False
    return True


def _biconnected_components(g: Graph) -> list[int]:
    """Vertex masks of the biconnected components (edge-wise)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    comps: list[int] = []
    estack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.adj[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    parent[w] = v
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    comp = 0
                    while estack:
                        a, b = estack.pop()
                        comp |= (1 << a) | (1 << b)
                        if (a, b) == (p, v):
                            break
                    if comp:
                        comps.append(comp)
    return comps


def is_block_graph(g: Graph) -> bool:
    """True when every biconnected component induces a complete subgraph."""
    masks = g.adj_masks
    for comp in _biconnected_components(g):
        m = comp
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if comp & ~masks[u] & ~low:
                return False
            m ^= low
    return True


def twins(g: Graph) -> list[tuple[int, int, str]]:
    """Vertex pairs u < v with N(u) - {v} = N(v) - {u}.

    The third component is ``"closed"`` when the pair is adjacent (equal
    closed neighborhoods) and ``"open"`` otherwise (equal open ones).
    """
    masks = g.adj_masks
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            bu, bv = 1 << u, 1 << v
            if masks[u] & ~bv == masks[v] & ~bu:
                out.append((u, v, "closed" if masks[u] & bv else "open"))
    return out


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, b) is encoded row-major as a*h.n + b."""
    total = g.n * h.n
    if total > PRODUCT_VERTEX_LIMIT:
        raise InstanceTooLargeError(
            f"product would have {total} vertices (limit {PRODUCT_VERTEX_LIMIT})"
        )
    nh = h.n
    adj = []
    for a in range(g.n):
        base = a * nh
        for b in range(h.n):
            row = [base + b2 for b2 in h.adj[b]]
            row.extend(a2 * nh + b for a2 in g.adj[a])
            row.sort()
            adj.append(tuple(row))
    return Graph(total, tuple(adj))


def export_dot(g: Graph, highlight: Iterable[int] | VertexSet | None = None) -> str:
    """Graphviz ``graph`` source; highlighted vertices get a fill attribute."""
    marked = 0
    if highlight is not None:
        ids = highlight.members() if isinstance(highlight, VertexSet) else tuple(highlight)
        for v in ids:
            if not (0 <= v < g.n):
                raise ValueError(f"highlight vertex {v} out of range for n={g.n}")
            marked |= 1 << v
    lines = ["graph {"]
    for v in range(g.n):
        if (marked >> v) & 1:
            lines.append(f'  {v} [style=filled, fillcolor="gray80"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
