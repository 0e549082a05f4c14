"""Visibility and general-position predicates over vertex subsets.

For a graph G and a subset X of its vertices, two vertices a, b are
*X-visible* when a = b, when ab is an edge, or when some shortest a,b-path
has all of its internal vertices outside X.  Membership of a or b
themselves in X never matters; only internal vertices can block.  A pair
in different components is never visible.

Three downward-closed set properties are built on top of this:

* mutual visibility ("mv"): every pair of vertices of X is X-visible;
* total mutual visibility ("tmv"): every pair of vertices of the whole
  graph is X-visible;
* general position ("gp"): no shortest path between two vertices of X
  passes through a third vertex of X.

Downward closure means every subset of a valid set is valid, so a valid
set is maximal exactly when no single vertex can be added.  Everything in
this module is definitional: checks run a blocked breadth-first search or
inspect shortest-path intervals directly, with no structural shortcuts.
Solvers revalidate their answers against these predicates.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph_core import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    VertexSet,
    distance_matrix,
    is_connected,
)

KINDS = ("mv", "tmv", "gp")


def check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown set kind {kind!r}; expected one of {KINDS}")
    return kind


def visible_mask(g: Graph, dmat: DistanceMatrix, src: int, blocked_mask: int) -> int:
    """Bitmask of vertices visible from ``src`` past the blocked vertices.

    Runs a breadth-first search in which blocked vertices are reached but
    never expanded, so they can terminate a path yet not sit inside one.
    A vertex counts as visible exactly when the search reaches it at its
    true distance from ``src``.  ``src`` itself is always visible and is
    expanded even if the caller left it in ``blocked_mask``.
    """
    g.check_vertex(src)
    masks = g.adj_masks
    row = dmat[src]
    src_bit = 1 << src
    blocked_mask &= ~src_bit
    visited = src_bit
    frontier = src_bit
    vis = src_bit
    d = 0
    while frontier:
        expand = frontier & ~blocked_mask
        nxt = 0
        m = expand
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        nxt &= ~visited
        if not nxt:
            break
        d += 1
        m = nxt
        while m:
            low = m & -m
            if row[low.bit_length() - 1] == d:
                vis |= low
            m ^= low
        visited |= nxt
        frontier = nxt
    return vis


def pair_visible(
    g: Graph, x: VertexSet, a: int, b: int, dmat: Optional[DistanceMatrix] = None
) -> bool:
    """Whether the single pair (a, b) is visible with respect to ``x``."""
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b or g.has_edge(a, b):
        return True
    if dmat is None:
        dmat = distance_matrix(g)
    if dmat[a][b] is UNREACHABLE:
        return False
    vis = visible_mask(g, dmat, a, x.mask & ~(1 << a))
    return bool((vis >> b) & 1)


def is_mv_set(g: Graph, x: VertexSet, dmat: Optional[DistanceMatrix] = None) -> bool:
    """Every pair of vertices of ``x`` is visible past the rest of ``x``."""
    if x.n != g.n:
        raise ValueError("vertex set universe does not match graph")
    if len(x) <= 1:
        return True
    if dmat is None:
        dmat = distance_matrix(g)
    members = x.members()
    for a in members:
        vis = visible_mask(g, dmat, a, x.mask & ~(1 << a))
        if x.mask & ~vis:
            return False
    return True


def is_tmv_set(g: Graph, x: VertexSet, dmat: Optional[DistanceMatrix] = None) -> bool:
    """Every pair of vertices of the graph is visible past ``x``.

    On a disconnected graph with at least two vertices no set qualifies,
    the empty set included, because cross-component pairs are not visible.
    """
    if x.n != g.n:
        raise ValueError("vertex set universe does not match graph")
    if dmat is None:
        dmat = distance_matrix(g)
    full = (1 << g.n) - 1
    for a in range(g.n):
        vis = visible_mask(g, dmat, a, x.mask & ~(1 << a))
        if full & ~vis:
            return False
    return True


def is_gp_set(g: Graph, x: VertexSet, dmat: Optional[DistanceMatrix] = None) -> bool:
    """No third vertex of ``x`` lies on a shortest path between two of ``x``.

    Pairs in different components impose no constraint: they have no
    shortest path for anything to sit on.
    """
    if x.n != g.n:
        raise ValueError("vertex set universe does not match graph")
    if dmat is None:
        dmat = distance_matrix(g)
    members = x.members()
    for i, u in enumerate(members):
        row_u = dmat[u]
        for v in members[i + 1 :]:
            duv = row_u[v]
            if duv is UNREACHABLE or duv <= 1:
                continue
            row_v = dmat[v]
            inner = x.mask & ~(1 << u) & ~(1 << v)
            m = inner
            while m:
                low = m & -m
                w = low.bit_length() - 1
                a, b = row_u[w], row_v[w]
                if a is not UNREACHABLE and b is not UNREACHABLE and a + b == duv:
                    return False
                m ^= low
    return True


_CHECKS = {"mv": is_mv_set, "tmv": is_tmv_set, "gp": is_gp_set}


def is_valid_set(
    g: Graph, x: VertexSet, kind: str, dmat: Optional[DistanceMatrix] = None
) -> bool:
    return _CHECKS[check_kind(kind)](g, x, dmat)


def is_maximal_set(
    g: Graph, x: VertexSet, kind: str, dmat: Optional[DistanceMatrix] = None
) -> bool:
    """True when no single vertex can be added to the valid set ``x``.

    Single-vertex extension testing is equivalent to the superset
    definition of maximality because all three properties are downward
    closed.  ``x`` itself must be valid; anything else is a caller error.
    """
    check_kind(kind)
    if dmat is None:
        dmat = distance_matrix(g)
    if not is_valid_set(g, x, kind, dmat):
        raise ValueError("input set not valid")
    for v in range(g.n):
        if v in x:
            continue
        if is_valid_set(g, x.add(v), kind, dmat):
            return False
    return True


def convex_p3_centers(g: Graph, dmat: Optional[DistanceMatrix] = None) -> VertexSet:
    """Vertices that are the unique common neighbor of some distance-2 pair."""
    if dmat is None:
        dmat = distance_matrix(g)
    masks = g.adj_masks
    out = 0
    for u in range(g.n):
        row = dmat[u]
        for w in range(u + 1, g.n):
            if row[w] == 2:
                cn = masks[u] & masks[w]
                if cn.bit_count() == 1:
                    out |= cn
    return VertexSet(g.n, out)


def tmv_candidates(g: Graph, dmat: Optional[DistanceMatrix] = None) -> VertexSet:
    """Vertices whose singleton keeps every pair of the graph visible.

    Only these vertices can appear in any nonempty total mutual-visibility
    set.  Computed definitionally, one singleton check per vertex.
    """
    if dmat is None:
        dmat = distance_matrix(g)
    out = 0
    for v in range(g.n):
        if is_tmv_set(g, VertexSet(g.n, 1 << v), dmat):
            out |= 1 << v
    return VertexSet(g.n, out)


def neighborhood_lemma_scan(g: Graph) -> list[tuple[int, bool]]:
    """Flag each vertex x whose closed neighborhood is a maximal mv set.

    The local criterion: every two neighbors u, v of x are adjacent or
    share a common neighbor outside N[x].  It is exact in both
    directions.  When the flag holds, N[x] certifies the upper bound
    "lower mv number <= deg(x) + 1".  Requires a connected graph.
    """
    if not is_connected(g):
        raise ValueError("neighborhood scan requires a connected graph")
    masks = g.adj_masks
    out = []
    for x in range(g.n):
        closed = masks[x] | (1 << x)
        nb = g.adj[x]
        flag = True
        for i, u in enumerate(nb):
            mu = masks[u]
            for v in nb[i + 1 :]:
                if (mu >> v) & 1:
                    continue
                if not mu & masks[v] & ~closed:
                    flag = False
                    break
            if not flag:
                break
        out.append((x, flag))
    return out


def neighborhood_bound(g: Graph) -> Optional[int]:
    """Best upper bound on the lower mv number the scan can certify."""
    flagged = [x for x, flag in neighborhood_lemma_scan(g) if flag]
    if not flagged:
        return None
    return min(g.degree(x) + 1 for x in flagged)


def line(g: Graph, x: int, y: int, dmat: Optional[DistanceMatrix] = None) -> VertexSet:
    """The line through x and y: vertices between them or beyond them.

    A vertex w belongs when d(x,y) equals d(x,w) + d(w,y) (between) or
    |d(x,w) - d(w,y)| (beyond one endpoint).  Always contains x and y.
    """
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise ValueError("a line needs two distinct vertices")
    if dmat is None:
        dmat = distance_matrix(g)
    dxy = dmat[x][y]
    if dxy is UNREACHABLE:
        raise ValueError(f"disconnected pair ({x}, {y})")
    row_x, row_y = dmat[x], dmat[y]
    mask = 0
    for w in range(g.n):
        a, b = row_x[w], row_y[w]
        if a is UNREACHABLE or b is UNREACHABLE:
            continue
        if a + b == dxy or abs(a - b) == dxy:
            mask |= 1 << w
    return VertexSet(g.n, mask)


def has_universal_line(
    g: Graph, dmat: Optional[DistanceMatrix] = None
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether some line covers every vertex; first witness pair if so.

    Pairs are scanned in lexicographic order, so the witness is
    canonical.  Requires a connected graph on at least two vertices.
    """
    if g.n < 2:
        raise ValueError("universal lines need at least two vertices")
    if not is_connected(g):
        raise ValueError("universal lines are defined on connected graphs")
    if dmat is None:
        dmat = distance_matrix(g)
    full = (1 << g.n) - 1
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if line(g, x, y, dmat).mask == full:
                return True, (x, y)
    return False, None


def greedy_maximal(
    g: Graph, kind: str, order: Sequence[int], dmat: Optional[DistanceMatrix] = None
) -> VertexSet:
    """Scan ``order`` once, keeping each vertex that preserves validity.

    ``order`` must be a permutation of the vertices.  Downward closure
    makes the result maximal: a vertex rejected at scan time is rejected
    against a subset of the final set, so it stays invalid later.

    Raises ``ValueError`` when even the empty set is invalid, which
    happens only for "tmv" on a disconnected graph.
    """
    check_kind(kind)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertex ids")
    if dmat is None:
        dmat = distance_matrix(g)
    x = VertexSet(g.n, 0)
    if not is_valid_set(g, x, kind, dmat):
        raise ValueError(
            "no valid sets exist: total visibility needs a connected graph"
        )
    for v in order:
        cand = x.add(v)
        if is_valid_set(g, cand, kind, dmat):
            x = cand
    return x
