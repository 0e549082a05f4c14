"""Exact solvers for visibility and general-position numbers.

Computes the maximum size of a valid set ("max") and the minimum size of a
maximal valid set ("lower") for the three set kinds, by explicit search
over vertex subsets.  Instances are desk scale: searches refuse to start
above a configurable cap (default 24 effective vertices) unless forced.

Each kind gets a small engine that answers "can vertex v join the current
set" incrementally:

* mv: adding v can also break visibility between vertices already in the
  set, so the engine rechecks every member whose geodesics to another
  member pass through v (a blocked breadth-first search per such member);
* tmv: on a connected graph a set is total-mutual-visibility valid exactly
  when no distance-2 pair has all of its common neighbors inside the set,
  so validity reduces to a fixed family of "forbidden full subsets";
  vertices appearing in no such family member belong to every maximal set
  and are forced up front;
* gp: a union of shortest-path interiors of current pairs is carried
  along; v must avoid it and contribute no member-covering interior.

Answers are revalidated through the definitional predicates in the
visibility module before being returned; a disagreement raises rather
than passing silently.

Witnesses are canonical: among all optima the lexicographically smallest
(as an ascending member tuple) is returned.  The search visits candidate
sets in exactly that order and only improves strictly, which makes the
first optimum found the canonical one, independent of any execution
schedule.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .graph_core import (
    DistanceMatrix,
    Graph,
    InstanceTooLargeError,
    VertexSet,
    bridges,
    distance_matrix,
    is_connected,
)
from . import visibility
from .rng import permutation

DEFAULT_CAP = 24

FAST_PATH_CUT_EDGE = "cut-edge shortcut"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    ``value`` always equals ``len(witness)``.  ``fast_path`` names the
    shortcut taken, if any; ``nodes`` counts search-tree nodes (zero when
    a shortcut answered).  ``elapsed`` is wall-clock seconds and is the
    only field that is not reproducible bit for bit.
    """

    kind: str
    variant: str
    value: int
    witness: VertexSet
    nodes: int
    elapsed: float
    fast_path: Optional[str] = None


@dataclass(frozen=True)
class GreedyProfile:
    """Aggregate of greedy runs over consecutive seeds.

    ``best_min_witness`` is the smallest result; ties in size break
    toward the lexicographically smaller member tuple.
    """

    kind: str
    runs: int
    seed: int
    min_size: int
    max_size: int
    best_min_witness: VertexSet


def _bits(mask: int) -> int:
    return mask.bit_count()


def _between_table(g: Graph, dmat: DistanceMatrix) -> list[list[int]]:
    """between[u][v] = bitmask of internal vertices of u,v-geodesics."""
    n = g.n
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        row_u = dmat[u]
        for v in range(u + 1, n):
            duv = row_u[v]
            if duv is None or duv < 2:
                continue
            row_v = dmat[v]
            m = 0
            for w in range(n):
                if w == u or w == v:
                    continue
                a, b = row_u[w], row_v[w]
                if a is not None and b is not None and a + b == duv:
                    m |= 1 << w
            table[u][v] = m
            table[v][u] = m
    return table


class _MvEngine:
    kind = "mv"

    def __init__(self, g: Graph, dmat: DistanceMatrix):
        self.g = g
        self.dmat = dmat
        self.universe = list(range(g.n))
        self.seed_state = (0, ())
        self.seed_mask = 0
        self.between = _between_table(g, dmat)

    def mask_of(self, state) -> int:
        return state[0]

    def add(self, state, v: int):
        mask, members = state
        return (mask | (1 << v), members + (v,))

    def can_add(self, state, v: int) -> bool:
        mask, members = state
        bit = 1 << v
        new_mask = mask | bit
        # v itself must see every current member past the others
        vis = visibility.visible_mask(self.g, self.dmat, v, mask)
        if mask & ~vis:
            return False
        # members whose geodesics to another member can route through v
        affected = 0
        bt = self.between
        for i, a in enumerate(members):
            row = bt[a]
            for b in members[i + 1 :]:
                if (row[b] >> v) & 1:
                    affected |= 1 << a
                    break
        while affected:
            low = affected & -affected
            a = low.bit_length() - 1
            vis = visibility.visible_mask(self.g, self.dmat, a, new_mask & ~low)
            if new_mask & ~low & ~vis:
                return False
            affected ^= low
        return True


class _TmvEngine:
    """Total mutual visibility via the distance-2 criterion.

    On a connected graph, X keeps all pairs visible exactly when every
    pair at distance 2 retains a common neighbor outside X.  Proof
    sketch of the nontrivial direction: walk a geodesic and replace each
    internal vertex that falls in X by a common neighbor of its two path
    neighbors lying outside X; each swap keeps the walk a geodesic, so
    induction repairs a fully X-avoiding shortest path.

    A "blocker" below is the common-neighbor set of one distance-2 pair
    as a bitmask; X is valid iff it contains no blocker entirely.
    Blockers touching impossible vertices (those forming a blocker of
    size one, which no valid set may contain) can never fill up and are
    dropped.  Vertices in no surviving blocker can always be added, so
    they lie in every maximal set and are seeded as mandatory.
    """

    kind = "tmv"

    def __init__(self, g: Graph, dmat: DistanceMatrix):
        self.g = g
        self.dmat = dmat
        masks = g.adj_masks
        blockers = set()
        for u in range(g.n):
            row = dmat[u]
            for w in range(u + 1, g.n):
                if row[w] == 2:
                    blockers.add(masks[u] & masks[w])
        singles = 0
        for b in blockers:
            if _bits(b) == 1:
                singles |= b
        cand_mask = ((1 << g.n) - 1) & ~singles
        kept = [b for b in blockers if not b & ~cand_mask]
        union = 0
        for b in kept:
            union |= b
        self.candidate_mask = cand_mask
        self.seed_mask = cand_mask & ~union
        self.seed_state = (self.seed_mask,)
        self.universe = [
            v for v in range(g.n) if (cand_mask >> v) & 1 and not (self.seed_mask >> v) & 1
        ]
        self.by_bit: dict[int, list[int]] = {v: [] for v in self.universe}
        for b in kept:
            m = b & ~self.seed_mask
            while m:
                low = m & -m
                self.by_bit[low.bit_length() - 1].append(b)
                m ^= low

    def mask_of(self, state) -> int:
        return state[0]

    def add(self, state, v: int):
        return (state[0] | (1 << v),)

    def can_add(self, state, v: int) -> bool:
        new_mask = state[0] | (1 << v)
        for b in self.by_bit[v]:
            if not b & ~new_mask:
                return False
        return True


class _GpEngine:
    kind = "gp"

    def __init__(self, g: Graph, dmat: DistanceMatrix):
        self.g = g
        self.dmat = dmat
        self.universe = list(range(g.n))
        # state: (member mask, union of member-pair path interiors)
        self.seed_state = (0, 0)
        self.seed_mask = 0
        self.between = _between_table(g, dmat)

    def mask_of(self, state) -> int:
        return state[0]

    def add(self, state, v: int):
        mask, forbid = state
        row = self.between[v]
        m = mask
        while m:
            low = m & -m
            forbid |= row[low.bit_length() - 1]
            m ^= low
        return (mask | (1 << v), forbid)

    def can_add(self, state, v: int) -> bool:
        mask, forbid = state
        if (forbid >> v) & 1:
            return False
        row = self.between[v]
        m = mask
        while m:
            low = m & -m
            if row[low.bit_length() - 1] & mask:
                return False
            m ^= low
        return True


_ENGINES = {"mv": _MvEngine, "tmv": _TmvEngine, "gp": _GpEngine}


def _make_engine(g: Graph, kind: str, dmat: DistanceMatrix):
    return _ENGINES[visibility.check_kind(kind)](g, dmat)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph is disconnected; solvers require a connected graph")


def _check_cap(g: Graph, engine, cap: int, force: bool) -> None:
    if force:
        return
    if engine.kind == "tmv":
        size = _bits(engine.candidate_mask)
        what = f"{size} candidate vertices"
    else:
        size = g.n
        what = f"{size} vertices"
    if size > cap:
        raise InstanceTooLargeError(
            f"instance too large: {what} exceed the search cap {cap} (use force to override)"
        )


def solve_max(g: Graph, kind: str, *, cap: int = DEFAULT_CAP, force: bool = False) -> SolveResult:
    """Largest valid set of the given kind, with canonical witness.

    Branch and bound over ascending candidate ids; a branch is cut when
    even taking every remaining candidate cannot beat the incumbent.
    """
    _require_connected(g)
    start = time.perf_counter()
    dmat = distance_matrix(g)
    engine = _make_engine(g, kind, dmat)
    _check_cap(g, engine, cap, force)

    uni = engine.universe
    k = len(uni)
    best_mask = engine.seed_mask
    best_size = _bits(best_mask)
    nodes = 0

    def dfs(idx0: int, state, size: int) -> None:
        nonlocal best_mask, best_size, nodes
        for idx in range(idx0, k):
            if size + (k - idx) <= best_size:
                break
            v = uni[idx]
            nodes += 1
            if engine.can_add(state, v):
                nxt = engine.add(state, v)
                if size + 1 > best_size:
                    best_size = size + 1
                    best_mask = engine.mask_of(nxt)
                dfs(idx + 1, nxt, size + 1)

    dfs(0, engine.seed_state, _bits(engine.seed_mask))
    witness = VertexSet(g.n, best_mask)
    if not visibility.is_valid_set(g, witness, kind, dmat):
        raise RuntimeError("solver produced an invalid witness; engine and predicate disagree")
    return SolveResult(kind, "max", best_size, witness, nodes, time.perf_counter() - start)


def solve_lower(
    g: Graph,
    kind: str,
    *,
    cap: int = DEFAULT_CAP,
    force: bool = False,
    fast_path: bool = True,
) -> SolveResult:
    """Smallest maximal valid set of the given kind, canonical witness.

    Enumerates candidate sets by ascending cardinality; the first valid
    set no single vertex can extend is optimal, since all smaller
    cardinalities were exhausted first.  For mv a cut edge shortcuts the
    search: its endpoints always form a maximal set of size 2, and no
    maximal set of size below 2 exists on two or more vertices.
    """
    _require_connected(g)
    start = time.perf_counter()
    dmat = distance_matrix(g)

    if fast_path and kind == "mv" and g.n >= 2:
        cut = bridges(g)
        if cut:
            u, v = cut[0]
            witness = VertexSet.from_ids(g.n, (u, v))
            if not visibility.is_maximal_set(g, witness, "mv", dmat):
                raise RuntimeError("cut-edge witness failed revalidation")
            return SolveResult(
                "mv", "lower", 2, witness, 0, time.perf_counter() - start, FAST_PATH_CUT_EDGE
            )

    engine = _make_engine(g, kind, dmat)
    _check_cap(g, engine, cap, force)

    uni = engine.universe
    k = len(uni)
    seed_size = _bits(engine.seed_mask)
    nodes = 0

    def extendable(state) -> bool:
        mask = engine.mask_of(state)
        for w in uni:
            if not (mask >> w) & 1 and engine.can_add(state, w):
                return True
        return False

    def dfs_exact(idx0: int, state, left: int) -> Optional[int]:
        nonlocal nodes
        if left == 0:
            if extendable(state):
                return None
            return engine.mask_of(state)
        for idx in range(idx0, k):
            if k - idx < left:
                break
            v = uni[idx]
            nodes += 1
            if engine.can_add(state, v):
                got = dfs_exact(idx + 1, engine.add(state, v), left - 1)
                if got is not None:
                    return got
        return None

    for extra in range(k + 1):
        got = dfs_exact(0, engine.seed_state, extra)
        if got is not None:
            witness = VertexSet(g.n, got)
            if not visibility.is_maximal_set(g, witness, kind, dmat):
                raise RuntimeError(
                    "solver produced a non-maximal witness; engine and predicate disagree"
                )
            return SolveResult(
                kind,
                "lower",
                seed_size + extra,
                witness,
                nodes,
                time.perf_counter() - start,
            )
    raise RuntimeError("no maximal set found; this cannot happen on a connected graph")


def greedy_maximal(g: Graph, kind: str, seed: int) -> VertexSet:
    """One greedy pass over a seed-derived vertex permutation.

    Deterministic given the seed; the resulting set is maximal (checked).
    """
    _require_connected(g)
    dmat = distance_matrix(g)
    order = permutation(g.n, seed)
    result = visibility.greedy_maximal(g, kind, order, dmat)
    if not visibility.is_maximal_set(g, result, kind, dmat):
        raise RuntimeError("greedy result failed the maximality recheck")
    return result


def greedy_profile(g: Graph, kind: str, runs: int, seed: int) -> GreedyProfile:
    """Run greedy_maximal over ``runs`` consecutive seeds and aggregate."""
    if runs < 1:
        raise ValueError("runs must be at least 1")
    visibility.check_kind(kind)
    best: Optional[VertexSet] = None
    lo = hi = -1
    for s in range(seed, seed + runs):
        x = greedy_maximal(g, kind, s)
        size = len(x)
        if lo < 0:
            lo = hi = size
            best = x
        else:
            lo = min(lo, size)
            hi = max(hi, size)
            assert best is not None
            if size < len(best) or (size == len(best) and x.members() < best.members()):
                best = x
    assert best is not None
    return GreedyProfile(kind, runs, seed, lo, hi, best)


def independent_domination(
    g: Graph, *, cap: int = DEFAULT_CAP, force: bool = False
) -> SolveResult:
    """Minimum independent dominating set, canonical witness.

    Cardinality-ascending search; a branch dies once the lowest vertex
    not yet dominated has no potential dominator ahead of the cursor.
    """
    if g.n > cap and not force:
        raise InstanceTooLargeError(
            f"instance too large: {g.n} vertices exceed the search cap {cap} (use force to override)"
        )
    start = time.perf_counter()
    n = g.n
    adj = g.adj_masks
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    # reach[v] = union of closed neighborhoods of vertices >= v
    reach = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        reach[v] = reach[v + 1] | closed[v]
    nodes = 0

    def dfs_exact(idx0: int, chosen: int, dominated: int, left: int) -> Optional[int]:
        nonlocal nodes
        if left == 0:
            return chosen if dominated == full else None
        for idx in range(idx0, n):
            if n - idx < left:
                break
            # vertices only idx can still dominate; later cursors cannot
            undom = full & ~(dominated | reach[idx + 1])
            if undom & ~closed[idx]:
                return None
            if adj[idx] & chosen:
                if undom:
                    return None
                continue
            nodes += 1
            got = dfs_exact(idx + 1, chosen | (1 << idx), dominated | closed[idx], left - 1)
            if got is not None:
                return got
            if undom:
                break
        return None

    for size in range(n + 1):
        got = dfs_exact(0, 0, 0, size)
        if got is not None:
            witness = VertexSet(n, got)
            mask = got
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if adj[v] & mask:
                    raise RuntimeError("dominating witness is not independent")
                m ^= low
            cover = 0
            for v in witness:
                cover |= closed[v]
            if cover != full:
                raise RuntimeError("witness does not dominate the graph")
            return SolveResult(
                "independent-domination",
                "lower",
                size,
                witness,
                nodes,
                time.perf_counter() - start,
            )
    raise RuntimeError("unreachable: the full vertex set dominates")
