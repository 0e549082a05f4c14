"""Verification harness: replay the known closed forms and structural
characterizations against the exact solvers.

Three suites, aggregated by ``run_suite``:

* closed-forms: named families with known exact values (grids, clique
  products, complete bipartite graphs, subdivided cliques, block graphs,
  trees, the reduction gadget, the separator construction);
* matrix: the bijection between vertex subsets of K_m x K_n and 0/1
  matrices, with the C4-free / saturation equivalences checked
  exhaustively at small sizes;
* characterizations: iff-style structure results checked over a seeded
  random corpus plus named families, reported as mismatch counts.

Every CheckReport carries ``claim``: a self-contained statement of the
fact under test, so a failing row is auditable on its own.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .families import (
    complete,
    complete_bipartite,
    cycle,
    gen_gadget,
    gen_gstar,
    gen_subdivided_complete,
    grid,
    hypercube,
    path,
    random_block_graph,
    random_tree,
    star,
)
from .graph_core import (
    Graph,
    VertexSet,
    bridges,
    cartesian_product,
    distance_matrix,
    is_chordal,
    is_connected,
    maximal_cliques,
    neighborhood,
    simplicial_vertices,
)
from .rng import SplitMix64
from .solvers import DEFAULT_CAP, independent_domination, solve_lower, solve_max
from .visibility import (
    convex_p3_centers,
    is_maximal_set,
    is_valid_set,
    neighborhood_lemma_scan,
    tmv_candidates,
)

CORPUS_SEED = 1729
SUITES = ("closed-forms", "matrix", "characterizations", "all")


@dataclass(frozen=True)
class SuiteConfig:
    corpus_seed: int = CORPUS_SEED
    block_count: int = 20
    tree_count: int = 10
    matrix_cell_cap: int = 16
    solver_cap: int = DEFAULT_CAP


@dataclass(frozen=True)
class CheckReport:
    name: str
    instance: str
    expected: str
    computed: str
    status: str  # "pass" | "fail" | "SKIPPED"
    claim: str
    runtime: float

    @property
    def passed(self) -> bool:
        return self.status != "fail"


def _row(name, instance, claim, expected, computed, start, ok=None):
    exp_s, comp_s = str(expected), str(computed)
    if ok is None:
        ok = exp_s == comp_s
    status = "pass" if ok else "fail"
    return CheckReport(name, instance, exp_s, comp_s, status, claim, time.perf_counter() - start)


def _skip(name, instance, claim, expected, reason, start):
    return CheckReport(
        name, instance, str(expected), f"skipped: {reason}", "SKIPPED", claim,
        time.perf_counter() - start,
    )


# --- binary matrix bridge -------------------------------------------------

@dataclass(frozen=True)
class BinaryMatrix:
    """0/1 matrix mirroring a vertex subset of K_m x K_n: entry (i,j) is 1
    exactly when vertex i*n+j is selected."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(self.rows[0])
        for r in self.rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            for e in r:
                if e not in (0, 1):
                    raise ValueError(f"entries must be 0 or 1, got {e!r}")

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def ones(self) -> int:
        return sum(sum(r) for r in self.rows)

    @staticmethod
    def from_lists(rows) -> "BinaryMatrix":
        return BinaryMatrix(tuple(tuple(r) for r in rows))


def matrix_of_set(m: int, n: int, x: VertexSet) -> BinaryMatrix:
    if x.n != m * n:
        raise ValueError(f"set lives on {x.n} vertices, matrix wants {m * n}")
    rows = tuple(
        tuple(1 if (i * n + j) in x else 0 for j in range(n)) for i in range(m)
    )
    return BinaryMatrix(rows)


def set_of_matrix(mat: BinaryMatrix) -> VertexSet:
    ids = [
        i * mat.n + j
        for i in range(mat.m)
        for j in range(mat.n)
        if mat.rows[i][j]
    ]
    return VertexSet.from_ids(mat.m * mat.n, ids)


def _row_bits(mat: BinaryMatrix) -> list[int]:
    return [sum(1 << j for j, e in enumerate(r) if e) for r in mat.rows]


def has_constant_2x2(mat: BinaryMatrix) -> bool:
    """True iff some 2x2 submatrix is all ones (two rows sharing ones in
    two columns)."""
    bits = _row_bits(mat)
    for i in range(len(bits)):
        for j in range(i + 1, len(bits)):
            if (bits[i] & bits[j]).bit_count() >= 2:
                return True
    return False


def is_22_saturated(mat: BinaryMatrix) -> bool:
    """True iff flipping any single 0 to 1 creates an all-ones 2x2 block.

    Only defined on matrices without such a block already.
    """
    if has_constant_2x2(mat):
        raise ValueError("matrix already contains an all-ones 2x2 block")
    bits = _row_bits(mat)
    for i in range(mat.m):
        for j in range(mat.n):
            if mat.rows[i][j]:
                continue
            created = any(
                k != i and (bits[k] >> j) & 1 and bits[k] & bits[i]
                for k in range(mat.m)
            )
            if not created:
                return False
    return True


def mv_matrix_equivalence(m: int, n: int) -> CheckReport:
    """Exhaustively check, over every subset of V(K_m x K_n), that
    mutual-visibility validity matches C4-freeness of the mirrored matrix
    and that maximality matches saturation."""
    start = time.perf_counter()
    cells = m * n
    claim = (
        "a subset of K_m x K_n is a mutual-visibility set iff its 0/1 matrix "
        "has no all-ones 2x2 submatrix, and maximal iff that matrix is "
        "additionally saturated"
    )
    if cells > 16:
        raise ValueError(f"exhaustive sweep capped at 16 cells, got {cells}")
    g = cartesian_product(complete(m), complete(n))
    dmat = distance_matrix(g)
    mismatches = 0
    for mask in range(1 << cells):
        x = VertexSet(cells, mask)
        mat = matrix_of_set(m, n, x)
        valid = is_valid_set(g, x, "mv", dmat)
        if valid != (not has_constant_2x2(mat)):
            mismatches += 1
            continue
        if valid and is_maximal_set(g, x, "mv", dmat) != is_22_saturated(mat):
            mismatches += 1
    return _row(
        "matrix-equivalence", f"{m}x{n}", claim,
        "0 mismatches", f"{mismatches} mismatches over {1 << cells} subsets",
        start, ok=mismatches == 0,
    )


def min_saturated_ones(m: int, n: int) -> int:
    """Minimum number of ones over all saturated C4-free m x n matrices,
    by exhaustive enumeration."""
    cells = m * n
    if cells > 16:
        raise ValueError(f"exhaustive sweep capped at 16 cells, got {cells}")
    best = None
    for mask in range(1 << cells):
        rows = tuple(
            tuple((mask >> (i * n + j)) & 1 for j in range(n)) for i in range(m)
        )
        mat = BinaryMatrix(rows)
        if has_constant_2x2(mat):
            continue
        count = mat.ones()
        if (best is None or count < best) and is_22_saturated(mat):
            best = count
    if best is None:
        raise RuntimeError("no saturated matrix found; the all-ones row is one")
    return best


def cross_matrix(m: int, n: int) -> BinaryMatrix:
    """Ones exactly on the first row and first column: m+n-1 ones, no
    all-ones 2x2, and saturated."""
    rows = tuple(
        tuple(1 if i == 0 or j == 0 else 0 for j in range(n)) for i in range(m)
    )
    return BinaryMatrix(rows)


# --- corpora --------------------------------------------------------------

def _draw_connected(rng: SplitMix64, n: int, p: float) -> Graph:
    for _ in range(100000):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.unit() < p
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected draw at n={n}, p={p}")


def random_corpus(seed: int = CORPUS_SEED) -> list[tuple[str, Graph]]:
    """60 connected graphs: n in 4..9, five edge probabilities, two draws
    each, all from one documented stream so the corpus replays exactly."""
    rng = SplitMix64(seed)
    out = []
    for n in range(4, 10):
        for p in (0.3, 0.45, 0.6, 0.75, 0.9):
            for rep in range(2):
                g = _draw_connected(rng, n, p)
                out.append((f"gnp-{n}-{int(p * 100)}-{rep}", g))
    return out


def block_corpus(seed: int = CORPUS_SEED, count: int = 20) -> list[tuple[str, Graph]]:
    out = []
    for idx in range(count):
        n = 5 + (idx % 10)
        g = random_block_graph(n, 4, seed * 1000 + idx)
        out.append((f"block-{idx:02d}(n={n})", g))
    return out


def tree_corpus(seed: int = CORPUS_SEED, count: int = 10) -> list[tuple[str, Graph]]:
    out = []
    for idx in range(count):
        n = 5 + (idx % 10)
        g = random_tree(n, seed * 2000 + idx)
        out.append((f"tree-{idx:02d}(n={n})", g))
    return out


def named_corpus() -> list[tuple[str, Graph]]:
    """Small named instances mixed into the characterization sweep."""
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    return [
        ("K1", complete(1)),
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("K5", complete(5)),
        ("P2", path(2)),
        ("P4", path(4)),
        ("P6", path(6)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("star-4", star(4)),
        ("K{3,2}", complete_bipartite(3, 2)),
        ("K{3,3}", complete_bipartite(3, 3)),
        ("P2xP3", grid((2, 3))),
        ("P3xP3", grid((3, 3))),
        ("Q3", hypercube(3)),
        ("S(K3)", gen_subdivided_complete(3)[0]),
        ("S(K4)", gen_subdivided_complete(4)[0]),
        ("bowtie", bowtie),
    ]


def characterization_corpus(config: SuiteConfig) -> list[tuple[str, Graph]]:
    return random_corpus(config.corpus_seed) + named_corpus()


def gadget_instances() -> list[tuple[str, Graph, int]]:
    return [
        ("gadget(P3,t=3)", path(3), 3),
        ("gadget(K3,t=3)", complete(3), 3),
        ("gadget(star-4,t=3)", star(4), 3),
    ]


def _is_cograph(g: Graph) -> bool:
    # induced-P4-free; a 4-set induces P4 iff it spans 3 edges with
    # degree sequence 1,1,2,2
    for quad in combinations(range(g.n), 4):
        deg = {v: 0 for v in quad}
        count = 0
        for u, v in combinations(quad, 2):
            if g.has_edge(u, v):
                count += 1
                deg[u] += 1
                deg[v] += 1
        if count == 3 and sorted(deg.values()) == [1, 1, 2, 2]:
            return False
    return True


# --- closed-form suite ----------------------------------------------------

def _solved(g: Graph, kind: str, variant: str, config: SuiteConfig, fast_path=True):
    if variant == "max":
        return solve_max(g, kind, cap=config.solver_cap).value
    return solve_lower(g, kind, cap=config.solver_cap, fast_path=fast_path).value


def run_closed_form_suite(config: SuiteConfig | None = None) -> list[CheckReport]:
    config = config or SuiteConfig()
    reports: list[CheckReport] = []

    claim = "every grid P_m x P_n with m,n >= 2 has lower mutual-visibility number 3"
    for dims in ((2, 2), (3, 4), (4, 5)):
        start = time.perf_counter()
        got = _solved(grid(dims), "mv", "lower", config)
        reports.append(_row("grid-mv-lower", f"P{dims[0]}xP{dims[1]}", claim, 3, got, start))

    claim = "the lower mutual-visibility number of K_m x K_n equals m+n-1"
    for m, n in ((2, 3), (3, 3), (3, 4)):
        start = time.perf_counter()
        got = _solved(cartesian_product(complete(m), complete(n)), "mv", "lower", config)
        reports.append(_row("clique-mv-lower", f"K{m}xK{n}", claim, m + n - 1, got, start))

    claim = (
        "the lower total mutual-visibility number of K_m x K_n with m,n >= 3 "
        "equals min(m,n)"
    )
    for m, n in ((3, 3), (3, 4)):
        start = time.perf_counter()
        got = _solved(cartesian_product(complete(m), complete(n)), "tmv", "lower", config)
        reports.append(_row("clique-tmv-lower", f"K{m}xK{n}", claim, min(m, n), got, start))

    start = time.perf_counter()
    got = _solved(cartesian_product(complete(3), complete(4)), "tmv", "max", config)
    reports.append(_row(
        "clique-tmv-max", "K3xK4",
        "the total mutual-visibility number of K_m x K_n equals max(m,n)",
        4, got, start,
    ))

    claim = (
        "a product of k >= 2 paths, each of length at least 2, has lower total "
        "mutual-visibility number 2^k (the corner vertices form the unique "
        "candidate pool)"
    )
    for dims in ((3, 3), (3, 3, 3)):
        start = time.perf_counter()
        got = _solved(grid(dims), "tmv", "lower", config)
        label = "x".join(f"P{d}" for d in dims)
        reports.append(_row("grid-tmv-lower", label, claim, 2 ** len(dims), got, start))

    claim = "the lower mutual-visibility number of K_{r,s} with r >= s >= 1 is s+1"
    for r, s in ((1, 1), (3, 2), (3, 3), (4, 2)):
        start = time.perf_counter()
        got = _solved(complete_bipartite(r, s), "mv", "lower", config)
        reports.append(_row("bipartite-mv-lower", f"K{{{r},{s}}}", claim, s + 1, got, start))

    claim = "the lower general-position number of K_{r,s} with r >= s >= 2 is 2"
    for r, s in ((3, 2), (3, 3)):
        start = time.perf_counter()
        got = _solved(complete_bipartite(r, s), "gp", "lower", config)
        reports.append(_row("bipartite-gp-lower", f"K{{{r},{s}}}", claim, 2, got, start))

    # K_{2,2} is the 4-cycle; the two lower numbers genuinely differ
    # there, so both are pinned by exhaustive search.
    start = time.perf_counter()
    got = _solved(cycle(4), "mv", "lower", config, fast_path=False)
    reports.append(_row(
        "bipartite-square-mv-lower", "C4",
        "the smallest maximal mutual-visibility set of the 4-cycle has size 3",
        3, got, start,
    ))
    start = time.perf_counter()
    got = _solved(cycle(4), "gp", "lower", config)
    reports.append(_row(
        "bipartite-square-gp-lower", "C4",
        "the smallest maximal general-position set of the 4-cycle has size 2 "
        "(one diagonal pair)",
        2, got, start,
    ))

    claim = (
        "subdividing every edge of K_n once (n >= 3) gives lower "
        "mutual-visibility number n"
    )
    for n in (3, 4):
        start = time.perf_counter()
        got = _solved(gen_subdivided_complete(n)[0], "mv", "lower", config)
        reports.append(_row("skn-mv-lower", f"S(K{n})", claim, n, got, start))

    claim = (
        "subdividing every edge of K_n once (n >= 3) gives lower total "
        "mutual-visibility number 0: girth 6 and minimum degree 2 make the "
        "empty set maximal"
    )
    for n in (3, 4):
        start = time.perf_counter()
        got = _solved(gen_subdivided_complete(n)[0], "tmv", "lower", config)
        reports.append(_row("skn-tmv-lower", f"S(K{n})", claim, 0, got, start))

    tmv_claim = (
        "in a block graph with at least 2 vertices the simplicial vertices "
        "form the unique maximal total mutual-visibility set"
    )
    mv_claim = (
        "in a block graph with at least 2 vertices the lower mutual-visibility "
        "number is the smallest cardinality of a block"
    )
    blocks = block_corpus(config.corpus_seed, config.block_count)
    for label, g in blocks:
        start = time.perf_counter()
        got = _solved(g, "tmv", "lower", config)
        reports.append(_row("block-tmv-lower", label, tmv_claim,
                            len(simplicial_vertices(g)), got, start))
        start = time.perf_counter()
        got = _solved(g, "mv", "lower", config)
        want = min(len(c) for c in maximal_cliques(g))
        reports.append(_row("block-mv-lower", label, mv_claim, want, got, start))

    start = time.perf_counter()
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    reports.append(_row("block-tmv-lower", "bowtie", tmv_claim, 4,
                        _solved(bowtie, "tmv", "lower", config), start))
    start = time.perf_counter()
    reports.append(_row("block-mv-lower", "bowtie", mv_claim, 3,
                        _solved(bowtie, "mv", "lower", config), start))

    claim = (
        "in a tree with at least 2 vertices the lower total mutual-visibility "
        "number equals the number of leaves"
    )
    for label, g in tree_corpus(config.corpus_seed, config.tree_count):
        start = time.perf_counter()
        leaves = sum(1 for v in range(g.n) if g.degree(v) == 1)
        got = _solved(g, "tmv", "lower", config)
        reports.append(_row("tree-tmv-lower", label, claim, leaves, got, start))

    claim = (
        "for the reduction graph built over a connected base graph g with "
        "n vertices and m edges and clique size t, the lower total "
        "mutual-visibility number is t*(m+1) plus the minimum size of an "
        "independent dominating set of g"
    )
    for label, base, t in gadget_instances():
        start = time.perf_counter()
        gadget, _ = gen_gadget(base, t)
        i_val = independent_domination(base, cap=config.solver_cap).value
        want = t * (base.edge_count() + 1) + i_val
        got = _solved(gadget, "tmv", "lower", config)
        reports.append(_row("gadget-tmv-formula", label, claim, want, got, start))

    start = time.perf_counter()
    gstar, _ = gen_gstar(4, 4, 4, 4)
    res = solve_lower(gstar, "mv", cap=config.solver_cap)
    got = f"{res.value} witness " + ",".join(str(v) for v in res.witness.members())
    reports.append(_row(
        "gstar-mv-lower", "Gstar(4,4,4,4)",
        "the two near-twins plus the hub (ids 0,1,2) form a smallest maximal "
        "mutual-visibility set of the separator construction",
        "3 witness 0,1,2", got, start,
    ))

    reports.append(_gstar_gp_report(config))
    reports.extend(_characterization_rows(config))
    reports.sort(key=lambda r: (r.name, r.instance))
    return reports


def _gstar_gp_report(config: SuiteConfig) -> CheckReport:
    start = time.perf_counter()
    gstar, _ = gen_gstar(4, 4, 4, 4)
    claim = (
        "the separator construction with all four size parameters equal to 4 "
        "has lower general-position number at least min(t,t1,t2,|B|) = 4, "
        "strictly above its lower mutual-visibility number 3"
    )
    if gstar.n <= config.solver_cap:
        got = solve_lower(gstar, "gp", cap=config.solver_cap).value
        return _row("gstar-gp-lower", "Gstar(4,4,4,4)", claim,
                    ">= 4", got, start, ok=got >= 4)
    # over budget: still rule out maximal general-position sets of size <= 3
    dmat = distance_matrix(gstar)
    for size in range(1, 4):
        for ids in combinations(range(gstar.n), size):
            x = VertexSet.from_ids(gstar.n, ids)
            if is_valid_set(gstar, x, "gp", dmat) and is_maximal_set(gstar, x, "gp", dmat):
                return _row("gstar-gp-lower", "Gstar(4,4,4,4)", claim,
                            ">= 4", f"maximal set {x} of size {size}", start, ok=False)
    return _skip("gstar-gp-lower", "Gstar(4,4,4,4)", claim, ">= 4",
                 f"cap {config.solver_cap} < {gstar.n} vertices; bounded sweep "
                 "found no maximal set of size <= 3, so the bound holds", start)


# --- characterization suite -----------------------------------------------

def _characterization_rows(config: SuiteConfig) -> list[CheckReport]:
    corpus = characterization_corpus(config)
    values = []
    for label, g in corpus:
        values.append({
            "label": label,
            "g": g,
            "mv_lower": _solved(g, "mv", "lower", config, fast_path=False),
            "tmv_lower": _solved(g, "tmv", "lower", config),
            "mv_max": _solved(g, "mv", "max", config),
            "tmv_max": _solved(g, "tmv", "max", config),
            "gp_max": _solved(g, "gp", "max", config),
        })

    def aggregate(name, claim, bad, start):
        ok = not bad
        shown = f"{len(bad)} mismatches over {len(corpus)} graphs"
        if bad:
            shown += f"; first: {', '.join(bad[:3])}"
        return _row(name, "corpus", claim, "0 mismatches", shown, start, ok=ok)

    reports = []

    start = time.perf_counter()
    bad = [v["label"] for v in values
           if (v["mv_lower"] == 2) != bool(bridges(v["g"]))]
    reports.append(aggregate(
        "char-bridge-mv2",
        "a connected graph has lower mutual-visibility number 2 iff it has a "
        "cut-edge (checked with the cut-edge shortcut disabled)",
        bad, start,
    ))

    start = time.perf_counter()
    bad = [v["label"] for v in values if (v["mv_lower"] == 1) != (v["g"].n == 1)]
    reports.append(aggregate(
        "char-k1-mv1",
        "lower mutual-visibility number 1 happens only on the one-vertex graph",
        bad, start,
    ))

    start = time.perf_counter()
    bad = []
    for v in values:
        centers = convex_p3_centers(v["g"])
        if (v["tmv_lower"] == 0) != (len(centers) == v["g"].n):
            bad.append(v["label"])
    reports.append(aggregate(
        "char-centers-tmv0",
        "the empty set is a maximal total mutual-visibility set iff every "
        "vertex is the center of a convex path on three vertices",
        bad, start,
    ))

    start = time.perf_counter()
    bad = [v["label"] for v in values
           if (v["tmv_max"] == 0) != (v["tmv_lower"] == 0)]
    reports.append(aggregate(
        "char-tmv-zero-pair",
        "the total mutual-visibility number vanishes iff its lower variant does",
        bad, start,
    ))

    start = time.perf_counter()
    bad = []
    for v in values:
        g = v["g"]
        centers = set(convex_p3_centers(g))
        cand = set(tmv_candidates(g))
        if cand != set(range(g.n)) - centers:
            bad.append(v["label"])
    reports.append(aggregate(
        "char-tmv-candidates",
        "a single vertex is a total mutual-visibility set iff it is not the "
        "center of a convex path on three vertices",
        bad, start,
    ))

    start = time.perf_counter()
    bad = []
    for v in values:
        g = v["g"]
        if is_chordal(g):
            omega = max(len(c) for c in maximal_cliques(g))
            if v["mv_lower"] > omega:
                bad.append(v["label"])
    reports.append(aggregate(
        "char-chordal-bound",
        "in a chordal graph the lower mutual-visibility number is at most the "
        "clique number",
        bad, start,
    ))

    start = time.perf_counter()
    bad = []
    for v in values:
        g = v["g"]
        if g.n >= 2 and _is_cograph(g):
            delta = max(g.degree(u) for u in range(g.n))
            if v["mv_lower"] > delta + 1:
                bad.append(v["label"])
    reports.append(aggregate(
        "char-cograph-bound",
        "in a non-trivial cograph the lower mutual-visibility number is at "
        "most the maximum degree plus one",
        bad, start,
    ))

    start = time.perf_counter()
    bad = [v["label"] for v in values if v["mv_max"] < v["gp_max"]]
    reports.append(aggregate(
        "char-gp-below-mv",
        "every general-position set is a mutual-visibility set, so the maximum "
        "sizes are ordered",
        bad, start,
    ))

    start = time.perf_counter()
    bad = []
    for v in values:
        g = v["g"]
        dmat = distance_matrix(g)
        for vertex, flag in neighborhood_lemma_scan(g):
            ball = neighborhood(g, vertex, closed=True)
            direct = is_valid_set(g, ball, "mv", dmat) and is_maximal_set(g, ball, "mv", dmat)
            if flag != direct or (flag and v["mv_lower"] > g.degree(vertex) + 1):
                bad.append(f"{v['label']}:{vertex}")
                break
    reports.append(aggregate(
        "char-neighborhood-ball",
        "the closed neighborhood of x is a maximal mutual-visibility set iff "
        "every two neighbors of x are adjacent or share a neighbor outside "
        "the ball; when it is, it bounds the lower number by deg(x)+1",
        bad, start,
    ))

    start = time.perf_counter()
    bad = []
    for v in values:
        if bridges(v["g"]):
            with_fp = solve_lower(v["g"], "mv", cap=config.solver_cap).value
            if with_fp != v["mv_lower"]:
                bad.append(v["label"])
    reports.append(aggregate(
        "char-fast-path",
        "on every bridged graph the cut-edge shortcut and the exhaustive "
        "search agree on the lower mutual-visibility number",
        bad, start,
    ))

    reports.sort(key=lambda r: (r.name, r.instance))
    return reports


def run_characterization_suite(config: SuiteConfig | None = None) -> list[CheckReport]:
    return _characterization_rows(config or SuiteConfig())


# --- matrix suite ---------------------------------------------------------

def run_matrix_suite(config: SuiteConfig | None = None) -> list[CheckReport]:
    config = config or SuiteConfig()
    reports = []
    for m, n in ((2, 2), (2, 3), (3, 3), (3, 4)):
        if m * n > config.matrix_cell_cap:
            reports.append(_skip(
                "matrix-equivalence", f"{m}x{n}",
                "exhaustive equivalence sweep", "0 mismatches",
                f"{m * n} cells over cap {config.matrix_cell_cap}",
                time.perf_counter(),
            ))
        else:
            reports.append(mv_matrix_equivalence(m, n))

    start = time.perf_counter()
    bad = 0
    for mask in range(1 << 9):
        x = VertexSet(9, mask)
        if set_of_matrix(matrix_of_set(3, 3, x)) != x:
            bad += 1
    reports.append(_row(
        "matrix-bijection", "3x3",
        "matrix-of-set and set-of-matrix are mutually inverse",
        "0 mismatches", f"{bad} mismatches over 512 subsets", start, ok=bad == 0,
    ))

    claim = (
        "the minimum number of ones in a saturated C4-free m x n matrix is "
        "m+n-1, witnessed by the first-row-plus-first-column cross"
    )
    for m, n in ((3, 3), (3, 4)):
        start = time.perf_counter()
        got = min_saturated_ones(m, n)
        reports.append(_row("matrix-min-saturated", f"{m}x{n}", claim, m + n - 1, got, start))

    for m, n in ((3, 4), (4, 5)):
        start = time.perf_counter()
        mat = cross_matrix(m, n)
        ok = (
            not has_constant_2x2(mat)
            and is_22_saturated(mat)
            and mat.ones() == m + n - 1
        )
        reports.append(_row(
            "matrix-cross", f"{m}x{n}", claim,
            "C4-free saturated cross",
            "C4-free saturated cross" if ok else "cross fails a check",
            start, ok=ok,
        ))

    start = time.perf_counter()
    g = cartesian_product(complete(3), complete(4))
    x = set_of_matrix(cross_matrix(3, 4))
    ok = is_valid_set(g, x, "mv") and is_maximal_set(g, x, "mv")
    reports.append(_row(
        "matrix-cross-maximal", "K3xK4",
        "the cross pattern is a maximal mutual-visibility set of K_3 x K_4 "
        "of size 3+4-1",
        "valid maximal", "valid maximal" if ok else "not maximal", start, ok=ok,
    ))

    reports.sort(key=lambda r: (r.name, r.instance))
    return reports


def run_suite(suite: str, config: SuiteConfig | None = None) -> list[CheckReport]:
    config = config or SuiteConfig()
    if suite == "closed-forms":
        reports = run_closed_form_suite(config)
    elif suite == "matrix":
        reports = run_matrix_suite(config)
    elif suite == "characterizations":
        reports = run_characterization_suite(config)
    elif suite == "all":
        # the closed-form suite already carries the characterization rows
        reports = run_closed_form_suite(config) + run_matrix_suite(config)
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    reports.sort(key=lambda r: (r.name, r.instance))
    return reports


def format_reports(reports: list[CheckReport]) -> str:
    """Fixed-width table, runtime omitted so output is byte-stable."""
    headers = ("name", "instance", "expected", "computed", "status")
    rows = [
        (r.name, r.instance, r.expected, r.computed, r.status) for r in reports
    ]
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in rows)) if rows else len(headers[i])
        for i in range(5)
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(5)),
    ]
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(5)).rstrip())
    return "\n".join(lines) + "\n"


def format_reports_machine(reports: list[CheckReport]) -> str:
    lines = [
        "\t".join((r.name, r.instance, r.expected, r.computed, r.status))
        for r in reports
    ]
    return "\n".join(lines) + ("\n" if lines else "")
