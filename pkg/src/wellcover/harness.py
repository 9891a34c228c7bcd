"""Registry of executable theorem checks, catalog survey drivers, and the
counterexample hunter for the open problems and the concatenation conjecture.

Every proven statement is registered with explicit hypothesis gating so a
vacuously true verdict is distinguishable from a confirmed one.  A verdict of
(applicable and not holds) for a registered theorem signals an implementation
bug, never new mathematics; the conjecture is a hunt target only and is never
assumed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property

from . import catalog as cat
from .classify import (
    check_wk_monotonicity,
    is_in_w,
    is_in_w_generic,
    is_locally_triangle_free,
    is_one_well_covered,
    is_shedding,
    is_simplicial_graph,
    is_regularizable,
    is_very_well_covered,
    is_well_covered,
    class_report,
    shedding_vertices,
    simplex_partition,
    simplicial_vertices,
)
from .constructions import CoronaFamily, corona, corona_uniform, concatenate, join
from .graph import (
    Graph,
    Graph6Error,
    complement,
    complete,
    components,
    empty_graph,
    girth,
    has_four_cycle,
    is_bipartite,
    is_connected,
    iter_bits,
    parse_graph6,
    path,
    vertices_of,
    write_graph6,
)
from .independence import (
    _alpha,
    _independent_sets,
    _iter_maximal_independent,
    _nbhd,
    _wc_scan,
    can_match_into,
    differential_of_graph,
    has_k_disjoint_maximum_independent_sets,
    maximum_matching_size,
)

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# verdicts and the per-graph evaluation context
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    graph_id: str
    applicable: bool
    holds: bool
    witness: object = None
    elapsed: float = 0.0

    def __post_init__(self):
        if not self.applicable and (not self.holds or self.witness is not None):
            raise ValueError("inapplicable verdicts are vacuously true, without witness")
        if self.witness is not None and self.holds:
            raise ValueError("a witness documents a failure")

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "theorem": self.theorem_id,
            "graph": self.graph_id,
            "applicable": self.applicable,
            "holds": self.holds,
            "witness": self.witness,
            "elapsed": self.elapsed,
        }


class GraphContext:
    """Lazily shared quantities for the checks run on one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.full = g.full_mask

    @cached_property
    def alpha(self) -> int:
        return _alpha(self.adj, self.full)

    @cached_property
    def well_covered(self) -> bool:
        return _wc_scan(self.adj, self.full)[0]

    @cached_property
    def w2(self) -> bool:
        return is_in_w(self.g, 2)

    @cached_property
    def ind(self) -> list[int]:
        return _independent_sets(self.adj, self.full)

    @cached_property
    def omega(self) -> list[int]:
        sets = sorted(_iter_maximal_independent(self.adj, self.full))
        return [s for s in sets if s.bit_count() == self.alpha]

    @cached_property
    def contains(self) -> dict[int, int]:
        # independent set -> bitmask of omega indices containing it
        out = {}
        for a in self.ind:
            m = 0
            for j, s in enumerate(self.omega):
                if a & ~s == 0:
                    m |= 1 << j
            out[a] = m
        return out

    @cached_property
    def omega_disjoint(self) -> list[int]:
        # disj[i] = bitmask of omega indices disjoint from omega[i]
        out = []
        for s in self.omega:
            m = 0
            for j, t in enumerate(self.omega):
                if s & t == 0:
                    m |= 1 << j
            out.append(m)
        return out

    @cached_property
    def omega_avoiding(self) -> list[int]:
        # avoid[v] = bitmask of omega indices whose set misses vertex v
        out = []
        for v in range(self.g.n):
            m = 0
            for j, s in enumerate(self.omega):
                if not s >> v & 1:
                    m |= 1 << j
            out.append(m)
        return out

    @cached_property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    def is_k2(self) -> bool:
        return self.g.n == 2 and self.adj[0] == 2

    def is_p3(self) -> bool:
        return self.g.n == 3 and self.g.edge_count() == 2

    def is_cycle_of(self, length: int) -> bool:
        return (
            self.g.n == length
            and all(row.bit_count() == 2 for row in self.adj)
            and self.connected
        )

    def w2_submask(self, mask: int) -> bool:
        # stability criterion applied to the induced subgraph on ``mask``
        adj = self.adj
        alpha = _alpha(adj, mask)
        for v in iter_bits(mask):
            wc, size = _wc_scan(adj, mask ^ (1 << v))
            if not wc or size != alpha:
                return False
        return True


def _wit(**kv):
    out = {}
    for key, value in kv.items():
        if key.endswith("_set") or key.endswith("_mask"):
            out[key.rsplit("_", 1)[0]] = vertices_of(value)
        else:
            out[key] = value
    return out


# ---------------------------------------------------------------------------
# the seven equivalent level-2 membership predicates
# ---------------------------------------------------------------------------


def w2_equivalence_predicates(ctx: GraphContext) -> dict[str, bool]:
    """The seven equivalent characterizations, each evaluated independently."""
    g, adj, full = ctx.g, ctx.adj, ctx.full
    alpha = ctx.alpha
    omega, contains = ctx.omega, ctx.contains
    disj, avoid = ctx.omega_disjoint, ctx.omega_avoiding
    non_max = [a for a in ctx.ind if a.bit_count() < alpha]

    p1 = not ctx.is_p3() and all(
        _wc_scan(adj, full ^ (1 << v))[0] for v in range(g.n)
    )
    p2 = is_one_well_covered(g)
    p3 = is_in_w_generic(g, 2)

    def extends_two_disjointly(a: int) -> bool:
        idxs = vertices_of(contains[a])
        for x in range(len(idxs)):
            si = omega[idxs[x]]
            for y in range(x + 1, len(idxs)):
                if si & omega[idxs[y]] & ~a == 0:
                    return True
        return False

    p4 = all(extends_two_disjointly(a) for a in non_max)
    p5 = all(contains[a].bit_count() >= 2 for a in non_max)

    p6 = True
    for a in non_max:
        ca = contains[a]
        for b in non_max:
            if a & b:
                continue
            # some maximum set includes a and avoids b
            m = ca
            found = False
            while m:
                bit = m & -m
                j = bit.bit_length() - 1
                m ^= bit
                if omega[j] & b == 0:
                    found = True
                    break
            if not found:
                p6 = False
                break
        if not p6:
            break

    p7 = True
    for a in non_max:
        ca = contains[a]
        for v in iter_bits(full & ~a):
            if ca & avoid[v] == 0:
                p7 = False
                break
        if not p7:
            break

    return {
        "deletions_stay_well_covered": p1,
        "one_well_covered": p2,
        "w2_membership": p3,
        "two_disjoint_completions": p4,
        "two_distinct_completions": p5,
        "extension_avoiding_disjoint_set": p6,
        "extension_avoiding_vertex": p7,
    }


# ---------------------------------------------------------------------------
# graph-kind theorem checks
# ---------------------------------------------------------------------------


def _chk_alpha_stability(ctx):
    for v in range(ctx.g.n):
        if ctx.adj[v] == 0:
            continue
        sub_alpha = _alpha(ctx.adj, ctx.full ^ (1 << v))
        if sub_alpha != ctx.alpha:
            return False, _wit(vertex=v, alpha=ctx.alpha, alpha_minus_v=sub_alpha)
    return True, None


def _chk_w2_equivalence(ctx):
    preds = w2_equivalence_predicates(ctx)
    values = set(preds.values())
    if len(values) == 1:
        return True, None
    return False, {"predicates": preds}


def _chk_w2_minus_ns(ctx):
    for s in ctx.ind:
        if s.bit_count() >= ctx.alpha:
            continue
        mask = ctx.full & ~(s | _nbhd(ctx.adj, s))
        if not ctx.w2_submask(mask):
            return False, _wit(independent_set=s)
    return True, None


def _chk_w2_no_leaf(ctx):
    for v in range(ctx.g.n):
        if ctx.adj[v].bit_count() < 2:
            return False, _wit(vertex=v, degree=ctx.adj[v].bit_count())
    return True, None


def _chk_w2_minus_nv(ctx):
    for v in range(ctx.g.n):
        mask = ctx.full & ~(ctx.adj[v] | (1 << v))
        if not ctx.w2_submask(mask):
            return False, _wit(vertex=v)
    return True, None


def _chk_w2_properties(ctx):
    g, adj, full = ctx.g, ctx.adj, ctx.full
    alpha, omega = ctx.alpha, ctx.omega
    disj, avoid = ctx.omega_disjoint, ctx.omega_avoiding

    # (i) each vertex avoided by two disjoint maximum independent sets
    for v in range(g.n):
        ok = False
        m = avoid[v]
        while m and not ok:
            b = m & -m
            i = b.bit_length() - 1
            m ^= b
            if disj[i] & avoid[v] & ~((1 << (i + 1)) - 1):
                ok = True
        if not ok:
            return False, _wit(item="two_disjoint_maximum_sets_avoiding_vertex", vertex=v)
    # (ii) order bound
    if g.n < 2 * alpha + 1:
        return False, _wit(item="order_at_least_2alpha_plus_1", n=g.n, alpha=alpha)
    # (iii) every vertex pair avoided by some maximum independent set
    for u in range(g.n):
        for v in range(u, g.n):
            if avoid[u] & avoid[v] == 0:
                return False, _wit(item="pair_avoided_by_maximum_set", pair=[u, v])
    # (iv) matching bounds
    mu = maximum_matching_size(g)
    if not (alpha <= mu and alpha + mu <= g.n - 1):
        return False, _wit(item="matching_bounds", alpha=alpha, mu=mu, n=g.n)
    # (v) independence number stable under deleting an independent set
    for s in ctx.ind:
        if _alpha(adj, full & ~s) != alpha:
            return False, _wit(item="alpha_stable_minus_independent_set", independent_set=s)
    # (vi) differential monotone over independent sets
    mono, wit = check_wk_monotonicity(g, 2)
    if not mono:
        return False, _wit(item="differential_monotone", subset_set=wit[0], superset_set=wit[1])
    # (vii) regularizable with strict expansion
    for s in ctx.ind:
        if s and _nbhd(adj, s).bit_count() <= s.bit_count():
            return False, _wit(item="strict_neighborhood_expansion", independent_set=s)
    if not is_regularizable(g):
        return False, _wit(item="regularizable")
    # (viii) independent sets never beat their neighborhood's independence
    for s in ctx.ind:
        if s.bit_count() > _alpha(adj, _nbhd(adj, s)):
            return False, _wit(item="bounded_by_neighborhood_alpha", independent_set=s)
    # (ix) every independent set is matched into an independent set
    for s in ctx.ind:
        if s == 0:
            continue
        target_pool = _nbhd(adj, s)
        if not any(
            can_match_into(g, s, b)
            for b in _iter_maximal_independent(adj, target_pool)
        ):
            return False, _wit(item="matched_into_independent_set", independent_set=s)
    return True, None


def _chk_w2_degree_bound(ctx):
    for s in ctx.ind:
        slack = _nbhd(ctx.adj, s).bit_count() - s.bit_count() + 1
        for v in iter_bits(s):
            if ctx.adj[v].bit_count() > slack:
                return False, _wit(independent_set=s, vertex=v)
    return True, None


def _chk_w2_differential_bound(ctx):
    d = differential_of_graph(ctx.g)
    gap = ctx.g.n - 2 * ctx.alpha
    if d < gap:
        return False, _wit(differential=d, n=ctx.g.n, alpha=ctx.alpha)
    if ctx.connected:
        delta = max(row.bit_count() for row in ctx.adj)
        if gap < delta - 1:
            return False, _wit(n=ctx.g.n, alpha=ctx.alpha, max_degree=delta)
    return True, None


def _epsilon_mask(adj, universe: int, a: int) -> int:
    closed = _nbhd(adj, a) | a
    return a.bit_count() + _alpha(adj, universe & ~closed)


def _chk_shedding_epsilon(ctx):
    adj, full = ctx.adj, ctx.full
    for v in range(ctx.g.n):
        sub = full ^ (1 << v)
        preserved = all(
            _epsilon_mask(adj, sub, a) == _epsilon_mask(adj, full, a)
            for a in _independent_sets(adj, sub)
        )
        if is_shedding(ctx.g, v) != preserved:
            return False, _wit(vertex=v, shedding=is_shedding(ctx.g, v))
    return True, None


def _chk_shedding_wc(ctx):
    for v in range(ctx.g.n):
        if ctx.adj[v] == 0:
            continue
        if is_shedding(ctx.g, v) != _wc_scan(ctx.adj, ctx.full ^ (1 << v))[0]:
            return False, _wit(vertex=v)
    return True, None


def _chk_shedding_four_way(ctx):
    adj, full = ctx.adj, ctx.full
    for v in range(ctx.g.n):
        nv = adj[v]
        if nv == 0:
            continue
        outside = full & ~(nv | (1 << v))
        cond1 = _wc_scan(adj, full ^ (1 << v))[0]
        cond2 = all(
            nv & ~_nbhd(adj, s) for s in _independent_sets(adj, outside)
        )
        cond3 = not any(
            adj[v] & ~(s | _nbhd(adj, s)) == 0
            for s in _independent_sets(adj, outside)
        )
        cond4 = is_shedding(ctx.g, v)
        if not cond1 == cond2 == cond3 == cond4:
            return False, _wit(
                vertex=v,
                deletion_well_covered=cond1,
                neighborhood_never_covered=cond2,
                never_isolated=cond3,
                shedding=cond4,
            )
    return True, None


def _chk_simplicial_shed(ctx):
    shed = shedding_vertices(ctx.g)
    for v in iter_bits(simplicial_vertices(ctx.g)):
        if ctx.adj[v] & ~shed:
            return False, _wit(simplicial_vertex=v, shed_set=shed)
    return True, None


def _chk_simplicial_delete(ctx):
    for v in iter_bits(simplicial_vertices(ctx.g)):
        for u in iter_bits(ctx.adj[v]):
            if not _wc_scan(ctx.adj, ctx.full ^ (1 << u))[0]:
                return False, _wit(simplicial_vertex=v, deleted=u)
    return True, None


def _chk_simplex_partition(ctx):
    lhs = simplex_partition(ctx.g) is not None
    rhs = is_simplicial_graph(ctx.g) and ctx.well_covered
    if lhs == rhs:
        return True, None
    return False, _wit(partitioned=lhs, simplicial_and_well_covered=rhs)


def _chk_two_simplicial_w2(ctx):
    if ctx.w2:
        return True, None
    return False, _wit(w2=False)


def _chk_w2_five_way(ctx):
    g, adj, full = ctx.g, ctx.adj, ctx.full
    c1 = ctx.w2
    c2 = check_wk_monotonicity(g, 2)[0]
    c3 = shedding_vertices(g) == full
    c4 = True
    for s in ctx.ind:
        rem = full & ~(s | _nbhd(adj, s))
        for w in iter_bits(rem):
            if adj[w] & rem == 0:
                c4 = False
                break
        if not c4:
            break
    c5 = all(
        ctx.w2_submask(full & ~(adj[v] | (1 << v))) for v in range(g.n)
    )
    if c1 == c2 == c3 == c4 == c5:
        return True, None
    return False, _wit(
        w2=c1,
        differential_monotone=c2,
        all_vertices_shedding=c3,
        no_isolation_after_removal=c4,
        closed_neighborhood_deletions_w2=c5,
    )


def _chk_order_extremal(ctx):
    g = ctx.g
    if g.n == 2 * ctx.alpha and not ctx.is_k2():
        return False, _wit(reason="order 2*alpha without being the single edge")
    if g.n == 2 * ctx.alpha + 1 and not (ctx.is_cycle_of(3) or ctx.is_cycle_of(5)):
        return False, _wit(reason="order 2*alpha+1 but neither 3-cycle nor 5-cycle")
    if is_bipartite(g) is not None and not ctx.is_k2():
        return False, _wit(reason="bipartite member other than the single edge")
    return True, None


def _chk_gab_criterion(ctx):
    g, adj, full = ctx.g, ctx.adj, ctx.full
    cond = True
    for a, b in g.edges():
        mask = full & ~(adj[a] | adj[b])
        wc, size = _wc_scan(adj, mask)
        if not wc or size != ctx.alpha - 1:
            cond = False
            break
    if ctx.w2 == cond:
        return True, None
    return False, _wit(w2=ctx.w2, edge_contraction_criterion=cond)


def _chk_locally_tf_w2(ctx):
    # For independence number 2 the published claim names a single cycle
    # complement, but the complement of two disjoint 4-cycles (the join of
    # two copies of 2K2) is an 8-vertex member as well; the statement proved
    # by the join rule is that the complement is a disjoint union of cycles
    # of length >= 4, one cycle exactly when the complement is connected.
    g = ctx.g
    if ctx.alpha == 1:
        complete_ok = g.n >= 2 and all(
            row == ctx.full ^ (1 << v) for v, row in enumerate(ctx.adj)
        )
        if not complete_ok:
            return False, _wit(alpha=1, reason="not a complete graph of order >= 2")
    elif ctx.alpha == 2:
        comp = complement(g)
        for part in components(comp):
            size = part.bit_count()
            regular = all(
                (comp.adj[v] & part).bit_count() == 2 for v in iter_bits(part)
            )
            if size < 4 or not regular:
                return False, _wit(
                    alpha=2, reason="complement is not a union of cycles of length >= 4"
                )
    return True, None


def _chk_wk_monotonicity(ctx, k_max: int = 3):
    for k in range(1, k_max + 1):
        if is_in_w(ctx.g, k):
            ok, wit = check_wk_monotonicity(ctx.g, k)
            if not ok:
                return False, _wit(k=k, subset_set=wit[0], superset_set=wit[1])
    return True, None


def _chk_wk_chain(ctx, k_max: int = 4):
    prev = is_in_w(ctx.g, 1)
    for k in range(2, k_max + 1):
        cur = is_in_w(ctx.g, k)
        if cur and not prev:
            return False, _wit(k=k)
        prev = cur
    return True, None


def _chk_berge(ctx):
    g, adj, full = ctx.g, ctx.adj, ctx.full
    omega_set = set(ctx.omega)
    for s in ctx.ind:
        matched = all(
            can_match_into(g, a, s)
            for a in _iter_maximal_independent(adj, full & ~s)
        )
        if matched != (s in omega_set):
            return False, _wit(independent_set=s, maximum=s in omega_set)
    return True, None


def _is_corona_of(g: Graph, attach: Graph) -> bool:
    """Whether g is (isomorphic to) some base graph with ``attach`` hung on
    every vertex."""
    t = attach.n + 1
    if g.n == 0 or g.n % t:
        return False
    target = cat.certificate(g.adj)
    for base in cat.all_graphs(g.n // t):
        if cat.certificate(corona_uniform(base, attach).adj) == target:
            return True
    return False


def _chk_girth6_corona(ctx):
    lhs = ctx.well_covered
    rhs = _is_corona_of(ctx.g, complete(1))
    if lhs == rhs:
        return True, None
    return False, _wit(well_covered=lhs, pendant_corona=rhs)


def _chk_girth5_corona(ctx):
    lhs = is_very_well_covered(ctx.g)
    rhs = _is_corona_of(ctx.g, complete(1))
    if lhs == rhs:
        return True, None
    return False, _wit(very_well_covered=lhs, pendant_corona=rhs)


def _chk_hartnell(ctx):
    lhs = ctx.w2
    rhs = ctx.is_k2() or ctx.is_cycle_of(5) or _is_corona_of(ctx.g, complete(2))
    if lhs == rhs:
        return True, None
    return False, _wit(w2=lhs, k2_c5_or_edge_corona=rhs)


# ---------------------------------------------------------------------------
# hypothesis gates
# ---------------------------------------------------------------------------


def _nonempty(ctx):
    return ctx.g.n >= 1


def _no_isolated(ctx):
    return ctx.g.n >= 1 and all(row != 0 for row in ctx.adj)


def _wc_gate(ctx):
    return _nonempty(ctx) and ctx.well_covered


def _w2_gate(ctx):
    return _nonempty(ctx) and ctx.w2


def _w2_connected_not_k2(ctx):
    return _w2_gate(ctx) and ctx.connected and not ctx.is_k2()


def _two_simplicial_gate(ctx):
    parts = simplex_partition(ctx.g)
    if not _nonempty(ctx) or parts is None:
        return False
    simp = simplicial_vertices(ctx.g)
    return all((s & simp).bit_count() >= 2 for s in parts)


def _girth6_gate(ctx):
    return (
        _nonempty(ctx)
        and ctx.connected
        and girth(ctx.g) >= 6
        and not ctx.is_cycle_of(7)
        and ctx.g.n != 1
    )


def _girth5_gate(ctx):
    return _nonempty(ctx) and ctx.connected and girth(ctx.g) >= 5


def _hartnell_gate(ctx):
    return _nonempty(ctx) and ctx.connected and not has_four_cycle(ctx.g)


def _triangle_free_gate(ctx):
    if not _no_isolated(ctx):
        return False
    adj = ctx.adj
    return all(adj[u] & adj[v] == 0 for u, v in ctx.g.edges())


def _locally_tf_w2_gate(ctx):
    return _w2_gate(ctx) and is_locally_triangle_free(ctx.g)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    kind: str  # "graph" | "grid"
    summary: str
    hypotheses: str = ""
    applies: object = None
    check: object = None
    run_grid: object = None


REGISTRY: dict[str, Theorem] = {}


def _register(theorem: Theorem):
    if theorem.theorem_id in REGISTRY:
        raise ValueError(f"duplicate theorem id {theorem.theorem_id}")
    REGISTRY[theorem.theorem_id] = theorem


def _graph_theorem(theorem_id, summary, hypotheses, applies, check):
    _register(
        Theorem(
            theorem_id=theorem_id,
            kind="graph",
            summary=summary,
            hypotheses=hypotheses,
            applies=applies,
            check=check,
        )
    )


_graph_theorem(
    "lem.alpha-stability",
    "deleting a non-isolated vertex of a well-covered graph preserves the independence number",
    "nonempty, well-covered",
    _wc_gate,
    _chk_alpha_stability,
)
_graph_theorem(
    "thm.w2-equivalence",
    "the seven characterizations of level-2 membership agree",
    "nonempty, no isolated vertices",
    _no_isolated,
    _chk_w2_equivalence,
)
_graph_theorem(
    "cor.w2-minus-ns",
    "removing the closed neighborhood of a non-maximum independent set keeps level-2 membership",
    "nonempty, in level 2",
    _w2_gate,
    _chk_w2_minus_ns,
)
_graph_theorem(
    "cor.w2-no-leaf",
    "a connected level-2 member other than the single edge has minimum degree >= 2",
    "connected, in level 2, not the single edge",
    _w2_connected_not_k2,
    _chk_w2_no_leaf,
)
_graph_theorem(
    "cor.w2-minus-nv",
    "removing any closed vertex neighborhood keeps level-2 membership",
    "nonempty, in level 2",
    _w2_gate,
    _chk_w2_minus_nv,
)
_graph_theorem(
    "thm.w2-properties",
    "structural consequences (order, matching, differential, regularizability) of level-2 membership",
    "connected, in level 2, not the single edge",
    _w2_connected_not_k2,
    _chk_w2_properties,
)
_graph_theorem(
    "cor.w2-degree-bound",
    "degrees inside an independent set are bounded by its neighborhood slack",
    "connected, in level 2",
    lambda ctx: _w2_gate(ctx) and ctx.connected,
    _chk_w2_degree_bound,
)
_graph_theorem(
    "cor.w2-differential-bound",
    "the graph differential is at least n - 2*alpha (and that is at least max degree - 1 when connected)",
    "in level 2 (second inequality: connected)",
    _w2_gate,
    _chk_w2_differential_bound,
)
_graph_theorem(
    "thm.shedding-epsilon",
    "a vertex is shedding iff deleting it preserves every enlargement strength",
    "nonempty",
    _nonempty,
    _chk_shedding_epsilon,
)
_graph_theorem(
    "cor.shedding-wc",
    "in a well-covered graph a non-isolated vertex is shedding iff its deletion stays well-covered",
    "nonempty, well-covered",
    _wc_gate,
    _chk_shedding_wc,
)
_graph_theorem(
    "cor.shedding-four-way",
    "the four shedding characterizations agree for non-isolated vertices of well-covered graphs",
    "nonempty, well-covered",
    _wc_gate,
    _chk_shedding_four_way,
)
_graph_theorem(
    "prop.simplicial-shed",
    "neighbors of a simplicial vertex are shedding",
    "nonempty",
    _nonempty,
    _chk_simplicial_shed,
)
_graph_theorem(
    "cor.simplicial-delete",
    "deleting a neighbor of a simplicial vertex keeps a well-covered graph well-covered",
    "nonempty, well-covered",
    _wc_gate,
    _chk_simplicial_delete,
)
_graph_theorem(
    "thm.simplex-partition",
    "the simplexes partition the vertices iff the graph is simplicial and well-covered",
    "nonempty",
    _nonempty,
    _chk_simplex_partition,
)
_graph_theorem(
    "prop.two-simplicial-w2",
    "simplex-partitioned graphs with two simplicial vertices per simplex are level-2 members",
    "simplexes partition the vertices, each with >= 2 simplicial vertices",
    _two_simplicial_gate,
    _chk_two_simplicial_w2,
)
_graph_theorem(
    "thm.w2-five-way",
    "five characterizations of level-2 membership for well-covered graphs without isolated vertices",
    "nonempty, well-covered, no isolated vertices",
    lambda ctx: _no_isolated(ctx) and ctx.well_covered,
    _chk_w2_five_way,
)
_graph_theorem(
    "cor.w2-order-extremal",
    "order-extremal and bipartite connected level-2 members are the known ones",
    "connected, in level 2",
    lambda ctx: _w2_gate(ctx) and ctx.connected,
    _chk_order_extremal,
)
_graph_theorem(
    "thm.w2-triangle-free-gab",
    "triangle-free level-2 membership via well-coveredness of all edge-neighborhood deletions",
    "nonempty, triangle-free, no isolated vertices",
    _triangle_free_gate,
    _chk_gab_criterion,
)
_graph_theorem(
    "prop.locally-tf-w2",
    "locally triangle-free level-2 members with small independence number are complete graphs or cycle complements",
    "in level 2, locally triangle-free",
    _locally_tf_w2_gate,
    _chk_locally_tf_w2,
)
_graph_theorem(
    "thm.wk-monotonicity",
    "level-k membership forces the k-weighted neighborhood deficiency to be monotone",
    "nonempty (levels 1..3 probed)",
    _nonempty,
    _chk_wk_monotonicity,
)
_graph_theorem(
    "thm.wk-chain",
    "hierarchy levels are nested",
    "none (levels up to 4 probed)",
    lambda ctx: True,
    _chk_wk_chain,
)
_graph_theorem(
    "thm.berge-maximum",
    "an independent set is maximum iff every disjoint independent set matches into it",
    "nonempty",
    _nonempty,
    _chk_berge,
)
_graph_theorem(
    "thm.girth6-wc-corona",
    "connected well-covered graphs of girth >= 6 are pendant coronas (known exceptions aside)",
    "connected, girth >= 6, not the 7-cycle, more than one vertex",
    _girth6_gate,
    _chk_girth6_corona,
)
_graph_theorem(
    "thm.girth5-vwc-corona",
    "connected very well-covered graphs of girth >= 5 are pendant coronas",
    "connected, girth >= 5",
    _girth5_gate,
    _chk_girth5_corona,
)
_graph_theorem(
    "thm.hartnell-c4free",
    "connected graphs without 4-cycles in level 2 are the single edge, the 5-cycle, or an edge corona",
    "connected, no 4-cycle",
    _hartnell_gate,
    _chk_hartnell,
)


# ---------------------------------------------------------------------------
# grid theorems
# ---------------------------------------------------------------------------

CORONA_ATTACHMENT_POOL = ("K1", "K2", "K3", "P3", "2K1")


def _pool_graph(name: str) -> Graph:
    return {
        "K1": complete(1),
        "K2": complete(2),
        "K3": complete(3),
        "P3": path(3),
        "2K1": empty_graph(2),
    }[name]


def _is_complete_graph(h: Graph) -> bool:
    return h.n >= 1 and h.edge_count() == h.n * (h.n - 1) // 2


def _verdict(theorem_id, g, holds, witness, t0) -> TheoremVerdict:
    return TheoremVerdict(
        theorem_id=theorem_id,
        graph_id=write_graph6(g),
        applicable=True,
        holds=holds,
        witness=witness if not holds else None,
        elapsed=time.perf_counter() - t0,
    )


def _attachment_families(n: int):
    if n == 0:
        yield ()
        return
    for rest in _attachment_families(n - 1):
        for name in CORONA_ATTACHMENT_POOL:
            yield rest + (name,)


def _grid_corona_wc(bounds):
    base_max = bounds.get("base_max_n", 4)
    out = []
    for base in cat.graphs_up_to(base_max):
        for names in _attachment_families(base.n):
            t0 = time.perf_counter()
            fam = CoronaFamily(base, tuple(_pool_graph(s) for s in names))
            g = corona(fam)
            expected = all(_is_complete_graph(h) for h in fam.attachments)
            holds = is_well_covered(g) == expected
            wit = None if holds else {"base": write_graph6(base), "attachments": list(names)}
            out.append(_verdict("prop.corona-wc", g, holds, wit, t0))
    return out


def _grid_corona_w2(bounds):
    base_max = bounds.get("base_max_n", 4)
    out = []
    for base in cat.graphs_up_to(base_max):
        for names in _attachment_families(base.n):
            t0 = time.perf_counter()
            fam = CoronaFamily(base, tuple(_pool_graph(s) for s in names))
            g = corona(fam)
            expected = all(
                (_is_complete_graph(h) and h.n >= 2)
                if base.adj[v]
                else _is_complete_graph(h)
                for v, h in enumerate(fam.attachments)
            )
            holds = is_in_w(g, 2) == expected
            wit = None if holds else {"base": write_graph6(base), "attachments": list(names)}
            out.append(_verdict("prop.corona-w2", g, holds, wit, t0))
    return out


def _grid_corona_k1wc(bounds):
    base_max = bounds.get("base_max_n", 4)
    p_max = bounds.get("p_max", 3)
    out = []
    for base in cat.graphs_up_to(base_max):
        if base.edge_count() == 0:
            continue
        for p in range(1, p_max + 1):
            t0 = time.perf_counter()
            g = corona_uniform(base, complete(p))
            holds = is_one_well_covered(g) == (p >= 2)
            wit = None if holds else {"base": write_graph6(base), "p": p}
            out.append(_verdict("cor.corona-k1wc", g, holds, wit, t0))
    return out


def _grid_corona_bipartite_2mis(bounds):
    h_max = bounds.get("h_max_n", 5)
    out = []
    for h in cat.graphs_up_to(h_max):
        t0 = time.perf_counter()
        g = corona_uniform(h, complete(1))
        holds = has_k_disjoint_maximum_independent_sets(g, 2)[0] == (
            is_bipartite(h) is not None
        )
        wit = None if holds else {"h": write_graph6(h)}
        out.append(_verdict("thm.corona-bipartite-2mis", g, holds, wit, t0))
    return out


def _grid_join_wc(bounds):
    part_max = bounds.get("part_max_n", 5)
    parts = list(cat.graphs_up_to(part_max))
    out = []
    for i, g1 in enumerate(parts):
        for g2 in parts[i:]:
            t0 = time.perf_counter()
            g = join([g1, g2])
            expected = (
                is_well_covered(g1)
                and is_well_covered(g2)
                and _alpha(g1.adj, g1.full_mask) == _alpha(g2.adj, g2.full_mask)
            )
            holds = is_well_covered(g) == expected
            wit = None if holds else {"parts": [write_graph6(g1), write_graph6(g2)]}
            out.append(_verdict("prop.join-wc", g, holds, wit, t0))
    return out


def _grid_join_w2(bounds):
    part_max = bounds.get("part_max_n", 5)
    parts = list(cat.graphs_up_to(part_max))
    out = []
    for i, g1 in enumerate(parts):
        for g2 in parts[i:]:
            t0 = time.perf_counter()
            g = join([g1, g2])
            # all-complete parts give a complete join, a level-2 member even
            # when a one-vertex part is not; the level-2 criterion on the
            # parts governs exactly the remaining case
            expected = (
                _is_complete_graph(g1) and _is_complete_graph(g2)
            ) or (
                is_in_w(g1, 2)
                and is_in_w(g2, 2)
                and _alpha(g1.adj, g1.full_mask) == _alpha(g2.adj, g2.full_mask)
            )
            holds = is_in_w(g, 2) == expected
            wit = None if holds else {"parts": [write_graph6(g1), write_graph6(g2)]}
            out.append(_verdict("prop.join-w2", g, holds, wit, t0))
    return out


def _grid_concat_alpha(bounds):
    base_max = bounds.get("base_max_n", 4)
    part_max = bounds.get("part_max_n", 5)
    out = []
    bases = [b for b in cat.graphs_up_to(base_max, connected=True) if b.n >= 2]
    parts = [h for h in cat.graphs_up_to(part_max) if h.n >= 2]
    for base in bases:
        for h in parts:
            omega_h = None
            for v in range(h.n):
                t0 = time.perf_counter()
                g = concatenate(base, h, v)
                if omega_h is None:
                    sets = sorted(_iter_maximal_independent(h.adj, h.full_mask))
                    ah = max(s.bit_count() for s in sets)
                    omega_h = [s for s in sets if s.bit_count() == ah]
                ah = omega_h[0].bit_count()
                in_all = all(s >> v & 1 for s in omega_h)
                if in_all:
                    expected = base.n * (ah - 1) + _alpha(base.adj, base.full_mask)
                else:
                    expected = base.n * ah
                holds = _alpha(g.adj, g.full_mask) == expected
                wit = None if holds else {
                    "base": write_graph6(base),
                    "h": write_graph6(h),
                    "at": v,
                    "expected": expected,
                }
                out.append(_verdict("lem.concat-alpha", g, holds, wit, t0))
    return out


def _grid_concat_hierarchy(bounds):
    base_max = bounds.get("base_max_n", 3)
    part_max = bounds.get("part_max_n", 6)
    out = []
    bases = list(cat.graphs_up_to(base_max, connected=True))
    for h in cat.graphs_up_to(part_max):
        if h.n < 1:
            continue
        h_w2 = is_in_w(h, 2)
        h_w3 = is_in_w(h, 3) if h_w2 else False
        if not h_w2:
            continue
        for v in range(h.n):
            for base in bases:
                t0 = time.perf_counter()
                g = concatenate(base, h, v)
                ok = is_well_covered(g)
                if ok and h_w3:
                    ok = is_in_w(g, 2)
                wit = None if ok else {
                    "base": write_graph6(base),
                    "h": write_graph6(h),
                    "at": v,
                    "h_level": 3 if h_w3 else 2,
                }
                out.append(_verdict("thm.concat-hierarchy", g, ok, wit, t0))
    return out


for _id, _summary, _runner in [
    (
        "prop.corona-wc",
        "a corona is well-covered iff every attachment is complete",
        _grid_corona_wc,
    ),
    (
        "prop.corona-w2",
        "a corona is a level-2 member iff attachments are complete on >= 2 vertices at non-isolated base vertices",
        _grid_corona_w2,
    ),
    (
        "cor.corona-k1wc",
        "a complete-attachment corona over a base with edges is 1-well-covered iff the attachment has >= 2 vertices",
        _grid_corona_k1wc,
    ),
    (
        "thm.corona-bipartite-2mis",
        "a pendant corona has two disjoint maximum independent sets iff the base is bipartite",
        _grid_corona_bipartite_2mis,
    ),
    (
        "prop.join-wc",
        "a join is well-covered iff all parts are well-covered with equal independence numbers",
        _grid_join_wc,
    ),
    (
        "prop.join-w2",
        "a join is a level-2 member iff all parts are, with equal independence numbers",
        _grid_join_w2,
    ),
    (
        "lem.concat-alpha",
        "the independence number of a concatenation follows the two-branch formula",
        _grid_concat_alpha,
    ),
    (
        "thm.concat-hierarchy",
        "concatenation drops the hierarchy level by at most one (levels 2 and 3)",
        _grid_concat_hierarchy,
    ),
]:
    _register(Theorem(theorem_id=_id, kind="grid", summary=_summary, run_grid=_runner))


GRAPH_THEOREM_IDS = [t.theorem_id for t in REGISTRY.values() if t.kind == "graph"]
GRID_THEOREM_IDS = [t.theorem_id for t in REGISTRY.values() if t.kind == "grid"]


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------


def run_suite(g: Graph, theorem_ids=None) -> list[TheoremVerdict]:
    """Evaluate registered per-graph theorems on one graph."""
    if theorem_ids is None:
        theorem_ids = GRAPH_THEOREM_IDS
    ctx = GraphContext(g)
    graph_id = write_graph6(g)
    out = []
    for tid in theorem_ids:
        theorem = REGISTRY.get(tid)
        if theorem is None:
            raise ValueError(f"unknown theorem id {tid!r}")
        if theorem.kind != "graph":
            raise ValueError(f"{tid!r} is a construction-grid theorem; use run_grid")
        t0 = time.perf_counter()
        if not theorem.applies(ctx):
            out.append(
                TheoremVerdict(tid, graph_id, False, True, None, time.perf_counter() - t0)
            )
            continue
        holds, witness = theorem.check(ctx)
        out.append(
            TheoremVerdict(
                tid, graph_id, True, holds, witness if not holds else None,
                time.perf_counter() - t0,
            )
        )
    return out


def run_grid(theorem_id: str, bounds: dict | None = None) -> list[TheoremVerdict]:
    """Evaluate one construction-grid theorem over its (bounded) grid."""
    theorem = REGISTRY.get(theorem_id)
    if theorem is None:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    if theorem.kind != "grid":
        raise ValueError(f"{theorem_id!r} is a per-graph theorem; use run_suite")
    return theorem.run_grid(bounds or {})


def registry_ids() -> list[str]:
    return list(REGISTRY)


# ---------------------------------------------------------------------------
# catalog survey
# ---------------------------------------------------------------------------


@dataclass
class SurveyReport:
    records: list = field(default_factory=list)       # one dict per graph, input order
    aggregates: dict = field(default_factory=dict)    # per-order counters
    failures: list = field(default_factory=list)      # verdicts of proven theorems that failed
    parse_errors: list = field(default_factory=list)  # (line_number, message)
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "aggregates": self.aggregates,
            "failures": self.failures,
            "parse_errors": [
                {"line": line, "message": msg} for line, msg in self.parse_errors
            ],
            "graphs": len(self.records),
            "elapsed": self.elapsed,
        }


def _survey_one(args) -> dict:
    line_number, text, k_max, run_theorems = args
    g = parse_graph6(text)
    record = {
        "line": line_number,
        "report": class_report(g, k_max).to_json_dict(),
    }
    if run_theorems:
        record["verdicts"] = [v.to_json_dict() for v in run_suite(g)]
    return record


def survey_catalog(
    lines,
    k_max: int = 3,
    filters: dict | None = None,
    strict: bool = False,
    jobs: int = 1,
    run_theorems: bool = True,
) -> SurveyReport:
    """Classify (and optionally theorem-check) every graph of a graph6 stream.

    Filters: {"connected": bool, "min_n": int, "max_n": int}.  Parse failures
    are reported with their line numbers and skipped unless ``strict``.
    Output is deterministic given the input order; ``jobs`` > 1 parallelizes
    per-graph work without changing the output.
    """
    t0 = time.perf_counter()
    filters = filters or {}
    report = SurveyReport()
    work = []
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            if strict:
                raise
            report.parse_errors.append((line_number, str(exc)))
            continue
        if "min_n" in filters and g.n < filters["min_n"]:
            continue
        if "max_n" in filters and g.n > filters["max_n"]:
            continue
        if filters.get("connected") and not is_connected(g):
            continue
        work.append((line_number, text, k_max, run_theorems))

    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_survey_one, work, chunksize=16))
    else:
        records = [_survey_one(item) for item in work]

    for record in records:
        report.records.append(record)
        rep = record["report"]
        agg = report.aggregates.setdefault(
            rep["n"],
            {
                "graphs": 0,
                "well_covered": 0,
                "very_well_covered": 0,
                "one_well_covered": 0,
                "w2": 0,
                "w3": 0,
            },
        )
        agg["graphs"] += 1
        for key, flag in [
            ("well_covered", rep["well_covered"]),
            ("very_well_covered", rep["very_well_covered"]),
            ("one_well_covered", rep["one_well_covered"]),
            ("w2", rep["w_level"] >= 2),
            ("w3", rep["w_level"] >= 3),
        ]:
            agg[key] += int(flag)
        for verdict in record.get("verdicts", ()):
            if verdict["applicable"] and not verdict["holds"]:
                report.failures.append(verdict)
    report.aggregates = {n: report.aggregates[n] for n in sorted(report.aggregates)}
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# hunting
# ---------------------------------------------------------------------------

HUNT_TARGET_IDS = (
    "conjecture.wk-concat",
    "problem.no-shedding",
    "problem.two-disjoint-mis-girth5",
    "problem.w2-alpha2",
    "problem.alpha-plus-mu",
)

HUNT_MAX_N = 10  # canonical deduplication cap


@dataclass(frozen=True)
class HuntTarget:
    """A conjecture or open problem with search bounds."""

    target_id: str
    max_n: int = 8
    k: int = 3
    base_max_n: int = 3

    def __post_init__(self):
        if self.target_id not in HUNT_TARGET_IDS:
            raise ValueError(f"unknown hunt target {self.target_id!r}")
        if self.max_n < 1 or self.base_max_n < 1:
            raise ValueError("bounds must be positive")
        if self.max_n > HUNT_MAX_N:
            raise ValueError(f"hunts are capped at n <= {HUNT_MAX_N}")
        if self.k < 2:
            raise ValueError("the concatenation conjecture needs k >= 2")


@dataclass
class HuntReport:
    target_id: str
    parameters: dict
    entries: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    checked: int = 0
    summary: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "target": self.target_id,
            "parameters": self.parameters,
            "entries": self.entries,
            "counterexamples": self.counterexamples,
            "checked": self.checked,
            "summary": self.summary,
            "elapsed": self.elapsed,
        }


def _hunt_source(target: HuntTarget, source, connected_only: bool) -> list[Graph]:
    if source is None:
        graphs = list(cat.graphs_up_to(target.max_n, connected=connected_only))
    else:
        graphs = []
        for raw in source:
            text = raw.strip() if isinstance(raw, str) else None
            if text == "":
                continue
            graphs.append(parse_graph6(text) if text is not None else raw)
        graphs = [g for g in graphs if g.n <= target.max_n]
        if connected_only:
            graphs = [g for g in graphs if is_connected(g)]
    return graphs


def _dedup_canonical(graphs) -> list[Graph]:
    seen = {}
    for g in graphs:
        key = cat.certificate(g.adj)
        if key not in seen:
            seen[key] = g
    return [seen[k] for k in sorted(seen)]


def hunt(target: HuntTarget, source=None, connected_only: bool = False) -> HuntReport:
    """Run one hunt target over a graph6 stream, a Graph iterable, or (by
    default) the generated connected catalog within the target bound.

    Problem targets emit the canonically deduplicated census of graphs
    satisfying the problem predicate; the conjecture target reports any
    concatenation dropping more than one hierarchy level.
    """
    t0 = time.perf_counter()
    report = HuntReport(
        target_id=target.target_id,
        parameters={"max_n": target.max_n, "k": target.k, "base_max_n": target.base_max_n},
    )

    if target.target_id == "conjecture.wk-concat":
        bases = [b for b in cat.graphs_up_to(target.base_max_n, connected=True)]
        for h in _hunt_source(target, source, connected_only):
            if h.n < 1 or not is_in_w(h, target.k):
                continue
            for v in range(h.n):
                for base in bases:
                    g = concatenate(base, h, v)
                    report.checked += 1
                    if not is_in_w(g, target.k - 1):
                        report.counterexamples.append(
                            {
                                "base": write_graph6(base),
                                "h": write_graph6(h),
                                "at": v,
                                "concatenation": write_graph6(g),
                            }
                        )
        report.summary = {
            "counterexamples": len(report.counterexamples),
            "checked": report.checked,
        }
        report.elapsed = time.perf_counter() - t0
        return report

    predicate = {
        "problem.no-shedding": lambda g: is_well_covered(g)
        and shedding_vertices(g) == 0,
        "problem.two-disjoint-mis-girth5": lambda g: is_well_covered(g)
        and girth(g) <= 5
        and has_k_disjoint_maximum_independent_sets(g, 2)[0],
        "problem.w2-alpha2": lambda g: is_connected(g)
        and _alpha(g.adj, g.full_mask) == 2
        and is_in_w(g, 2),
        "problem.alpha-plus-mu": lambda g: is_connected(g)
        and is_in_w(g, 2)
        and _alpha(g.adj, g.full_mask) + maximum_matching_size(g) == g.n - 1,
    }[target.target_id]

    hits = []
    for g in _hunt_source(target, source, connected_only):
        report.checked += 1
        if g.n >= 1 and predicate(g):
            hits.append(g)
    for g in _dedup_canonical(hits):
        report.entries.append(
            {
                "graph": write_graph6(g),
                "n": g.n,
                "connected": is_connected(g),
            }
        )
    report.summary = {
        "found": len(report.entries),
        "found_connected": sum(1 for e in report.entries if e["connected"]),
        "checked": report.checked,
    }
    report.elapsed = time.perf_counter() - t0
    return report
