"""Hierarchy predicates: well-covered and its refinements, shedding and
simplicial vertices, regularizability, and the aggregate per-graph report.

The hierarchy classes are nested: level k membership means every k pairwise
disjoint independent sets extend to k pairwise disjoint maximum independent
sets.  Families are allowed to contain empty sets, so membership at level k
forces k pairwise disjoint maximum independent sets to exist on any nonempty
graph; ``is_in_w_generic`` can evaluate the stricter nonempty-family reading
as well, and surveys record the graphs where the two readings disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    closed_neighborhood,
    is_triangle_free_mask,
    iter_bits,
    vertices_of,
    write_graph6,
)
from .independence import (
    _alpha,
    _independent_sets,
    _is_independent,
    _iter_maximal_independent,
    _nbhd,
    _wc_scan,
    differential_of_graph,
    has_k_disjoint_maximum_independent_sets,
    maximum_matching_size,
)

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# well-covered family
# ---------------------------------------------------------------------------


def is_well_covered(g: Graph) -> bool:
    """All maximal independent sets share one cardinality (true for n = 0)."""
    return _wc_scan(g.adj, g.full_mask)[0]


def is_very_well_covered(g: Graph) -> bool:
    """Well-covered, no isolated vertices, and exactly 2*alpha vertices."""
    if any(row == 0 for row in g.adj):
        return False
    wc, alpha = _wc_scan(g.adj, g.full_mask)
    return wc and g.n == 2 * alpha


def is_one_well_covered(g: Graph) -> bool:
    """Well-covered with >= 2 vertices, staying well-covered after deleting
    any one vertex."""
    if g.n < 2:
        return False
    adj, full = g.adj, g.full_mask
    if not _wc_scan(adj, full)[0]:
        return False
    return all(_wc_scan(adj, full ^ (1 << v))[0] for v in range(g.n))


def _w2_fast(g: Graph) -> bool:
    # stability criterion: deleting any vertex keeps the graph well-covered
    # with the same independence number
    adj, full = g.adj, g.full_mask
    alpha = _alpha(adj, full)
    for v in range(g.n):
        wc, size = _wc_scan(adj, full ^ (1 << v))
        if not wc or size != alpha:
            return False
    return True


def is_in_w(g: Graph, k: int) -> bool:
    """Membership at level k of the hierarchy (empty families admitted)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return is_well_covered(g)
    if k == 2:
        return _w2_fast(g)
    return is_in_w_generic(g, k)


def is_in_w_generic(g: Graph, k: int, nonempty: bool = False) -> bool:
    """Reference level-k membership by enumerating disjoint families.

    It suffices to test family-maximal tuples (no vertex outside the union can
    join any component): shrinking a component preserves extendability, and
    every family grows componentwise to a family-maximal one.  With
    ``nonempty`` the quantification runs over families of nonempty sets, the
    reading under which a too-small graph is vacuously a member.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n, adj, full = g.n, g.adj, g.full_mask
    if n == 0:
        return True
    ind = _independent_sets(adj, full)
    omega = _omega_list(adj, full)
    contains = _omega_contains(omega, ind)

    def extend(idx_masks: list[int]) -> bool:
        # pairwise disjoint members of omega, one from each candidate mask
        def rec(i: int, used: int) -> bool:
            if i == len(idx_masks):
                return True
            m = idx_masks[i]
            while m:
                b = m & -m
                j = b.bit_length() - 1
                m ^= b
                if not omega[j] & used:
                    if rec(i + 1, used | omega[j]):
                        return True
            return False

        return rec(0, 0)

    family: list[int] = []

    def family_maximal(union: int) -> bool:
        outside = full & ~union
        while outside:
            b = outside & -outside
            v = b.bit_length() - 1
            outside ^= b
            row = adj[v]
            for a in family:
                if row & a == 0:
                    return False  # v could join component a
        return True

    # unordered families: enumerate with non-decreasing indices (empty sets
    # may repeat, so the same index may be reused only for the empty set)
    def rec_unordered(min_index: int, union: int) -> bool:
        if len(family) == k:
            if not family_maximal(union):
                return True
            idx_masks = []
            for a in family:
                m = contains.get(a, 0)
                if m == 0:
                    return False
                idx_masks.append(m)
            order = sorted(range(k), key=lambda i: idx_masks[i].bit_count())
            return extend([idx_masks[i] for i in order])
        for i in range(min_index, len(ind)):
            a = ind[i]
            if nonempty and a == 0:
                continue
            if a & union:
                continue
            family.append(a)
            ok = rec_unordered(i if a == 0 else i + 1, union | a)
            family.pop()
            if not ok:
                return False
        return True

    return rec_unordered(0, 0)


def _omega_list(adj, mask: int) -> list[int]:
    sets = sorted(_iter_maximal_independent(adj, mask))
    alpha = max((s.bit_count() for s in sets), default=0)
    return [s for s in sets if s.bit_count() == alpha]


def _omega_contains(omega: list[int], ind: list[int]) -> dict[int, int]:
    """For each independent set, the bitmask of omega indices containing it."""
    out: dict[int, int] = {}
    for a in ind:
        m = 0
        for j, s in enumerate(omega):
            if a & ~s == 0:
                m |= 1 << j
        out[a] = m
    return out


def w_level(g: Graph, k_max: int) -> int:
    """Largest k <= k_max with level-k membership (0 when not well-covered)."""
    level = 0
    for k in range(1, k_max + 1):
        if not is_in_w(g, k):
            break
        level = k
    return level


def w_convention_disagreements(g: Graph, k_max: int, generic_cap: int = 8) -> list[int]:
    """Levels k <= k_max where the empty-family and nonempty-family readings
    of membership disagree.

    A nonempty family of k disjoint sets exists iff n >= k (take singletons),
    so for n < k the nonempty reading is vacuously true and the comparison is
    free.  For n >= k disagreements can only occur on well-covered graphs,
    where the generic checker runs both readings; that comparison is limited
    to n <= ``generic_cap``.
    """
    out = []
    wc = None
    for k in range(1, k_max + 1):
        if g.n < k:
            if not is_in_w(g, k):
                out.append(k)
            continue
        if wc is None:
            wc = is_well_covered(g)
        if not wc or g.n > generic_cap:
            continue
        if is_in_w_generic(g, k, nonempty=True) != is_in_w(g, k):
            out.append(k)
    return out


# ---------------------------------------------------------------------------
# shedding and simplicial vertices
# ---------------------------------------------------------------------------


def is_shedding(g: Graph, v: int) -> bool:
    """Every independent set of G - N[v] extends by some neighbor of v.

    Quantification is reduced to maximal independent sets of G - N[v]: a
    neighbor compatible with a maximal set is compatible with its subsets.
    Isolated vertices are never shedding.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    adj = g.adj
    nv = adj[v]
    if nv == 0:
        return False
    rest = g.full_mask & ~(nv | (1 << v))
    neighbor_rows = [adj[u] for u in iter_bits(nv)]
    for s in _iter_maximal_independent(adj, rest):
        if not any(row & s == 0 for row in neighbor_rows):
            return False
    return True


def shedding_vertices(g: Graph) -> int:
    mask = 0
    for v in range(g.n):
        if is_shedding(g, v):
            mask |= 1 << v
    return mask


def simplicial_vertices(g: Graph) -> int:
    """Vertices whose closed neighborhood induces a complete graph."""
    adj = g.adj
    mask = 0
    for v in range(g.n):
        closed = adj[v] | (1 << v)
        if all(closed & ~(adj[u] | (1 << u)) == 0 for u in iter_bits(adj[v])):
            mask |= 1 << v
    return mask


def simplexes(g: Graph) -> list[int]:
    """Distinct simplexes (closed neighborhoods of simplicial vertices)."""
    out = {g.adj[v] | (1 << v) for v in iter_bits(simplicial_vertices(g))}
    return sorted(out)


def is_simplicial_graph(g: Graph) -> bool:
    """Every vertex belongs to at least one simplex."""
    cover = 0
    for s in simplexes(g):
        cover |= s
    return cover == g.full_mask


def simplex_partition(g: Graph):
    """The family of simplexes when they partition the vertex set, else None."""
    parts = simplexes(g)
    union = 0
    for s in parts:
        if union & s:
            return None
        union |= s
    if union != g.full_mask:
        return None
    return parts


# ---------------------------------------------------------------------------
# regularizability and local structure
# ---------------------------------------------------------------------------


def is_quasi_regularizable(g: Graph) -> bool:
    """|S| <= |N(S)| for every independent set S (all of them; the maximal-set
    reduction is not valid here)."""
    adj, full = g.adj, g.full_mask

    def rec(cur: int, nb: int, avail: int) -> bool:
        if cur.bit_count() > nb.bit_count():
            return False
        m = avail
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if not rec(cur | b, nb | adj[v], m & ~adj[v]):
                return False
        return True

    return rec(0, 0, full)


def is_regularizable(g: Graph) -> bool:
    """|N(S)| >= |S| for each independent S, with N(N(S)) = S forced whenever
    |N(S)| = |S|."""
    adj, full = g.adj, g.full_mask

    def rec(cur: int, nb: int, avail: int) -> bool:
        cs, ns = cur.bit_count(), nb.bit_count()
        if ns < cs:
            return False
        if ns == cs and _nbhd(adj, nb) != cur:
            return False
        m = avail
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if not rec(cur | b, nb | adj[v], m & ~adj[v]):
                return False
        return True

    return rec(0, 0, full)


def is_locally_triangle_free(g: Graph) -> bool:
    """G - N[v] is triangle-free for every vertex v."""
    full = g.full_mask
    return all(
        is_triangle_free_mask(g, full & ~(g.adj[v] | (1 << v))) for v in range(g.n)
    )


def check_wk_monotonicity(g: Graph, k: int):
    """Whether |N(A)| - (k-1)|A| <= |N(B)| - (k-1)|B| for every independent
    B and every A <= B.  Returns (holds, witness pair or None)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj, full = g.adj, g.full_mask
    for b_set in _independent_sets(adj, full):
        nb_b = _nbhd(adj, b_set)
        rhs = nb_b.bit_count() - (k - 1) * b_set.bit_count()
        # scan subsets of b_set
        a_set = b_set
        while True:
            lhs = _nbhd(adj, a_set).bit_count() - (k - 1) * a_set.bit_count()
            if lhs > rhs:
                return False, (a_set, b_set)
            if a_set == 0:
                break
            a_set = (a_set - 1) & b_set
    return True, None


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    """Full hierarchy verdict for one graph."""

    graph_id: str
    n: int
    alpha: int
    mu: int
    delta_graph: int
    well_covered: bool
    very_well_covered: bool
    one_well_covered: bool
    quasi_regularizable: bool
    regularizable: bool
    locally_triangle_free: bool
    w_level: int
    k_max: int
    shed: int
    simp: int
    disjoint_mis_max: int
    w_convention_diffs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.one_well_covered and not self.well_covered:
            raise ValueError("one_well_covered implies well_covered")
        # the empty graph sits in every level by convention yet is not
        # 1-well-covered (that notion needs >= 2 vertices), so it is exempt
        if self.n > 0 and self.w_level >= 2 and not self.one_well_covered:
            raise ValueError("level >= 2 implies one_well_covered")

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "graph": self.graph_id,
            "n": self.n,
            "alpha": self.alpha,
            "mu": self.mu,
            "differential": self.delta_graph,
            "well_covered": self.well_covered,
            "very_well_covered": self.very_well_covered,
            "one_well_covered": self.one_well_covered,
            "quasi_regularizable": self.quasi_regularizable,
            "regularizable": self.regularizable,
            "locally_triangle_free": self.locally_triangle_free,
            "w_level": self.w_level,
            "k_max": self.k_max,
            "shed": vertices_of(self.shed),
            "simp": vertices_of(self.simp),
            "disjoint_mis_max": self.disjoint_mis_max,
            "w_convention_diffs": list(self.w_convention_diffs),
        }


def class_report(g: Graph, k_max: int = 3, convention_check: bool = True) -> ClassReport:
    """Populate every hierarchy field for one graph."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    wl = w_level(g, k_max)
    disjoint_max = 0
    for k in range(1, k_max + 1):
        if has_k_disjoint_maximum_independent_sets(g, k)[0]:
            disjoint_max = k
        else:
            break
    return ClassReport(
        graph_id=write_graph6(g),
        n=g.n,
        alpha=_alpha(g.adj, g.full_mask),
        mu=maximum_matching_size(g),
        delta_graph=differential_of_graph(g),
        well_covered=wl >= 1,
        very_well_covered=is_very_well_covered(g),
        one_well_covered=is_one_well_covered(g),
        quasi_regularizable=is_quasi_regularizable(g),
        regularizable=is_regularizable(g),
        locally_triangle_free=is_locally_triangle_free(g),
        w_level=wl,
        k_max=k_max,
        shed=shedding_vertices(g),
        simp=simplicial_vertices(g),
        disjoint_mis_max=disjoint_max,
        w_convention_diffs=tuple(
            w_convention_disagreements(g, k_max) if convention_check else ()
        ),
    )
