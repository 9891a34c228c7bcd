"""Exact independence machinery: maximal independent sets, the independence
number, independent-set enlargement, set and graph differentials, and matching
tests (saturating matchings into a target set, maximum matching size).

Everything is exact; caps on exhaustive scans are hard errors rather than
silent truncation.  The private helpers work on (adjacency tuple, vertex mask)
pairs so subgraph quantities never pay for relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits

DIFFERENTIAL_MAX_N = 24  # exhaustive subset scan cap


# ---------------------------------------------------------------------------
# core enumeration on (adj, mask)
# ---------------------------------------------------------------------------


def _nbhd(adj, mask: int) -> int:
    nb = 0
    while mask:
        b = mask & -mask
        nb |= adj[b.bit_length() - 1]
        mask ^= b
    return nb


def _iter_maximal_independent(adj, mask: int):
    """Yield every maximal independent set of the induced subgraph on ``mask``
    as a bitmask, in no particular order.

    Pivoted branch-and-bound: a maximal independent set is a maximal clique of
    the complement, so we recurse with candidate and excluded sets, branching
    only on the pivot's closed non-non-neighborhood.
    """
    stack = [(0, mask, 0)]
    while stack:
        r, p, x = stack.pop()
        if p == 0 and x == 0:
            yield r
            continue
        # pivot u from p|x minimizing branches: candidates are p minus the
        # complement-neighborhood of u, i.e. p & (adj[u] | {u})
        px = p | x
        best_u, best_cnt = -1, -1
        m = px
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            cnt = (p & ~adj[u] & ~b).bit_count()
            if cnt > best_cnt:
                best_u, best_cnt = u, cnt
        branch = p & (adj[best_u] | (1 << best_u))
        while branch:
            b = branch & -branch
            v = b.bit_length() - 1
            branch ^= b
            nonadj_v = mask & ~adj[v] & ~b
            stack.append((r | b, p & nonadj_v, x & nonadj_v))
            p ^= b
            x |= b


def _wc_scan(adj, mask: int):
    """(well_covered, common size or None): early exit on a size mismatch."""
    size = None
    for s in _iter_maximal_independent(adj, mask):
        c = s.bit_count()
        if size is None:
            size = c
        elif c != size:
            return False, None
    return True, (size if size is not None else 0)


def _alpha(adj, mask: int) -> int:
    """Independence number of the induced subgraph on ``mask``.

    Branch and bound: strip isolated vertices, split into components, then
    branch on a maximum-degree vertex (take it and drop its closed
    neighborhood, or discard it).
    """
    if mask == 0:
        return 0
    # strip vertices isolated within the mask
    free = 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        if adj[b.bit_length() - 1] & mask == 0:
            free |= b
    rest = mask & ~free
    total = free.bit_count()
    while rest:
        # peel one component
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                grow |= adj[b.bit_length() - 1]
                f ^= b
            frontier = grow & rest & ~comp
            comp |= frontier
        rest &= ~comp
        total += _alpha_component(adj, comp)
    return total


def _alpha_component(adj, mask: int) -> int:
    count = mask.bit_count()
    if count <= 2:
        return 1  # connected on <= 2 vertices
    best_u, best_deg = -1, -1
    m = mask
    while m:
        b = m & -m
        u = b.bit_length() - 1
        m ^= b
        d = (adj[u] & mask).bit_count()
        if d > best_deg:
            best_u, best_deg = u, d
    take = 1 + _alpha(adj, mask & ~adj[best_u] & ~(1 << best_u))
    skip = _alpha(adj, mask ^ (1 << best_u))
    return take if take >= skip else skip


def _independent_sets(adj, mask: int) -> list[int]:
    """All independent subsets of ``mask``, ascending as bitmasks."""
    out = []

    def rec(cur: int, avail: int):
        out.append(cur)
        m = avail
        while m:
            b = m & -m
            m ^= b
            rec(cur | b, m & ~adj[b.bit_length() - 1])

    rec(0, mask)
    out.sort()
    return out


def _is_independent(adj, mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        if adj[b.bit_length() - 1] & mask:
            return False
    return True


# ---------------------------------------------------------------------------
# public surface
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndependenceProfile:
    """Summary of the independent-set structure of one graph."""

    alpha: int
    maximal_sizes: tuple[int, ...]  # sorted multiset
    omega: tuple[int, ...]          # all maximum independent sets, ascending
    maximal_count: int

    def __post_init__(self):
        if self.maximal_sizes and self.alpha != max(self.maximal_sizes):
            raise ValueError("alpha must equal the largest maximal size")
        if not self.omega:
            raise ValueError("omega must be nonempty (the empty graph has omega={0})")
        if any(s.bit_count() != self.alpha for s in self.omega):
            raise ValueError("every member of omega must have cardinality alpha")


def maximal_independent_sets(g: Graph) -> list[int]:
    """Inclusion-maximal independent sets, each once, ascending as bitmasks."""
    return sorted(_iter_maximal_independent(g.adj, g.full_mask))


def independence_number(g: Graph) -> int:
    return _alpha(g.adj, g.full_mask)


def maximum_independent_sets(g: Graph) -> list[int]:
    sets = maximal_independent_sets(g)
    alpha = max((s.bit_count() for s in sets), default=0)
    return [s for s in sets if s.bit_count() == alpha]


def profile(g: Graph) -> IndependenceProfile:
    sets = maximal_independent_sets(g)
    sizes = tuple(sorted(s.bit_count() for s in sets))
    alpha = sizes[-1] if sizes else 0
    omega = tuple(s for s in sets if s.bit_count() == alpha)
    return IndependenceProfile(alpha, sizes, omega, len(sets))


def is_independent(g: Graph, s_mask: int) -> bool:
    _check_mask(g, s_mask)
    return _is_independent(g.adj, s_mask)


def epsilon(g: Graph, a_mask: int) -> int:
    """Largest size of an independent set containing ``a_mask``.

    Equals |A| plus the independence number of the graph without N[A]; the
    maximum is attained at a maximal independent superset.
    """
    _check_mask(g, a_mask)
    if not _is_independent(g.adj, a_mask):
        raise ValueError("enlargement strength is defined for independent sets only")
    closed = _nbhd(g.adj, a_mask) | a_mask
    return a_mask.bit_count() + _alpha(g.adj, g.full_mask & ~closed)


def differential_of_set(g: Graph, a_mask: int) -> int:
    """|N(A) - A| - |A|; may be negative."""
    _check_mask(g, a_mask)
    nb = _nbhd(g.adj, a_mask)
    return (nb & ~a_mask).bit_count() - a_mask.bit_count()


def differential_of_graph(g: Graph) -> int:
    """Maximum of the set differential over all vertex subsets (>= 0, by the
    empty set).  Exhaustive scan, capped at n <= 24."""
    n = g.n
    if n > DIFFERENTIAL_MAX_N:
        raise ValueError(
            f"differential_of_graph scans all subsets and is capped at n <= {DIFFERENTIAL_MAX_N}"
        )
    if n == 0:
        return 0
    # meet-in-the-middle neighborhood tables: N(A) = N(A_low) | N(A_high)
    h = n // 2
    low_mask = (1 << h) - 1
    adj = g.adj
    nlow = [0] * (1 << h)
    for m in range(1, 1 << h):
        b = m & -m
        nlow[m] = nlow[m ^ b] | adj[b.bit_length() - 1]
    nhigh = [0] * (1 << (n - h))
    for m in range(1, 1 << (n - h)):
        b = m & -m
        nhigh[m] = nhigh[m ^ b] | adj[h + b.bit_length() - 1]
    best = 0
    for a in range(1, 1 << n):
        nb = nlow[a & low_mask] | nhigh[a >> h]
        d = (nb & ~a).bit_count() - a.bit_count()
        if d > best:
            best = d
    return best


def can_match_into(g: Graph, a_mask: int, b_mask: int) -> bool:
    """True iff a matching using only A-B edges saturates A."""
    _check_mask(g, a_mask)
    _check_mask(g, b_mask)
    if a_mask & b_mask:
        raise ValueError("the sets must be disjoint")
    adj = g.adj
    match_of: dict[int, int] = {}  # b vertex -> a vertex

    def try_augment(a: int, seen: set[int]) -> bool:
        for b in iter_bits(adj[a] & b_mask):
            if b in seen:
                continue
            seen.add(b)
            if b not in match_of or try_augment(match_of[b], seen):
                match_of[b] = a
                return True
        return False

    for a in iter_bits(a_mask):
        if not try_augment(a, set()):
            return False
    return True


def maximum_matching_size(g: Graph) -> int:
    """Size of a maximum matching, general graphs included.

    Augmenting-path search with blossom contraction tracked through base
    vertices (O(V^3)-ish, ample for catalog orders).
    """
    n = g.n
    if n == 0:
        return 0
    adj = [list(iter_bits(row)) for row in g.adj]
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle: contract the blossom
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # augment along the alternating path to the root
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    size = 0
    for v in range(n):
        if match[v] == -1 and find_path(v):
            size += 1
    return size


def matching_size_brute_force(g: Graph) -> int:
    """Reference value by scanning every subset of the edge set (test oracle)."""
    edges = g.edges()
    if len(edges) > 20:
        raise ValueError("edge-subset scan is capped at 20 edges")
    pair_masks = [(1 << u) | (1 << v) for u, v in edges]
    best = 0
    for sub in range(1 << len(edges)):
        used = 0
        size = 0
        ok = True
        m = sub
        while m:
            b = m & -m
            i = b.bit_length() - 1
            m ^= b
            pm = pair_masks[i]
            if used & pm:
                ok = False
                break
            used |= pm
            size += 1
        if ok and size > best:
            best = size
    return best


def has_k_disjoint_maximum_independent_sets(g: Graph, k: int):
    """(found, witness): k pairwise disjoint maximum independent sets.

    The witness is a tuple of bitmasks when found.  On the empty graph the
    empty set may repeat, matching the convention that the empty graph lies in
    every class of the hierarchy.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return True, (0,) * k
    omega = maximum_independent_sets(g)
    chosen: list[int] = []

    def backtrack(start: int, used: int) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(omega)):
            s = omega[i]
            if s & used:
                continue
            chosen.append(s)
            if backtrack(i + 1, used | s):
                return True
            chosen.pop()
        return False

    if backtrack(0, 0):
        return True, tuple(chosen)
    return False, None


def _check_mask(g: Graph, mask: int):
    if mask < 0 or mask & ~g.full_mask:
        raise ValueError(f"vertex set {mask:#x} out of range for n={g.n}")
