"""Immutable simple graphs with bitset adjacency, graph6 I/O, and structure probes.

Vertices are the integers 0..n-1.  Vertex sets everywhere in this package are
plain Python ints used as bitmasks (bit i set <=> vertex i is a member), so set
algebra is native int arithmetic and cardinality is ``mask.bit_count()``.
Python ints are arbitrary width, which makes one representation serve every
order: operations stay single-word for n <= 64 and keep working (more slowly)
beyond that.
"""

from __future__ import annotations

import math
from itertools import permutations

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047  # largest order encodable by the short forms we emit
CANONICAL_MAX_N = 10

INFINITE = math.inf  # girth of a forest


class Graph6Error(ValueError):
    """Malformed graph6 input; the message names the offending byte offset."""


def mask_of(vertices) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Unpack a bitmask into a sorted vertex list."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def iter_bits(mask: int):
    """Yield the vertex indices of a bitmask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple graph; ``adj[v]`` is the open-neighborhood bitmask of v.

    Symmetry, irreflexivity, and vertex range are enforced on construction.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_adj(cls, adj) -> "Graph":
        """Build from a sequence of neighborhood bitmasks, validating invariants."""
        adj = tuple(adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v} is not allowed")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls._raw(n, adj)

    @classmethod
    def _raw(cls, n: int, adj: tuple) -> "Graph":
        # internal fast path: caller guarantees the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# graph6 I/O
#
# Short form: byte n+63 for n <= 62, or '~' followed by three bytes carrying n
# in 18 bits (6 bits per byte, big-endian, each +63).  Then the upper triangle
# of the adjacency matrix, column-major -- bit order (0,1),(0,2),(1,2),(0,3),
# ... -- packed 6 bits per byte MSB-first, zero-padded, each byte +63.
# ---------------------------------------------------------------------------


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; an optional '>>graph6<<' header is skipped."""
    s = line.strip()
    offset = 0
    if s.startswith(">>"):
        if not s.startswith(GRAPH6_HEADER):
            raise Graph6Error("unrecognized header at byte 0")
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error(f"empty graph6 string at byte {offset}")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {offset + i} out of graph6 range: {ch!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error(f"unsupported long-form order at byte {offset}")
        if len(s) < 4:
            raise Graph6Error(f"truncated order field at byte {offset + len(s)}")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body, body_off = s[4:], offset + 4
    else:
        n = ord(s[0]) - 63
        body, body_off = s[1:], offset + 1

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit string at byte {offset + len(s)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data at byte {body_off + nbytes}")

    data = 0
    for ch in body:
        data = data << 6 | (ord(ch) - 63)
    total = 6 * nbytes
    if nbytes and data & ((1 << (total - nbits)) - 1):
        raise Graph6Error(f"nonzero padding bits at byte {body_off + nbytes - 1}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data >> (total - 1 - k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._raw(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    """Encode a labeled graph as its graph6 string (no relabeling)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"order {n} exceeds the supported graph6 range")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    bits = 0
    nbits = n * (n - 1) // 2
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            bits = bits << 1 | (row >> i & 1)
    pad = (-nbits) % 6
    bits <<= pad
    chars = []
    for shift in range(nbits + pad - 6, -1, -6):
        chars.append(chr((bits >> shift & 63) + 63))
    return head + "".join(chars)


# ---------------------------------------------------------------------------
# standard generators
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph._raw(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("complete bipartite graph needs p, q >= 1")
    left = (1 << p) - 1
    right = ((1 << (p + q)) - 1) ^ left
    adj = tuple(right if v < p else left for v in range(p + q))
    return Graph._raw(p + q, adj)


def empty_graph(n: int) -> Graph:
    return Graph._raw(n, (0,) * n)


def disjoint_union(gs) -> Graph:
    """Concatenate blocks, relabeling each block's vertices consecutively."""
    gs = list(gs)
    n = sum(g.n for g in gs)
    adj = []
    shift = 0
    for g in gs:
        adj.extend(row << shift for row in g.adj)
        shift += g.n
    return Graph._raw(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._raw(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


# ---------------------------------------------------------------------------
# neighborhoods and subgraphs
# ---------------------------------------------------------------------------


def neighborhood(g: Graph, a_mask: int) -> int:
    """Open neighborhood N(A): vertices with at least one neighbor in A."""
    _check_mask(g, a_mask)
    nb = 0
    adj = g.adj
    m = a_mask
    while m:
        b = m & -m
        nb |= adj[b.bit_length() - 1]
        m ^= b
    return nb


def closed_neighborhood(g: Graph, a_mask: int) -> int:
    """Closed neighborhood N[A] = N(A) | A."""
    return neighborhood(g, a_mask) | a_mask


def induced(g: Graph, keep_mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertices of ``keep_mask``.

    Vertices are relabeled to 0..m-1 preserving relative order; the returned
    label map sends each new label to its original vertex.
    """
    _check_mask(g, keep_mask)
    labels = vertices_of(keep_mask)
    pos = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        row = g.adj[v] & keep_mask
        adj.append(sum(1 << pos[u] for u in iter_bits(row)))
    return Graph._raw(len(labels), tuple(adj)), tuple(labels)


def delete_vertices(g: Graph, drop_mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Delete the vertices of ``drop_mask``; returns (graph, label map)."""
    _check_mask(g, drop_mask)
    return induced(g, g.full_mask & ~drop_mask)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    _check_vertex(g, v)
    return induced(g, g.full_mask ^ (1 << v))


def g_ab(g: Graph, a: int, b: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on V - (N(a) | N(b)) for an edge ab.

    Both endpoints vanish (each lies in the other's neighborhood); a vertex
    adjacent to neither endpoint survives.
    """
    _check_vertex(g, a)
    _check_vertex(g, b)
    if not g.has_edge(a, b):
        raise ValueError(f"({a},{b}) is not an edge")
    return induced(g, g.full_mask & ~(g.adj[a] | g.adj[b]))


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def _check_mask(g: Graph, mask: int):
    if mask < 0 or mask & ~g.full_mask:
        raise ValueError(f"vertex set {mask:#x} out of range for n={g.n}")


# ---------------------------------------------------------------------------
# structure probes
# ---------------------------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    out = []
    seen = 0
    full = g.full_mask
    adj = g.adj
    while seen != full:
        start = (full & ~seen) & -(full & ~seen)
        comp = start
        frontier = start
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & -m
                grow |= adj[b.bit_length() - 1]
                m ^= b
            frontier = grow & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components(g)) == 1


def max_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(row.bit_count() for row in g.adj)


def is_bipartite(g: Graph):
    """Return a bipartition (left_mask, right_mask) or None.

    The side containing the smallest vertex of each component is put on the
    left, so the result is deterministic.
    """
    left = right = 0
    for comp in components(g):
        start = comp & -comp
        color = {start.bit_length() - 1: 0}
        queue = [start.bit_length() - 1]
        while queue:
            v = queue.pop()
            for u in iter_bits(g.adj[v] & comp):
                if u not in color:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
        for v, c in color.items():
            if c == 0:
                left |= 1 << v
            else:
                right |= 1 << v
    return left, right


def girth(g: Graph):
    """Length of a shortest cycle, or INFINITE for a forest."""
    best = INFINITE
    n, adj = g.n, g.adj
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if 2 * dist[v] >= best - 1:
                break
            for u in iter_bits(adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cyc = dist[v] + dist[u] + 1
                    if cyc < best:
                        best = cyc
        if best == 3:
            return 3
    return best


def has_four_cycle(g: Graph) -> bool:
    """True when some (not necessarily induced) 4-cycle exists: two vertices
    sharing at least two common neighbors."""
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (adj[u] & adj[v]).bit_count() >= 2:
                return True
    return False


def is_triangle_free_mask(g: Graph, mask: int) -> bool:
    """No triangle within the induced vertex set ``mask``."""
    adj = g.adj
    m = mask
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        for u in iter_bits(adj[v] & m):
            if adj[u] & adj[v] & mask:
                return False
    return True


# ---------------------------------------------------------------------------
# canonical form (brute-force tier)
# ---------------------------------------------------------------------------


def canonical_form(g: Graph) -> str:
    """Labeling-invariant key: the lexicographically least graph6 string over
    all vertex permutations.

    Limited to n <= 10; larger catalogs must arrive pre-canonicalized.  The
    search is an exact branch-and-bound over placement prefixes with
    interchangeable-vertex (twin) skipping, so highly symmetric graphs do not
    degenerate to n! work.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(
            f"canonical_form supports n <= {CANONICAL_MAX_N}; "
            "use a pre-canonicalized catalog for larger graphs"
        )
    if n <= 1:
        return write_graph6(g)

    adj = g.adj
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    all_mask = g.full_mask
    cols: list[int] = []
    placed: list[int] = []

    def twins(u: int, v: int) -> bool:
        clear = ~((1 << u) | (1 << v))
        return (adj[u] & clear) == (adj[v] & clear)

    def rec(placed_mask: int, tight: bool):
        # cols[i] is the column of bits written when position i+1 was filled;
        # lexicographic order on the column sequence equals graph6 string order.
        nonlocal best_cols, best_perm
        j = len(placed)
        if j == n:
            best_cols = cols.copy()
            best_perm = placed.copy()
            return
        cands = []
        rem = all_mask & ~placed_mask
        while rem:
            b = rem & -rem
            u = b.bit_length() - 1
            rem ^= b
            col = 0
            row = adj[u]
            for i, w in enumerate(placed):
                col |= (row >> w & 1) << (j - 1 - i)
            cands.append((col, u))
        cands.sort()
        tried: list[tuple[int, int]] = []
        for col, u in cands:
            if j > 0:
                if best_cols is not None and tight and col > best_cols[j - 1]:
                    break
                child_tight = (
                    best_cols is not None and tight and col == best_cols[j - 1]
                )
            else:
                # position 0 emits no column; prefixes are trivially equal
                child_tight = best_cols is not None
            if any(tc == col and twins(tu, u) for tc, tu in tried):
                continue
            tried.append((col, u))
            placed.append(u)
            if j > 0:
                cols.append(col)
            rec(placed_mask | (1 << u), child_tight)
            placed.pop()
            if j > 0:
                cols.pop()
            if best_cols is not None and not tight:
                # the new best runs through this node; resume tight pruning
                tight = True

    rec(0, False)
    perm = best_perm
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    new_adj = [0] * n
    for i, v in enumerate(perm):
        for u in iter_bits(adj[v]):
            new_adj[i] |= 1 << pos[u]
    return write_graph6(Graph._raw(n, tuple(new_adj)))


def brute_force_canonical(g: Graph) -> str:
    """Reference canonicalization by trying every permutation (test oracle)."""
    n = g.n
    best = None
    for perm in permutations(range(n)):
        adj = [0] * n
        for v in range(n):
            for u in iter_bits(g.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        s = write_graph6(Graph._raw(n, tuple(adj)))
        if best is None or s < best:
            best = s
    return best if best is not None else write_graph6(g)
