"""Bitset graphs and the brute-force oracle for maximal independent sets.

A maximal independent set is exactly an independent dominating set, so the
oracle doubles as ground truth for every counting claim in the package. Two
independent strategies are kept deliberately separate:

* ``scan``  - literal subset scan over all 2^n vertex subsets, checking the
  definition (independent, closed neighbourhood covers everything);
* ``pivot`` - maximal-clique enumeration on the complement graph with
  Tomita-style pivoting.

Both must agree; tests cross-check them. Vertex sets are plain ints used as
bitmasks (bit i = vertex i). All functions are pure; shared graphs are safe
to use concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

DEFAULT_MAX_VERTICES = 40  # hard resource cap for any oracle call
SCAN_MAX_VERTICES = 20     # auto strategy switches to pivot enumeration above this


class OracleLimitError(RuntimeError):
    """Raised when a graph exceeds the configured oracle ceiling."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph over vertex ids 0..n_vertices-1."""

    n_vertices: int
    adjacency: tuple[int, ...]  # adjacency[v] = bitmask of neighbours of v

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n_vertices < 0:
            raise ValueError("negative vertex count")
        adj = [0] * n_vertices
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{n_vertices - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n_vertices, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    def neighbors(self, v: int) -> int:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def n_edges(self) -> int:
        return sum(a.bit_count() for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n_vertices):
            m = self.adjacency[u] >> (u + 1)
            base = u + 1
            while m:
                b = m & -m
                out.append((u, base + b.bit_length() - 1))
                m ^= b
        return out


def vertex_set(vertices: Iterable[int]) -> int:
    """Pack vertex ids into a bitmask."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex id {v}")
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into sorted vertex ids."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _check_mask(g: Graph, s: int) -> None:
    if s < 0 or s >> g.n_vertices:
        raise ValueError(f"vertex set {bin(s)} out of range for {g.n_vertices} vertices")


def closed_neighborhood(g: Graph, s: int) -> int:
    """Union of s with every neighbourhood of a member of s."""
    _check_mask(g, s)
    closed = s
    m = s
    while m:
        b = m & -m
        closed |= g.adjacency[b.bit_length() - 1]
        m ^= b
    return closed


def is_independent(g: Graph, s: int) -> bool:
    """True iff no edge joins two members of s."""
    _check_mask(g, s)
    m = s
    while m:
        b = m & -m
        if g.adjacency[b.bit_length() - 1] & s:
            return False
        m ^= b
    return True


def is_independent_dominating(g: Graph, s: int) -> bool:
    """True iff s is independent and its closed neighbourhood is everything.

    Equivalent to "independent and not extendable by any vertex", i.e. a
    maximal independent set.
    """
    _check_mask(g, s)
    return is_independent(g, s) and closed_neighborhood(g, s) == g.full_mask


class BoundaryCounts(NamedTuple):
    in_count: int          # maximal independent sets containing v
    out_count: int         # maximal independent sets avoiding v
    extendable_count: int  # independent sets dominating exactly V minus v, v excluded


def _require_within(g: Graph, max_vertices: int) -> None:
    cap = min(max_vertices, DEFAULT_MAX_VERTICES)
    if g.n_vertices > cap:
        raise OracleLimitError(
            f"graph has {g.n_vertices} vertices, above the oracle ceiling {cap}"
        )


def _resolve_strategy(g: Graph, strategy: str) -> str:
    if strategy == "auto":
        return "scan" if g.n_vertices <= SCAN_MAX_VERTICES else "pivot"
    if strategy not in ("scan", "pivot"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return strategy


def _scan_counts(g: Graph, vbit: int) -> tuple[int, BoundaryCounts]:
    """Single pass over every subset: total MIS plus boundary classes for vbit."""
    n = g.n_vertices
    adj = g.adjacency
    full = (1 << n) - 1
    near = full ^ vbit
    total = inside = extendable = 0
    for mask in range(1 << n):
        closed = mask
        m = mask
        while m:
            b = m & -m
            a = adj[b.bit_length() - 1]
            if a & mask:
                closed = -1
                break
            closed |= a
            m ^= b
        if closed == full:
            total += 1
            if mask & vbit:
                inside += 1
        elif vbit and closed == near and not (mask & vbit):
            extendable += 1
    return total, BoundaryCounts(inside, total - inside, extendable)


def _mis_masks_pivot(adjacency: tuple[int, ...], allowed: int) -> list[int]:
    """All maximal independent sets of the subgraph induced by ``allowed``.

    Maximal cliques of the complement graph, enumerated with deterministic
    pivot selection; result sorted ascending by mask value.
    """
    comp = {}
    m = allowed
    while m:
        b = m & -m
        v = b.bit_length() - 1
        comp[v] = ~adjacency[v] & allowed & ~b
        m ^= b
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        best_u, best = -1, -1
        m = p | x
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            c = (comp[u] & p).bit_count()
            if c > best:
                best, best_u = c, u
        cand = p & ~comp[best_u]
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            expand(r | b, p & comp[v], x & comp[v])
            p &= ~b
            x |= b

    expand(0, allowed, 0)
    out.sort()
    return out


def enumerate_mis(
    g: Graph,
    strategy: str = "auto",
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Iterator[int]:
    """Yield every maximal independent set once, ascending by bitset value."""
    _require_within(g, max_vertices)
    if _resolve_strategy(g, strategy) == "scan":
        n = g.n_vertices
        adj = g.adjacency
        full = (1 << n) - 1
        for mask in range(1 << n):
            closed = mask
            m = mask
            while m:
                b = m & -m
                a = adj[b.bit_length() - 1]
                if a & mask:
                    closed = -1
                    break
                closed |= a
                m ^= b
            if closed == full:
                yield mask
    else:
        yield from _mis_masks_pivot(g.adjacency, g.full_mask)


def count_ids(
    g: Graph,
    strategy: str = "auto",
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> int:
    """Exact number of independent dominating (= maximal independent) sets.

    The empty graph counts 1 (the empty set is vacuously maximal); no chain
    family ever exercises that case.
    """
    _require_within(g, max_vertices)
    if _resolve_strategy(g, strategy) == "scan":
        total, _ = _scan_counts(g, 0)
        return total
    return len(_mis_masks_pivot(g.adjacency, g.full_mask))


def independent_domination_number(
    g: Graph,
    strategy: str = "auto",
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> int:
    """Minimum cardinality over all maximal independent sets."""
    if g.n_vertices == 0:
        raise ValueError("empty graph has no dominating set")
    best = None
    for mask in enumerate_mis(g, strategy=strategy, max_vertices=max_vertices):
        size = mask.bit_count()
        if best is None or size < best:
            best = size
    assert best is not None  # every nonempty graph has a maximal independent set
    return best


def count_boundary_classes(
    g: Graph,
    v: int,
    strategy: str = "auto",
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> BoundaryCounts:
    """Counts of MIS containing v, MIS avoiding v, and extendable sets at v.

    An extendable set is independent, excludes v, and dominates every vertex
    except v; attaching another block at v can complete it.
    """
    if not 0 <= v < g.n_vertices:
        raise ValueError(f"vertex {v} out of range")
    _require_within(g, max_vertices)
    vbit = 1 << v
    if _resolve_strategy(g, strategy) == "scan":
        _, counts = _scan_counts(g, vbit)
        return counts
    all_mis = _mis_masks_pivot(g.adjacency, g.full_mask)
    inside = sum(1 for m in all_mis if m & vbit)
    # extendable sets are the MIS of g minus v that leave v undominated
    sub = _mis_masks_pivot(g.adjacency, g.full_mask ^ vbit)
    nv = g.adjacency[v]
    extendable = sum(1 for m in sub if not m & nv)
    return BoundaryCounts(inside, len(all_mis) - inside, extendable)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test; fine for the small graphs used here."""
    if g1.n_vertices != g2.n_vertices:
        return False
    n = g1.n_vertices
    deg1 = [g1.degree(v) for v in range(n)]
    deg2 = [g2.degree(v) for v in range(n)]
    if sorted(deg1) != sorted(deg2):
        return False

    # process g1 vertices in an order that stays connected to the mapped part
    order: list[int] = []
    seen = 0
    remaining = set(range(n))
    while remaining:
        candidates = [v for v in remaining if g1.adjacency[v] & seen]
        if not candidates:
            candidates = list(remaining)
        v = max(candidates, key=lambda u: (deg1[u], -u))
        order.append(v)
        seen |= 1 << v
        remaining.remove(v)

    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        u = order[idx]
        for c in range(n):
            if used[c] or deg2[c] != deg1[u]:
                continue
            ok = True
            for w in order[:idx]:
                adj_in_1 = bool(g1.adjacency[u] & (1 << w))
                adj_in_2 = bool(g2.adjacency[c] & (1 << mapping[w]))
                if adj_in_1 != adj_in_2:
                    ok = False
                    break
            if ok:
                mapping[u] = c
                used[c] = True
                if extend(idx + 1):
                    return True
                used[c] = False
                mapping[u] = -1
        return False

    return extend(0)
