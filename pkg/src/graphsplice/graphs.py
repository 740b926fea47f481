"""Graphs in pseudo-linear form.

A graph of order n lives on positions 1..n; an edge is an unordered pair
of distinct positions stored as (u, v) with u < v.  Parallel edges are
allowed (the edge tuple may repeat a pair), loops are not.  Keeping the
vertex set implicit in the order makes cutting a graph "between" or
"through" positions a purely combinatorial affair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .errors import CapExceededError, InvalidGraphError, InvalidOrderingError
from ._kernels import active as _kernel

DEFAULT_CANON_CAP = 10

Edge = tuple[int, int]


@dataclass(frozen=True)
class PlfGraph:
    """Immutable multigraph on positions 1..order.

    Edges are normalized on construction: each pair is flipped to
    (min, max) and the whole tuple is sorted, so two equal graphs always
    compare and hash equal.
    """

    order: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.order < 0:
            raise InvalidGraphError(f"order must be non-negative, got {self.order}")
        norm = []
        for e in self.edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InvalidGraphError(f"edge {e!r} is not a pair") from None
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u} is not allowed")
            if u > v:
                u, v = v, u
            if not (1 <= u and v <= self.order):
                raise InvalidGraphError(
                    f"edge ({u},{v}) falls outside positions 1..{self.order}"
                )
            norm.append((int(u), int(v)))
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum((u == v) + (w == v) for u, w in self.edges)

    def left_degree(self, v: int) -> int:
        """Number of edge ends at v whose other end lies left of v."""
        self._check_vertex(v)
        return sum(1 for u, w in self.edges if w == v)

    def right_degree(self, v: int) -> int:
        """Number of edge ends at v whose other end lies right of v."""
        self._check_vertex(v)
        return sum(1 for u, w in self.edges if u == v)

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u > v:
            u, v = v, u
        return self.edges.count((u, v))

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.order:
            raise InvalidGraphError(f"vertex {v} outside positions 1..{self.order}")

    def __str__(self) -> str:
        inner = ", ".join(f"({u},{v})" for u, v in self.edges)
        return f"PLF(order={self.order}, edges=[{inner}])"


# An ordering assigns source vertex labels to positions: position p holds
# the label ordering[p - 1].
Ordering = tuple[int, ...]


@dataclass(frozen=True)
class DegreeProfile:
    """Left/right degree split of every position, plus totals."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    total: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "total", tuple(l + r for l, r in zip(self.left, self.right))
        )


def degree_profile(g: PlfGraph) -> DegreeProfile:
    left = [0] * g.order
    right = [0] * g.order
    for u, v in g.edges:
        right[u - 1] += 1
        left[v - 1] += 1
    return DegreeProfile(tuple(left), tuple(right))


def to_plf(source_order: int, source_edges, ordering: Ordering) -> PlfGraph:
    """Lay out a graph with labels 1..source_order along the given ordering.

    ordering must list every label exactly once; position p gets the
    label ordering[p-1], and each edge (a, b) becomes the pair of
    positions holding a and b.  Adjacency is untouched, only names move.
    """
    if sorted(ordering) != list(range(1, source_order + 1)):
        raise InvalidOrderingError(
            f"ordering {ordering!r} is not a permutation of 1..{source_order}"
        )
    pos = {label: p for p, label in enumerate(ordering, start=1)}
    plf_edges = []
    for a, b in source_edges:
        if a not in pos or b not in pos:
            raise InvalidGraphError(f"edge ({a!r},{b!r}) uses an unknown vertex")
        plf_edges.append((pos[a], pos[b]))
    return PlfGraph(source_order, tuple(plf_edges))


def cycle(n: int) -> PlfGraph:
    """Cycle on n >= 3 positions, consecutive edges plus the closing (1, n)."""
    if n < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return PlfGraph(n, tuple(edges))


def path(n: int) -> PlfGraph:
    if n < 1:
        raise InvalidGraphError(f"a path needs at least 1 vertex, got {n}")
    return PlfGraph(n, tuple((i, i + 1) for i in range(1, n)))


def complete(n: int) -> PlfGraph:
    if n < 1:
        raise InvalidGraphError(f"a complete graph needs at least 1 vertex, got {n}")
    return PlfGraph(n, tuple(combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> PlfGraph:
    """K_{a,b} with the left class on positions 1..a."""
    if a < 1 or b < 1:
        raise InvalidGraphError(f"both classes need vertices, got {a} and {b}")
    edges = tuple((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1))
    return PlfGraph(a + b, edges)


def double_edge(n: int = 2, u: int = 1, v: int = 2) -> PlfGraph:
    """Two parallel edges between u and v, the smallest non-simple graph."""
    return PlfGraph(n, ((u, v), (u, v)))


def has_cycle(g: PlfGraph) -> bool:
    """True when some edge subset forms a cycle (parallel edges count)."""
    parent = list(range(g.order + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def is_bipartite(g: PlfGraph) -> bool:
    """Two-colorability; parallel edges never break it, odd cycles do."""
    color = [0] * (g.order + 1)
    adj: list[list[int]] = [[] for _ in range(g.order + 1)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for start in range(1, g.order + 1):
        if color[start]:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if color[y] == 0:
                    color[y] = -color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_regular(g: PlfGraph) -> int | None:
    """The common degree when every vertex has one, else None.

    Degree-0 regularity returns 0, so callers must test `is not None`
    rather than truthiness.
    """
    if g.order == 0:
        return 0
    prof = degree_profile(g)
    want = prof.total[0]
    if all(d == want for d in prof.total):
        return want
    return None


def is_simple(g: PlfGraph) -> bool:
    return len(set(g.edges)) == len(g.edges)


def is_connected(g: PlfGraph) -> bool:
    if g.order <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(g.order + 1)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {1}
    queue = [1]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.order


@lru_cache(maxsize=65536)
def _canon_cached(order: int, edges: tuple[Edge, ...]) -> bytes:
    return _kernel.canonical_form(order, edges)


def canonical_form(g: PlfGraph, cap: int | None = None) -> bytes:
    """Backend-computed isomorphism-complete encoding of g.

    cap bounds the order this is willing to canonicalize (the search is
    worst-case factorial); pass a larger cap explicitly for bigger graphs.
    """
    limit = DEFAULT_CANON_CAP if cap is None else cap
    if g.order > limit:
        raise CapExceededError(
            f"canonical form of order {g.order} exceeds cap {limit}"
        )
    return _canon_cached(g.order, g.edges)


def is_isomorphic(g: PlfGraph, h: PlfGraph, cap: int | None = None) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(degree_profile(g).total) != sorted(degree_profile(h).total):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)


def relabel(g: PlfGraph, ordering: Ordering) -> PlfGraph:
    """Apply an ordering of g's own positions, giving an isomorphic graph."""
    return to_plf(g.order, g.edges, ordering)


def all_relabelings(g: PlfGraph):
    """Every PLF layout of g, one per permutation of its positions."""
    for ordering in permutations(range(1, g.order + 1)):
        yield relabel(g, ordering)


ENUMERATION_CAP = 6


def enumerate_simple_graphs(n: int, cap: int = ENUMERATION_CAP):
    """All 2^C(n,2) labeled simple graphs of order exactly n, in mask order.

    Isomorphic duplicates are included on purpose: theorem sweeps
    quantify over PLF layouts, not isomorphism classes.
    """
    if n > cap:
        raise CapExceededError(
            f"exhaustive enumeration of order {n} exceeds cap {cap}"
        )
    slots = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(slots)):
        edges = tuple(slots[k] for k in range(len(slots)) if mask >> k & 1)
        yield PlfGraph(n, edges)
