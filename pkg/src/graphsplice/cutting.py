"""Cutting rules and the cut scheme.

A rule [i,j] with j = i+1 severs every edge crossing the gap between
positions i and i+1.  A reflexive rule [i,i] splits vertex i into two
half-vertices and severs every edge spanning over it; edges incident to
i are never severed, they travel with whichever half keeps their other
endpoint's side.  Cutting yields a prefix fragment and a suffix fragment
whose hanging edges remember the severed instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidRuleError
from .graphs import Edge, PlfGraph, degree_profile


@dataclass(frozen=True)
class CuttingRule:
    """Position pair [i,j] with i <= j <= i+1; reflexive when i = j."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 1:
            raise InvalidRuleError(f"rule [{self.i},{self.j}]: i must be positive")
        if not self.i <= self.j <= self.i + 1:
            raise InvalidRuleError(
                f"rule [{self.i},{self.j}]: j must equal i or i+1"
            )

    @property
    def reflexive(self) -> bool:
        return self.i == self.j

    def check_valid_for(self, g: PlfGraph) -> None:
        if self.j > g.order:
            raise InvalidRuleError(
                f"rule [{self.i},{self.j}] is out of range for order {g.order}"
            )

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


def as_rule(rule) -> CuttingRule:
    """Accept a CuttingRule or a bare (i, j) pair."""
    if isinstance(rule, CuttingRule):
        return rule
    i, j = rule
    return CuttingRule(int(i), int(j))


def valid_rules(g: PlfGraph, include_reflexive: bool = True):
    """Every rule applicable to g: n-1 gap rules, then n splitting rules."""
    rules = [CuttingRule(i, i + 1) for i in range(1, g.order)]
    if include_reflexive:
        rules.extend(CuttingRule(i, i) for i in range(1, g.order + 1))
    return rules


@dataclass(frozen=True)
class HangingEdge:
    """One retained half of a severed edge.

    origin is the severed edge in source labels, instance tells parallel
    copies apart, anchor is the endpoint that stayed.  side "left" is
    the prefix half (u,v]; side "right" is the suffix half [u,v).
    """

    origin: Edge
    instance: int
    anchor: int
    side: str

    def __str__(self) -> str:
        u, v = self.origin
        return f"({u},{v}]" if self.side == "left" else f"[{u},{v})"


@dataclass(frozen=True)
class Fragment:
    """One side of a cut graph, still in the source graph's labels.

    Retains positions start..end (for a reflexive cut both fragments
    retain the split position, as half_vertex).  No hanging edge is ever
    anchored at half_vertex.
    """

    kind: str  # "prefix" or "suffix"
    start: int
    end: int
    intact: tuple[Edge, ...]
    hanging: tuple[HangingEdge, ...]
    half_vertex: int | None = None

    @property
    def span(self) -> int:
        """Number of retained positions, counting a half-vertex as one."""
        return self.end - self.start + 1

    @property
    def retained(self) -> range:
        return range(self.start, self.end + 1)

    def __str__(self) -> str:
        verts = ",".join(str(v) for v in self.retained)
        if self.half_vertex is not None:
            verts = (
                f"{verts},{self.half_vertex}]" if self.kind == "prefix"
                else f"[{verts}"
            )
        parts = [f"({u},{v})" for u, v in self.intact]
        parts.extend(str(h) for h in self.hanging)
        return f"{self.kind}{{{verts}}} edges {{{', '.join(parts)}}}"


@dataclass(frozen=True)
class CutResult:
    """Everything one rule application produces."""

    graph: PlfGraph
    rule: CuttingRule
    prefix: Fragment
    suffix: Fragment
    ecut: tuple[Edge, ...]
    vcut: int | None

    @property
    def power(self) -> int:
        return len(self.ecut)


def cut(g: PlfGraph, rule) -> CutResult:
    """Apply one cutting rule, producing both fragments.

    Hanging lists come out sorted by (origin u, origin v, instance),
    which downstream joining relies on for reproducible bijections.
    """
    rule = as_rule(rule)
    rule.check_valid_for(g)
    i = rule.i
    reflexive = rule.reflexive
    pre_intact: list[Edge] = []
    suf_intact: list[Edge] = []
    severed: list[Edge] = []
    pre_hang: list[HangingEdge] = []
    suf_hang: list[HangingEdge] = []
    instance: dict[Edge, int] = {}
    for u, v in g.edges:
        if reflexive:
            crossing = u < i < v
        else:
            crossing = u <= i < v
        if crossing:
            k = instance.get((u, v), 0)
            instance[(u, v)] = k + 1
            severed.append((u, v))
            pre_hang.append(HangingEdge((u, v), k, u, "left"))
            suf_hang.append(HangingEdge((u, v), k, v, "right"))
        elif v <= i:
            pre_intact.append((u, v))
        else:
            suf_intact.append((u, v))
    half = i if reflexive else None
    prefix = Fragment("prefix", 1, i, tuple(pre_intact), tuple(pre_hang), half)
    suffix = Fragment(
        "suffix", i if reflexive else i + 1, g.order,
        tuple(suf_intact), tuple(suf_hang), half,
    )
    return CutResult(g, rule, prefix, suffix, tuple(severed), half)


def ecut(g: PlfGraph, rule) -> tuple[Edge, ...]:
    return cut(g, rule).ecut


def vcut(g: PlfGraph, rule) -> int | None:
    return cut(g, rule).vcut


def power(g: PlfGraph, rule) -> int:
    return cut(g, rule).power


def power_by_formula(g: PlfGraph, rule, side: str = "left") -> int:
    """Severed-edge count of a gap rule from degree bookkeeping alone.

    side "left" evaluates rd(i) - ld(i) + sum over v < i of rd(v) - ld(v);
    side "right" the mirror image from position j.  Only defined for
    non-reflexive rules (the derivation splits on the gap edge (i,j),
    which a splitting rule does not have).
    """
    rule = as_rule(rule)
    rule.check_valid_for(g)
    if rule.reflexive:
        raise InvalidRuleError(
            f"rule {rule} is reflexive; the degree formula covers gap rules only"
        )
    prof = degree_profile(g)
    ld, rd = prof.left, prof.right
    if side == "left":
        i = rule.i
        return rd[i - 1] - ld[i - 1] + sum(
            rd[v - 1] - ld[v - 1] for v in range(1, i)
        )
    if side == "right":
        j = rule.j
        return ld[j - 1] - rd[j - 1] + sum(
            ld[v - 1] - rd[v - 1] for v in range(j + 1, g.order + 1)
        )
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
