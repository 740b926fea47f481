"""Splicing rules and the recombination of cut fragments.

A splicing rule cuts the first graph with its first cutting rule and the
second graph with its second, then rejoins fragments crosswise: the first
direction keeps Prefix(G) and Suffix(H), the second keeps Prefix(H) and
Suffix(G).  With m hanging edges per fragment there are m! bijections per
direction, hence 2(m!) products, every one of which is emitted with its
provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .cutting import CutResult, CuttingRule, Fragment, as_rule, cut
from .errors import JoinError, NotApplicableError
from .graphs import PlfGraph

# A recombination maps prefix hanging-edge index t to suffix index r[t].
Recombination = tuple[int, ...]


@dataclass(frozen=True)
class SplicingRule:
    """A pair of cutting rules, the first for the first graph."""

    first: CuttingRule
    second: CuttingRule

    def swapped(self) -> "SplicingRule":
        """The reversed rule: cutting rules exchanged."""
        return SplicingRule(self.second, self.first)

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


def make_rule(c1, c2) -> SplicingRule:
    return SplicingRule(as_rule(c1), as_rule(c2))


@dataclass(frozen=True)
class SpliceProduct:
    """One recombination outcome, with enough provenance to rebuild it."""

    graph: PlfGraph
    direction: int  # 1: Prefix(g)+Suffix(h); 2: Prefix(h)+Suffix(g)
    bijection: Recombination
    rule: SplicingRule


def applicable(g: PlfGraph, h: PlfGraph, s: SplicingRule) -> bool:
    """Whether the fragments can recombine: equal severed-edge counts and
    agreeing vertex-split behavior (reflexive pairs with reflexive)."""
    cg = cut(g, s.first)
    ch = cut(h, s.second)
    return _compatible(cg, ch) is None


def _compatible(cg: CutResult, ch: CutResult) -> str | None:
    """None when fragments recombine, else the reason they cannot."""
    if cg.power != ch.power:
        return f"severed-edge counts differ: {cg.power} vs {ch.power}"
    if (cg.vcut is None) != (ch.vcut is None):
        return "one cut splits a vertex, the other does not"
    return None


def join(prefix: Fragment, suffix: Fragment, r: Recombination) -> PlfGraph:
    """Weld a prefix fragment to a suffix fragment under one bijection.

    Prefix positions keep their names; suffix positions are renumbered to
    follow them consecutively; half-vertices (when present on both sides)
    merge into the prefix's last position.  Hanging edge t of the prefix
    fuses with hanging edge r[t] of the suffix into a single new edge
    between their anchors.
    """
    if prefix.kind != "prefix" or suffix.kind != "suffix":
        raise JoinError(
            f"need a prefix and a suffix, got {prefix.kind} and {suffix.kind}"
        )
    if (prefix.half_vertex is None) != (suffix.half_vertex is None):
        raise JoinError("half-vertex present on only one side")
    m = len(prefix.hanging)
    if len(suffix.hanging) != m:
        raise JoinError(
            f"hanging-edge counts differ: {m} vs {len(suffix.hanging)}"
        )
    if sorted(r) != list(range(m)):
        raise JoinError(f"bijection {r!r} is not a permutation of 0..{m - 1}")
    p = prefix.end
    q = suffix.start
    merged = prefix.half_vertex is not None
    offset = p - q if merged else p - q + 1
    order = suffix.end + offset
    edges = list(prefix.intact)
    edges.extend((u + offset, v + offset) for u, v in suffix.intact)
    for t in range(m):
        edges.append((prefix.hanging[t].anchor,
                      suffix.hanging[r[t]].anchor + offset))
    return PlfGraph(order, tuple(edges))


def _products(pre_cut: CutResult, suf_cut: CutResult, direction: int,
              s: SplicingRule) -> list[SpliceProduct]:
    reason = _compatible(pre_cut, suf_cut)
    if reason is not None:
        raise NotApplicableError(f"rule {s} on this pair: {reason}")
    m = pre_cut.power
    out = []
    for perm in permutations(range(m)):
        graph = join(pre_cut.prefix, suf_cut.suffix, perm)
        out.append(SpliceProduct(graph, direction, perm, s))
    return out


def products_first(g: PlfGraph, h: PlfGraph, s: SplicingRule) -> list[SpliceProduct]:
    """All m! first-direction products: Prefix(g) joined to Suffix(h).

    Bijections run in lexicographic order over the sorted hanging lists;
    m = 0 yields exactly one product (a disjoint union, or a one-point
    amalgamation when the cuts split vertices).
    """
    return _products(cut(g, s.first), cut(h, s.second), 1, s)


def products_second(g: PlfGraph, h: PlfGraph, s: SplicingRule) -> list[SpliceProduct]:
    """All m! second-direction products: Prefix(h) joined to Suffix(g)."""
    return _products(cut(h, s.second), cut(g, s.first), 2, s)


def sigma_pair(g: PlfGraph, h: PlfGraph, s: SplicingRule) -> list[SpliceProduct]:
    """Both directions, 2(m!) products in direction-then-bijection order."""
    return products_first(g, h, s) + products_second(g, h, s)


def max_product_order(g: PlfGraph, h: PlfGraph) -> int:
    """Largest order any product of g and h can have."""
    return g.order + h.order - 1
