"""Pure-Python kernels for canonical labeling and splice-product sweeps.

This is the fallback backend and the reference for the compiled extension
(graphsplice._kernels._speed), which must produce byte-identical output.
Functions here take plain (order, edges) pairs rather than PlfGraph values
so both backends stay import-light.
"""

from __future__ import annotations

from itertools import permutations

IMPLEMENTATION = "pure"

_FACT = (1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880)


def factorial(m: int) -> int:
    if m < len(_FACT):
        return _FACT[m]
    f = _FACT[-1]
    for k in range(len(_FACT), m + 1):
        f *= k
    return f


def _cmp_prefix(a, b, length):
    for k in range(length):
        if a[k] != b[k]:
            return 1 if a[k] > b[k] else -1
    return 0


def canonical_form(order: int, edges) -> bytes:
    """Smallest upper-triangle multiplicity vector over relabelings.

    Positions are ordered by non-increasing degree and each vertex may only
    occupy a position whose target degree matches its own, which keeps the
    search well below n! without affecting the minimum.  The vector lists
    multiplicities column by column: for each position p the entries
    (1,p), (2,p), ..., (p-1,p).  Two graphs get equal encodings iff they
    are isomorphic.
    """
    n = order
    if n == 0:
        return b"0|"
    if n == 1:
        return b"1|"
    mult = [[0] * n for _ in range(n)]
    deg = [0] * n
    for u, v in edges:
        mult[u - 1][v - 1] += 1
        mult[v - 1][u - 1] += 1
        deg[u - 1] += 1
        deg[v - 1] += 1
    target = sorted(deg, reverse=True)
    slot_candidates = [
        [v for v in range(n) if deg[v] == target[p]] for p in range(n)
    ]
    vec_len = n * (n - 1) // 2
    vec = [0] * vec_len
    assigned = [0] * n
    used = [False] * n
    best: list | None = None

    def search(p, length):
        nonlocal best
        if p == n:
            if best is None or vec < best:
                best = vec[:]
            return
        for v in slot_candidates[p]:
            if used[v]:
                continue
            row = mult[v]
            pos = length
            for q in range(p):
                vec[pos] = row[assigned[q]]
                pos += 1
            # prune any branch already lexicographically above the best
            if best is not None and _cmp_prefix(vec, best, pos) > 0:
                continue
            used[v] = True
            assigned[p] = v
            search(p + 1, pos)
            used[v] = False

    search(0, 0)
    return f"{n}|".encode() + ",".join(map(str, best)).encode()


class CutTable:
    """Every valid cut of one graph, precomputed for repeated joining.

    Rules are indexed: the n-1 straddling rules [1,2]..[n-1,n] first, then
    the n vertex-splitting rules [1,1]..[n,n].  Parallel tuples hold, per
    rule, the retained edge lists and the hanging-edge anchor lists sorted
    by severed-edge origin.
    """

    __slots__ = (
        "order", "edges", "deg", "ld", "rd", "rules", "reflexive", "powers",
        "pre_intact", "pre_anchors", "suf_intact", "suf_anchors",
        "by_key", "rule_index",
    )

    def __init__(self, order, edges):
        n = order
        self.order = n
        self.edges = tuple(edges)
        deg = [0] * (n + 1)
        ld = [0] * (n + 1)
        rd = [0] * (n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
            rd[u] += 1
            ld[v] += 1
        self.deg = tuple(deg)
        self.ld = tuple(ld)
        self.rd = tuple(rd)

        rules = [(i, i + 1) for i in range(1, n)] + [(i, i) for i in range(1, n + 1)]
        self.rules = tuple(rules)
        reflexive = []
        powers = []
        pre_intact = []
        pre_anchors = []
        suf_intact = []
        suf_anchors = []
        for i, j in rules:
            refl = i == j
            pi, pa, si, sa = [], [], [], []
            for u, v in self.edges:
                if refl:
                    # edges touching vertex i stay with their interior half
                    if v <= i:
                        pi.append((u, v))
                    elif u >= i:
                        si.append((u, v))
                    else:
                        pa.append(u)
                        sa.append(v)
                else:
                    if v <= i:
                        pi.append((u, v))
                    elif u >= j:
                        si.append((u, v))
                    else:
                        pa.append(u)
                        sa.append(v)
            reflexive.append(refl)
            powers.append(len(pa))
            pre_intact.append(tuple(pi))
            pre_anchors.append(tuple(pa))
            suf_intact.append(tuple(si))
            suf_anchors.append(tuple(sa))
        self.reflexive = tuple(reflexive)
        self.powers = tuple(powers)
        self.pre_intact = tuple(pre_intact)
        self.pre_anchors = tuple(pre_anchors)
        self.suf_intact = tuple(suf_intact)
        self.suf_anchors = tuple(suf_anchors)

        by_key: dict = {}
        for idx in range(len(rules)):
            by_key.setdefault((reflexive[idx], powers[idx]), []).append(idx)
        self.by_key = {k: tuple(v) for k, v in by_key.items()}
        self.rule_index = {r: idx for idx, r in enumerate(rules)}


def prepare_graph(order: int, edges) -> CutTable:
    return CutTable(order, edges)


def _joined(pre: CutTable, ra: int, suf: CutTable, rb: int):
    """All joins of pre's prefix fragment with suf's suffix fragment.

    Returns (result_order, base_edges, pre_anchor_list, shifted_suf_anchors).
    The caller enumerates hanging-edge bijections on top of this.
    """
    ia = pre.rules[ra][0]
    ib = suf.rules[rb][0]
    offset = ia - ib
    order_f = ia + suf.order - ib
    base = list(pre.pre_intact[ra])
    base.extend((u + offset, v + offset) for u, v in suf.suf_intact[rb])
    suf_anch = [x + offset for x in suf.suf_anchors[rb]]
    return order_f, base, pre.pre_anchors[ra], suf_anch


def pair_products(pre: CutTable, ra: int, suf: CutTable, rb: int):
    """Products of joining pre's prefix with suf's suffix, one per bijection.

    Bijections run in lexicographic order.  Raises ValueError when the two
    cuts disagree on splitting vs straddling or on hanging-edge count.
    """
    if pre.reflexive[ra] != suf.reflexive[rb]:
        raise ValueError("cut kinds differ: one splits a vertex, one does not")
    if pre.powers[ra] != suf.powers[rb]:
        raise ValueError(
            f"hanging-edge counts differ: {pre.powers[ra]} vs {suf.powers[rb]}"
        )
    order_f, base, pre_anch, suf_anch = _joined(pre, ra, suf, rb)
    m = len(pre_anch)
    out = []
    for perm in permutations(range(m)):
        es = base + [(pre_anch[t], suf_anch[perm[t]]) for t in range(m)]
        es.sort()
        out.append((order_f, tuple(es)))
    return out


def products_direction(first: CutTable, rfirst: int, second: CutTable,
                       rsecond: int, direction: int):
    """Resolve an ordered pair and direction to a prefix/suffix join.

    Direction 1 takes the prefix from the first graph and the suffix from
    the second; direction 2 swaps the roles.
    """
    if direction == 1:
        return pair_products(first, rfirst, second, rsecond)
    if direction == 2:
        return pair_products(second, rsecond, first, rfirst)
    raise ValueError(f"direction must be 1 or 2, got {direction}")


def _expected_degrees(pre: CutTable, ra: int, suf: CutTable, rb: int):
    """Degree each result vertex should inherit from its source graph."""
    ia = pre.rules[ra][0]
    ib = suf.rules[rb][0]
    offset = ia - ib
    n_f = ia + suf.order - ib
    exp = [0] * (n_f + 1)
    for v in range(1, ia + 1):
        exp[v] = pre.deg[v]
    for w in range(ib + 1, suf.order + 1):
        exp[w + offset] = suf.deg[w]
    if pre.reflexive[ra]:
        exp[ia] = pre.ld[ia] + suf.rd[ib]
    return exp


def _check_products(pre, ra, suf, rb, bound, stats, samples, sample_cap, tag):
    """Build one direction's products and tally per-product checks.

    Returns the (order, edges) list for reuse by the caller.  stats is the
    mutable [built, degree_viol, bound_viol, oversize] accumulator.
    """
    order_f, base, pre_anch, suf_anch = _joined(pre, ra, suf, rb)
    m = len(pre_anch)
    exp = _expected_degrees(pre, ra, suf, rb)
    base_deg = [0] * (order_f + 1)
    for u, v in base:
        base_deg[u] += 1
        base_deg[v] += 1
    size_f = len(base) + m
    over_order = order_f > bound
    over_size = size_f > bound
    out = []
    for perm in permutations(range(m)):
        deg = base_deg[:]
        es = base[:]
        for t in range(m):
            u = pre_anch[t]
            v = suf_anch[perm[t]]
            es.append((u, v))
            deg[u] += 1
            deg[v] += 1
        es.sort()
        out.append((order_f, tuple(es)))
        stats[0] += 1
        if deg[1:] != exp[1:]:
            stats[1] += 1
            if len(samples) < sample_cap:
                bad = next(v for v in range(1, order_f + 1) if deg[v] != exp[v])
                samples.append((
                    "degree", tag,
                    f"vertex {bad} has degree {deg[bad]}, expected {exp[bad]}",
                ))
        if over_order:
            stats[2] += 1
            if len(samples) < sample_cap:
                samples.append(("bound", tag, f"order {order_f} exceeds {bound}"))
        if over_size:
            stats[3] += 1
    return out


def splice_pair_check(a: CutTable, b: CutTable, max_power: int, sample_cap: int = 4):
    """Run every per-product law over all applicable cut combos of (a, b).

    Combos are limited to hanging-edge count at most max_power.  Returns a
    stats tuple:

      (combos, products, count_viol, reversal_viol, degree_viol,
       bound_viol, bound_achieved, oversize_products, samples)

    where bound_achieved reports whether splitting a's last vertex against
    splitting b's first yields a first-direction product of the maximal
    order |a|+|b|-1, and oversize_products counts products whose edge count
    exceeds that same bound (possible, which is why the bound is about
    order, not size).
    """
    na, nb = a.order, b.order
    bound = na + nb - 1
    combos = 0
    count_viol = 0
    reversal_viol = 0
    achieved = 0
    stats = [0, 0, 0, 0]  # built, degree, bound, oversize
    samples: list = []
    last_split_a = a.rule_index.get((na, na))
    first_split_b = b.rule_index.get((1, 1))
    for key, idxs_a in a.by_key.items():
        _refl, power = key
        if power > max_power:
            continue
        idxs_b = b.by_key.get(key)
        if not idxs_b:
            continue
        mfact = factorial(power)
        for ra in idxs_a:
            ia, ja = a.rules[ra]
            for rb in idxs_b:
                ib, jb = b.rules[rb]
                combos += 1
                tag = (ia, ja, ib, jb)
                p1 = _check_products(a, ra, b, rb, bound, stats, samples,
                                     sample_cap, tag)
                p2 = _check_products(b, rb, a, ra, bound, stats, samples,
                                     sample_cap, tag)
                if len(p1) != mfact or len(p2) != mfact:
                    count_viol += 1
                    if len(samples) < sample_cap:
                        samples.append((
                            "count", tag,
                            f"got {len(p1)}+{len(p2)} products, expected "
                            f"{mfact} per direction",
                        ))
                # second direction of the reversed pair, built independently
                rswap = products_direction(b, rb, a, ra, 2)
                if sorted(p1) != sorted(rswap):
                    reversal_viol += 1
                    if len(samples) < sample_cap:
                        samples.append((
                            "reversal", tag,
                            "direction-1 products differ from direction-2 "
                            "products of the reversed pair",
                        ))
                if ra == last_split_a and rb == first_split_b:
                    if p1 and p1[0][0] == bound:
                        achieved = 1
    return (combos, stats[0], count_viol, reversal_viol, stats[1],
            stats[2], achieved, stats[3], tuple(samples))
