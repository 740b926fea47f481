# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring graphsplice._kernels.pure.

Same API, same outputs byte for byte; the per-product law sweep and the
canonical-form search run on C buffers instead of Python objects.  Edges
travel as packed ints (u << 16 | v), which sort exactly like (u, v) pairs.
"""

from itertools import permutations

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

IMPLEMENTATION = "compiled"

_FACT = (1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880)


def factorial(m):
    if m < len(_FACT):
        return _FACT[m]
    f = _FACT[len(_FACT) - 1]
    for k in range(len(_FACT), m + 1):
        f *= k
    return f


cdef inline int _pack(int u, int v) nogil:
    return (u << 16) | v


cdef void _insertion_sort(int *data, int length) nogil:
    cdef int k, j, val
    for k in range(1, length):
        val = data[k]
        j = k - 1
        while j >= 0 and data[j] > val:
            data[j + 1] = data[j]
            j -= 1
        data[j + 1] = val


cdef bint _next_permutation(int *perm, int m) nogil:
    # lexicographic successor, matching itertools.permutations order
    cdef int k = m - 2
    cdef int l, tmp, lo, hi
    while k >= 0 and perm[k] >= perm[k + 1]:
        k -= 1
    if k < 0:
        return False
    l = m - 1
    while perm[l] <= perm[k]:
        l -= 1
    tmp = perm[k]; perm[k] = perm[l]; perm[l] = tmp
    lo = k + 1
    hi = m - 1
    while lo < hi:
        tmp = perm[lo]; perm[lo] = perm[hi]; perm[hi] = tmp
        lo += 1
        hi -= 1
    return True


# ---------------------------------------------------------------------------
# canonical form

cdef struct CanonState:
    int n
    int vec_len
    int *mult        # n*n multiplicity matrix, row-major
    int *vec         # working vector
    int *best        # best vector found so far
    int *assigned    # position -> vertex
    bint *used
    int *cand        # candidate vertices, n slots per position
    int *cand_len
    bint have_best


cdef void _canon_search(CanonState *st, int p, int length) nogil:
    cdef int ci, v, q, pos, k
    cdef int *row
    cdef bint worse
    if p == st.n:
        if not st.have_best:
            memcpy(st.best, st.vec, st.vec_len * sizeof(int))
            st.have_best = True
        else:
            for k in range(st.vec_len):
                if st.vec[k] != st.best[k]:
                    if st.vec[k] < st.best[k]:
                        memcpy(st.best, st.vec, st.vec_len * sizeof(int))
                    break
        return
    for ci in range(st.cand_len[p]):
        v = st.cand[p * st.n + ci]
        if st.used[v]:
            continue
        row = st.mult + v * st.n
        pos = length
        for q in range(p):
            st.vec[pos] = row[st.assigned[q]]
            pos += 1
        # prune any branch already lexicographically above the best
        if st.have_best:
            worse = False
            for k in range(pos):
                if st.vec[k] != st.best[k]:
                    worse = st.vec[k] > st.best[k]
                    break
            if worse:
                continue
        st.used[v] = True
        st.assigned[p] = v
        _canon_search(st, p + 1, pos)
        st.used[v] = False


def canonical_form(int order, edges):
    """Smallest upper-triangle multiplicity vector over relabelings.

    Positions are ordered by non-increasing degree and each vertex may only
    occupy a position whose target degree matches its own, which keeps the
    search well below n! without affecting the minimum.  The vector lists
    multiplicities column by column: for each position p the entries
    (1,p), (2,p), ..., (p-1,p).  Two graphs get equal encodings iff they
    are isomorphic.
    """
    cdef int n = order
    if n == 0:
        return b"0|"
    if n == 1:
        return b"1|"
    cdef CanonState st
    st.n = n
    st.vec_len = n * (n - 1) // 2
    st.have_best = False
    cdef int *deg = <int *> malloc(n * sizeof(int))
    st.mult = <int *> malloc(n * n * sizeof(int))
    st.vec = <int *> malloc(st.vec_len * sizeof(int))
    st.best = <int *> malloc(st.vec_len * sizeof(int))
    st.assigned = <int *> malloc(n * sizeof(int))
    st.used = <bint *> malloc(n * sizeof(bint))
    st.cand = <int *> malloc(n * n * sizeof(int))
    st.cand_len = <int *> malloc(n * sizeof(int))
    cdef int k, u, v, p
    try:
        for k in range(n):
            deg[k] = 0
            st.used[k] = False
        for k in range(n * n):
            st.mult[k] = 0
        for u, v in edges:
            st.mult[(u - 1) * n + (v - 1)] += 1
            st.mult[(v - 1) * n + (u - 1)] += 1
            deg[u - 1] += 1
            deg[v - 1] += 1
        target = sorted([deg[k] for k in range(n)], reverse=True)
        for p in range(n):
            st.cand_len[p] = 0
            for v in range(n):
                if deg[v] == <int> target[p]:
                    st.cand[p * n + st.cand_len[p]] = v
                    st.cand_len[p] += 1
        _canon_search(&st, 0, 0)
        body = ",".join(str(st.best[k]) for k in range(st.vec_len))
        return f"{n}|".encode() + body.encode()
    finally:
        free(deg); free(st.mult); free(st.vec); free(st.best)
        free(st.assigned); free(st.used); free(st.cand); free(st.cand_len)


# ---------------------------------------------------------------------------
# cut tables

cdef class CutTable:
    """Every valid cut of one graph, precomputed for repeated joining.

    Rules are indexed: the n-1 straddling rules [1,2]..[n-1,n] first, then
    the n vertex-splitting rules [1,1]..[n,n].  Parallel tuples hold, per
    rule, the retained edge lists and the hanging-edge anchor lists sorted
    by severed-edge origin.
    """

    cdef readonly int order
    cdef readonly tuple edges
    cdef readonly tuple deg
    cdef readonly tuple ld
    cdef readonly tuple rd
    cdef readonly tuple rules
    cdef readonly tuple reflexive
    cdef readonly tuple powers
    cdef readonly tuple pre_intact
    cdef readonly tuple pre_anchors
    cdef readonly tuple suf_intact
    cdef readonly tuple suf_anchors
    cdef readonly dict by_key
    cdef readonly dict rule_index

    def __init__(self, order, edges):
        cdef int n = order
        self.order = n
        self.edges = tuple(edges)
        deg = [0] * (n + 1)
        ld = [0] * (n + 1)
        rd = [0] * (n + 1)
        cdef int u, v
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
        cdef int i, j
        cdef bint refl
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

        by_key = {}
        for idx in range(len(rules)):
            by_key.setdefault((reflexive[idx], powers[idx]), []).append(idx)
        self.by_key = {key: tuple(idxs) for key, idxs in by_key.items()}
        self.rule_index = {r: idx for idx, r in enumerate(rules)}


def prepare_graph(order, edges):
    return CutTable(order, edges)


def _joined(CutTable pre, int ra, CutTable suf, int rb):
    """All joins of pre's prefix fragment with suf's suffix fragment.

    Returns (result_order, base_edges, pre_anchor_list, shifted_suf_anchors).
    The caller enumerates hanging-edge bijections on top of this.
    """
    cdef int ia = pre.rules[ra][0]
    cdef int ib = suf.rules[rb][0]
    cdef int offset = ia - ib
    cdef int order_f = ia + suf.order - ib
    base = list(pre.pre_intact[ra])
    base.extend((u + offset, v + offset) for u, v in suf.suf_intact[rb])
    suf_anch = [x + offset for x in suf.suf_anchors[rb]]
    return order_f, base, pre.pre_anchors[ra], suf_anch


def pair_products(CutTable pre, int ra, CutTable suf, int rb):
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
    cdef int m = len(pre_anch)
    out = []
    cdef int t
    for perm in permutations(range(m)):
        es = base + [(pre_anch[t], suf_anch[perm[t]]) for t in range(m)]
        es.sort()
        out.append((order_f, tuple(es)))
    return out


def products_direction(CutTable first, int rfirst, CutTable second,
                       int rsecond, direction):
    """Resolve an ordered pair and direction to a prefix/suffix join.

    Direction 1 takes the prefix from the first graph and the suffix from
    the second; direction 2 swaps the roles.
    """
    if direction == 1:
        return pair_products(first, rfirst, second, rsecond)
    if direction == 2:
        return pair_products(second, rsecond, first, rfirst)
    raise ValueError(f"direction must be 1 or 2, got {direction}")


# ---------------------------------------------------------------------------
# the law sweep

cdef struct JoinBuf:
    int order_f
    int m
    int nbase
    int size_f      # nbase + m
    int *base       # packed retained edges
    int *base_deg   # order_f + 1 slots
    int *pre_anch
    int *suf_anch
    int *exp        # expected degree per result vertex


cdef void _fill_join(CutTable pre, int ra, CutTable suf, int rb, JoinBuf *buf):
    cdef int ia = <int> pre.rules[ra][0]
    cdef int ib = <int> suf.rules[rb][0]
    cdef int offset = ia - ib
    cdef int u, v, k
    buf.order_f = ia + suf.order - ib
    pre_intact = pre.pre_intact[ra]
    suf_intact = suf.suf_intact[rb]
    pre_anch = pre.pre_anchors[ra]
    suf_anch = suf.suf_anchors[rb]
    buf.m = <int> len(pre_anch)
    buf.nbase = <int> (len(pre_intact) + len(suf_intact))
    buf.size_f = buf.nbase + buf.m
    k = 0
    for u, v in pre_intact:
        buf.base[k] = _pack(u, v)
        k += 1
    for u, v in suf_intact:
        buf.base[k] = _pack(u + offset, v + offset)
        k += 1
    for k in range(buf.order_f + 1):
        buf.base_deg[k] = 0
    for k in range(buf.nbase):
        buf.base_deg[buf.base[k] >> 16] += 1
        buf.base_deg[buf.base[k] & 0xFFFF] += 1
    for k in range(buf.m):
        buf.pre_anch[k] = <int> pre_anch[k]
        buf.suf_anch[k] = <int> suf_anch[k] + offset
    # expected degrees: prefix vertices keep their own, suffix vertices
    # keep their own shifted, a merged vertex gets ld(i) + rd(j)
    for k in range(buf.order_f + 1):
        buf.exp[k] = 0
    for k in range(1, ia + 1):
        buf.exp[k] = <int> pre.deg[k]
    for k in range(ib + 1, suf.order + 1):
        buf.exp[k + offset] = <int> suf.deg[k]
    if <bint> pre.reflexive[ra]:
        buf.exp[ia] = (<int> pre.ld[ia]) + (<int> suf.rd[ib])


cdef int _build_checked(JoinBuf *buf, int bound, int *products,
                        long long *stats, list samples, int sample_cap,
                        tuple tag):
    """Emit every bijection's product and tally the per-product checks.

    Row t of the products matrix holds product t's sorted packed edges.
    stats is the running [built, degree_viol, bound_viol, oversize]
    accumulator.  Returns the number of rows written.
    """
    cdef int m = buf.m
    cdef int width = buf.size_f
    cdef int rows = 0
    cdef int t, u, v, k, bad
    cdef bint over_order = buf.order_f > bound
    cdef bint over_size = buf.size_f > bound
    cdef bint degree_ok
    cdef int *perm = <int *> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int *deg = <int *> malloc((buf.order_f + 1) * sizeof(int))
    cdef int *row
    try:
        for t in range(m):
            perm[t] = t
        while True:
            row = products + rows * width
            memcpy(row, buf.base, buf.nbase * sizeof(int))
            memcpy(deg, buf.base_deg, (buf.order_f + 1) * sizeof(int))
            for t in range(m):
                u = buf.pre_anch[t]
                v = buf.suf_anch[perm[t]]
                row[buf.nbase + t] = _pack(u, v)
                deg[u] += 1
                deg[v] += 1
            _insertion_sort(row, width)
            rows += 1
            stats[0] += 1
            degree_ok = True
            bad = 0
            for k in range(1, buf.order_f + 1):
                if deg[k] != buf.exp[k]:
                    degree_ok = False
                    bad = k
                    break
            if not degree_ok:
                stats[1] += 1
                if len(samples) < sample_cap:
                    samples.append((
                        "degree", tag,
                        f"vertex {bad} has degree {deg[bad]}, "
                        f"expected {buf.exp[bad]}",
                    ))
            if over_order:
                stats[2] += 1
                if len(samples) < sample_cap:
                    samples.append(
                        ("bound", tag, f"order {buf.order_f} exceeds {bound}")
                    )
            if over_size:
                stats[3] += 1
            if m <= 1 or not _next_permutation(perm, m):
                break
        return rows
    finally:
        free(perm)
        free(deg)


cdef int _build_plain(JoinBuf *buf, int *products) nogil:
    """Emit every bijection's product with no checks or stats."""
    cdef int m = buf.m
    cdef int width = buf.size_f
    cdef int rows = 0
    cdef int t
    cdef int *perm = <int *> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int *row
    for t in range(m):
        perm[t] = t
    while True:
        row = products + rows * width
        memcpy(row, buf.base, buf.nbase * sizeof(int))
        for t in range(m):
            row[buf.nbase + t] = _pack(buf.pre_anch[t], buf.suf_anch[perm[t]])
        _insertion_sort(row, width)
        rows += 1
        if m <= 1 or not _next_permutation(perm, m):
            break
    free(perm)
    return rows


cdef void _sort_rows(int *matrix, int rows, int width) nogil:
    # insertion sort under lexicographic row comparison; row counts stay
    # tiny (at most max_power factorial)
    cdef int r, j
    cdef int *tmp = <int *> malloc(width * sizeof(int))
    for r in range(1, rows):
        memcpy(tmp, matrix + r * width, width * sizeof(int))
        j = r - 1
        while j >= 0 and memcmp(matrix + j * width, tmp, width * sizeof(int)) > 0:
            memcpy(matrix + (j + 1) * width, matrix + j * width,
                   width * sizeof(int))
            j -= 1
        memcpy(matrix + (j + 1) * width, tmp, width * sizeof(int))
    free(tmp)


def splice_pair_check(CutTable a, CutTable b, int max_power, int sample_cap=4):
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
    cdef int na = a.order
    cdef int nb = b.order
    cdef int bound = na + nb - 1
    cdef long long combos = 0
    cdef long long count_viol = 0
    cdef long long reversal_viol = 0
    cdef int achieved = 0
    cdef long long stats[4]
    stats[0] = stats[1] = stats[2] = stats[3] = 0
    samples = []

    last_split_a = a.rule_index.get((na, na))
    first_split_b = b.rule_index.get((1, 1))
    cdef int split_a = -1 if last_split_a is None else <int> last_split_a
    cdef int split_b = -1 if first_split_b is None else <int> first_split_b

    # shared buffers, sized for any combo of these two graphs: a product
    # never has more edges than the two operands held together
    cdef int max_edges = <int> (len(a.edges) + len(b.edges))
    cdef int buf_edges = max_edges + 1
    cdef int max_order_f = na + nb + 1
    cdef int mfact, width, rows1, rows2, rows3, power
    cdef int first_order = 0
    cdef int ra, rb
    cdef JoinBuf jb
    jb.base = <int *> malloc(buf_edges * sizeof(int))
    jb.base_deg = <int *> malloc(max_order_f * sizeof(int))
    jb.pre_anch = <int *> malloc(buf_edges * sizeof(int))
    jb.suf_anch = <int *> malloc(buf_edges * sizeof(int))
    jb.exp = <int *> malloc(max_order_f * sizeof(int))
    cdef int *p1 = NULL
    cdef int *p2 = NULL
    cdef int *p3 = NULL
    try:
        for key, idxs_a in a.by_key.items():
            power = <int> key[1]
            if power > max_power:
                continue
            idxs_b = b.by_key.get(key)
            if not idxs_b:
                continue
            mfact = <int> factorial(power)
            p1 = <int *> malloc(mfact * buf_edges * sizeof(int))
            p2 = <int *> malloc(mfact * buf_edges * sizeof(int))
            p3 = <int *> malloc(mfact * buf_edges * sizeof(int))
            for ra in idxs_a:
                for rb in idxs_b:
                    combos += 1
                    tag = (a.rules[ra][0], a.rules[ra][1],
                           b.rules[rb][0], b.rules[rb][1])
                    _fill_join(a, ra, b, rb, &jb)
                    width = jb.size_f
                    first_order = jb.order_f
                    rows1 = _build_checked(&jb, bound, p1, stats, samples,
                                           sample_cap, tag)
                    _fill_join(b, rb, a, ra, &jb)
                    rows2 = _build_checked(&jb, bound, p2, stats, samples,
                                           sample_cap, tag)
                    if rows1 != mfact or rows2 != mfact:
                        count_viol += 1
                        if len(samples) < sample_cap:
                            samples.append((
                                "count", tag,
                                f"got {rows1}+{rows2} products, expected "
                                f"{mfact} per direction",
                            ))
                    # second direction of the reversed pair, built
                    # independently of the checked run above
                    _fill_join(a, ra, b, rb, &jb)
                    rows3 = _build_plain(&jb, p3)
                    _sort_rows(p1, rows1, width)
                    _sort_rows(p3, rows3, width)
                    if rows1 != rows3 or memcmp(
                            p1, p3, rows1 * width * sizeof(int)) != 0:
                        reversal_viol += 1
                        if len(samples) < sample_cap:
                            samples.append((
                                "reversal", tag,
                                "direction-1 products differ from direction-2 "
                                "products of the reversed pair",
                            ))
                    if split_a >= 0 and ra == split_a and rb == split_b:
                        if rows1 > 0 and first_order == bound:
                            achieved = 1
            free(p1); free(p2); free(p3)
            p1 = p2 = p3 = NULL
        return (combos, stats[0], count_viol, reversal_viol, stats[1],
                stats[2], achieved, stats[3], tuple(samples))
    finally:
        free(jb.base); free(jb.base_deg); free(jb.pre_anch)
        free(jb.suf_anch); free(jb.exp)
        if p1 != NULL:
            free(p1)
        if p2 != NULL:
            free(p2)
        if p3 != NULL:
            free(p3)
