# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sweep kernel.

Same contract as ``_pykernels``: every complex is analysed on 8-bit vertex
masks (components, 2-colouring, leaf stripping, direct 4-cycle count) and,
independently, by Bareiss elimination on its 8x8 incidence matrix.
"""

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


BACKEND = "cython"

LABEL_NAMES = (
    "ADMISSIBLE",
    "OMITS_POINTS_1",
    "OMITS_POINTS_2",
    "OMITS_POINTS_3",
    "TREE_ISOLATED_LINE",
    "TREE_3POINT",
    "TREE_4POINT",
    "CYCLE_8",
    "CYCLE_6",
    "TWO_4CYCLES",
    "UNIQUE_4CYCLE_DISCONNECTED",
    "UNIQUE_4CYCLE_CONNECTED_1",
    "UNIQUE_4CYCLE_CONNECTED_2",
    "UNIQUE_4CYCLE_CONNECTED_3",
    "UNIQUE_4CYCLE_CONNECTED_4",
)

SLOT_NAMES = (
    "complexes",
    "admissible_graph",
    "admissible_det",
    "determinants_checked",
    "oracle_disagreements",
    "omitted_point_incidences",
    "omitted_pair_incidences",
    "isolated_line_incidences",
    "omits_four_or_more",
    "with_isolated_line",
    "with_two_isolated_lines",
    "with_three_isolated_lines",
    "isolated_line_and_omitted_point",
    "isolated_line_and_two_omitted_points",
    "two_isolated_lines_and_omitted_point",
    "tree_class_conflicts",
    "large_tree_components",
    "non_unicyclic_proper",
    "four_cycle_lemma_violations",
    "det_power_violations",
    "rank_violations",
)

cdef enum:
    L_ADMISSIBLE = 0
    L_OMITS_1 = 1
    L_TREE_LINE = 4
    L_TREE_3 = 5
    L_TREE_4 = 6
    L_CYCLE_8 = 7
    L_CYCLE_6 = 8
    L_TWO_4 = 9
    L_DISC = 10
    L_CONN_1 = 11
    N_LABELS = 15

cdef enum:
    S_COMPLEXES = 0
    S_ADM_GRAPH
    S_ADM_DET
    S_DET_CHECKED
    S_DISAGREE
    S_OMIT_INC
    S_OMIT_PAIR_INC
    S_ISO_INC
    S_OMIT4
    S_WITH_ISO
    S_WITH_ISO2
    S_WITH_ISO3
    S_ISO_OMIT
    S_ISO_OMIT2
    S_ISO2_OMIT
    S_TREE_CONFLICT
    S_LARGE_TREE
    S_NON_UNICYCLIC
    S_FOUR_CYCLE_BAD
    S_DET_POWER_BAD
    S_RANK_BAD
    N_SLOTS

cdef int EA[28]
cdef int EB[28]
cdef int _i, _j, _k
_k = 0
for _j in range(8):
    for _i in range(_j):
        EA[_k] = _i
        EB[_k] = _j
        _k += 1

cdef int FOUR_CYCLES_EXPECTED[N_LABELS]
for _i in range(N_LABELS):
    FOUR_CYCLES_EXPECTED[_i] = 1
FOUR_CYCLES_EXPECTED[L_ADMISSIBLE] = 0
FOUR_CYCLES_EXPECTED[L_CYCLE_8] = 0
FOUR_CYCLES_EXPECTED[L_CYCLE_6] = 0
FOUR_CYCLES_EXPECTED[L_TWO_4] = 2


cdef struct Profile:
    int label
    int omitted
    int isolated_lines
    int n_components
    int bipartite          # omitted points included
    int multicyclic
    int tree_size_mask     # bit s set when a tree component with s vertices exists
    int four_cycles


cdef inline int popcount(unsigned int x) nogil:
    return __builtin_popcount(x)

cdef inline int comb2(int n) nogil:
    return n * (n - 1) // 2


cdef void build_adjacency(unsigned int mask, unsigned int* adj) nogil:
    cdef int v, l
    for v in range(8):
        adj[v] = 0
    while mask:
        l = __builtin_ctz(mask)
        mask &= mask - 1
        adj[EA[l]] |= 1u << EB[l]
        adj[EB[l]] |= 1u << EA[l]


cdef bint is_bipartite(unsigned int comp, unsigned int* adj) nogil:
    cdef unsigned int seen, frontier, nxt, layers[2], m
    cdef int parity = 0, v
    seen = comp & (~comp + 1)
    frontier = seen
    layers[0] = seen
    layers[1] = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = __builtin_ctz(m)
            m &= m - 1
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        parity ^= 1
        layers[parity] |= nxt
        frontier = nxt
    for parity in range(2):
        m = layers[parity]
        while m:
            v = __builtin_ctz(m)
            m &= m - 1
            if adj[v] & layers[parity]:
                return False
    return True


cdef unsigned int cycle_residue(unsigned int comp, unsigned int* adj) nogil:
    cdef unsigned int alive = comp, leaves, m
    cdef int v
    while True:
        leaves = 0
        m = alive
        while m:
            v = __builtin_ctz(m)
            m &= m - 1
            if popcount(adj[v] & alive) <= 1:
                leaves |= 1u << v
        if not leaves:
            return alive
        alive &= ~leaves


cdef void profile_mask(unsigned int mask, Profile* p) nogil:
    cdef unsigned int adj[8]
    cdef unsigned int covered = 0, remaining, comp, frontier, nxt, m, four_ring = 0, ring
    cdef int v, a, b, nv, ne, clen, n_four = 0, has6 = 0, has8 = 0, valence
    build_adjacency(mask, adj)
    for v in range(8):
        if adj[v]:
            covered |= 1u << v

    p.omitted = 8 - popcount(covered)
    p.isolated_lines = 0
    p.n_components = 0
    p.bipartite = p.omitted
    p.multicyclic = 0
    p.tree_size_mask = 0

    remaining = covered
    while remaining:
        comp = remaining & (~remaining + 1)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = __builtin_ctz(m)
                m &= m - 1
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        remaining &= ~comp
        p.n_components += 1

        nv = popcount(comp)
        ne = 0
        m = comp
        while m:
            v = __builtin_ctz(m)
            m &= m - 1
            ne += popcount(adj[v])
        ne //= 2
        if is_bipartite(comp, adj):
            p.bipartite += 1
        if ne == nv - 1:
            p.tree_size_mask |= 1 << nv
            if nv == 2:
                p.isolated_lines += 1
        elif ne == nv:
            ring = cycle_residue(comp, adj)
            clen = popcount(ring)
            if clen == 4:
                n_four += 1
                four_ring = ring
            elif clen == 6:
                has6 = 1
            elif clen == 8:
                has8 = 1
        else:
            p.multicyclic += 1

    p.four_cycles = 0
    for a in range(8):
        for b in range(a + 1, 8):
            p.four_cycles += comb2(popcount(adj[a] & adj[b]))
    p.four_cycles //= 2

    if p.omitted:
        p.label = L_OMITS_1 + (p.omitted - 1 if p.omitted <= 3 else 2)
    elif p.tree_size_mask:
        if p.tree_size_mask & (1 << 2):
            p.label = L_TREE_LINE
        elif p.tree_size_mask & (1 << 3):
            p.label = L_TREE_3
        else:
            p.label = L_TREE_4
    elif p.bipartite == 0:
        p.label = L_ADMISSIBLE
    elif has8:
        p.label = L_CYCLE_8
    elif has6:
        p.label = L_CYCLE_6
    elif n_four >= 2:
        p.label = L_TWO_4
    elif p.n_components > 1:
        p.label = L_DISC
    else:
        valence = 0
        m = four_ring
        while m:
            v = __builtin_ctz(m)
            m &= m - 1
            if popcount(adj[v]) > 2:
                valence += 1
        p.label = L_CONN_1 + valence - 1


cdef int bareiss(unsigned int mask, long long* det) nogil:
    """Rank of the incidence matrix; ``det`` is set when the rank is full."""
    cdef long long a[8][8]
    cdef long long prev = 1, piv, f, tmp
    cdef int r = 0, c, i, j, p, sign = 1, l
    i = 0
    while mask:
        l = __builtin_ctz(mask)
        mask &= mask - 1
        for j in range(8):
            a[i][j] = 0
        a[i][EA[l]] = 1
        a[i][EB[l]] = 1
        i += 1
    for c in range(8):
        if r == 8:
            break
        p = -1
        for i in range(r, 8):
            if a[i][c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for j in range(8):
                tmp = a[r][j]
                a[r][j] = a[p][j]
                a[p][j] = tmp
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, 8):
            f = a[i][c]
            for j in range(c + 1, 8):
                a[i][j] = (piv * a[i][j] - f * a[r][j]) // prev
            a[i][c] = 0
        prev = piv
        r += 1
    det[0] = sign * prev if r == 8 else 0
    return r


cdef inline void accumulate(unsigned int mask, bint check_det,
                            long long* labels, long long* slots) nogil:
    cdef Profile p
    cdef long long det
    cdef int rank, k, iso, graph_ok, det_ok
    profile_mask(mask, &p)
    labels[p.label] += 1
    graph_ok = p.bipartite == 0
    slots[S_COMPLEXES] += 1
    slots[S_ADM_GRAPH] += graph_ok

    if check_det:
        rank = bareiss(mask, &det)
        det_ok = det != 0
        slots[S_DET_CHECKED] += 1
        slots[S_ADM_DET] += det_ok
        slots[S_DISAGREE] += det_ok != graph_ok
        if graph_ok and (det if det > 0 else -det) != ((<long long>1) << p.n_components):
            slots[S_DET_POWER_BAD] += 1
        if rank != 8 - p.bipartite:
            slots[S_RANK_BAD] += 1

    k = p.omitted
    iso = p.isolated_lines
    slots[S_OMIT_INC] += k
    slots[S_OMIT_PAIR_INC] += comb2(k)
    slots[S_ISO_INC] += iso
    slots[S_OMIT4] += k >= 4
    slots[S_WITH_ISO] += iso >= 1
    slots[S_WITH_ISO2] += iso == 2
    slots[S_WITH_ISO3] += iso >= 3
    slots[S_ISO_OMIT] += iso >= 1 and k >= 1
    slots[S_ISO_OMIT2] += iso >= 1 and k >= 2
    slots[S_ISO2_OMIT] += iso >= 2 and k >= 1

    if k == 0:
        if p.tree_size_mask:
            slots[S_TREE_CONFLICT] += popcount(p.tree_size_mask) > 1
            slots[S_LARGE_TREE] += (p.tree_size_mask >> 5) != 0
        else:
            slots[S_NON_UNICYCLIC] += p.multicyclic > 0
            slots[S_FOUR_CYCLE_BAD] += p.four_cycles != FOUR_CYCLES_EXPECTED[p.label]


cdef inline unsigned int next_mask(unsigned int m) nogil:
    cdef unsigned int low = m & (~m + 1)
    cdef unsigned int ripple = m + low
    return ripple | (((m ^ ripple) >> 2) // low)


def sweep_counts(unsigned int start_mask, long long count, bint check_det=True):
    """Label and slot tallies for ``count`` consecutive complexes from ``start_mask``."""
    cdef long long labels[N_LABELS]
    cdef long long slots[N_SLOTS]
    cdef long long i
    cdef unsigned int mask = start_mask
    for i in range(N_LABELS):
        labels[i] = 0
    for i in range(N_SLOTS):
        slots[i] = 0
    with nogil:
        for i in range(count):
            if i:
                mask = next_mask(mask)
            accumulate(mask, check_det, labels, slots)
    return [labels[i] for i in range(N_LABELS)], [slots[i] for i in range(N_SLOTS)]


def label_codes(unsigned int start_mask, long long count):
    out = bytearray(count)
    cdef unsigned char[::1] view = out
    cdef Profile p
    cdef long long i
    cdef unsigned int mask = start_mask
    with nogil:
        for i in range(count):
            if i:
                mask = next_mask(mask)
            profile_mask(mask, &p)
            view[i] = <unsigned char>p.label
    return out


def classify_mask(unsigned int mask):
    cdef Profile p
    profile_mask(mask, &p)
    return p.label


def rank_det_mask(unsigned int mask):
    cdef long long det
    cdef int r = bareiss(mask, &det)
    return r, det
