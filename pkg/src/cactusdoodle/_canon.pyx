# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-form kernel.

Same algorithm and encoding as _canon_py.canonical_core (documented
there); tests keep the two backends byte for byte in lockstep.  The
search runs on C arrays with the GIL released.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


cdef struct State:
    int ncirc, npts, nlab, nhead, total
    int *lens
    int *offs
    int *flat
    int *point_label
    int *order_k
    int *order_offs
    int *order_flat
    int *ordering
    int *cur
    int *best
    int *pointmap
    int *best_map
    int *labmap
    int *labinv
    int *raw
    int best_set
    int want_map
    long best_gen


cdef int _min_rotation(int *raw, int m2) noexcept nogil:
    cdef int best = 0, cand, j, a, b
    for cand in range(1, m2):
        for j in range(m2):
            a = raw[(cand + j) % m2]
            b = raw[(best + j) % m2]
            if a != b:
                if a < b:
                    best = cand
                break
    return best


cdef void _finish(State *st, int pos, int tight) noexcept nogil:
    cdef int cl, lab, k, m2, off, j, start, v, b, tok
    for cl in range(st.nlab):
        lab = st.labinv[cl]
        k = st.order_k[lab]
        m2 = 2 * k
        off = st.order_offs[lab]
        for j in range(m2):
            tok = st.order_flat[off + j]
            st.raw[j] = 2 * st.pointmap[tok >> 1] + (tok & 1)
        start = _min_rotation(st.raw, m2)
        st.cur[pos] = k
        if tight:
            b = st.best[pos]
            if k > b:
                return
            if k < b:
                tight = 0
        pos += 1
        for j in range(m2):
            v = st.raw[(start + j) % m2]
            st.cur[pos] = v
            if tight:
                b = st.best[pos]
                if v > b:
                    return
                if v < b:
                    tight = 0
            pos += 1
    if st.best_set == 0 or tight == 0:
        memcpy(st.best, st.cur, st.total * sizeof(int))
        st.best_set = 1
        st.best_gen += 1
        if st.want_map and st.npts > 0:
            memcpy(st.best_map, st.pointmap, st.npts * sizeof(int))


cdef void _go(State *st, int level, int pos, int tight, int nassigned) noexcept nogil:
    cdef int ci, m, base, nrot, rot, t, ok, nnew, j, pt, lab, cl, b
    cdef long entry_gen
    if level == st.ncirc:
        _finish(st, pos, tight)
        return
    ci = st.ordering[level]
    m = st.lens[ci]
    base = st.offs[ci]
    nrot = m if m > 0 else 1
    entry_gen = st.best_gen
    for rot in range(nrot):
        # once a descendant replaced best, the shared prefix cur[:pos]
        # is exactly best[:pos], so later rotations compare tight
        t = tight if st.best_gen == entry_gen else 1
        ok = 1
        nnew = 0
        j = 0
        while j < m:
            pt = st.flat[base + (rot + j) % m]
            lab = st.point_label[pt]
            cl = st.labmap[lab]
            if cl < 0:
                cl = nassigned + nnew
                st.labmap[lab] = cl
                st.labinv[cl] = lab
                nnew += 1
            st.pointmap[pt] = pos + j - st.nhead
            st.cur[pos + j] = cl
            if t:
                b = st.best[pos + j]
                if cl > b:
                    ok = 0
                    j += 1
                    break
                if cl < b:
                    t = 0
            j += 1
        if ok:
            _go(st, level + 1, pos + m, t, nassigned + nnew)
        # undo this rotation's assignments (only labels first seen here)
        while j > 0:
            j -= 1
            pt = st.flat[base + (rot + j) % m]
            st.pointmap[pt] = -1
            lab = st.point_label[pt]
            if st.labmap[lab] >= nassigned:
                st.labmap[lab] = -1


cdef int *_alloc(int n, int fill) except NULL:
    cdef int *buf = <int *> malloc((n if n > 0 else 1) * sizeof(int))
    cdef int i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = fill
    return buf


cdef int *_copy(seq, int n) except NULL:
    cdef int *buf = _alloc(n, 0)
    cdef int i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def canonical_core(lens, offs, flat, point_label, nlab, order_k, order_offs,
                   order_flat, orderings, header, want_map=False):
    cdef State st
    cdef int i, oi, norder, kmax
    cdef int *all_orderings = NULL
    cdef list out, pmap

    st.ncirc = len(lens)
    st.npts = len(point_label)
    st.nlab = nlab
    st.nhead = len(header)
    st.total = st.nhead + st.npts + st.nlab
    for i in range(nlab):
        st.total += 2 * order_k[i]
    st.best_set = 0
    st.best_gen = 0
    st.want_map = 1 if want_map else 0
    kmax = max(order_k, default=0)
    norder = len(orderings)

    st.lens = st.offs = st.flat = st.point_label = NULL
    st.order_k = st.order_offs = st.order_flat = NULL
    st.cur = st.best = st.pointmap = st.best_map = NULL
    st.labmap = st.labinv = st.raw = NULL

    try:
        st.lens = _copy(lens, st.ncirc)
        st.offs = _copy(offs, st.ncirc)
        st.flat = _copy(flat, st.npts)
        st.point_label = _copy(point_label, st.npts)
        st.order_k = _copy(order_k, nlab)
        st.order_offs = _copy(order_offs, nlab)
        st.order_flat = _copy(order_flat, len(order_flat))
        st.cur = _alloc(st.total, 0)
        for i in range(st.nhead):
            st.cur[i] = header[i]
        st.best = _alloc(st.total, 0)
        st.pointmap = _alloc(st.npts, -1)
        st.best_map = _alloc(st.npts, -1)
        st.labmap = _alloc(nlab, -1)
        st.labinv = _alloc(nlab, 0)
        st.raw = _alloc(2 * kmax, 0)
        all_orderings = _copy(
            [ci for ordering in orderings for ci in ordering],
            norder * st.ncirc)

        with nogil:
            for oi in range(norder):
                st.ordering = all_orderings + oi * st.ncirc
                _go(&st, 0, st.nhead, 1 if st.best_set else 0, 0)

        if not st.best_set:
            raise RuntimeError("no circle ordering was supplied")
        out = [st.best[i] for i in range(st.total)]
        if want_map:
            pmap = [st.best_map[i] for i in range(st.npts)]
            return out, pmap
        return out
    finally:
        free(st.lens)
        free(st.offs)
        free(st.flat)
        free(st.point_label)
        free(st.order_k)
        free(st.order_offs)
        free(st.order_flat)
        free(st.cur)
        free(st.best)
        free(st.pointmap)
        free(st.best_map)
        free(st.labmap)
        free(st.labinv)
        free(st.raw)
        free(all_orderings)
