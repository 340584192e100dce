"""Pure Python canonical-form kernel.

Same algorithm as the compiled cactusdoodle._canon; kept in sync by
tests/test_kernel.py.  The encoding of a diagram under one choice of
circle ordering and per-circle rotations is an int vector

  [mode, free_loops, C, len_1..len_C,
   walk of canonical set ids (one per point, sets numbered by first
   appearance), then for each canonical set: k followed by the 2k
   endpoint tokens 2*point_walk_index + (1 if sign > 0 else 0), the
   token list rotated to its lexicographic minimum]

and canonical_core returns the minimum vector over all admissible
choices, pruning each partial walk against the best so far.
"""

from __future__ import annotations


def canonical_core(lens, offs, flat, point_label, nlab, order_k, order_offs,
                   order_flat, orderings, header, want_map=False):
    ncirc = len(lens)
    npts = len(point_label)
    nhead = len(header)
    total = nhead + npts + nlab
    for lab in range(nlab):
        total += 2 * order_k[lab]

    cur = [0] * total
    for i in range(nhead):
        cur[i] = header[i]
    best = None
    best_map = None
    pointmap = [-1] * npts
    labmap = [-1] * nlab
    labinv = [0] * nlab

    def go(ordering, level, pos, tight, nassigned):
        nonlocal best
        if level == ncirc:
            finish(pos, tight)
            return
        ci = ordering[level]
        m = lens[ci]
        base = offs[ci]
        nrot = m if m > 0 else 1
        entry_best = best
        for rot in range(nrot):
            # once a descendant replaced best, the shared prefix cur[:pos]
            # is exactly best[:pos], so later rotations compare tight
            t = tight if best is entry_best else True
            ok = True
            nnew = 0
            j = 0
            while j < m:
                pt = flat[base + (rot + j) % m]
                lab = point_label[pt]
                cl = labmap[lab]
                if cl < 0:
                    cl = nassigned + nnew
                    labmap[lab] = cl
                    labinv[cl] = lab
                    nnew += 1
                pointmap[pt] = pos + j - nhead
                cur[pos + j] = cl
                if t:
                    b = best[pos + j]
                    if cl > b:
                        ok = False
                        j += 1
                        break
                    if cl < b:
                        t = False
                j += 1
            if ok:
                go(ordering, level + 1, pos + m, t, nassigned + nnew)
            # undo this rotation's assignments (only labels first seen here)
            while j > 0:
                j -= 1
                pt = flat[base + (rot + j) % m]
                pointmap[pt] = -1
                lab = point_label[pt]
                if labmap[lab] >= nassigned:
                    labmap[lab] = -1

    def finish(pos, tight):
        nonlocal best, best_map
        for cl in range(nlab):
            lab = labinv[cl]
            k = order_k[lab]
            m2 = 2 * k
            off = order_offs[lab]
            raw = [0] * m2
            for j in range(m2):
                tok = order_flat[off + j]
                raw[j] = 2 * pointmap[tok >> 1] + (tok & 1)
            start = _min_rotation(raw, m2)
            cur[pos] = k
            if tight:
                b = best[pos]
                if k > b:
                    return
                if k < b:
                    tight = False
            pos += 1
            for j in range(m2):
                v = raw[(start + j) % m2]
                cur[pos] = v
                if tight:
                    b = best[pos]
                    if v > b:
                        return
                    if v < b:
                        tight = False
                pos += 1
        if best is None or not tight:
            best = cur[:]
            if want_map:
                best_map = pointmap[:]

    for ordering in orderings:
        go(ordering, 0, nhead, best is not None, 0)
    if want_map:
        return best, best_map
    return best


def _min_rotation(raw, m2):
    best = 0
    for cand in range(1, m2):
        for j in range(m2):
            a = raw[(cand + j) % m2]
            b = raw[(best + j) % m2]
            if a != b:
                if a < b:
                    best = cand
                break
    return best
