"""Backend selection and data prep for the canonical-form kernel.

Tries the compiled kernel first and falls back to the pure Python one;
set CACTUSDOODLE_PURE=1 to force the fallback.  Both backends take the
same flattened int arrays and return the same int vector, packed here
into big-endian int32 bytes so that byte order equals int order.
"""

from __future__ import annotations

import itertools
import os
import struct

if os.environ.get("CACTUSDOODLE_PURE"):
    from . import _canon_py as _backend
    BACKEND = "python"
else:
    try:
        from . import _canon as _backend  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _canon_py as _backend
        BACKEND = "python"


def canonical_key(circles, labels, orders, labeled=False, backend=None):
    args, _ = prep(circles, labels, orders, labeled)
    impl = _backend if backend is None else backend
    vec = impl.canonical_core(*args)
    return struct.pack(">%di" % len(vec), *vec)


def canonical_key_with_map(circles, labels, orders, labeled=False):
    """Like canonical_key but also returns {point id: canonical walk index}.

    Always runs the pure backend; the map is only needed on rare paths
    (descriptor transport between isomorphic diagrams).
    """
    from . import _canon_py

    args, pids = prep(circles, labels, orders, labeled)
    vec, pmap = _canon_py.canonical_core(*args, want_map=True)
    key = struct.pack(">%di" % len(vec), *vec)
    return key, {pids[i]: w for i, w in enumerate(pmap)}


def prep(circles, labels, orders, labeled=False):
    """Flatten a diagram into (canonical_core argument list, point ids)."""
    if labeled:
        base = list(circles)
        nfree = sum(1 for c in circles if not c)
    else:
        base = sorted((c for c in circles if c), key=len, reverse=True)
        nfree = len(circles) - len(base)

    pid_to_int = {}
    pids = []
    flat = []
    lens = []
    offs = []
    for c in base:
        offs.append(len(flat))
        lens.append(len(c))
        for x in c:
            pid_to_int[x] = len(flat)
            pids.append(x)
            flat.append(len(flat))

    point_label = [0] * len(flat)
    lab_to_int = {lab: i for i, lab in enumerate(sorted(orders, key=str))}
    for x, lab in labels.items():
        point_label[pid_to_int[x]] = lab_to_int[lab]

    nlab = len(lab_to_int)
    order_k = [0] * nlab
    order_offs = [0] * nlab
    order_flat = []
    for lab in sorted(orders, key=str):
        li = lab_to_int[lab]
        order_k[li] = len(orders[lab]) // 2
        order_offs[li] = len(order_flat)
        for x, s in orders[lab]:
            order_flat.append(2 * pid_to_int[x] + (1 if s > 0 else 0))

    if labeled:
        orderings = [tuple(range(len(base)))]
    else:
        # permute circles only within blocks of equal length
        blocks = []
        i = 0
        while i < len(base):
            j = i
            while j < len(base) and lens[j] == lens[i]:
                j += 1
            blocks.append(list(range(i, j)))
            i = j
        orderings = [sum(combo, [])
                     for combo in itertools.product(
                         *[[list(p) for p in itertools.permutations(b)]
                           for b in blocks])]

    header = [1 if labeled else 0, nfree, len(base)] + lens
    return (lens, offs, flat, point_label, nlab, order_k, order_offs,
            order_flat, orderings, header), pids


def unpack_key(key):
    n = len(key) // 4
    return list(struct.unpack(">%di" % n, key))


def render_key(key):
    """Readable rendering of a canonical key."""
    vec = unpack_key(key)
    mode, nfree, ncirc = vec[0], vec[1], vec[2]
    i = 3
    lens = vec[i:i + ncirc]
    i += ncirc
    npts = sum(lens)
    walk = vec[i:i + npts]
    i += npts
    parts = ["k%d" % mode, "f%d" % nfree,
             "c" + ",".join(map(str, lens)) if lens else "c-",
             "w" + ",".join(map(str, walk)) if walk else "w-"]
    while i < len(vec):
        k = vec[i]
        i += 1
        toks = []
        for _ in range(2 * k):
            v = vec[i]
            i += 1
            toks.append("%d%s" % (v >> 1, "+" if v & 1 else "-"))
        parts.append("s%d:%s" % (k, ",".join(toks)))
    return ";".join(parts)
