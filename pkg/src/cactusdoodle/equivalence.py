"""Deciding equivalence of diagrams under the elementary moves.

Slides preserve the marked-point census, so the slide orbit of a
diagram is finite and can be closed off breadth first.  A diagram is
minimal when nothing in its orbit admits a pair cancellation; minimize
repeatedly cancels the lexicographically first available pair (by
canonical key) and returns the least-key member of the final orbit, so
two diagrams are equivalent iff their minimized forms have identical
canonical keys.

flatten_peak rewrites a sequence that creates a pair, slides, then
cancels a pair into one that never exceeds the endpoint crossing count.
The rewritten diagrams come from the originals by reversing, inside
each touched set's cyclic order, the suborder of the points lying on
the tracked segments between the created (resp. cancelled) partner
points, then erasing two of the four sets; consecutive rewritten
diagrams are reconnected by searching for the single move between them.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

from .diagram import (GaussDiagram, canonical_key, crossing_count, is_doodle,
                      isomorphism)
from .moves import (PhiDescriptor, PsiDescriptor, apply_move, apply_phi,
                    apply_psi, enumerate_phi_annihilations,
                    enumerate_psi_moves, reverse_subset_order)
from .realize import is_realizable

DEFAULT_MAX_NODES = 10 ** 6


class OrbitBudgetExceeded(RuntimeError):
    """The slide orbit grew past the node budget before closing."""


class FlattenError(ValueError):
    """The input sequence is not a flattenable peak."""


@dataclass(frozen=True)
class OrbitSummary:
    """Canonical keys of every diagram slide-reachable from a seed.

    representatives is sorted, so equal orbits compare equal.
    """

    representatives: tuple
    size: int


def _expand(labeled, item):
    _, d = item
    out = []
    for m in enumerate_psi_moves(d):
        nd = apply_psi(d, m)
        out.append((canonical_key(nd, labeled), nd))
    return out


def _orbit_map(d, max_nodes=DEFAULT_MAX_NODES, threads=1, labeled=False):
    """All slide-reachable diagrams keyed by canonical key.

    Frontier expansion is layer synchronous and merging is sorted by
    key, so the representative kept per key (hence everything built on
    top) is independent of the thread count.
    """
    key0 = canonical_key(d, labeled)
    seen = {key0: d}
    frontier = [(key0, d)]
    while frontier:
        frontier.sort(key=lambda kd: kd[0])
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                batches = list(ex.map(partial(_expand, labeled), frontier))
        else:
            batches = [_expand(labeled, item) for item in frontier]
        children = []
        for batch in batches:
            children.extend(batch)
        children.sort(key=lambda kd: kd[0])
        frontier = []
        for key, nd in children:
            if key not in seen:
                seen[key] = nd
                frontier.append((key, nd))
                if len(seen) > max_nodes:
                    raise OrbitBudgetExceeded(
                        "slide orbit exceeded %d diagrams" % max_nodes)
    return seen


def psi_orbit(d, max_nodes=DEFAULT_MAX_NODES, threads=1,
              labeled_components=False):
    seen = _orbit_map(d, max_nodes, threads, labeled_components)
    return OrbitSummary(tuple(sorted(seen)), len(seen))


def is_minimal(d, max_nodes=DEFAULT_MAX_NODES, threads=1,
               labeled_components=False):
    """True iff no slide-reachable diagram admits a pair cancellation."""
    seen = _orbit_map(d, max_nodes, threads, labeled_components)
    return not any(enumerate_phi_annihilations(nd) for nd in seen.values())


def minimize(d, max_nodes=DEFAULT_MAX_NODES, threads=1,
             labeled_components=False):
    """A minimal diagram reachable by slides and cancellations only.

    Each round cancels the first available pair in (orbit member key,
    result key) order; the crossing count never increases.  The return
    value is the least-key member of the final orbit, so equivalent
    inputs minimize to byte-identical canonical keys.
    """
    cur = d
    while True:
        seen = _orbit_map(cur, max_nodes, threads, labeled_components)
        step = None
        for key in sorted(seen):
            nd = seen[key]
            results = [(canonical_key(apply_phi(nd, m), labeled_components),
                        m, nd) for m in enumerate_phi_annihilations(nd)]
            if results:
                _, m, nd = min(results, key=lambda r: r[0])
                step = apply_phi(nd, m)
                break
        if step is None:
            return seen[min(seen)]
        cur = step


def min_crossing_number(d, max_nodes=DEFAULT_MAX_NODES, threads=1,
                        labeled_components=False):
    return crossing_count(minimize(d, max_nodes, threads, labeled_components))


def equivalent(d1, d2, max_nodes=DEFAULT_MAX_NODES, threads=1,
               labeled_components=False):
    """True iff the diagrams are connected by some finite move sequence.

    Decided on minimal forms: minimize lands on the least canonical key
    of its slide orbit, and equivalent minimal diagrams share an orbit.
    Known limitation: some classes own two minimal orbits that are
    mirror images of each other, and the greedy descent can land the
    two inputs on opposite sides, reporting False for diagrams that a
    longer move sequence does connect (see the README for a witness).
    """
    m1 = minimize(d1, max_nodes, threads, labeled_components)
    m2 = minimize(d2, max_nodes, threads, labeled_components)
    if crossing_count(m1) != crossing_count(m2):
        return False
    return canonical_key(m1, labeled_components) == canonical_key(m2, labeled_components)


def doodle_equivalent(d1, d2, labeled_components=False):
    """Equivalence decision for doodles, using pair cancellations only.

    Slides need a set of size >= 3, so they never apply to a doodle;
    each input is reduced by greedy cancellation (least result key
    first) and the reduced forms are compared.
    """
    for d in (d1, d2):
        if not is_doodle(d):
            raise ValueError("doodle_equivalent needs doodles (double points only)")
    r1 = _cancel_out(d1, labeled_components)
    r2 = _cancel_out(d2, labeled_components)
    return canonical_key(r1, labeled_components) == canonical_key(r2, labeled_components)


def _cancel_out(d, labeled=False):
    while True:
        best = None
        for m in enumerate_phi_annihilations(d):
            nd = apply_phi(d, m)
            key = canonical_key(nd, labeled)
            if best is None or key < best[0]:
                best = (key, nd)
        if best is None:
            return d
        d = best[1]


# ---------------------------------------------------------------------------
# Move sequences and peak flattening.


@dataclass(frozen=True)
class MoveSequence:
    """A start diagram plus steps (descriptor, canonical key of result)."""

    start: GaussDiagram
    steps: tuple


def sequence_of(start, descriptors, labeled_components=False):
    """Build a MoveSequence by applying descriptors in order."""
    steps = []
    cur = start
    for m in descriptors:
        cur = apply_move(cur, m)
        steps.append((m, canonical_key(cur, labeled_components)))
    return MoveSequence(start, tuple(steps))


def replay(seq, labeled_components=False):
    """The diagrams D_0..D_r along seq; ValueError on any key mismatch."""
    out = [seq.start]
    for i, (m, key) in enumerate(seq.steps):
        nd = apply_move(out[-1], m)
        if canonical_key(nd, labeled_components) != key:
            raise ValueError("step %d does not reproduce its recorded key" % i)
        out.append(nd)
    return out


def flatten_peak(seq, labeled_components=False):
    """Rewrite a create / slide* / cancel sequence below the peak.

    The input must create a pair of sets, slide only, then cancel a
    pair, with every diagram realizable.  The output is a sequence with
    the same first diagram, ending in a diagram with the canonical key
    of the last, in which no diagram has more crossings than the
    endpoints.  Raises FlattenError when the input is not such a peak
    (or tracks segments that the endpoint cancellation does not match).
    """
    labeled = labeled_components
    diagrams = replay(seq, labeled)
    r = len(diagrams) - 1
    if r < 2:
        raise FlattenError("peak needs a creation, slides, then a cancellation")
    first = seq.steps[0][0]
    last = seq.steps[-1][0]
    if not (isinstance(first, PhiDescriptor) and first.direction == "create"):
        raise FlattenError("first step must create a pair of sets")
    if not (isinstance(last, PhiDescriptor) and last.direction == "annihilate"):
        raise FlattenError("last step must cancel a pair of sets")
    for m, _ in seq.steps[1:-1]:
        if not isinstance(m, PsiDescriptor):
            raise FlattenError("inner steps must all be slides")
    for i, d in enumerate(diagrams):
        if not is_realizable(d):
            raise FlattenError("diagram %d of the peak is not realizable" % i)

    created = {first.set_a, first.set_b}
    killed = {last.set_a, last.set_b}
    common = created & killed
    inner = diagrams[1:r]  # D_1 .. D_{r-1}
    cpairs = [tuple(blk) for _, _, blk in first.placements]

    if len(common) == 2:
        nodes = [diagrams[0]]
        for d in inner:
            pts = _segment_points(d, cpairs)
            nodes.append(_erase(_reverse_suborders(d, pts), created))
        nodes.append(diagrams[r])
        creation_at = None
    elif len(common) == 1:
        nodes, creation_at = _nodes_one_common(diagrams, inner, first, last, cpairs)
    else:
        nodes, creation_at = _nodes_disjoint(diagrams, inner, first, last, cpairs)

    return _connect_nodes(diagrams[0], nodes, creation_at, first, labeled)


def _nodes_one_common(diagrams, inner, first, last, cpairs):
    """Node chain when the created and cancelled pairs share one set.

    Segments run from an A point through the shared set's point to a B
    point; the two halves are tracked separately because a set counts
    as touched only through the half it has points on, while reversal
    always acts on all of its segment points.
    """
    common = next(iter({first.set_a, first.set_b} & {last.set_a, last.set_b}))
    a_lab = next(iter({first.set_a, first.set_b} - {common}))
    b_lab = next(iter({last.set_a, last.set_b} - {common}))
    jpairs = _empty_side_pairs(diagrams[-2], last.pairing)

    dp, dm, dq = [], [], []
    for d in inner:
        p1 = _segment_points(d, cpairs)
        p2 = _segment_points(d, jpairs)
        allpts = p1 | p2
        pmem = {d.labels[x] for x in p1}
        qmem = {d.labels[x] for x in p2}
        dp.append(_erase(_reverse_suborders(d, allpts, pmem), {a_lab, common}))
        mid = _reverse_suborders(d, allpts, pmem | qmem)
        orders = dict(mid.orders)
        orders[common] = tuple(reversed(orders[common]))
        mid = GaussDiagram(mid.circles, mid.labels, orders)
        dm.append(_erase(mid, {a_lab, b_lab}))
        dq.append(_erase(_reverse_suborders(d, allpts, qmem), {common, b_lab}))
    nodes = [diagrams[0]] + dp + dm[::-1] + dq + [diagrams[-1]]
    return nodes, None


def _nodes_disjoint(diagrams, inner, first, last, cpairs):
    """Node chain when the created and cancelled pairs are disjoint.

    The middle chain has both pairs erased; it is entered by cancelling
    the B pair and left by re-creating the A pair, so the index of the
    node before that creation is returned for special handling.
    """
    created = {first.set_a, first.set_b}
    killed = {last.set_a, last.set_b}
    jpairs = _empty_side_pairs(diagrams[-2], last.pairing)

    dp, dm, dq = [], [], []
    for d in inner:
        ipts = _segment_points(d, cpairs)
        jpts = _segment_points(d, jpairs)
        dp.append(_erase(_reverse_suborders(d, ipts), created))
        mid = _reverse_suborders(_reverse_suborders(d, ipts), jpts)
        dm.append(_erase(mid, created | killed))
        dq.append(_erase(_reverse_suborders(d, jpts), killed))
    nodes = [diagrams[0]] + dp + dm[::-1] + dq + [diagrams[-1]]
    creation_at = len(dp) + len(dm)  # index of the last middle node
    return nodes, creation_at


def _connect_nodes(start, nodes, creation_at, first, labeled):
    """Chain the constructed nodes into a replayable MoveSequence.

    Consecutive nodes are equal or one move apart; the literal chain is
    rebuilt by applying each found move, so recorded descriptors always
    apply to the preceding literal diagram.
    """
    steps = []
    cur = start
    cur_key = canonical_key(cur, labeled)
    for j in range(1, len(nodes)):
        tkey = canonical_key(nodes[j], labeled)
        if tkey == cur_key:
            continue
        if creation_at is not None and j - 1 == creation_at:
            m, cur = _creation_step(nodes[j], cur, first, labeled)
        else:
            m, cur = _single_move_step(cur, tkey, labeled)
        steps.append((m, tkey))
        cur_key = tkey
    return MoveSequence(start, tuple(steps))


def _single_move_step(cur, tkey, labeled):
    for m in enumerate_psi_moves(cur):
        nd = apply_psi(cur, m)
        if canonical_key(nd, labeled) == tkey:
            return m, nd
    for m in enumerate_phi_annihilations(cur):
        nd = apply_phi(cur, m)
        if canonical_key(nd, labeled) == tkey:
            return m, nd
    raise FlattenError("no single move connects consecutive flattened diagrams")


def _creation_step(target, cur, first, labeled):
    """Reinsert the created pair of target into cur.

    target still contains both created sets; recording their erasure as
    placements gives a creation descriptor on erase(target), which is
    carried over to the literal diagram cur through an isomorphism.
    """
    src, desc = _creation_from(target, first)
    iso = isomorphism(src, cur, labeled)
    if iso is None:
        raise FlattenError("flattened chain lost track of its diagrams")
    m = _transport_creation(desc, src, cur, iso)
    nd = apply_phi(cur, m)
    if canonical_key(nd, labeled) != canonical_key(target, labeled):
        raise FlattenError("transported creation missed its target")
    return m, nd


def _creation_from(d, first):
    """(erase(d, pair), creation descriptor rebuilding d from it)."""
    la, lb = first.set_a, first.set_b
    gone = {x for x, lab in d.labels.items() if lab in (la, lb)}
    pos = {}
    for ci, c in enumerate(d.circles):
        for i, x in enumerate(c):
            pos[x] = (ci, i)

    entries = []
    for x, y in first.pairing:
        ci, i = pos[x]
        cj, j = pos[y]
        c = d.circles[ci]
        m = len(c)
        if ci == cj and c[(i + 1) % m] == y:
            blk, i0 = (x, y), i
        elif ci == cj and c[(j + 1) % m] == x:
            blk, i0 = (y, x), j
        else:
            raise FlattenError("created pair of the middle chain is not adjacent")
        # walk to the first survivor after the block
        k = (i0 + 2) % m
        steps = 0
        while c[k] in gone and steps < m:
            k = (k + 1) % m
            steps += 1
        if c[k] in gone:  # circle made of created points only
            gap = 0
            back = m - i0  # keep stored order among blocks
        else:
            gap = sum(1 for x2 in c[:k] if x2 not in gone)
            back = (k - i0) % m  # distance walked; farthest block first
        entries.append((ci, gap, -back, blk))
    entries.sort(key=lambda e: e[:3])
    placements = tuple((ci, gap, blk) for ci, gap, _, blk in entries)
    desc = PhiDescriptor(la, lb, first.pairing, "create", placements,
                         d.orders[la], d.orders[lb])
    return _erase(d, {la, lb}), desc


def _transport_creation(desc, src, dst, iso):
    """Rewrite a creation descriptor on src for the isomorphic dst."""
    pos = {}
    for ci, c in enumerate(dst.circles):
        for i, x in enumerate(c):
            pos[x] = (ci, i)
    empties = dict(zip((i for i, c in enumerate(src.circles) if not c),
                       (i for i, c in enumerate(dst.circles) if not c)))
    placements = []
    for ci, gap, blk in desc.placements:
        c = src.circles[ci]
        if not c:
            placements.append((empties[ci], 0, blk))
        else:
            ci2, gap2 = pos[iso[c[gap]]]
            placements.append((ci2, gap2, blk))
    return PhiDescriptor(desc.set_a, desc.set_b, desc.pairing, "create",
                         tuple(placements), desc.order_a, desc.order_b)


def _segment_points(d, pairs):
    """Points strictly inside the forward arcs u -> v, pooled."""
    pos = {}
    for ci, c in enumerate(d.circles):
        for i, x in enumerate(c):
            pos[x] = (ci, i)
    out = set()
    for u, v in pairs:
        ci, i = pos[u]
        cj, j = pos[v]
        if ci != cj:
            raise FlattenError("tracked segment endpoints sit on different circles")
        c = d.circles[ci]
        m = len(c)
        k = (i + 1) % m
        while k != j:
            out.add(c[k])
            k = (k + 1) % m
    return out


def _empty_side_pairs(d, pairing):
    """Orient each cancelled pair so that the forward arc u -> v is the
    empty side in d (the diagram the cancellation applies to)."""
    pos = {}
    for ci, c in enumerate(d.circles):
        for i, x in enumerate(c):
            pos[x] = (ci, i)
    pairs = []
    for x, y in pairing:
        ci, i = pos[x]
        c = d.circles[ci]
        m = len(c)
        if c[(i + 1) % m] == y:
            pairs.append((x, y))
        elif c[(i - 1) % m] == y:
            pairs.append((y, x))
        else:
            raise FlattenError("cancelled pair is not adjacent")
    return pairs


def _reverse_suborders(d, pts, members=None):
    """Reverse each set's suborder on its points in pts.

    members, when given, limits the rewrite to the listed sets (the
    suborder still covers all of a listed set's points in pts).
    """
    by_lab = {}
    for x in pts:
        by_lab.setdefault(d.labels[x], set()).add(x)
    orders = dict(d.orders)
    for lab, sub in by_lab.items():
        if members is not None and lab not in members:
            continue
        orders[lab] = reverse_subset_order(orders[lab], sub)
    return GaussDiagram(d.circles, d.labels, orders)


def _erase(d, labels_gone):
    gone = {x for x, lab in d.labels.items() if lab in labels_gone}
    circles = [tuple(x for x in c if x not in gone) for c in d.circles]
    labels = {x: lab for x, lab in d.labels.items() if lab not in labels_gone}
    orders = {lab: o for lab, o in d.orders.items() if lab not in labels_gone}
    return GaussDiagram(circles, labels, orders)
