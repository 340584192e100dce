"""Elementary moves on Gauss diagrams.

A move of the first kind cancels or creates a pair of singular sets of
the same size n whose points are matched one to one, each point sitting
next to its partner with nothing in between, and whose cyclic orders
are opposite through the matching.  A move of the second kind slides a
small set (size k) through a big one (size n > k).  It is legal when
every small point sits immediately next to its own big partner, all on
the same side (the k passes run in parallel), the partners' endpoints
on that side are consecutive in the big cyclic order, and the big
suborder on those branches is opposite to the small order.  Applying it
hops each small point to the other side of its partner, reverses the
small order, and reverses the big order on the k branches involved.

Descriptors locate a move on a specific diagram; enumerate_* list all
applicable descriptors and apply_* perform them.  Pair creation is
never enumerated, only applied from an explicit descriptor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (GaussDiagram, InvalidDiagram, validate, validate_order)


@dataclass(frozen=True)
class PhiDescriptor:
    """Cancellation or creation of a matched pair of singular sets.

    pairing maps points of set_a to points of set_b.  For creation the
    descriptor also carries the new cyclic orders and, per pair, the
    insertion slot: (circle index, gap index, (first, second)) places
    first then second into the gap before the point currently at that
    index (blocks aimed at one gap land in list order).
    """

    set_a: str
    set_b: str
    pairing: tuple
    direction: str = "annihilate"
    placements: tuple = ()
    order_a: tuple = ()
    order_b: tuple = ()


@dataclass(frozen=True)
class PsiDescriptor:
    """Slide of set small through set big.

    attachment: tuple of (x, b, side) with x a small point adjacent to
    big point b; side -1 means x sits just before b along the circle
    (the initial-endpoint side of b), +1 just after.
    """

    big: str
    small: str
    attachment: tuple


def reverse_subset_order(order, subset):
    """Reverse each maximal cyclic run of endpoints of branches in subset."""
    m = len(order)
    inset = [x in subset for x, _ in order]
    if not any(inset):
        return tuple(order)
    if all(inset):
        return tuple(reversed(order))
    anchor = inset.index(False)
    out = list(order)
    runs = []
    run = []
    for step in range(m):
        idx = (anchor + step) % m
        if inset[idx]:
            run.append(idx)
        elif run:
            runs.append(run)
            run = []
    if run:
        runs.append(run)
    for run in runs:
        vals = [order[idx] for idx in run]
        for idx, v in zip(run, reversed(vals)):
            out[idx] = v
    return tuple(out)


def cyclic_equal(o1, o2):
    if len(o1) != len(o2):
        return False
    if not o1:
        return True
    t1, t2 = tuple(o1), tuple(o2)
    return any(t2[r:] + t2[:r] == t1 for r in range(len(t2)))


def _positions(d):
    pos = {}
    for ci, c in enumerate(d.circles):
        for i, x in enumerate(c):
            pos[x] = (ci, i)
    return pos


def _neighbors(d, pos, x):
    """(prev, next) marked points around x on its circle."""
    ci, i = pos[x]
    c = d.circles[ci]
    m = len(c)
    return c[(i - 1) % m], c[(i + 1) % m]


def _opposite_through(pairing_map, order_a):
    # Sign handling is immaterial here: antipodality makes the sign-flipped
    # transport a rotation of the plain one, hence the same cyclic order.
    return tuple(reversed([(pairing_map[x], s) for x, s in order_a]))


def _points_by_label(d):
    out = {}
    for x, lab in d.labels.items():
        out.setdefault(lab, []).append(x)
    return out


def _sort_points(pts):
    return sorted(pts, key=lambda x: (0, x, "") if isinstance(x, int) else (1, 0, str(x)))


def enumerate_phi_annihilations(d):
    """All cancellation descriptors on d, deterministically ordered."""
    by_label = _points_by_label(d)
    pos = _positions(d)
    labs = sorted(by_label, key=str)
    out = []
    for ia, la in enumerate(labs):
        for lb in labs[ia + 1:]:
            pa, pb = by_label[la], set(by_label[lb])
            if len(pa) != len(pb):
                continue
            cands = {}
            for a in _sort_points(pa):
                prv, nxt = _neighbors(d, pos, a)
                cands[a] = _sort_points({y for y in (prv, nxt) if y in pb})
            for matching in _matchings(_sort_points(pa), cands):
                target = _opposite_through(matching, d.orders[la])
                if cyclic_equal(target, d.orders[lb]):
                    pairing = tuple(sorted(matching.items(),
                                           key=lambda ab: str(ab[0])))
                    out.append(PhiDescriptor(la, lb, pairing))
    return out


def _matchings(points, cands):
    """Perfect matchings point -> candidate, candidates used at most once."""
    used = set()
    cur = {}

    def go(i):
        if i == len(points):
            yield dict(cur)
            return
        a = points[i]
        for b in cands[a]:
            if b not in used:
                used.add(b)
                cur[a] = b
                yield from go(i + 1)
                used.discard(b)
                del cur[a]

    yield from go(0)


def _check_annihilation(d, m):
    if m.direction != "annihilate":
        raise ValueError("descriptor direction is %r" % m.direction)
    by_label = _points_by_label(d)
    if m.set_a not in by_label or m.set_b not in by_label or m.set_a == m.set_b:
        raise ValueError("bad set labels %r, %r" % (m.set_a, m.set_b))
    pa, pb = set(by_label[m.set_a]), set(by_label[m.set_b])
    pairing = dict(m.pairing)
    if set(pairing) != pa or set(pairing.values()) != pb or len(pairing) != len(pa):
        raise ValueError("pairing is not a bijection between the two sets")
    pos = _positions(d)
    for a, b in pairing.items():
        prv, nxt = _neighbors(d, pos, a)
        if b != prv and b != nxt:
            raise ValueError("points %r and %r are not adjacent" % (a, b))
    if not cyclic_equal(_opposite_through(pairing, d.orders[m.set_a]),
                        d.orders[m.set_b]):
        raise ValueError("cyclic orders are not opposite through the pairing")


def apply_phi(d, m):
    """Apply a pair cancellation or creation; raises ValueError if m
    does not apply.  Crossing count changes by -2 or +2."""
    if m.direction == "annihilate":
        _check_annihilation(d, m)
        gone = {x for ab in m.pairing for x in ab}
        circles = [tuple(x for x in c if x not in gone) for c in d.circles]
        labels = {x: lab for x, lab in d.labels.items() if x not in gone}
        orders = {lab: o for lab, o in d.orders.items()
                  if lab not in (m.set_a, m.set_b)}
        return GaussDiagram(circles, labels, orders)

    if m.direction != "create":
        raise ValueError("unknown phi direction %r" % m.direction)
    return _apply_phi_create(d, m)


def _apply_phi_create(d, m):
    if m.set_a in d.orders or m.set_b in d.orders or m.set_a == m.set_b:
        raise ValueError("creation labels must be fresh and distinct")
    pairing = dict(m.pairing)
    pa, pb = set(pairing), set(pairing.values())
    if len(pa) < 2 or len(pa) != len(pairing) or len(pb) != len(pairing):
        raise ValueError("pairing must biject two fresh sets of size >= 2")
    existing = set(d.labels)
    if (pa | pb) & existing:
        raise ValueError("new point ids must be fresh")
    try:
        validate_order(m.order_a, pa, m.set_a)
        validate_order(m.order_b, pb, m.set_b)
    except InvalidDiagram as exc:
        raise ValueError(str(exc)) from None
    if not cyclic_equal(_opposite_through(pairing, m.order_a), m.order_b):
        raise ValueError("new cyclic orders are not opposite through the pairing")

    placed = []
    for ci, gap, block in m.placements:
        if not (0 <= ci < len(d.circles)):
            raise ValueError("placement circle %r out of range" % ci)
        mlen = len(d.circles[ci])
        if not (0 <= gap < max(1, mlen)):
            raise ValueError("placement gap %r out of range" % gap)
        x, y = block
        if pairing.get(x) != y and pairing.get(y) != x:
            raise ValueError("placement block %r is not a matched pair" % (block,))
        placed.append((ci, gap, (x, y)))
    if {x for _, _, blk in placed for x in blk} != pa | pb \
            or len(placed) != len(pairing):
        raise ValueError("placements must cover each pair exactly once")

    by_slot = {}
    for ci, gap, blk in placed:
        by_slot.setdefault((ci, gap), []).append(blk)
    circles = []
    for ci, c in enumerate(d.circles):
        seq = []
        if not c:
            for blk in by_slot.get((ci, 0), []):
                seq.extend(blk)
        else:
            for i, p in enumerate(c):
                for blk in by_slot.get((ci, i), []):
                    seq.extend(blk)
                seq.append(p)
        circles.append(tuple(seq))

    labels = dict(d.labels)
    for x in pa:
        labels[x] = m.set_a
    for y in pb:
        labels[y] = m.set_b
    orders = dict(d.orders)
    orders[m.set_a] = tuple(m.order_a)
    orders[m.set_b] = tuple(m.order_b)
    out = GaussDiagram(circles, labels, orders)
    validate(out)
    return out


def annihilation_of(m):
    """The cancellation undoing a creation descriptor."""
    return PhiDescriptor(m.set_a, m.set_b, m.pairing, "annihilate")


def enumerate_psi_moves(d):
    """All slide descriptors on d, deterministically ordered."""
    by_label = _points_by_label(d)
    pos = _positions(d)
    out = []
    for big in sorted(by_label, key=str):
        n = len(by_label[big])
        if n < 3:
            continue
        big_pts = set(by_label[big])
        token_pos = {tok: i for i, tok in enumerate(d.orders[big])}
        for small in sorted(by_label, key=str):
            k = len(by_label[small])
            if small == big or not (1 < k < n):
                continue
            small_pts = _sort_points(by_label[small])
            # All small points sit on the same side of their big
            # partners, so each side admits at most one attachment.
            for side in (-1, +1):
                att = []
                for x in small_pts:
                    prv, nxt = _neighbors(d, pos, x)
                    b = nxt if side == -1 else prv
                    if b not in big_pts or b == x:
                        break
                    att.append((x, b, side))
                if len(att) < k:
                    continue
                if not _run_is_consecutive([token_pos[(b, s)] for _, b, s in att],
                                           2 * n):
                    continue
                m = PsiDescriptor(big, small, tuple(att))
                if _psi_orders_opposite(d, m):
                    out.append(m)
    return out


def _run_is_consecutive(positions, modulus):
    k = len(positions)
    s = sorted(positions)
    breaks = sum(1 for i in range(k) if (s[(i + 1) % k] - s[i]) % modulus != 1)
    return breaks == 1


def _psi_orders_opposite(d, m):
    """Big suborder on the attachment branches, transported point to
    point, must reverse onto the small order."""
    corr = {b: x for x, b, _ in m.attachment}
    sub = tuple((corr[b], e) for b, e in d.orders[m.big] if b in corr)
    return cyclic_equal(tuple(reversed(sub)), d.orders[m.small])


def _check_psi(d, m):
    by_label = _points_by_label(d)
    if m.big not in by_label or m.small not in by_label:
        raise ValueError("bad set labels %r, %r" % (m.big, m.small))
    n, k = len(by_label[m.big]), len(by_label[m.small])
    if not (1 < k < n):
        raise ValueError("need small size k with 1 < k < n")
    att = list(m.attachment)
    if {x for x, _, _ in att} != set(by_label[m.small]) or len(att) != k:
        raise ValueError("attachment must cover every small point once")
    big_pts = set(by_label[m.big])
    if len({b for _, b, _ in att}) != k or any(b not in big_pts for _, b, _ in att):
        raise ValueError("attachment must use k distinct big points")
    if len({s for _, _, s in att}) != 1:
        raise ValueError("small points must sit on one common side of their big partners")
    pos = _positions(d)
    for x, b, s in att:
        prv, nxt = _neighbors(d, pos, x)
        if s == -1 and nxt != b or s == +1 and prv != b or s not in (-1, 1):
            raise ValueError("point %r is not adjacent to %r on side %r" % (x, b, s))
    token_pos = {tok: i for i, tok in enumerate(d.orders[m.big])}
    try:
        positions = [token_pos[(b, s)] for _, b, s in att]
    except KeyError:
        raise ValueError("attachment endpoint missing from big order") from None
    if not _run_is_consecutive(positions, 2 * n):
        raise ValueError("attachment endpoints are not consecutive in the big order")
    if not _psi_orders_opposite(d, m):
        raise ValueError("cyclic orders do not match through the attachment")


def apply_psi(d, m):
    """Slide the small set through the big one; raises ValueError if m
    does not apply.  Point census and crossing count are unchanged."""
    _check_psi(d, m)
    moving = {x for x, _, _ in m.attachment}
    before = {}
    after = {}
    for x, b, s in m.attachment:
        if s == -1:  # x was before b, lands after
            after[b] = x
        else:
            before[b] = x
    circles = []
    for c in d.circles:
        seq = []
        for p in c:
            if p in moving:
                continue
            if p in before:
                seq.append(before[p])
            seq.append(p)
            if p in after:
                seq.append(after[p])
        circles.append(tuple(seq))
    orders = dict(d.orders)
    orders[m.small] = tuple(reversed(orders[m.small]))
    orders[m.big] = reverse_subset_order(orders[m.big], {b for _, b, _ in m.attachment})
    return GaussDiagram(circles, dict(d.labels), orders)


def psi_inverse(m):
    """Mirror descriptor: applying it after apply_psi restores the diagram."""
    return PsiDescriptor(m.big, m.small,
                         tuple((x, b, -s) for x, b, s in m.attachment))


def apply_move(d, m):
    if isinstance(m, PsiDescriptor):
        return apply_psi(d, m)
    if isinstance(m, PhiDescriptor):
        return apply_phi(d, m)
    raise ValueError("not a move descriptor: %r" % (m,))


# ---------------------------------------------------------------------------
# JSON form of descriptors, for replay files.


def move_to_json(m):
    if isinstance(m, PsiDescriptor):
        return {"type": "psi", "big": m.big, "small": m.small,
                "attachment": [[x, b, s] for x, b, s in m.attachment]}
    if isinstance(m, PhiDescriptor):
        obj = {"type": "phi", "direction": m.direction, "set_a": m.set_a,
               "set_b": m.set_b, "pairing": [[a, b] for a, b in m.pairing]}
        if m.direction == "create":
            obj["placements"] = [[ci, gap, list(blk)] for ci, gap, blk in m.placements]
            obj["order_a"] = [[x, s] for x, s in m.order_a]
            obj["order_b"] = [[x, s] for x, s in m.order_b]
        return obj
    raise ValueError("not a move descriptor: %r" % (m,))


def move_from_json(obj):
    kind = obj.get("type")
    if kind == "psi":
        return PsiDescriptor(obj["big"], obj["small"],
                             tuple((x, b, int(s)) for x, b, s in obj["attachment"]))
    if kind == "phi":
        direction = obj.get("direction", "annihilate")
        pairing = tuple((a, b) for a, b in obj["pairing"])
        if direction == "create":
            return PhiDescriptor(
                obj["set_a"], obj["set_b"], pairing, "create",
                tuple((ci, gap, tuple(blk)) for ci, gap, blk in obj["placements"]),
                tuple((x, int(s)) for x, s in obj["order_a"]),
                tuple((x, int(s)) for x, s in obj["order_b"]))
        return PhiDescriptor(obj["set_a"], obj["set_b"], pairing, direction)
    raise ValueError("bad move JSON: %r" % (obj,))
