"""Gauss diagrams of curves with multiple points on oriented circles.

A diagram is a union of oriented circles carrying marked points, a
partition of the points into singular sets (each of size >= 2, one set
per multiple point of the curve), and for each set an oriented cyclic
order: a cyclic sequence of the 2k endpoints (x, -1) / (x, +1) of its k
branches in which antipodal entries are negatives of each other.

Marked point ids and set labels are arbitrary; labels are kept as
strings.  Circles are stored as concrete tuples, one rotation of the
cyclic sequence; all cyclic invariance is handled by canonical_form.
"""

from __future__ import annotations

import json

from . import _kernel


class InvalidDiagram(ValueError):
    pass


class GaussDiagram:
    """Immutable-by-convention container: circles, labels, orders.

    circles: tuple of tuples of point ids (empty tuple = free loop)
    labels:  dict point id -> set label (str)
    orders:  dict label -> tuple of (point id, sign), sign in {-1, +1}
    """

    __slots__ = ("circles", "labels", "orders")

    def __init__(self, circles, labels, orders):
        self.circles = tuple(tuple(c) for c in circles)
        self.labels = dict(labels)
        self.orders = {lab: tuple((x, int(s)) for x, s in o)
                       for lab, o in orders.items()}

    def points_of(self, label):
        return [x for x, lab in self.labels.items() if lab == label]

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return (self.circles == other.circles and self.labels == other.labels
                and self.orders == other.orders)

    def __repr__(self):
        return "GaussDiagram(circles=%r, sets=%d)" % (self.circles, len(self.orders))


def validate(d):
    """Raise InvalidDiagram at the first violated invariant."""
    seen = set()
    for c in d.circles:
        for x in c:
            if x in seen:
                raise InvalidDiagram("duplicate marked point %r" % (x,))
            seen.add(x)
    if set(d.labels) != seen:
        missing = seen - set(d.labels)
        extra = set(d.labels) - seen
        if missing:
            raise InvalidDiagram("point %r has no set label" % (next(iter(missing)),))
        raise InvalidDiagram("label entry for unknown point %r" % (next(iter(extra)),))

    by_label = {}
    for x, lab in d.labels.items():
        by_label.setdefault(lab, set()).add(x)
    if set(d.orders) != set(by_label):
        missing = set(by_label) - set(d.orders)
        extra = set(d.orders) - set(by_label)
        if missing:
            raise InvalidDiagram("singular set %r has no cyclic order" % (next(iter(missing)),))
        raise InvalidDiagram("order given for unknown set %r" % (next(iter(extra)),))

    for lab, pts in sorted(by_label.items(), key=lambda kv: str(kv[0])):
        if len(pts) < 2:
            raise InvalidDiagram("singular set %r has %d point, need >= 2"
                                 % (lab, len(pts)))
        order = d.orders[lab]
        validate_order(order, pts, lab)
    return None


def validate_order(order, pts, lab="?"):
    """Check one oriented cyclic order against its ground set."""
    k = len(pts)
    if len(order) != 2 * k or {x for x, _ in order} != set(pts) \
            or len(set(order)) != len(order):
        raise InvalidDiagram("incomplete order on set %r: need each of the %d "
                             "endpoints exactly once" % (lab, 2 * k))
    for x, s in order:
        if s not in (-1, 1):
            raise InvalidDiagram("bad sign %r in order on set %r" % (s, lab))
    for i in range(k):
        x, s = order[i]
        y, t = order[i + k]
        if x != y or s != -t:
            raise InvalidDiagram("order on set %r is not antipodal at position %d"
                                 % (lab, i))


def crossing_count(d):
    """Number of singular sets (multiple points of the curve)."""
    return len(d.orders)


def is_doodle(d):
    """True when every singular set has exactly 2 points (double points only)."""
    sizes = {}
    for lab in d.labels.values():
        sizes[lab] = sizes.get(lab, 0) + 1
    return all(v == 2 for v in sizes.values())


def induced_suborder(order, subset):
    """Restriction of an oriented cyclic order to the branches in subset."""
    return tuple((x, s) for x, s in order if x in subset)


def canonical_key(d, labeled_components=False):
    """Canonical encoding as bytes; equal iff diagrams are isomorphic.

    Isomorphism: relabeling of points and sets, rotation of each circle,
    and (unless labeled_components) permutation of the circles.  Circle
    orientations and the cyclic orders are never reversed.
    """
    return _kernel.canonical_key(d.circles, d.labels, d.orders, labeled_components)


def canonical_form(d, labeled_components=False):
    """canonical_key rendered as a printable string."""
    return _kernel.render_key(canonical_key(d, labeled_components))


def isomorphism(d1, d2, labeled_components=False):
    """A point bijection realizing d1 == d2 up to isomorphism, else None.

    Both diagrams are canonicalized with the walk map kept; composing one
    map with the inverse of the other sends each point of d1 to the point
    of d2 at the same canonical position.  Points on free loops do not
    appear (there are none).
    """
    k1, m1 = _kernel.canonical_key_with_map(d1.circles, d1.labels, d1.orders,
                                            labeled_components)
    k2, m2 = _kernel.canonical_key_with_map(d2.circles, d2.labels, d2.orders,
                                            labeled_components)
    if k1 != k2:
        return None
    inv2 = {w: x for x, w in m2.items()}
    return {x: inv2[w] for x, w in m1.items()}


# ---------------------------------------------------------------------------
# JSON form.  {"circles": [[id,...],...],
#              "sets": {label: {"points": [...], "order": [[id, sign],...]}}}
# Cyclic sequences may be serialized from any starting point.


def to_json_obj(d):
    sets = {}
    for lab, order in sorted(d.orders.items(), key=lambda kv: str(kv[0])):
        pts = sorted(d.points_of(lab), key=_point_sort_key)
        sets[str(lab)] = {"points": pts, "order": [[x, s] for x, s in order]}
    return {"circles": [list(c) for c in d.circles], "sets": sets}


def from_json_obj(obj):
    if not isinstance(obj, dict) or "circles" not in obj or "sets" not in obj:
        raise InvalidDiagram("diagram JSON needs 'circles' and 'sets'")
    circles = [tuple(_point_id(x) for x in c) for c in obj["circles"]]
    labels = {}
    orders = {}
    for lab, body in obj["sets"].items():
        if "points" not in body or "order" not in body:
            raise InvalidDiagram("set %r needs 'points' and 'order'" % lab)
        pts = [_point_id(x) for x in body["points"]]
        for x in pts:
            if x in labels:
                raise InvalidDiagram("point %r listed in two sets" % (x,))
            labels[x] = lab
        try:
            orders[lab] = tuple((_point_id(x), int(s)) for x, s in body["order"])
        except (TypeError, ValueError):
            raise InvalidDiagram("bad order entry on set %r" % lab) from None
    d = GaussDiagram(circles, labels, orders)
    validate(d)
    return d


def dumps(d, indent=None):
    return json.dumps(to_json_obj(d), indent=indent, sort_keys=True)


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDiagram("not JSON: %s" % exc) from None
    return from_json_obj(obj)


def _point_id(x):
    # ints and strings are both accepted as point ids
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InvalidDiagram("bad point id %r" % (x,))
    return x


def _point_sort_key(x):
    return (0, x, "") if isinstance(x, int) else (1, 0, x)
