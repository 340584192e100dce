"""Closure of a cactus word into a Gauss diagram.

The word is read as a wiring diagram on n strands, leftmost letter at
the top.  Each letter s_{p,q} becomes one singular set whose branches
are the strands at positions p..q just above the crossing; the strand
entering at top position p+i leaves at bottom position q-i.  The
closure joins bottom position j back to top position j, so the circles
are the cycles of perm_image(w).

At a crossing of s_{p,q}, with x_j the marked point of the strand at
position j, the oriented cyclic order of the new set is

  (x_q,-1) (x_{q-1},-1) .. (x_p,-1) (x_q,+1) (x_{q-1},+1) .. (x_p,+1)

which satisfies the antipodal condition by construction.
"""

from __future__ import annotations

from .diagram import GaussDiagram
from .words import perm_image


def close(w):
    """Gauss diagram of the closure of w, one singular set per letter.

    Point ids are consecutive ints in creation order (top to bottom,
    right to left within a crossing row); set labels are the letter
    indices as strings.
    """
    n = w.n
    at_pos = list(range(1, n + 1))  # position -> strand (strand = its top position)
    strand_points = {i: [] for i in range(1, n + 1)}
    labels = {}
    orders = {}
    next_pt = 0

    for li, g in enumerate(w.letters):
        lab = str(li)
        pts_at = {}
        for j in range(g.p, g.q + 1):
            pt = next_pt
            next_pt += 1
            strand_points[at_pos[j - 1]].append(pt)
            labels[pt] = lab
            pts_at[j] = pt
        down = list(range(g.q, g.p - 1, -1))
        orders[lab] = tuple([(pts_at[j], -1) for j in down]
                            + [(pts_at[j], +1) for j in down])
        at_pos[g.p - 1:g.q] = at_pos[g.p - 1:g.q][::-1]

    circles = []
    for cyc in perm_image(w).cycles():
        pts = []
        for strand in cyc:
            pts.extend(strand_points[strand])
        circles.append(tuple(pts))
    return GaussDiagram(circles, labels, orders)


def component_count_check(w):
    """Closure circle count (free loops included) equals the cycle count
    of perm_image(w)."""
    return len(close(w).circles) == len(perm_image(w).cycles())
