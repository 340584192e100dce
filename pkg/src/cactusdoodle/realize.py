"""Realizability of a Gauss diagram as a curve on the sphere.

Thickening each singular set into a disc (rotation = its oriented
cyclic order, read counterclockwise) and each circle arc into a band
gives a ribbon graph; the diagram is realizable on the sphere iff every
connected component of that graph has genus 0, i.e. V - E + F = 2 with
faces traced from the rotation system.  Circles without marked points
are free loops: always realizable, counted separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .moves import PhiDescriptor, PsiDescriptor, apply_phi, apply_psi


@dataclass(frozen=True)
class RibbonGraph:
    """vertices: set labels; rotations: label -> cyclic tuple of endpoint
    tokens (x, sign); alpha: edge involution pairing (x,+1) with the
    (y,-1) of the next point on the circle."""

    vertices: tuple
    rotations: dict
    alpha: dict
    free_loops: int

    @property
    def n_edges(self):
        return len(self.alpha) // 2


@dataclass(frozen=True)
class FaceStructure:
    """faces: boundary walks, each a cyclic tuple of directed arcs
    (tail token, head token); euler: global V - E + F, counting the two
    sphere regions of each free loop."""

    faces: tuple
    euler: int


def ribbon_graph(d):
    rotations = {}
    vertex_of = {}
    for lab, order in d.orders.items():
        rotations[lab] = tuple(order)
        for x, _ in order:
            vertex_of[x] = lab
    alpha = {}
    free = 0
    for c in d.circles:
        if not c:
            free += 1
            continue
        m = len(c)
        for i, x in enumerate(c):
            y = c[(i + 1) % m]
            alpha[(x, +1)] = (y, -1)
            alpha[(y, -1)] = (x, +1)
    return RibbonGraph(tuple(sorted(rotations, key=str)), rotations, alpha, free)


def faces(g):
    """Boundary walks of the thickened graph: orbits of h -> sigma(alpha(h)).

    A graph with no vertices is the trivial case: no walks, and each
    free loop contributes its 2 sphere regions to euler.
    """
    succ = {}
    for lab in g.vertices:
        rot = g.rotations[lab]
        for i, tok in enumerate(rot):
            succ[tok] = rot[(i + 1) % len(rot)]
    walks = []
    seen = set()
    for lab in g.vertices:
        for tok in g.rotations[lab]:
            if tok in seen:
                continue
            walk = []
            h = tok
            while h not in seen:
                seen.add(h)
                walk.append((h, g.alpha[h]))
                h = succ[g.alpha[h]]
            walks.append(tuple(walk))
    v = len(g.vertices)
    e = g.n_edges
    return FaceStructure(tuple(walks), v - e + len(walks) + 2 * g.free_loops)


def component_stats(g):
    """Per connected component of the vertexed part: (V, E, F, euler)."""
    parent = {lab: lab for lab in g.vertices}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    vertex_of = {}
    for lab in g.vertices:
        for x, _ in g.rotations[lab]:
            vertex_of[x] = lab
    for (x, s), (y, _) in g.alpha.items():
        if s == +1:
            ra, rb = find(vertex_of[x]), find(vertex_of[y])
            if ra != rb:
                parent[ra] = rb

    comp = {}
    for lab in g.vertices:
        comp.setdefault(find(lab), []).append(lab)
    fs = faces(g)
    stats = []
    for root in sorted(comp, key=str):
        labs = set(comp[root])
        v = len(labs)
        e = sum(1 for (x, s) in g.alpha if s == +1 and vertex_of[x] in labs)
        f = sum(1 for walk in fs.faces
                if vertex_of[walk[0][0][0]] in labs)
        stats.append((v, e, f, v - e + f))
    return stats


def is_realizable(d):
    """True iff every connected component embeds in the sphere (genus 0)."""
    g = ribbon_graph(d)
    return all(euler == 2 for _, _, _, euler in component_stats(g))


def genus_report(d):
    """List of per-component dicts for the CLI, free loops last."""
    g = ribbon_graph(d)
    out = []
    for v, e, f, euler in component_stats(g):
        out.append({"V": v, "E": e, "F": f, "euler": euler,
                    "genus": (2 - euler) // 2, "realizable": euler == 2})
    return {"components": out, "free_loops": g.free_loops,
            "realizable": all(c["realizable"] for c in out)}


def check_lemma_preservation(d, m):
    """Apply a slide or a pair cancellation and report realizability of
    the result.  Creations are excluded: they may break realizability."""
    if isinstance(m, PsiDescriptor):
        return is_realizable(apply_psi(d, m))
    if isinstance(m, PhiDescriptor) and m.direction == "annihilate":
        return is_realizable(apply_phi(d, m))
    raise ValueError("move must be a slide or a pair cancellation")
