"""Words in the cactus group J_n and their images in the symmetric group.

Generators s_{p,q} (1 <= p < q <= n) reverse the order of the interval
[p, q] of strand positions.  Words compose left to right: the leftmost
letter acts first.  The defining relations are

  C1:  s_{p,q} s_{p,q} = 1
  C2:  s_{p,q} s_{m,r} = s_{m,r} s_{p,q}               [p,q] and [m,r] disjoint
  C3:  s_{p,q} s_{m,r} = s_{p+q-r,p+q-m} s_{p,q}       [m,r] inside [p,q]
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class Generator:
    """A letter s_{p,q} acting on n strands."""

    p: int
    q: int
    n: int

    def __post_init__(self):
        if not (1 <= self.p < self.q <= self.n):
            raise ValueError("generator needs 1 <= p < q <= n, got s(%s,%s) with n=%s"
                             % (self.p, self.q, self.n))

    def __str__(self):
        return "s(%d,%d)" % (self.p, self.q)


@dataclass(frozen=True)
class CactusWord:
    """A finite product of generators, all sharing the same n."""

    n: int
    letters: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")
        for g in self.letters:
            if g.n != self.n:
                raise ValueError("letter %s has n=%d, word has n=%d" % (g, g.n, self.n))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self)


def word(n, pairs):
    """Convenience constructor: word(3, [(1,3),(1,2)])."""
    return CactusWord(n, tuple(Generator(p, q, n) for p, q in pairs))


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple

    def __call__(self, i):
        return self.images[i - 1]

    @property
    def n(self):
        return len(self.images)

    def then(self, other):
        """Composite 'self first, then other'."""
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self):
        """Cycles as tuples, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    @staticmethod
    def identity(n):
        return Permutation(tuple(range(1, n + 1)))


def perm_of_generator(g):
    """Image of s_{p,q}: fixes i outside [p,q], sends p+i to q-i."""
    images = []
    for i in range(1, g.n + 1):
        images.append(g.p + g.q - i if g.p <= i <= g.q else i)
    return Permutation(tuple(images))


def perm_image(w):
    """Image of a word under J_n -> S_n (leftmost letter acts first)."""
    perm = Permutation.identity(w.n)
    for g in w.letters:
        perm = perm.then(perm_of_generator(g))
    return perm


def _interval(g):
    return g.p, g.q


@dataclass(frozen=True)
class RelationInstance:
    """A relation matched at an adjacent pair of letters.

    (p, q) and (m, r) are the template parameters of the relation with
    [m,r] inside [p,q] for C3.  flipped marks a C3 match of the right
    hand side s_{p+q-r,p+q-m} s_{p,q} instead of the left hand side.
    """

    kind: str  # C1 | C2 | C3
    position: int
    p: int
    q: int
    m: int = 0
    r: int = 0
    flipped: bool = False


def find_relations(w):
    """All relation instances at adjacent positions of w, in scan order."""
    out = []
    for i in range(len(w.letters) - 1):
        g1, g2 = w.letters[i], w.letters[i + 1]
        (p1, q1), (p2, q2) = _interval(g1), _interval(g2)
        if (p1, q1) == (p2, q2):
            out.append(RelationInstance("C1", i, p1, q1))
            continue
        if q1 < p2 or q2 < p1:
            out.append(RelationInstance("C2", i, p1, q1, p2, q2))
            continue
        if p1 <= p2 and q2 <= q1:
            # word shows the left side s_{p,q} s_{m,r}
            out.append(RelationInstance("C3", i, p1, q1, p2, q2))
        elif p2 <= p1 and q1 <= q2:
            # word shows the right side; recover (m, r) by reflecting
            out.append(RelationInstance("C3", i, p2, q2,
                                        p2 + q2 - q1, p2 + q2 - p1, flipped=True))
        # overlapping but not nested: no relation applies
    return out


def apply_relation(w, inst):
    """Rewrite w at inst.  C1 deletes the pair, C2 swaps, C3 reflects."""
    i = inst.position
    if not (0 <= i < len(w.letters) - 1):
        raise ValueError("instance position %d out of range" % i)
    g1, g2 = w.letters[i], w.letters[i + 1]
    n = w.n

    if inst.kind == "C1":
        if _interval(g1) != (inst.p, inst.q) or _interval(g2) != (inst.p, inst.q):
            raise ValueError("C1 instance does not match word at %d" % i)
        repl = ()
    elif inst.kind == "C2":
        pair = {_interval(g1), _interval(g2)}
        if pair != {(inst.p, inst.q), (inst.m, inst.r)}:
            raise ValueError("C2 instance does not match word at %d" % i)
        repl = (g2, g1)
    elif inst.kind == "C3":
        p, q, m, r = inst.p, inst.q, inst.m, inst.r
        big = Generator(p, q, n)
        if not inst.flipped:
            if _interval(g1) != (p, q) or _interval(g2) != (m, r):
                raise ValueError("C3 instance does not match word at %d" % i)
            repl = (Generator(p + q - r, p + q - m, n), big)
        else:
            if _interval(g1) != (p + q - r, p + q - m) or _interval(g2) != (p, q):
                raise ValueError("C3 instance does not match word at %d" % i)
            repl = (big, Generator(m, r, n))
    else:
        raise ValueError("unknown relation kind %r" % inst.kind)

    return CactusWord(n, w.letters[:i] + repl + w.letters[i + 2:])


def bounded_word_equal(w1, w2, depth):
    """Semi-decision of word equality: BFS over rewrites of w1.

    Returns 'equal' if w2 is reached within the given number of rewrite
    steps, else 'unknown'.  Never reports a false 'equal'.
    """
    if w1.n != w2.n:
        raise ValueError("words live in different groups")
    target = w2.letters
    seen = {w1.letters}
    queue = deque([(w1, 0)])
    while queue:
        w, d = queue.popleft()
        if w.letters == target:
            return "equal"
        if d == depth:
            continue
        for inst in find_relations(w):
            nxt = apply_relation(w, inst)
            if nxt.letters not in seen:
                seen.add(nxt.letters)
                queue.append((nxt, d + 1))
    return "unknown"


def parse_word(text):
    """Parse 'n=3 s(1,3) s(2,3)' into a CactusWord."""
    tokens = text.split()
    if not tokens or not tokens[0].startswith("n="):
        raise ValueError("word text must start with an n=<int> header")
    try:
        n = int(tokens[0][2:])
    except ValueError:
        raise ValueError("bad n header %r" % tokens[0]) from None
    if n < 1:
        raise ValueError("need n >= 1")
    letters = []
    for tok in tokens[1:]:
        if not (tok.startswith("s(") and tok.endswith(")")):
            raise ValueError("bad letter token %r" % tok)
        body = tok[2:-1].split(",")
        if len(body) != 2:
            raise ValueError("bad letter token %r" % tok)
        try:
            p, q = int(body[0]), int(body[1])
        except ValueError:
            raise ValueError("bad letter token %r" % tok) from None
        letters.append(Generator(p, q, n))  # raises on p >= q or q > n
    return CactusWord(n, tuple(letters))


def format_word(w):
    return " ".join(["n=%d" % w.n] + [str(g) for g in w.letters])
