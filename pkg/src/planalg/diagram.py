"""Non-crossing labeled strand diagrams on a rectangle.

A diagram on 2n boundary points has points 1..n along the top edge
(left to right) and n+1..2n along the bottom edge (right to left), so
that point i and point 2n+1-i share an x-coordinate and 1..2n is the
clockwise boundary order.  A *matching* is a non-crossing perfect
matching of the 2n points; every strand then joins an odd point to an
even point, and its *canonical direction* runs from the even endpoint
to the odd endpoint.  A :class:`LabeledDiagram` attaches a basis index
of a table algebra to each strand, stored relative to the canonical
direction (reading a strand backwards reads the label through the
algebra's anti-involution).

This module is purely combinatorial: enumeration, edge classification,
stacking two matchings into paths and closed loops, and splitting or
joining diagrams along a horizontal cut.  The algebra (fusing labels,
loop scalars) lives in :mod:`planalg.planar`.

>>> len(matchings(3))
5
>>> e_matching(3, 1)
((1, 2), (3, 4), (5, 6))
>>> sorted(principal_pairs(e_matching(3, 2)))
[(1, 6)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _pair(a: int, b: int) -> tuple:
    return (a, b) if a < b else (b, a)


def partner_map(matching) -> dict:
    out = {}
    for a, b in matching:
        out[a] = b
        out[b] = a
    return out


# -- enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def matchings(n: int) -> tuple:
    """All non-crossing perfect matchings of 1..2n, lexicographically.

    >>> [len(matchings(n)) for n in range(1, 6)]
    [1, 2, 5, 14, 42]
    """
    return tuple(sorted(_perfect(tuple(range(1, 2 * n + 1)))))


def _perfect(points: tuple) -> list:
    if not points:
        return [()]
    out = []
    a = points[0]
    for j in range(1, len(points), 2):
        arc = _pair(a, points[j])
        for inner in _perfect(points[1:j]):
            for outer in _perfect(points[j + 1 :]):
                out.append(tuple(sorted((arc,) + inner + outer)))
    return out


@lru_cache(maxsize=None)
def half_arcs(n: int, lam: int) -> tuple:
    """Arc sets of half-diagrams on points 1..n with lam through points.

    A half-diagram is a non-crossing partial matching whose unmatched
    points are not covered by any arc (they must reach the opposite
    edge unobstructed).  Requires n - lam even.

    >>> half_arcs(3, 1)
    (((1, 2),), ((2, 3),))
    >>> [len(half_arcs(4, k)) for k in (0, 2, 4)]
    [2, 3, 1]
    """
    if lam < 0 or lam > n or (n - lam) % 2:
        raise ValueError(f"no half-diagrams on {n} points with {lam} through points")
    want = (n - lam) // 2
    return tuple(
        sorted(arcs for arcs in _partial(tuple(range(1, n + 1))) if len(arcs) == want)
    )


def _partial(points: tuple) -> list:
    if not points:
        return [()]
    out = []
    a = points[0]
    for rest in _partial(points[1:]):
        out.append(rest)  # a is a through point; nothing may cover it
    for j in range(1, len(points), 2):
        arc = _pair(a, points[j])
        for inner in _perfect(points[1:j]):
            for outer in _partial(points[j + 1 :]):
                out.append(tuple(sorted((arc,) + inner + outer)))
    return out


# -- edge classification ------------------------------------------------------


def principal_pairs(matching) -> frozenset:
    """The strands bounding the face at the left wall of the rectangle.

    Walks the face of the gap between points 2n and 1: from a gap g the
    walk meets the strand at point g+1 and continues at the gap after
    its partner.  A strand is principal exactly when it is not nested
    inside any other strand.

    >>> sorted(principal_pairs(((1, 2), (3, 6), (4, 5))))
    [(1, 2), (3, 6)]
    """
    partner = partner_map(matching)
    n2 = 2 * len(matching)
    out = set()
    g = 0
    while True:
        p = g + 1
        q = partner[p]
        out.add(_pair(p, q))
        g = q % n2
        if g == 0:
            return frozenset(out)


@dataclass(frozen=True)
class EdgeKind:
    propagating: bool  # joins the top edge to the bottom edge
    principal: bool  # lies on the left-wall face
    transitional: bool  # exactly one endpoint at a left corner (1 or 2n)


def edge_kinds(matching) -> dict:
    """Classification of every strand of a matching.

    >>> kinds = edge_kinds(((1, 4), (2, 3), (5, 6)))
    >>> kinds[(1, 4)]
    EdgeKind(propagating=True, principal=True, transitional=True)
    >>> kinds[(5, 6)].transitional
    True
    """
    n = len(matching)
    principal = principal_pairs(matching)
    out = {}
    for a, b in matching:
        corners = (a == 1) + (b == 2 * n)
        out[(a, b)] = EdgeKind(
            propagating=a <= n < b,
            principal=(a, b) in principal,
            transitional=corners == 1,
        )
    return out


# -- labeled diagrams ---------------------------------------------------------


@dataclass(frozen=True, order=True)
class LabeledDiagram:
    """A matching with one label index per strand.

    ``labels[k]`` belongs to the k-th pair of the sorted matching and is
    read along the canonical (even-to-odd) direction of that strand.
    """

    matching: tuple
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.matching):
            raise ValueError("need exactly one label per strand")

    @property
    def n(self) -> int:
        return len(self.matching)

    def label_map(self) -> dict:
        return dict(zip(self.matching, self.labels))

    def relabel(self, new_labels) -> "LabeledDiagram":
        return LabeledDiagram(self.matching, tuple(new_labels))

    def to_text(self) -> str:
        body = " ".join(f"{a}-{b}:{l}" for (a, b), l in zip(self.matching, self.labels))
        return f"n={self.n} | {body}"

    @classmethod
    def from_text(cls, text: str) -> "LabeledDiagram":
        """Parse the format written by :meth:`to_text`.

        >>> LabeledDiagram.from_text('n=2 | 1-2:1 3-4:1').labels
        (1, 1)
        """
        head, _, body = text.partition("|")
        head = head.strip()
        if not head.startswith("n="):
            raise ValueError(f"diagram text must start with 'n=': {text!r}")
        n = int(head[2:])
        pairs = []
        labels = {}
        for tok in body.split():
            arc, _, lab = tok.partition(":")
            a, _, b = arc.partition("-")
            p = _pair(int(a), int(b))
            pairs.append(p)
            labels[p] = int(lab) if lab else 0
        pairs.sort()
        seen = sorted(x for p in pairs for x in p)
        if len(pairs) != n or seen != list(range(1, 2 * n + 1)):
            raise ValueError(f"strands do not cover points 1..{2 * n}: {text!r}")
        return cls(tuple(pairs), tuple(labels[p] for p in pairs))


def identity_matching(n: int) -> tuple:
    return tuple((i, 2 * n + 1 - i) for i in range(1, n + 1))


def identity_diagram(n: int, identity_label: int = 0) -> LabeledDiagram:
    m = identity_matching(n)
    return LabeledDiagram(m, (identity_label,) * n)


def e_matching(n: int, k: int) -> tuple:
    """The cup-cap matching: top arc (k, k+1), bottom arc below it."""
    if not 1 <= k < n:
        raise ValueError(f"e_matching needs 1 <= k < n, got k={k}, n={n}")
    pairs = [(k, k + 1), (2 * n - k, 2 * n + 1 - k)]
    pairs += [(i, 2 * n + 1 - i) for i in range(1, n + 1) if i not in (k, k + 1)]
    return tuple(sorted(pairs))


def e_diagram(n: int, k: int, label: int, inv, identity_label: int = 0) -> LabeledDiagram:
    """The cup-cap diagram with the top arc labeled ``label``.

    The bottom arc carries the anti-involution partner of ``label`` (so
    the diagram is self-adjoint) and through strands carry the identity.
    ``inv`` is the label algebra's anti-involution permutation.
    """
    m = e_matching(n, k)
    top, bottom = (k, k + 1), (2 * n - k, 2 * n + 1 - k)
    labels = []
    for p in m:
        if p == top:
            labels.append(label)
        elif p == bottom:
            labels.append(inv[label])
        else:
            labels.append(identity_label)
    return LabeledDiagram(m, tuple(labels))


def star_diagram(d: LabeledDiagram, inv) -> LabeledDiagram:
    """Reflect top-to-bottom (i -> 2n+1-i) and flip labels through ``inv``.

    >>> d = LabeledDiagram(((1, 2), (3, 4)), (1, 0))
    >>> star_diagram(d, (0, 2, 1)).labels
    (0, 2)
    """
    n2 = 2 * d.n
    items = sorted(
        (_pair(n2 + 1 - a, n2 + 1 - b), inv[l])
        for (a, b), l in zip(d.matching, d.labels)
    )
    return LabeledDiagram(tuple(p for p, _ in items), tuple(l for _, l in items))


def tensor_matched(d1: LabeledDiagram, d2: LabeledDiagram, inv) -> LabeledDiagram:
    """Place d2 to the right of d1 on n1 + n2 points.

    Points of d1: top fixed, bottom shifted by 2*n2.  Points of d2: all
    shifted by n1; when n1 is odd this flips every canonical direction
    in the right block, so d2's labels pass through ``inv``.
    """
    n1, n2 = d1.n, d2.n
    items = [
        (_pair(a if a <= n1 else a + 2 * n2, b if b <= n1 else b + 2 * n2), l)
        for (a, b), l in zip(d1.matching, d1.labels)
    ]
    flip = n1 % 2 == 1
    items += [
        ((a + n1, b + n1), inv[l] if flip else l)
        for (a, b), l in zip(d2.matching, d2.labels)
    ]
    items.sort()
    return LabeledDiagram(tuple(p for p, _ in items), tuple(l for _, l in items))


# -- stacking ----------------------------------------------------------------

#: One traversal step through a strand: (0 for the upper diagram or 1 for
#: the lower, the strand's pair in its own numbering, and True when the
#: strand was entered at its odd endpoint, i.e. read against its
#: canonical direction).
Segment = tuple


@dataclass(frozen=True)
class Stacked:
    """Combinatorics of one diagram stacked on another.

    ``paths[k]`` lists the segments of the strand realizing the k-th
    pair of the composite matching, ordered along the composite strand's
    canonical direction.  ``loops`` lists the segment cycles of closed
    loops created at the interface, each starting from the smallest
    unvisited top point of the lower diagram, in that order.
    """

    matching: tuple
    paths: tuple
    loops: tuple


@lru_cache(maxsize=None)
def stack_matchings(m_top: tuple, m_bot: tuple) -> Stacked:
    """Stack ``m_top`` over ``m_bot``, gluing bottom edge to top edge.

    The upper diagram's bottom point q touches the lower diagram's top
    point 2n+1-q (they share an x-coordinate).  The composite keeps the
    upper diagram's top points 1..n and the lower diagram's bottom
    points n+1..2n.

    >>> e1 = e_matching(3, 1)
    >>> s = stack_matchings(e1, e1)
    >>> s.matching == e1 and len(s.loops) == 1
    True
    >>> stack_matchings(identity_matching(2), identity_matching(2)).loops
    ()
    """
    n = len(m_top)
    if len(m_bot) != n:
        raise ValueError("stacked diagrams must have the same number of points")
    p_top, p_bot = partner_map(m_top), partner_map(m_bot)
    n2 = 2 * n
    seen_top: set = set()
    seen_bot: set = set()
    paths = {}
    for start in range(1, n2 + 1):
        if start <= n:
            if start in seen_top:
                continue
            here, p = 0, start
        else:
            if start in seen_bot:
                continue
            here, p = 1, start
        segs = []
        while True:
            if here == 0:
                q = p_top[p]
                seen_top.update((p, q))
                segs.append((0, _pair(p, q), p % 2 == 1))
                if q <= n:
                    end = q
                    break
                here, p = 1, n2 + 1 - q
            else:
                q = p_bot[p]
                seen_bot.update((p, q))
                segs.append((1, _pair(p, q), p % 2 == 1))
                if q > n:
                    end = q
                    break
                here, p = 0, n2 + 1 - q
        if start % 2 == end % 2:
            raise AssertionError("composite strand endpoints have equal parity")
        if start % 2 == 1:  # canonical direction runs even -> odd
            segs = [(w, pr, not ag) for w, pr, ag in reversed(segs)]
        paths[_pair(start, end)] = tuple(segs)
    loops = []
    for anchor in range(1, n + 1):
        if anchor in seen_bot:
            continue
        here, p = 1, anchor
        segs = []
        while True:
            if here == 1:
                q = p_bot[p]
                seen_bot.update((p, q))
                segs.append((1, _pair(p, q), p % 2 == 1))
                here, p = 0, n2 + 1 - q
            else:
                q = p_top[p]
                seen_top.update((p, q))
                segs.append((0, _pair(p, q), p % 2 == 1))
                here, p = 1, n2 + 1 - q
            if here == 1 and p == anchor:
                break
        loops.append(tuple(segs))
    matching = tuple(sorted(paths))
    return Stacked(matching, tuple(paths[p] for p in matching), tuple(loops))


# -- half-diagrams -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class HalfDiagram:
    """A labeled half-diagram: arcs among 1..n, unmatched points propagate.

    Arc labels are read along the canonical direction of the arc as a
    top strand (even endpoint to odd endpoint); through points carry no
    label here.
    """

    n: int
    arcs: tuple
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.arcs):
            raise ValueError("need exactly one label per arc")

    @property
    def through(self) -> tuple:
        used = {x for arc in self.arcs for x in arc}
        return tuple(i for i in range(1, self.n + 1) if i not in used)

    @property
    def lam(self) -> int:
        return self.n - 2 * len(self.arcs)


def half_join(s: HalfDiagram, b: tuple, t: HalfDiagram, inv) -> LabeledDiagram:
    """Assemble a full diagram from halves S (top), T (bottom) and b.

    T is mirrored to the bottom edge: its arc (a1, a2) becomes the
    bottom pair (2n+1-a2, 2n+1-a1) carrying the involuted label.  The
    k-th propagating strand (left to right, 1-based) joins the k-th
    through points and stores b[k-1] for odd k, its involute for even k
    (the k-th through point always has the parity of k, so this stores
    each b[k-1] as read upward along the strand).

    >>> s = HalfDiagram(2, ((1, 2),), (1,))
    >>> half_join(s, (), s, (0, 2, 1)).to_text()
    'n=2 | 1-2:1 3-4:2'
    """
    n = s.n
    if t.n != n or s.lam != t.lam or len(b) != s.lam:
        raise ValueError("halves must agree on size and through count")
    n2 = 2 * n
    items = list(zip(s.arcs, s.labels))
    items += [
        (_pair(n2 + 1 - a2, n2 + 1 - a1), inv[l])
        for (a1, a2), l in zip(t.arcs, t.labels)
    ]
    for k, (p, q) in enumerate(zip(s.through, t.through), start=1):
        items.append((_pair(p, n2 + 1 - q), b[k - 1] if k % 2 else inv[b[k - 1]]))
    items.sort()
    return LabeledDiagram(tuple(p for p, _ in items), tuple(l for _, l in items))


def half_split(d: LabeledDiagram, inv) -> tuple:
    """Inverse of :func:`half_join`: returns (S, b, T).

    >>> d = LabeledDiagram.from_text('n=2 | 1-2:1 3-4:2')
    >>> s, b, t = half_split(d, (0, 2, 1))
    >>> (s == t, b)
    (True, ())
    """
    n, n2 = d.n, 2 * d.n
    top, bot, props = [], [], []
    for (a, b_), l in zip(d.matching, d.labels):
        if b_ <= n:
            top.append(((a, b_), l))
        elif a > n:
            bot.append((_pair(n2 + 1 - b_, n2 + 1 - a), inv[l]))
        else:
            props.append(((a, b_), l))
    top.sort()
    bot.sort()
    props.sort()
    b_tuple = tuple(
        l if k % 2 else inv[l] for k, ((_, _), l) in enumerate(props, start=1)
    )
    s = HalfDiagram(n, tuple(p for p, _ in top), tuple(l for _, l in top))
    t = HalfDiagram(n, tuple(p for p, _ in bot), tuple(l for _, l in bot))
    return s, b_tuple, t
