"""Diagram algebras with strand labels in a table algebra.

A context P(n, A) is the free Z[v, v^-1]-module on labeled non-crossing
diagrams with 2n boundary points and labels in the table algebra A.
The product stacks diagrams: interface strands fuse (the label of a
composite strand is the product of its segments' labels, each read
along the composite strand's canonical direction, multiplied from right
to left as the strand is walked) and each closed loop contributes the
scalar delta * t(fused loop label), where t is the coefficient of the
identity.  Since fused labels are generally sums of basis elements, the
product of two basis diagrams is a Z[v, v^-1]-combination of basis
diagrams.

Also here: the star anti-involution (vertical flip + label involution,
bar on coefficients), the closure traces tr and tau = v^-n tr, the
fusion twist (left-corner strands get multiplied by the group-like top
basis element), juxtaposition of contexts, and the exposed subspace
(diagrams whose decorated strands are all principal).

>>> from .verlinde import make_verlinde
>>> ctx = Context(2, make_verlinde(3))
>>> e = ctx.e_element(1, 1)
>>> e * e == ctx.delta() * e
True
>>> e.tau()
Laurent('v^-1 + v^-3')
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .diagram import (
    LabeledDiagram,
    e_diagram,
    edge_kinds,
    identity_diagram,
    identity_matching,
    matchings,
    partner_map,
    stack_matchings,
    star_diagram,
    tensor_matched,
    _pair,
)
from .laurent import DELTA, Laurent, ONE, ZERO
from .table_algebra import TableAlgebra, index_tuple, tensor_power, tuple_index
from .verlinde import w_multiply


class Context:
    """A diagram algebra P(n, alg): caches for products and traces."""

    def __init__(self, n: int, alg: TableAlgebra):
        if n < 1:
            raise ValueError("need at least one strand")
        self.n = n
        self.alg = alg
        self._basis = None
        self._prod: dict = {}
        self._trace: dict = {}

    def __repr__(self):
        return f"<Context n={self.n} labels={'/'.join(self.alg.labels)}>"

    def basis(self) -> tuple:
        """All labeled diagrams, sorted; the free module basis."""
        if self._basis is None:
            out = []
            for m in matchings(self.n):
                for labels in itertools.product(range(self.alg.rank), repeat=self.n):
                    out.append(LabeledDiagram(m, labels))
            self._basis = tuple(sorted(out))
        return self._basis

    def d_basis(self) -> tuple:
        """The exposed diagrams: every decorated strand is principal."""
        return tuple(d for d in self.basis() if is_exposed(d, self.alg))

    # -- element constructors ------------------------------------------

    def element(self, terms: dict) -> "Element":
        return Element(self, terms)

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {identity_diagram(self.n, self.alg.identity): ONE})

    def delta(self) -> "Element":
        return Element(
            self, {identity_diagram(self.n, self.alg.identity): DELTA}
        )

    def basis_element(self, diagram: LabeledDiagram) -> "Element":
        if diagram.n != self.n:
            raise ValueError("diagram size does not match context")
        return Element(self, {diagram: ONE})

    def e_element(self, k: int, label: int) -> "Element":
        d = e_diagram(self.n, k, label, self.alg.inv, self.alg.identity)
        return self.basis_element(d)

    def from_text(self, text: str) -> "Element":
        """Parse the element format written by :meth:`Element.to_text`."""
        text = text.strip()
        terms: dict = {}
        if text == "0":
            return self.zero()
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            coeff_s, sep, diag_s = line.partition(" * ")
            if not sep:
                raise ValueError(f"element line needs '<coeff> * <diagram>': {raw!r}")
            d = LabeledDiagram.from_text(diag_s)
            terms[d] = terms.get(d, ZERO) + Laurent.parse(coeff_s)
        return Element(self, terms)


def fuse(alg: TableAlgebra, segments, lmap_top: dict, lmap_bot: dict) -> dict:
    """Fused label element of a walked strand or loop.

    Walking the segments in order, each stored label is read through the
    anti-involution when the strand is traversed against its canonical
    direction, and accumulated on the left (the walk's later segments
    multiply on the left, which is how stacked boxes compose).
    """
    acc = {alg.identity: 1}
    for where, pr, against in segments:
        l = (lmap_top if where == 0 else lmap_bot)[pr]
        if against:
            l = alg.inv[l]
        acc = alg.mul({l: 1}, acc)
    return acc


def diagram_product(ctx: Context, top: LabeledDiagram, bot: LabeledDiagram) -> dict:
    """Product of two basis diagrams as {diagram: Laurent}."""
    key = (top, bot)
    hit = ctx._prod.get(key)
    if hit is not None:
        return hit
    alg = ctx.alg
    stacked = stack_matchings(top.matching, bot.matching)
    lm_top, lm_bot = top.label_map(), bot.label_map()
    scalar = ONE
    for loop in stacked.loops:
        fused = fuse(alg, loop, lm_top, lm_bot)
        t = fused.get(alg.identity, 0)
        if not t:
            ctx._prod[key] = {}
            return {}
        scalar = scalar * (DELTA * t)
    strand_elements = [
        sorted(fuse(alg, segs, lm_top, lm_bot).items()) for segs in stacked.paths
    ]
    out: dict = {}
    for choice in itertools.product(*strand_elements):
        labels = tuple(l for l, _ in choice)
        coeff = scalar
        for _, c in choice:
            coeff = coeff * c
        d = LabeledDiagram(stacked.matching, labels)
        acc = out.get(d, ZERO) + coeff
        if acc:
            out[d] = acc
        else:
            del out[d]
    ctx._prod[key] = out
    return out


@lru_cache(maxsize=None)
def closure_loops(matching: tuple) -> tuple:
    """Loop decomposition of a diagram closed by arcs i -- 2n+1-i.

    Each loop is a tuple of (pair, against) segments, starting from the
    smallest point not yet visited.
    """
    n2 = 2 * len(matching)
    partner = partner_map(matching)
    seen: set = set()
    loops = []
    for start in range(1, n2 + 1):
        if start in seen:
            continue
        p = start
        segs = []
        while True:
            q = partner[p]
            seen.update((p, q))
            segs.append((_pair(p, q), p % 2 == 1))
            p = n2 + 1 - q  # the closure arc from q
            if p == start:
                break
        loops.append(tuple(segs))
    return tuple(loops)


def trace_of_diagram(ctx: Context, d: LabeledDiagram) -> Laurent:
    """Closure trace of a basis diagram: product of loop scalars."""
    hit = ctx._trace.get(d)
    if hit is not None:
        return hit
    alg = ctx.alg
    lmap = d.label_map()
    total = ONE
    for loop in closure_loops(d.matching):
        acc = {alg.identity: 1}
        for pr, against in loop:
            l = lmap[pr]
            if against:
                l = alg.inv[l]
            acc = alg.mul({l: 1}, acc)
        t = acc.get(alg.identity, 0)
        if not t:
            total = ZERO
            break
        total = total * (DELTA * t)
    ctx._trace[d] = total
    return total


def is_exposed(d: LabeledDiagram, alg: TableAlgebra) -> bool:
    """True when every strand with a non-identity label is principal."""
    kinds = edge_kinds(d.matching)
    return all(
        l == alg.identity or kinds[p].principal
        for p, l in zip(d.matching, d.labels)
    )


class Element:
    """A Z[v, v^-1]-combination of labeled diagrams in a fixed context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict):
        clean = {}
        for d, c in terms.items():
            c = c if isinstance(c, Laurent) else Laurent(c)
            if c:
                clean[d] = c
        self.ctx = ctx
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple:
        return tuple(sorted(self.terms))

    def coeff(self, d: LabeledDiagram) -> Laurent:
        return self.terms.get(d, ZERO)

    def _check_ctx(self, other: "Element"):
        if self.ctx.n != other.ctx.n or self.ctx.alg is not other.ctx.alg:
            if self.ctx.alg != other.ctx.alg:
                raise ValueError("elements live in different contexts")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_ctx(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, ZERO) + c
        return Element(self.ctx, out)

    def __neg__(self):
        return Element(self.ctx, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_ctx(other)
        out: dict = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                c = c1 * c2
                for d, k in diagram_product(self.ctx, d1, d2).items():
                    acc = out.get(d, ZERO) + c * k
                    if acc:
                        out[d] = acc
                    else:
                        del out[d]
        return Element(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Element":
        return Element(self.ctx, {d: c * x for d, x in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.ctx.n == other.ctx.n
            and self.ctx.alg == other.ctx.alg
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx.n, tuple(sorted(self.terms.items()))))

    def star(self) -> "Element":
        """The anti-involution: flip vertically, involute labels, bar v."""
        inv = self.ctx.alg.inv
        return Element(
            self.ctx,
            {star_diagram(d, inv): c.bar() for d, c in self.terms.items()},
        )

    def trace(self) -> Laurent:
        """Closure trace tr: close each diagram with nested arcs i -- 2n+1-i."""
        total = ZERO
        for d, c in self.terms.items():
            total = total + c * trace_of_diagram(self.ctx, d)
        return total

    def tau(self) -> Laurent:
        """The normalized trace tau = v^-n tr."""
        return Laurent.v_power(-self.ctx.n) * self.trace()

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(
            f"{self.terms[d]} * {d.to_text()}" for d in sorted(self.terms)
        )

    def __repr__(self):
        body = self.to_text().replace("\n", "; ")
        return f"<Element {body}>"


def fusion_twist(x: Element) -> Element:
    """Multiply the label of every left-corner strand by the top basis
    element of the label algebra.

    A strand is twisted when exactly one endpoint lies at a left corner
    (boundary point 1 or 2n); the strand joining the two corners is
    fixed (it would acquire the square, which is the identity).  Needs
    the top basis element to be group-like, as in the fusion algebras.

    >>> from .verlinde import make_verlinde
    >>> ctx = Context(2, make_verlinde(3))
    >>> fusion_twist(ctx.e_element(1, 1)) == ctx.e_element(1, 1)
    True
    >>> fusion_twist(ctx.one()) == ctx.one()
    True
    >>> fusion_twist(ctx.e_element(1, 0)) == ctx.e_element(1, 2)
    True
    """
    ctx = x.ctx
    alg = ctx.alg
    out: dict = {}
    for d, c in x.terms.items():
        kinds = edge_kinds(d.matching)
        labels = tuple(
            w_multiply(alg, l) if kinds[p].transitional else l
            for p, l in zip(d.matching, d.labels)
        )
        d2 = LabeledDiagram(d.matching, labels)
        out[d2] = out.get(d2, ZERO) + c
    return Element(ctx, out)


def tensor_elements(x: Element, y: Element, target: Context) -> Element:
    """Juxtapose two elements side by side into the target context.

    The target must have x.ctx.n + y.ctx.n strands and the same label
    algebra; the map is an algebra embedding (checked in tests).
    """
    if target.n != x.ctx.n + y.ctx.n or target.alg != x.ctx.alg or target.alg != y.ctx.alg:
        raise ValueError("target context does not match the juxtaposition")
    inv = target.alg.inv
    out: dict = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            d = tensor_matched(d1, d2, inv)
            acc = out.get(d, ZERO) + c1 * c2
            if acc:
                out[d] = acc
            else:
                del out[d]
    return Element(target, out)


def p_tensor_embed(ctx: Context, indices: tuple) -> LabeledDiagram:
    """The all-propagating diagram realizing a pure tensor of labels.

    The k-th propagating strand (1-based, left to right) runs upward
    exactly when k is odd, so storing indices[k-1] on odd strands and
    its involute on even strands makes every strand spell its tensor
    factor when read along the strand's own direction.  This map sends
    the basis of the n-fold tensor power of the label algebra
    bijectively onto the diagrams without arcs, and it multiplies:
    stacking all-propagating diagrams creates no loops and fuses the
    k-th strands with each other only.

    >>> from .verlinde import make_verlinde
    >>> ctx = Context(2, make_verlinde(3))
    >>> p_tensor_embed(ctx, (1, 2)).to_text()
    'n=2 | 1-4:1 2-3:2'
    """
    if len(indices) != ctx.n:
        raise ValueError("need one basis index per strand")
    inv = ctx.alg.inv
    labels = tuple(ix if k % 2 == 0 else inv[ix] for k, ix in enumerate(indices))
    return LabeledDiagram(identity_matching(ctx.n), labels)


def verify_tensor_iso(ctx: Context) -> bool:
    """Check the tensor embedding against the tensor-power product table.

    For every pair of pure tensors s, t the product of their diagram
    images must equal the image of s * t computed in the n-fold tensor
    power of the label algebra, term by term with integer coefficients.
    Raises ValueError with the offending pair on any mismatch.

    >>> from .verlinde import make_verlinde
    >>> verify_tensor_iso(Context(2, make_verlinde(2)))
    True
    """
    power = tensor_power(ctx.alg, ctx.n)
    tuples = list(itertools.product(range(ctx.alg.rank), repeat=ctx.n))
    for s, t in itertools.product(tuples, repeat=2):
        left = ctx.basis_element(p_tensor_embed(ctx, s)) * ctx.basis_element(
            p_tensor_embed(ctx, t)
        )
        row = power.mul_basis(tuple_index(ctx.alg, s), tuple_index(ctx.alg, t))
        want = {
            p_tensor_embed(ctx, index_tuple(ctx.alg, u, ctx.n)): Laurent(c)
            for u, c in row.items()
        }
        if left.terms != want:
            raise ValueError(f"tensor embedding breaks at {s} x {t}")
    return True
