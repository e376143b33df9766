"""Hecke algebras over Z[v, v^-1] and their Kazhdan-Lusztig bases.

Elements are sparse dicts mapping group-element indices to Laurent
coefficients in the T-basis, with q = v^2 and the defining recursion
T_s T_w = T_{sw} when the length goes up and q T_{sw} + (q-1) T_w when
it goes down.  The bar involution sends v to v^-1 and T_w to the
inverse of T_{w^-1}; it is built incrementally along reduced words.

The Kazhdan-Lusztig basis C'_w is computed by :func:`ic_solve`, a
triangular solver shared with the Temperley-Lieb quotient: in the
rescaled basis e_w = v^{-len(w)} T_w the bar involution is
unitriangular, and the unique bar-invariant element congruent to e_w
modulo strictly negative powers is found by back-substitution.  The
solver insists that every correction term K be bar-antisymmetric and
aborts otherwise, so a wrong multiplication table cannot silently
produce a "basis".

>>> h = hecke(coxeter_group("A", 2))
>>> h.mul(h.t(1), h.t(1)) == {0: Laurent("v^2"), 1: Laurent("v^2 - 1")}
True
>>> h.cprime(1) == {0: Laurent("v^-1"), 1: Laurent("v^-1")}
True
"""

from __future__ import annotations

from functools import lru_cache

from .coxeter import CoxeterGroup, coxeter_group
from .laurent import Laurent, ONE, ZERO

_Q = Laurent.v_power(2)
_QINV = Laurent.v_power(-2)
_Q_MINUS_1 = _Q - ONE
_QINV_MINUS_1 = _QINV - ONE


def _add_into(acc: dict, w: int, c) -> None:
    s = acc.get(w, ZERO) + c
    if s:
        acc[w] = s
    else:
        acc.pop(w, None)


def ic_solve(count: int, bar_row) -> list:
    """Bar-invariant basis over a unit-triangular bar action.

    The basis domain is 0..count-1, ordered so that bar only mixes an
    element with strictly earlier ones; bar_row(y) returns bar of unit
    element y in unit coordinates (diagonal 1, every off-diagonal entry
    on an earlier element).  For each w the solver returns the
    coordinates p of the unique element c_w = sum_y p[y] e_y with
    bar(c_w) = c_w, p[w] = 1, and all other p[y] in v^-1 Z[v^-1].
    Raises ArithmeticError if a correction term is not
    bar-antisymmetric, which would falsify unitriangularity.
    """
    table = []
    for w in range(count):
        p = {w: ONE}
        correction: dict = {}
        for z, c in bar_row(w).items():
            if z != w:
                _add_into(correction, z, c)
        for z in range(w - 1, -1, -1):
            kz = correction.get(z)
            if not kz:
                continue
            if not kz.is_bar_antisymmetric():
                raise ArithmeticError(
                    f"correction at ({w}, {z}) is not bar-antisymmetric: {kz}"
                )
            pz = kz.negative_part()
            if not pz:
                continue
            p[z] = pz
            bz = pz.bar()
            for zz, c in bar_row(z).items():
                if zz != z:
                    _add_into(correction, zz, bz * c)
        table.append(p)
    return table


class Hecke:
    """The Hecke algebra of a finite Coxeter group, in the T-basis."""

    def __init__(self, g: CoxeterGroup):
        self.g = g
        self._bar_t = None
        self._cprime_unit = None

    # -- T-basis arithmetic ---------------------------------------------

    def t(self, w: int) -> dict:
        """The basis element T_w."""
        return {w: ONE}

    def one(self) -> dict:
        return {0: ONE}

    def mul_gen(self, x: dict, s: int) -> dict:
        """Right multiplication x * T_s."""
        g = self.g
        out: dict = {}
        for w, c in x.items():
            ws = g.right[w][s]
            if g.lengths[ws] > g.lengths[w]:
                _add_into(out, ws, c)
            else:
                _add_into(out, ws, c * _Q)
                _add_into(out, w, c * _Q_MINUS_1)
        return out

    def mul_t(self, x: dict, w: int) -> dict:
        """Right multiplication x * T_w along a reduced word of w."""
        for s in self.g.rwords[w]:
            x = self.mul_gen(x, s)
        return x

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for w, c in y.items():
            for z, d in self.mul_t(x, w).items():
                _add_into(out, z, c * d)
        return out

    def scale(self, x: dict, c) -> dict:
        return {w: d * c for w, d in x.items()} if c else {}

    def add(self, x: dict, y: dict) -> dict:
        out = dict(x)
        for w, c in y.items():
            _add_into(out, w, c)
        return out

    # -- bar involution ---------------------------------------------------

    def bar_t(self, w: int) -> dict:
        """bar(T_w) = (T_{w^-1})^-1, built along the reduced word.

        bar is a ring map, so bar(T_u T_s) = bar(T_u) bar(T_s) with
        bar(T_s) = T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e; the prefix u of
        each reduced word always has a smaller index.
        """
        if self._bar_t is None:
            table = [self.one()]
            for i in range(1, self.g.order):
                word = self.g.rwords[i]
                u = 0
                for s in word[:-1]:
                    u = self.g.right[u][s]
                last = word[-1]
                bar_ts = {0: _QINV_MINUS_1, self.g.right[0][last]: _QINV}
                table.append(self.mul(table[u], bar_ts))
            self._bar_t = table
        return self._bar_t[w]

    def bar(self, x: dict) -> dict:
        out: dict = {}
        for w, c in x.items():
            cb = c.bar() if isinstance(c, Laurent) else Laurent(c)
            for z, d in self.bar_t(w).items():
                _add_into(out, z, cb * d)
        return out

    # -- Kazhdan-Lusztig basis ---------------------------------------------

    def _unit_bar_row(self, y: int) -> dict:
        ly = self.g.lengths[y]
        return {
            z: c * Laurent.v_power(ly + self.g.lengths[z])
            for z, c in self.bar_t(y).items()
        }

    def cprime_unit(self, w: int) -> dict:
        """C'_w in the rescaled basis e_y = v^{-len(y)} T_y."""
        if self._cprime_unit is None:
            rows = [self._unit_bar_row(y) for y in range(self.g.order)]
            self._cprime_unit = ic_solve(self.g.order, lambda y: rows[y])
        return self._cprime_unit[w]

    def cprime(self, w: int) -> dict:
        """C'_w in the T-basis.

        >>> h = hecke(coxeter_group("I", 2, 5))
        >>> top = h.g.order - 1
        >>> h.cprime(top) == {y: Laurent.v_power(-5) for y in range(10)}
        True
        """
        return {
            y: c * Laurent.v_power(-self.g.lengths[y])
            for y, c in self.cprime_unit(w).items()
        }

    def to_cprime(self, x: dict) -> dict:
        """Coordinates of x in the C'-basis (triangular substitution)."""
        unit = {y: c * Laurent.v_power(self.g.lengths[y]) for y, c in x.items()}
        out: dict = {}
        for y in range(self.g.order - 1, -1, -1):
            c = unit.get(y)
            if not c:
                continue
            out[y] = c
            for z, d in self.cprime_unit(y).items():
                _add_into(unit, z, -(c * d))
        return out

    def kl_polynomial(self, y: int, w: int) -> Laurent:
        """The polynomial P_{y,w} in q = v^2 (zero when y is not below w)."""
        p = self.cprime_unit(w).get(y, ZERO)
        return p * Laurent.v_power(self.g.lengths[w] - self.g.lengths[y])


@lru_cache(maxsize=None)
def hecke(g: CoxeterGroup) -> Hecke:
    """The cached Hecke algebra of a group built by :func:`coxeter_group`."""
    return Hecke(g)
