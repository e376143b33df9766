"""From a fusion table to labeled diagrams and traces.

Builds the rank-3 fusion algebra, opens the diagram algebra on three
strands over it, and walks through products, loop scalars, the star
involution, and the two traces.

Run:  python3 demos/fusion_to_diagrams.py
"""

from planalg import Context, make_verlinde
from planalg.laurent import DELTA


def main():
    alg = make_verlinde(3)
    print("Fusion algebra on labels", ", ".join(alg.labels))
    print(alg.element_str(alg.mul_basis(1, 1)), "= u1 * u1")
    print()

    ctx = Context(3, alg)
    print(f"P(3,3) has {len(ctx.basis())} basis diagrams,")
    print(f"{len(ctx.d_basis())} of them exposed.")
    print()

    e1 = ctx.e_element(1, 0)
    e2 = ctx.e_element(2, 0)
    print("E_1(u0) =", e1.to_text())
    print("E_2(u0) =", e2.to_text())
    print()

    print("E_1 E_1 = delta E_1:", e1 * e1 == e1.scale(DELTA))
    print("E_1 E_2 E_1 = E_1:  ", e1 * e2 * e1 == e1)
    print()

    x = e1 * e2
    print("x = E_1 E_2 =", x.to_text())
    print("x* =", x.star().to_text())
    print("tr(x)  =", x.trace())
    print("tau(x) =", x.tau())
    print()

    one = ctx.one()
    print("tau(1) =", one.tau(), "   tr(1) =", one.trace())


if __name__ == "__main__":
    main()
