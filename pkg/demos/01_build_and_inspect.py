#!/usr/bin/env python3
"""Tour of the group constructors and basic structure operations.

Run:  python demos/01_build_and_inspect.py
"""

from npscensus import (
    center,
    cyclic_group,
    derived_subgroup,
    direct_product,
    element_order,
    exponent,
    group_from_generators,
    is_abelian,
    parse_spec,
    quotient,
    semidirect_product,
)
from npscensus.families import build


def main() -> None:
    print("== permutation generators ==")
    s3 = group_from_generators(3, [(1, 2, 0), (1, 0, 2)], label="Sym(3)")
    print(f"{s3}: abelian={is_abelian(s3)}, exponent={exponent(s3)}")
    print(f"the 3-cycle has order {element_order(s3, s3.generators[0])}")

    print()
    print("== products ==")
    v4 = direct_product(cyclic_group(2), cyclic_group(2), label="C2xC2")
    print(f"{v4}: exponent {exponent(v4)}")

    # C3 x| C2 with the inversion action recovers Sym(3)
    flip = (0, 2, 1)
    s3_again = semidirect_product(cyclic_group(3), cyclic_group(2), [flip])
    print(f"C3 x| C2 has order {s3_again.order}, abelian={is_abelian(s3_again)}")

    # the holomorph of C7: multiplication by 3 has order 6 mod 7
    times3 = tuple(3 * i % 7 for i in range(7))
    hol = semidirect_product(cyclic_group(7), cyclic_group(6), [times3])
    print(f"C7 x| C6 has order {hol.order} and center of size {center(hol).size}")

    print()
    print("== family specs ==")
    for text in ["Q(16)", "M(4,3)", "A(2)", "SL23", "Gn(2,9)", "Q(8)xC(2)"]:
        g = build(parse_spec(text))
        print(
            f"{text:12s} order {g.order:4d}  exponent {exponent(g):3d}  "
            f"|center| {center(g).size:2d}  |derived| {derived_subgroup(g).size:2d}"
        )

    print()
    print("== quotients ==")
    q8 = build(parse_spec("Q(8)"))
    q, proj = quotient(q8, center(q8))
    proj.validate()
    print(f"Q8 / Z(Q8) has order {q.order} and exponent {exponent(q)}")


if __name__ == "__main__":
    main()
