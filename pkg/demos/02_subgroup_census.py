#!/usr/bin/env python3
"""Subgroup lattices, power subgroups, and the nonpower count.

Run:  python demos/02_subgroup_census.py
"""

from npscensus import (
    all_subgroups,
    counts,
    cyclic_nonpower_p_count,
    exponent,
    frattini,
    parse_spec,
    power_subgroups,
    sylow,
)
from npscensus.families import build


def main() -> None:
    print("== the headline quantity ==")
    print("a group is cyclic exactly when every subgroup is a power subgroup:")
    for text in ["C(12)", "C(2)xC(2)", "Q(8)", "D(8)", "SL23", "Sym(4)", "X(2,3)"]:
        c = counts(build(parse_spec(text)))
        print(
            f"{text:10s} order {c.order:3d}  s {c.s:3d}  ps {c.ps:2d}  nps {c.nps:3d}"
        )

    print()
    print("== power subgroups of D8 ==")
    d8 = build(parse_spec("D(8)"))
    for m, sub in power_subgroups(d8).items():
        print(f"D8^{m} has order {sub.size}")
    print(f"exponent: {exponent(d8)}")

    print()
    print("== lattice details for Q8 ==")
    q8 = build(parse_spec("Q(8)"))
    lat = all_subgroups(q8)
    for sub, normal in zip(lat.subgroups, lat.normal_flags):
        members = ",".join(str(x) for x in sub.elements())
        print(f"order {sub.size}  normal={normal}  elements {{{members}}}")
    print(f"Frattini subgroup has order {frattini(q8).size}")
    print(f"a Sylow 2-subgroup of SL(2,3) has order {sylow(build(parse_spec('SL23')), 2).size}")

    print()
    print("== cyclic nonpower p-subgroups ==")
    c33 = build(parse_spec("C(3)xC(3)"))
    print(f"C3xC3 has {cyclic_nonpower_p_count(c33, 3)} cyclic nonpower 3-subgroups")
    m3 = build(parse_spec("M(3)"))
    print(f"M(3) has {cyclic_nonpower_p_count(m3, 3)} cyclic nonpower 3-subgroups")


if __name__ == "__main__":
    main()
