"""Structural invariants checked across the whole construction corpus."""

from helpers_properties import (
    check_coprime_product_counts,
    check_cyclic_nonpower_lower_bound,
    check_cyclic_power_uniqueness,
    check_power_gcd_reduction,
    check_quotient_monotonicity,
    corpus_profile,
)

from npscensus.core import exponent
from npscensus.lattice import all_subgroups, counts


def test_corpus_is_large_enough(zoo):
    profile = corpus_profile(zoo)
    assert profile["groups"] >= 60
    assert profile["max_order"] <= 600
    assert profile["at_most_128"] >= 30
    assert profile["odd_noncyclic_sylow"] >= 10


def test_counts_are_consistent(zoo):
    for label, g in zoo.items():
        c = counts(g)
        assert c.s == c.ps + c.nps, label
        assert c.ps >= 1, label
        assert c.order == g.order, label
        assert c.exponent == exponent(g), label
        assert g.order % c.exponent == 0, label


def test_noncyclic_groups_have_at_least_three_nonpower_subgroups(zoo):
    from npscensus.core import element_orders

    for label, g in zoo.items():
        c = counts(g)
        cyclic = any(o == g.order for o in element_orders(g))
        if cyclic:
            assert c.nps == 0, label
        else:
            assert c.nps >= 3, label


def test_power_subgroups_fixed_by_conjugation(zoo):
    for label, g in zoo.items():
        lat = all_subgroups(g)
        for idx in lat.power_subgroup_indices:
            assert lat.normal_flags[idx], label


def test_cyclic_power_subgroup_uniqueness(zoo):
    assert check_cyclic_power_uniqueness(zoo) == []


def test_cyclic_nonpower_lower_bound(zoo):
    assert check_cyclic_nonpower_lower_bound(zoo) == []


def test_coprime_product_count_identities(zoo):
    assert check_coprime_product_counts(zoo) == []


def test_quotient_monotonicity(zoo):
    assert check_quotient_monotonicity(zoo) == []


def test_power_subgroup_gcd_reduction(zoo):
    assert check_power_gcd_reduction(zoo) == []


def test_elementary_abelian_rank3_value():
    from npscensus.families import build
    from npscensus.specs import parse_spec

    # the pivot value forcing two-generator p-groups in the classification
    assert counts(build(parse_spec("C(2)xC(2)xC(2)"))).nps == 14


def test_coprime_complement_doubles_quotient_count(zoo):
    """For a proper nontrivial normal subgroup N with |N| coprime to
    |G:N|, every nonpower subgroup of G/N lifts to two distinct nonpower
    subgroups of G, so nps(G) >= 2 nps(G/N)."""
    from math import gcd

    from npscensus.core import quotient

    checked = 0
    for label, g in zoo.items():
        if g.order > 128:
            continue
        base = counts(g).nps
        lat = all_subgroups(g)
        for idx, sub in enumerate(lat.subgroups):
            if not lat.normal_flags[idx]:
                continue
            if sub.size in (1, g.order):
                continue
            if gcd(sub.size, g.order // sub.size) != 1:
                continue
            q, _ = quotient(g, sub)
            assert base >= 2 * counts(q).nps, (label, sub.size)
            checked += 1
    assert checked >= 40
