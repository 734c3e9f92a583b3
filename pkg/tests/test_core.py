"""Group construction and structural operations.

Expected values marked as derived were computed with the independent
oracles defined at the top of this file (naive set closures working on
raw permutations or tables, no shared code with the package internals).
"""

import pytest

from npscensus.core import (
    CapExceeded,
    Group,
    Morphism,
    Subgroup,
    center,
    cyclic_group,
    derived_subgroup,
    direct_product,
    element_order,
    element_orders,
    exponent,
    generated_subgroup,
    group_from_generators,
    is_abelian,
    is_normal_subgroup,
    quotient,
    semidirect_product,
    subgroup_from_members,
    subgroup_group,
    trivial_group,
)

# permutations used throughout: right-regular generators of Q8 on the
# element list (1, -1, i, -i, j, -j, k, -k)
Q8_GEN_I = (2, 3, 1, 0, 7, 6, 4, 5)
Q8_GEN_J = (4, 5, 6, 7, 1, 0, 3, 2)


def naive_perm_closure(degree, perms):
    """Fixpoint closure of a permutation set under composition; order-free."""

    def compose(p, q):  # right action: apply p, then q
        return tuple(q[p[i]] for i in range(degree))

    ident = tuple(range(degree))
    elems = {ident} | {tuple(p) for p in perms}
    while True:
        new = {compose(a, b) for a in elems for b in elems} - elems
        if not new:
            return elems
        elems |= new


def naive_order(G, x):
    k, y = 1, x
    while y != 0:
        y = G.mul[y][x]
        k += 1
    return k


def naive_subset_closure(G, seed):
    """Close a set of element indices under products, by full rescan."""
    elems = set(seed) | {0}
    while True:
        new = {G.mul[a][b] for a in elems for b in elems} - elems
        if not new:
            return elems
        elems |= new


@pytest.fixture(scope="module")
def s3():
    return group_from_generators(3, [(1, 2, 0), (1, 0, 2)], label="Sym(3)")


@pytest.fixture(scope="module")
def q8():
    return group_from_generators(8, [Q8_GEN_I, Q8_GEN_J], label="Q8")


class TestGroupFromGenerators:
    def test_symmetric_group_order(self, s3):
        assert s3.order == 6

    def test_empty_generators_give_trivial_group(self):
        g = group_from_generators(1, [])
        assert g.order == 1

    def test_q8_order_matches_naive_closure(self, q8):
        oracle = naive_perm_closure(8, [Q8_GEN_I, Q8_GEN_J])
        assert len(oracle) == 8
        assert q8.order == len(oracle)

    def test_identity_is_element_zero(self, q8):
        assert all(q8.mul[0][x] == x for x in range(8))

    def test_cap_enforced(self):
        with pytest.raises(CapExceeded):
            group_from_generators(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], cap=20)

    def test_non_bijective_input_rejected(self):
        with pytest.raises(ValueError):
            group_from_generators(3, [(0, 0, 1)])

    def test_bfs_numbering_deterministic(self, s3):
        again = group_from_generators(3, [(1, 2, 0), (1, 0, 2)])
        assert again.mul == s3.mul
        assert again.generators == s3.generators


class TestTableAxioms:
    def test_exhaustive_associativity_small(self, s3, q8):
        for g in (s3, q8, cyclic_group(12)):
            n = g.order
            for a in range(n):
                for b in range(n):
                    ab = g.mul[a][b]
                    for c in range(n):
                        assert g.mul[ab][c] == g.mul[a][g.mul[b][c]]

    def test_validate_accepts_good_tables(self, s3, q8):
        s3.validate()
        q8.validate()

    def test_validate_rejects_broken_identity(self):
        with pytest.raises(ValueError):
            Group([[1, 0], [0, 1]], [1])

    def test_zoo_tables_valid(self, zoo):
        for label, g in zoo.items():
            if g.order <= 256:
                g.validate()


class TestElementOrder:
    def test_identity(self, s3):
        assert element_order(s3, 0) == 1

    def test_cyclic_generator(self):
        c6 = cyclic_group(6)
        assert element_order(c6, 1) == 6

    def test_q8_central_involution(self, q8):
        involutions = [x for x in range(1, 8) if naive_order(q8, x) == 2]
        assert len(involutions) == 1
        assert element_order(q8, involutions[0]) == 2

    def test_out_of_range(self, s3):
        with pytest.raises(IndexError):
            element_order(s3, 6)

    def test_orders_divide_exponent_divides_order(self, zoo):
        for g in zoo.values():
            e = exponent(g)
            assert g.order % e == 0
            for o in element_orders(g):
                assert e % o == 0


class TestExponent:
    def test_elementary_abelian(self):
        v4 = direct_product(cyclic_group(2), cyclic_group(2))
        assert exponent(v4) == 2

    def test_q8(self, q8):
        from math import lcm

        assert exponent(q8) == lcm(*[naive_order(q8, x) for x in range(8)]) == 4

    def test_sym3(self, s3):
        assert exponent(s3) == 6


class TestCenterAndDerived:
    def test_center_of_abelian_is_whole(self):
        c12 = cyclic_group(12)
        assert center(c12).size == 12

    def test_derived_subgroup_of_abelian_is_trivial(self):
        for g in (cyclic_group(12), direct_product(cyclic_group(2), cyclic_group(4))):
            assert derived_subgroup(g).size == 1

    def test_sym3_centerless_with_derived_c3(self, s3):
        assert center(s3).size == 1
        naive = naive_subset_closure(
            s3, {s3.commutator(x, y) for x in range(6) for y in range(6)}
        )
        assert len(naive) == 3
        assert derived_subgroup(s3).size == 3

    def test_q8_center_and_derived(self, q8):
        z = center(q8)
        assert z.size == 2
        naive_center = {
            x
            for x in range(8)
            if all(q8.mul[x][y] == q8.mul[y][x] for y in range(8))
        }
        assert set(z.elements()) == naive_center
        assert derived_subgroup(q8) == z

    def test_derived_quotient_abelian(self, zoo):
        for g in zoo.values():
            if g.order > 300:
                continue
            q, _ = quotient(g, derived_subgroup(g))
            assert is_abelian(q)


class TestDirectProduct:
    def test_orders_multiply(self, s3, q8):
        assert direct_product(s3, q8).order == 48

    def test_c2_c2(self):
        v4 = direct_product(cyclic_group(2), cyclic_group(2))
        assert v4.order == 4
        assert exponent(v4) == 2

    def test_cap(self, q8):
        with pytest.raises(CapExceeded):
            direct_product(q8, q8, cap=60)


class TestSemidirectProduct:
    def test_trivial_action_matches_direct_product(self):
        c3, c4 = cyclic_group(3), cyclic_group(4)
        sd = semidirect_product(c3, c4, [(0, 1, 2)])
        dp = direct_product(c3, c4)
        assert sd.order == dp.order == 12
        # identical tables under the same (n, k) pair encoding
        assert sd.mul == dp.mul

    def test_inversion_gives_sym3(self, s3):
        g = semidirect_product(cyclic_group(3), cyclic_group(2), [(0, 2, 1)])
        assert g.order == 6
        assert not is_abelian(g)
        assert sorted(element_orders(g)) == sorted(element_orders(s3))

    def test_holomorph_c7(self):
        g = semidirect_product(
            cyclic_group(7), cyclic_group(6), [tuple(3 * i % 7 for i in range(7))]
        )
        assert g.order == 42
        assert center(g).size == 1

    def test_rejects_non_automorphism(self):
        with pytest.raises(ValueError, match="automorphism"):
            semidirect_product(cyclic_group(4), cyclic_group(2), [(0, 2, 1, 3)])

    def test_rejects_non_homomorphic_assignment(self):
        # inversion has order 2, not a valid image of a C3 generator
        with pytest.raises(ValueError, match="homomorphism"):
            semidirect_product(cyclic_group(3), cyclic_group(3), [(0, 2, 1)])

    def test_conjugation_convention(self):
        # in C7 x| C6 with action i -> 3i: k^-1 n k = act(k^-1)(n)
        c7, c6 = cyclic_group(7), cyclic_group(6)
        act = tuple(3 * i % 7 for i in range(7))
        g = semidirect_product(c7, c6, [act])
        n = 1 * 6 + 0  # (b, 0) with b the C7 generator
        k = 0 * 6 + 1  # (0, a) with a the C6 generator
        conj = g.mul[g.mul[g.inv[k]][n]][k]
        # act(k^-1) = act(k)^-1: 3i inverted is 5i (3*5 = 15 = 1 mod 7)
        assert conj == (5 * 1 % 7) * 6 + 0


class TestQuotient:
    def test_quotient_by_whole_group(self, q8):
        whole = generated_subgroup(q8, range(8))
        q, _ = quotient(q8, whole)
        assert q.order == 1

    def test_q8_mod_center_is_klein(self, q8):
        q, proj = quotient(q8, center(q8))
        assert q.order == 4
        assert exponent(q) == 2  # order 4 + exponent 2 forces C2 x C2
        proj.validate()

    def test_projection_is_morphism(self, s3):
        q, proj = quotient(s3, derived_subgroup(s3))
        assert isinstance(proj, Morphism)
        proj.validate()
        assert q.order == 2

    def test_morphism_validate_rejects_non_homomorphism(self, s3):
        bad = Morphism(s3, cyclic_group(2), tuple(x % 2 for x in range(6)))
        with pytest.raises(ValueError, match="homomorphism"):
            bad.validate()

    def test_sl23_mod_center_is_alt4(self):
        from npscensus.families import build
        from npscensus.isomorphism import are_isomorphic
        from npscensus.lattice import counts
        from npscensus.specs import parse_spec

        sl = build(parse_spec("SL23"))
        q, _ = quotient(sl, center(sl))
        assert q.order == 12
        assert counts(q).nps == 7
        assert are_isomorphic(q, build(parse_spec("Alt(4)")))

    def test_non_normal_rejected(self, s3):
        h = generated_subgroup(s3, [s3.generators[1]])  # a transposition
        assert h.size == 2
        assert not is_normal_subgroup(s3, h)
        with pytest.raises(ValueError, match="normal"):
            quotient(s3, h)


class TestSubgroups:
    def test_generated_subgroup_lagrange(self, q8):
        for x in range(8):
            sub = generated_subgroup(q8, [x])
            assert q8.order % sub.size == 0

    def test_subgroup_from_members_validates(self, s3):
        with pytest.raises(ValueError):
            subgroup_from_members(s3, 0b000110)  # two transpositions, not closed

    def test_subgroup_group_reindexes(self, q8):
        z = center(q8)
        zg = subgroup_group(q8, z)
        assert zg.order == 2
        zg.validate()

    def test_subgroup_contains_identity(self, zoo):
        for g in zoo.values():
            sub = generated_subgroup(g, g.generators[:1])
            assert 0 in sub
            assert isinstance(sub, Subgroup)


def test_trivial_group():
    t = trivial_group()
    assert t.order == 1
    assert exponent(t) == 1
