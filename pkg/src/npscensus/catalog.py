"""Machine-readable catalogs of expected nonpower-subgroup counts.

Two catalogs live here:

  * `expected_nps(spec)` gives the known count (or lower bound) for a
    family instance, together with how trustworthy it is:
      - "exact": must equal brute-force enumeration;
      - "lower_bound": enumeration must be >= the value;
      - "from_formula_under_review": the printed closed form for
        C_{p^a} x C_{p^b} disagrees with enumeration on small cases (and
        is not always an integer); enumeration is authoritative and
        reports show both values.
  * `theorem_catalog(k)` transcribes the classification lists for
    k = 0..13: which groups have exactly k nonpower subgroups.

For coprime direct products A x B the counts compose:
ps(AxB) = ps(A) ps(B) and nps(AxB) = nps(A) s(B) + ps(A) nps(B).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import (
    divisors,
    factorize,
    is_prime,
    multiplicative_order,
    p_valuation,
    subgroup_count_elementary_abelian,
    subgroup_count_rank2,
)
from .families import (
    AFAMILY,
    ALT,
    B1,
    B2,
    C3Q8,
    CYCLIC,
    DIHEDRAL,
    EXTRASPECIAL,
    FFAMILY,
    GENERAL,
    GSHORT,
    MODULAR,
    PRODUCT,
    QUATERNION,
    SEMIDIHEDRAL,
    SL23,
    SYM,
    XFAMILY,
    FamilySpec,
    UnknownFamilyError,
    cyclic_spec,
    expected_order,
    product_spec,
    validate,
)

EXACT = "exact"
LOWER_BOUND = "lower_bound"
UNDER_REVIEW = "from_formula_under_review"


@dataclass(frozen=True)
class ExpectedNps:
    """Catalog value for nps of a family instance.

    `value` is an int for exact/lower-bound entries; under-review entries
    carry the printed formula's value, which can be a non-integral
    Fraction.
    """

    kind: str
    value: int | Fraction
    source: str


@dataclass(frozen=True)
class _Counts:
    """(s, ps, nps) triple used for coprime composition."""

    s: int
    ps: int
    nps: int


def printed_rank2_formula(p: int, n1: int, n2: int) -> Fraction:
    """The printed closed form for nps(C_{p^n1} x C_{p^n2}), n1 <= n2,
    evaluated literally.  Known to disagree with enumeration."""
    num = (
        (n2 - n1 + 1) * p ** (n1 + 2)
        - (n2 - n1 - 1) * p ** (n1 + 1)
        - (n2 + 1) * p**2
        + (n2 - n1 + 1) * p
        + n2
    )
    return Fraction(num, (p - 1) ** 2)


def abelian_rank2_counts(p: int, n1: int, n2: int) -> _Counts:
    """Reference counts for C_{p^n1} x C_{p^n2} from the divisor-sum
    subgroup total and the power-subgroup chain G >= G^p >= ... >= 1."""
    s = subgroup_count_rank2(p, min(n1, n2), max(n1, n2))
    ps = max(n1, n2) + 1
    return _Counts(s=s, ps=ps, nps=s - ps)


def _cyclic_counts(n: int) -> _Counts:
    d = len(divisors(n))
    return _Counts(s=d, ps=d, nps=0)


def _compose_coprime(a: _Counts, b: _Counts) -> _Counts:
    return _Counts(
        s=a.s * b.s,
        ps=a.ps * b.ps,
        nps=a.nps * b.s + a.ps * b.nps,
    )


def _metacyclic_counts(p: int, n: int, q: int, m: int, r: int) -> _Counts | None:
    """Counts for the two-generator metacyclic group C_{q^m} x| C_{p^n}.

    For p != q: nps = k q (q^m - 1)/(q - 1) where p^k is the order of the
    twist mod q^m; the power subgroups are the n chains of full q-part
    plus (n - k + 1) m partial ones plus the Sylow q-subgroup.
    For p == q odd the group shares its counts with C_{p^n} x C_{p^m}.
    """
    qm = q**m
    rr = r % qm
    if rr == 1:
        # abelian: C_{p^n} x C_{q^m}
        if p == q:
            return abelian_rank2_counts(p, n, m)
        return _cyclic_counts(p**n * qm)
    if p == q:
        if p == 2:
            return None  # counts differ from the abelian model at p = 2
        return abelian_rank2_counts(p, n, m)
    ordr = multiplicative_order(rr, qm)
    k = p_valuation(ordr, p)
    nps = k * q * (qm - 1) // (q - 1)
    ps = n + (n - k + 1) * m + 1
    return _Counts(s=nps + ps, ps=ps, nps=nps)


def _family_counts(spec: FamilySpec) -> tuple[_Counts, str] | None:
    """Full (s, ps, nps) with a source string, when known exactly."""
    k, p = spec.kind, spec.params
    if k == CYCLIC:
        return _cyclic_counts(p[0]), "cyclic groups have no nonpower subgroups"
    if k == DIHEDRAL:
        order = p[0]
        half = order // 2
        fact = factorize(half)
        if half > 1 and fact == {2: p_valuation(half, 2)}:
            n = p_valuation(order, 2)
            if n >= 3:
                nps = 2**n - 1
                return _Counts(nps + n, n, nps), "nps(D_2^n) = 2^n - 1"
        if len(fact) == 1:
            (q,) = fact
            if q > 2:
                mc = _metacyclic_counts(2, 1, q, fact[q], half - 1)
                assert mc is not None
                return mc, "nps(D_2q^m) = q(q^m - 1)/(q - 1)"
        return None
    if k == QUATERNION:
        n = p_valuation(p[0], 2)
        nps = 2 ** (n - 1) - 1
        return _Counts(nps + n, n, nps), "nps(Q_2^n) = 2^(n-1) - 1"
    if k == SEMIDIHEDRAL:
        n = p_valuation(p[0], 2)
        nps = 3 * 2 ** (n - 2) - 1
        return _Counts(nps + n, n, nps), "nps(S_2^n) = 3*2^(n-2) - 1"
    if k == MODULAR:
        n, q = p
        nps = q * (n - 1) + 1
        return _Counts(nps + n, n, nps), "nps(M_n,p) = p(n-1) + 1"
    if k == EXTRASPECIAL:
        q = p[0]
        nps = q * q + 2 * q + 2
        return _Counts(nps + 2, 2, nps), "nps(M(p)) = p^2 + 2p + 2"
    if k == GENERAL:
        pp, n, q, m = p
        assert spec.r is not None
        mc = _metacyclic_counts(pp, n, q, m, spec.r)
        if mc is None:
            return None
        if pp == q:
            src = "nps matches C_{p^n} x C_{p^m} for odd p"
        else:
            src = "nps = k q (q^m - 1)/(q - 1), p^k the twist order"
        return mc, src
    if k == GSHORT:
        n, q, m = p
        if q == 2:
            return None
        mc = _metacyclic_counts(2, n, q, m, q**m - 1)
        assert mc is not None
        return mc, "nps(G_n,p^m) = p(p^m - 1)/(p - 1) for odd p"
    if k == FFAMILY:
        n, q = p
        mc = _metacyclic_counts(3, n, q, 1, _spec_f_twist(spec))
        assert mc is not None
        return mc, "nps(F_n,p) = p"
    if k == B2:
        n, q = p
        if n < 2:
            return None
        nps = q * q * (n - 1) + q * (n + 1) + 2
        return _Counts(nps + n + 1, n + 1, nps), "nps(B2_n,p) = p^2(n-1) + p(n+1) + 2"
    if k == B1:
        n, q = p
        if n < 2:
            return None
        nps = q * q * (2 * n - 1) + q * (n + 1) + 2
        return _Counts(nps + n + 1, n + 1, nps), "nps(B1_n,p) = p^2(2n-1) + p(n+1) + 2"
    if k == AFAMILY:
        n = p[0]
        nps = 3 * n + 4
        return _Counts(nps + 2 * n + 1, 2 * n + 1, nps), "nps(A_n) = 3n + 4"
    if k == ALT and p[0] == 4:
        return _Counts(10, 3, 7), "nps(Alt(4)) = 7"
    if k == SYM and p[0] == 3:
        return _Counts(6, 3, 3), "nps(Sym(3)) = 3"
    if k == SYM and p[0] == 4:
        return _Counts(30, 4, 26), "direct calculation: nps(Sym(4)) = 26"
    if k == SL23:
        return _Counts(15, 4, 11), "direct calculation: nps(SL(2,3)) = 11"
    if k == C3Q8:
        return _Counts(18, 5, 13), "direct calculation: nps(C3 x| Q8) = 13"
    if k == PRODUCT:
        return _product_counts(spec)
    return None


def _spec_f_twist(spec: FamilySpec) -> int:
    from .families import _canonical_f_twist

    if spec.r is not None:
        return spec.r
    r = _canonical_f_twist(spec.params[1])
    assert r is not None
    return r


def _product_counts(spec: FamilySpec) -> tuple[_Counts, str] | None:
    """Compose counts over a direct product of factors with pairwise
    coprime orders.  Factors sharing a prime are first grouped; the only
    shared-prime block with known counts is a pair of cyclic prime-power
    factors (via the divisor-sum reference)."""
    facts = list(spec.factors)
    orders = [expected_order(f) for f in facts]

    # connected components of factors linked by a common prime
    comp = list(range(len(facts)))

    def find(i: int) -> int:
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    for i in range(len(facts)):
        for j in range(i + 1, len(facts)):
            if gcd(orders[i], orders[j]) != 1:
                comp[find(i)] = find(j)
    blocks: dict[int, list[int]] = {}
    for i in range(len(facts)):
        blocks.setdefault(find(i), []).append(i)

    acc: _Counts | None = None
    sources: list[str] = []
    for idxs in blocks.values():
        if len(idxs) == 1:
            fc = _family_counts(facts[idxs[0]])
            if fc is None:
                return None
            c, src = fc
        elif len(idxs) == 2:
            pair = product_spec(facts[idxs[0]], facts[idxs[1]])
            rank2 = _as_rank2_prime_power(pair)
            if rank2 is None:
                return None
            p, n1, n2 = rank2
            c = abelian_rank2_counts(p, n1, n2)
            src = "divisor-sum count for a rank-2 abelian p-group"
        else:
            return None
        sources.append(src)
        acc = c if acc is None else _compose_coprime(acc, c)
    assert acc is not None
    if len(blocks) > 1:
        return acc, "coprime product composition: " + "; ".join(dict.fromkeys(sources))
    return acc, sources[0]


def _match_cyclic(spec: FamilySpec) -> int | None:
    return spec.params[0] if spec.kind == CYCLIC else None


def _as_rank2_prime_power(spec: FamilySpec) -> tuple[int, int, int] | None:
    """(p, n1, n2) when spec is C_{p^n1} x C_{p^n2} for one prime p."""
    if spec.kind != PRODUCT or len(spec.factors) != 2:
        return None
    a = _match_cyclic(spec.factors[0])
    b = _match_cyclic(spec.factors[1])
    if a is None or b is None or a == 1 or b == 1:
        return None
    fa, fb = factorize(a), factorize(b)
    if len(fa) != 1 or len(fb) != 1:
        return None
    (pa,), (pb,) = fa.keys(), fb.keys()
    if pa != pb:
        return None
    n1, n2 = sorted((fa[pa], fb[pb]))
    return pa, n1, n2


def _match_special_products(spec: FamilySpec) -> ExpectedNps | None:
    """Non-coprime product shapes with dedicated statements."""
    if spec.kind == XFAMILY:
        n, q = spec.params
        if q > 3:
            val = (q + 3) * subgroup_count_elementary_abelian(3, n) - 6
            return ExpectedNps(EXACT, val, "nps(X_n,p) = (p+3) s(C3^n) - 6 for p > 3")
        if n == 1:
            return ExpectedNps(EXACT, 10, "nps(X_1,3) = 10")
        if n == 2:
            return ExpectedNps(EXACT, 48, "nps(X_2,3) = 48")
        return ExpectedNps(LOWER_BOUND, 49, "nps(X_n,3) > 48 for n > 2")
    if spec.kind != PRODUCT:
        return None
    facts = spec.factors
    head, tail = facts[0], facts[1:]
    # G_{m,3} x C3^n
    if (
        head.kind == GSHORT
        and head.params[1] == 3
        and head.params[2] == 1
        and tail
        and all(_match_cyclic(f) == 3 for f in tail)
    ):
        m = head.params[0]
        n = len(tail)
        kind = EXACT if n == 1 else LOWER_BOUND
        return ExpectedNps(kind, 4 * m + 6, "nps(G_m,3 x C3) = 4m + 6, a bound for more C3 factors")
    # Q8 x C2^n
    if (
        head.kind == QUATERNION
        and head.params[0] == 8
        and tail
        and all(_match_cyclic(f) == 2 for f in tail)
    ):
        n = len(tail)
        kind = EXACT if n == 1 else LOWER_BOUND
        return ExpectedNps(kind, 16, "nps(Q8 x C2) = 16, a bound for more C2 factors")
    # D_{2p} x C2^n, p odd prime
    if (
        head.kind == DIHEDRAL
        and is_prime(head.params[0] // 2)
        and head.params[0] // 2 > 2
        and tail
        and all(_match_cyclic(f) == 2 for f in tail)
    ):
        q = head.params[0] // 2
        n = len(tail)
        kind = EXACT if n == 1 else LOWER_BOUND
        return ExpectedNps(kind, 3 * q + 4, "nps(D_2p x C2) = 3p + 4, a bound for more C2 factors")
    # D_{2p} x C3^n == X family
    if (
        head.kind == DIHEDRAL
        and is_prime(head.params[0] // 2)
        and head.params[0] // 2 > 2
        and tail
        and all(_match_cyclic(f) == 3 for f in tail)
    ):
        return _match_special_products(
            FamilySpec(XFAMILY, (len(tail), head.params[0] // 2))
        )
    return None


def expected_nps(spec: FamilySpec) -> ExpectedNps:
    """Catalog lookup.  Raises UnknownFamilyError when no entry applies."""
    err = validate(spec)
    if err:
        raise ValueError(f"invalid spec {spec}: {err}")

    rank2 = _as_rank2_prime_power(spec)
    if rank2 is not None:
        p, n1, n2 = rank2
        return ExpectedNps(
            UNDER_REVIEW,
            printed_rank2_formula(p, n1, n2),
            "printed rank-2 abelian closed form (under review; enumeration is authoritative)",
        )

    special = _match_special_products(spec)
    if special is not None:
        return special

    fc = _family_counts(spec)
    if fc is not None:
        c, src = fc
        return ExpectedNps(EXACT, c.nps, src)

    raise UnknownFamilyError(f"no catalog entry for {spec}")


# ---------------------------------------------------------------------------
# classification lists: groups with exactly k nonpower subgroups, k = 0..13


@dataclass(frozen=True)
class BucketMember:
    """One entry of a classification bucket.

    `template` is display text with n free when `instantiate` varies over
    n; `constraints` states the side conditions on free parameters, which
    verification instantiates at their smallest admissible values.
    """

    template: str
    constraints: str
    lowest_n: int | None  # None for fixed members
    make: object  # FamilySpec | callable n -> FamilySpec

    def instances(self, max_n: int) -> list[FamilySpec]:
        if self.lowest_n is None:
            return [self.make]  # type: ignore[list-item]
        return [self.make(n) for n in range(self.lowest_n, max_n + 1)]  # type: ignore[operator]


def _fixed(template: str, spec: FamilySpec, constraints: str = "") -> BucketMember:
    return BucketMember(template, constraints, None, spec)


def _over_n(template: str, make, constraints: str = "n >= 1", lowest: int = 1) -> BucketMember:
    return BucketMember(template, constraints, lowest, make)


def _cy(*orders: int) -> FamilySpec:
    return product_spec(*(cyclic_spec(o) for o in orders))


def theorem_catalog(k: int) -> tuple[BucketMember, ...]:
    """Classification bucket for exactly k nonpower subgroups, 0 <= k <= 13.

    Free primes are recorded in `constraints`; verification uses their
    smallest admissible values (q = 5, r = 7, s = 2 in the k = 12 list).
    """
    if not 0 <= k <= 13:
        raise ValueError("k must be between 0 and 13")
    q8 = FamilySpec(QUATERNION, (8,))
    buckets: dict[int, tuple[BucketMember, ...]] = {
        0: (
            _over_n("C(n)", lambda n: cyclic_spec(n), "any cyclic group; sampled n"),
        ),
        1: (),
        2: (),
        3: (
            _fixed("C(2)xC(2)", _cy(2, 2)),
            _fixed("Q(8)", q8),
            _over_n("Gn(n,3)", lambda n: FamilySpec(GSHORT, (n, 3, 1))),
        ),
        4: (_fixed("C(3)xC(3)", _cy(3, 3)),),
        5: (
            _fixed("C(2)xC(4)", _cy(2, 4)),
            _over_n("Gn(n,5)", lambda n: FamilySpec(GSHORT, (n, 5, 1))),
        ),
        6: (
            _fixed("C(5)xC(5)", _cy(5, 5)),
            _fixed("C(2)xC(2)xC(p)", _cy(2, 2, 3), "p > 2 prime; p = 3"),
            _fixed("Q(8)xC(p)", product_spec(q8, cyclic_spec(3)), "p > 2 prime; p = 3"),
            _over_n(
                "Gn(n,3)xC(q)",
                lambda n: product_spec(FamilySpec(GSHORT, (n, 3, 1)), cyclic_spec(5)),
                "n >= 1, q > 3 prime; q = 5",
            ),
        ),
        7: (
            _fixed("D(8)", FamilySpec(DIHEDRAL, (8,))),
            _fixed("Alt(4)", FamilySpec(ALT, (4,))),
            _fixed("C(2)xC(8)", _cy(2, 8)),
            _fixed("Q(16)", FamilySpec(QUATERNION, (16,))),
            _fixed("M(4,2)", FamilySpec(MODULAR, (4, 2))),
            _fixed("C(3)xC(9)", _cy(3, 9)),
            _fixed("M(3,3)", FamilySpec(MODULAR, (3, 3))),
            _over_n("Gn(n,7)", lambda n: FamilySpec(GSHORT, (n, 7, 1))),
            _over_n("F(n,7)", lambda n: FamilySpec(FFAMILY, (n, 7))),
        ),
        8: (
            _fixed("C(7)xC(7)", _cy(7, 7)),
            _fixed("C(3)xC(3)xC(p)", _cy(3, 3, 2), "p != 3 prime; p = 2"),
        ),
        9: (
            _fixed("C(2)xC(16)", _cy(2, 16)),
            _fixed("M(5,2)", FamilySpec(MODULAR, (5, 2))),
            _fixed("C(2)xC(2)xC(p^2)", _cy(2, 2, 9), "p > 2 prime; p = 3"),
            _fixed("Q(8)xC(p^2)", product_spec(q8, cyclic_spec(9)), "p > 2 prime; p = 3"),
            _over_n(
                "Gn(n,3)xC(q^2)",
                lambda n: product_spec(FamilySpec(GSHORT, (n, 3, 1)), cyclic_spec(25)),
                "n >= 1, q > 3 prime; q = 5",
            ),
        ),
        10: (
            _fixed("C(3)xC(27)", _cy(3, 27)),
            _fixed("C(2)xC(4)xC(p)", _cy(2, 4, 3), "p != 2 prime; p = 3"),
            _fixed("M(4,3)", FamilySpec(MODULAR, (4, 3))),
            _fixed("Sym(3)xC(3)", product_spec(FamilySpec(SYM, (3,)), cyclic_spec(3))),
            _fixed("A(2)", FamilySpec(AFAMILY, (2,))),
            _over_n(
                "G(r=2;p=2,n;q=5,m=1)",
                lambda n: FamilySpec(GENERAL, (2, n, 5, 1), r=2),
                "n >= 2",
                lowest=2,
            ),
            _over_n(
                "Gn(n,5)xC(q)",
                lambda n: product_spec(FamilySpec(GSHORT, (n, 5, 1)), cyclic_spec(3)),
                "n >= 1, q prime, q != 2, 5; q = 3",
            ),
        ),
        11: (
            _fixed("C(2)xC(32)", _cy(2, 32)),
            _fixed("C(5)xC(25)", _cy(5, 25)),
            _fixed("S(16)", FamilySpec(SEMIDIHEDRAL, (16,))),
            _fixed("M(6,2)", FamilySpec(MODULAR, (6, 2))),
            _fixed("M(3,5)", FamilySpec(MODULAR, (3, 5))),
            _fixed("SL23", FamilySpec(SL23, ())),
            _over_n("Gn(n,11)", lambda n: FamilySpec(GSHORT, (n, 11, 1))),
            _over_n(
                "G(r=3;p=5,n;q=11,m=1)",
                lambda n: FamilySpec(GENERAL, (5, n, 11, 1), r=3),
            ),
        ),
        12: (
            _fixed("C(4)xC(4)", _cy(4, 4)),
            _fixed("C(11)xC(11)", _cy(11, 11)),
            _fixed(
                "Q(8)xC(qr)",
                product_spec(q8, cyclic_spec(35)),
                "q, r primes, 3 < q < r; q = 5, r = 7",
            ),
            _fixed("C(2)xC(2)xC(qr)", _cy(2, 2, 35), "3 < q < r primes; q = 5, r = 7"),
            _fixed("C(3)xC(3)xC(s^2)", _cy(3, 3, 4), "s != 3 prime; s = 2"),
            _fixed("C(5)xC(5)xC(p)", _cy(5, 5, 2), "p != 5 prime; p = 2"),
            _fixed("B2(2,2)", FamilySpec(B2, (2, 2))),
            _over_n("Gn(n,9)", lambda n: FamilySpec(GSHORT, (n, 3, 2))),
            _over_n(
                "Gn(n,3)xC(qr)",
                lambda n: product_spec(FamilySpec(GSHORT, (n, 3, 1)), cyclic_spec(35)),
                "n >= 1, 3 < q < r primes; q = 5, r = 7",
            ),
        ),
        13: (
            _fixed("C(2)xC(64)", _cy(2, 64)),
            _fixed("C(3)xC(81)", _cy(3, 81)),
            _fixed("M(7,2)", FamilySpec(MODULAR, (7, 2))),
            _fixed("M(5,3)", FamilySpec(MODULAR, (5, 3))),
            _fixed("D(12)", FamilySpec(DIHEDRAL, (12,)), "Sym(3) x C2"),
            _fixed("C3Q8", FamilySpec(C3Q8, ())),
            _fixed("A(3)", FamilySpec(AFAMILY, (3,))),
            _over_n("Gn(n,13)", lambda n: FamilySpec(GSHORT, (n, 13, 1))),
            _over_n("F(n,13)", lambda n: FamilySpec(FFAMILY, (n, 13))),
        ),
    }
    return buckets[k]


_SAMPLED_CYCLIC_ORDERS = (1, 2, 6, 12)


def instantiate_bucket(
    k: int, max_n: int = 4, max_order: int = 600
) -> list[tuple[FamilySpec, str]]:
    """Concrete bucket members within the sweep bounds, with templates."""
    out: list[tuple[FamilySpec, str]] = []
    for member in theorem_catalog(k):
        if k == 0:
            specs = [cyclic_spec(n) for n in _SAMPLED_CYCLIC_ORDERS]
        else:
            specs = member.instances(max_n)
        for spec in specs:
            if expected_order(spec) <= max_order:
                out.append((spec, member.template))
    return out
