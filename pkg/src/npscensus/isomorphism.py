"""Isomorphism testing for small concrete groups.

Cheap invariant fingerprints are compared first (cheapest first, lazily);
only when every invariant agrees does the generator-image backtracking
search run.  Candidate images are ordered by element order, then index.
"""

from __future__ import annotations

from collections import Counter

from .core import (
    CapExceeded,
    Group,
    center,
    derived_subgroup,
    element_orders,
    exponent,
    generating_sequence,
)
from .lattice import counts

DEFAULT_ISO_CAP = 600


def conjugacy_class_sizes(G: Group) -> tuple[int, ...]:
    """Multiset of element conjugacy class sizes, sorted."""
    cached = G._cache.get("ccsizes")
    if cached is None:
        n = G.order
        seen = [False] * n
        sizes = []
        for x in range(n):
            if seen[x]:
                continue
            orbit = [x]
            seen[x] = True
            for y in orbit:
                for g in G.generators:
                    z = G.conjugate(y, g)
                    if not seen[z]:
                        seen[z] = True
                        orbit.append(z)
            sizes.append(len(orbit))
        cached = tuple(sorted(sizes))
        G._cache["ccsizes"] = cached
    return cached  # type: ignore[return-value]


def _try_images(G: Group, H: Group, gens: list[int], images: list[int]) -> bool:
    """Whether mapping gens -> images extends to an injective homomorphism
    from <gens> into H.  When <gens> = G and |G| = |H| this is an
    isomorphism."""
    gm, hm = G.mul, H.mul
    n = G.order
    phi = [-1] * n
    phi[0] = 0
    hit = 1
    elems = [0]
    for x in elems:
        gx = gm[x]
        hx = hm[phi[x]]
        for g, h in zip(gens, images):
            y = gx[g]
            z = hx[h]
            fy = phi[y]
            if fy < 0:
                if (hit >> z) & 1:
                    return False
                hit |= 1 << z
                phi[y] = z
                elems.append(y)
            elif fy != z:
                return False
    return True


def _backtrack(G: Group, H: Group) -> bool:
    gens = generating_sequence(G)
    g_orders = element_orders(G)
    h_orders = element_orders(H)
    candidates = [
        sorted(x for x in range(H.order) if h_orders[x] == g_orders[g])
        for g in gens
    ]

    chosen: list[int] = []

    def extend(depth: int) -> bool:
        if depth == len(gens):
            # the full-depth _try_images already passed: an injective
            # homomorphism defined on all of G is an isomorphism
            return True
        for h in candidates[depth]:
            chosen.append(h)
            if _try_images(G, H, gens[: depth + 1], chosen):
                if extend(depth + 1):
                    return True
            chosen.pop()
        return False

    return extend(0)


def are_isomorphic(G: Group, H: Group, cap: int = DEFAULT_ISO_CAP) -> bool:
    """Decide isomorphism between two concrete groups of order <= cap."""
    if G.order > cap or H.order > cap:
        raise CapExceeded(f"isomorphism test capped at order {cap}")
    if G is H:
        return True
    if G.order != H.order:
        return False
    if exponent(G) != exponent(H):
        return False
    if Counter(element_orders(G)) != Counter(element_orders(H)):
        return False
    if center(G).size != center(H).size:
        return False
    if derived_subgroup(G).size != derived_subgroup(H).size:
        return False
    if conjugacy_class_sizes(G) != conjugacy_class_sizes(H):
        return False
    cg, ch = counts(G, cap=cap), counts(H, cap=cap)
    if (cg.s, cg.ps, cg.nps) != (ch.s, ch.ps, ch.nps):
        return False
    return _backtrack(G, H)
