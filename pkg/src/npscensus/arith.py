"""Elementary number-theoretic helpers shared across the package."""

from __future__ import annotations

from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    r = isqrt(n)
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v


def multiplicative_order(r: int, mod: int) -> int:
    """Order of r in the unit group mod `mod`; requires gcd(r, mod) = 1."""
    if mod < 1:
        raise ValueError(f"modulus must be positive, got {mod}")
    if mod == 1:
        return 1
    r %= mod
    if gcd(r, mod) != 1:
        raise ValueError(f"{r} is not a unit mod {mod}")
    k = 1
    x = r
    while x != 1:
        x = x * r % mod
        k += 1
    return k


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(1, k + 1):
        num *= q ** (n - k + i) - 1
        den *= q**i - 1
    assert num % den == 0
    return num // den


def subgroup_count_elementary_abelian(p: int, n: int) -> int:
    """Total subgroup count of (C_p)^n."""
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def subgroup_count_rank2(p: int, n1: int, n2: int) -> int:
    """Total subgroup count of C_{p^n1} x C_{p^n2}.

    Divisor-sum form: sum over (a | p^n1, b | p^n2) of gcd(a, p^n2 / b).
    """
    return sum(p ** min(i, n2 - j) for i in range(n1 + 1) for j in range(n2 + 1))
