"""p-cyclotomic cosets mod p^m - 1 and minimal polynomials of generator
powers.

Coset arithmetic accepts any prime p (the coset-size law is worth checking
at that generality); the symbolic algebra elsewhere in the package is GF(3)
only.  A coset is the orbit of j under multiplication by p mod p^m - 1, its
leader the smallest member.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .field import Field
from .gf3poly import Poly, prime_factors


def _is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == (p,)


@dataclass(frozen=True)
class Coset:
    p: int
    m: int
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def coset(j: int, p: int, m: int) -> Coset:
    """Orbit of j under multiplication by p, as sorted members."""
    if m < 1:
        raise ValueError("m must be positive")
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    n = p**m - 1
    j %= n
    members = []
    c = j
    while True:
        members.append(c)
        c = c * p % n
        if c == j:
            break
    members.sort()
    return Coset(p, m, members[0], tuple(members))


def cosets_partition(p: int, m: int) -> list[Coset]:
    """All cosets mod p^m - 1, sorted by leader; they partition [0, p^m-1)."""
    n = p**m - 1
    seen = [False] * n
    out = []
    for j in range(n):
        if not seen[j]:
            c = coset(j, p, m)
            for member in c.members:
                seen[member] = True
            out.append(c)
    return out


@dataclass(frozen=True)
class CosetSizeReport:
    p: int
    m: int
    checked: int
    violations: tuple[int, ...]


def coset_size_law_check(p: int, m: int) -> CosetSizeReport:
    """Exhaustive check that gcd(e, p^m - 1) = 2 forces coset size m.

    Scans every e in [1, p^m - 2]; returns the count of qualifying e and any
    violators (expected: none).
    """
    n = p**m - 1
    checked = 0
    violations = []
    for e in range(1, n - 1):
        if gcd(e, n) != 2:
            continue
        checked += 1
        if coset(e, p, m).size != m:
            violations.append(e)
    return CosetSizeReport(p, m, checked, tuple(violations))


def minimal_polynomial(field: Field, i: int) -> Poly:
    """Monic minimal polynomial of generator**i over GF(3).

    Computed as the product of (x - conjugate) over the coset of i, with
    coefficients verified to land in the base field.  Memoized per field by
    coset leader.
    """
    c = coset(i, 3, field.m)
    cached = field._minpoly_cache.get(c.leader)
    if cached is not None:
        return cached
    # product over conjugates, accumulated with field coefficients
    poly = [field.one]
    for j in c.members:
        root = field.exp_of_generator(j)
        nxt = [field.zero] * (len(poly) + 1)
        for d, coeff in enumerate(poly):
            nxt[d + 1] = field.add(nxt[d + 1], coeff)
            nxt[d] = field.sub(nxt[d], field.mul(coeff, root))
        poly = nxt
    base_coeffs = []
    for coeff in poly:
        if any(coeff[1:]):
            raise RuntimeError(
                f"minimal polynomial coefficient {coeff} left the base field"
            )
        base_coeffs.append(coeff[0])
    result = Poly(base_coeffs)
    field._minpoly_cache[c.leader] = result
    return result
