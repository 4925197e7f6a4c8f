"""Exact univariate polynomial algebra over GF(3).

Polynomials are immutable and stored as an ascending-degree tuple of
coefficients in {0, 1, 2}; index i holds the coefficient of x^i.  The zero
polynomial is the empty tuple and reports degree -1, which sorts below every
other degree.  Constructor input may use arbitrary ints: signed coefficients
are reduced mod 3 on ingestion, so -1 becomes 2.

Two text forms are accepted wherever a polynomial is read: a human form like
"x^6-x^5+x^3+1" (spaces optional) and a list form like "1,0,0,1,0,2,1" giving
ascending-degree digits.  The human form is the one used in reports.

Beyond ring arithmetic the module provides division with remainder, monic gcd
and extended gcd, modular exponentiation, Frobenius powers by iterated cubing,
a deterministic irreducibility test, and complete factorization.  Factoring
runs squarefree decomposition, then distinct-degree splitting, then
equal-degree splitting; the equal-degree stage draws from a seeded generator
(default seed 0) so output is reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass


class PolyParseError(ValueError):
    """Raised for malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class Poly:
    """A dense polynomial over GF(3)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c % 3 for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % 3
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly((-c) % 3 for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly((other * c) % 3 for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = (out[i + j] + ai * bj) % 3
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        d = other.degree
        if self.degree < d:
            return Poly(), self
        r = list(self.coeffs)
        q = [0] * (self.degree - d + 1)
        bc = other.coeffs
        inv_lc = bc[-1]  # 1 and 2 are both self-inverse mod 3
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if c:
                f = (c * inv_lc) % 3
                q[i - d] = f
                for j in range(d + 1):
                    if bc[j]:
                        r[i - d + j] = (r[i - d + j] - f * bc[j]) % 3
        return Poly(q), Poly(r[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate at a GF(3) point by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % 3
        return acc

    def derivative(self) -> "Poly":
        return Poly((i * c) % 3 for i, c in enumerate(self.coeffs) if i >= 1)

    def monic(self) -> tuple[int, "Poly"]:
        """Split into (unit, monic polynomial) with self == unit * monic."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no monic form")
        u = self.lc
        if u == 1:
            return 1, self
        return u, self * u  # multiplying by 2 is division by 2 mod 3

    def format(self, style: str = "human") -> str:
        return format_poly(self, style)


@dataclass(frozen=True)
class Factorization:
    """unit * product of factors**multiplicity, factors monic and sorted."""

    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly((self.unit,))
        for p, mult in self.factors:
            out = out * p**mult
        return out


def parse_poly(text: str) -> Poly:
    """Parse either text form; raises PolyParseError with a position."""
    if "," in text:
        return _parse_list(text)
    return _parse_human(text)


def _parse_list(text: str) -> Poly:
    digits = []
    pos = 0
    for tok in text.split(","):
        core = tok.strip()
        at = pos + len(tok) - len(tok.lstrip())
        if core not in ("0", "1", "2"):
            raise PolyParseError("list form digits must be 0, 1, or 2", at)
        digits.append(int(core))
        pos += len(tok) + 1
    return Poly(digits)


def _parse_human(text: str) -> Poly:
    n = len(text)

    def skip(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i):
        j = i
        while j < n and text[j].isdigit():
            j += 1
        if j == i:
            return None, i
        return int(text[i:j]), j

    coeffs: dict[int, int] = {}
    i = skip(0)
    if i == n:
        raise PolyParseError("empty polynomial", i)
    first = True
    while i < n:
        sign = 1
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = skip(i + 1)
        elif not first:
            raise PolyParseError("expected '+' or '-'", i)
        coef, i = read_int(i)
        i = skip(i)
        power = None
        if i < n and text[i] == "x":
            i += 1
            j = skip(i)
            if j < n and text[j] == "^":
                power, i = read_int(skip(j + 1))
                if power is None:
                    raise PolyParseError("expected exponent digits", i)
            else:
                power = 1
        if coef is None and power is None:
            raise PolyParseError("expected a term", i)
        d = power if power is not None else 0
        coeffs[d] = coeffs.get(d, 0) + sign * (coef if coef is not None else 1)
        first = False
        i = skip(i)
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return Poly(out)


def format_poly(p: Poly, style: str = "human") -> str:
    """Render a polynomial; parse_poly(format_poly(p)) == p for both styles."""
    if style == "list":
        return ",".join(str(c) for c in p.coeffs) if p.coeffs else "0"
    if style != "human":
        raise ValueError(f"unknown style {style!r}")
    if not p.coeffs:
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        sign = "-" if c == 2 else "+"
        if d == 0:
            body = "1"
        elif d == 1:
            body = "x"
        else:
            body = f"x^{d}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


def monic_polys(degree: int):
    """Yield all monic polynomials of the given degree, ascending
    coefficient-sequence order (constant coefficient compared first)."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    for tail in itertools.product(range(3), repeat=degree):
        yield Poly(tail + (1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while b:
        a, b = b, a % b
    return a.monic()[1]


def poly_gcdext(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns monic g and s, t with s*a + t*b == g."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u = r0.lc  # scale everything so the gcd comes out monic
    return r0 * u, s0 * u, t0 * u


def powmod(a: Poly, n: int, mod: Poly) -> Poly:
    """a**n reduced mod a modulus of degree >= 1; n is any nonnegative int."""
    if mod.is_zero:
        raise ZeroDivisionError("zero modulus")
    if mod.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = Poly.one() % mod
    base = a % mod
    while n:
        if n & 1:
            result = result * base % mod
        base = base * base % mod
        n >>= 1
    return result


def frobenius_power(a: Poly, d: int, modulus: Poly) -> Poly:
    """a**(3**d) mod modulus, computed by d successive cubings."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    r = a % modulus if not modulus.is_zero else None
    if r is None:
        raise ZeroDivisionError("zero modulus")
    if modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    for _ in range(d):
        r = powmod(r, 3, modulus)
    return r


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n >= 1 in ascending order, trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over GF(3).

    Tests x**(3**d) == x mod f for d = deg f and, for each prime p dividing
    d, that gcd(x**(3**(d/p)) - x, f) is 1.
    """
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    f = f.monic()[1]
    d = f.degree
    x = Poly.x() % f
    if frobenius_power(Poly.x(), d, f) != x:
        return False
    for p in prime_factors(d):
        g = poly_gcd(frobenius_power(Poly.x(), d // p, f) - x, f)
        if g.degree != 0:
            return False
    return True


def _cube_root(f: Poly) -> Poly:
    # valid when f' == 0, i.e. only exponents divisible by 3 appear
    return Poly(f.coeffs[::3])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic nonconstant f into pairwise coprime squarefree parts.

    Returns [(part, multiplicity), ...] with f == product part**multiplicity.
    """
    if f.is_zero or not f.is_monic or f.degree < 1:
        raise ValueError("input must be monic of degree >= 1")
    parts = []
    scale = 1
    while f.degree > 0:
        df = f.derivative()
        if df.is_zero:
            f = _cube_root(f)
            scale *= 3
            continue
        g = poly_gcd(f, df)
        h = f // g
        i = 1
        while h.degree > 0:
            step = poly_gcd(g, h)
            part = h // step
            if part.degree > 0:
                parts.append((part, i * scale))
            g = g // step
            h = step
            i += 1
        if g.degree == 0:
            break
        f = g
    return parts


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    # f monic squarefree; returns [(product of irreducibles of degree d, d)]
    out = []
    v = f
    xq = Poly.x() % f
    x = Poly.x() % f
    d = 0
    while v.degree >= 2 * (d + 1):
        d += 1
        xq = powmod(xq, 3, f)
        g = poly_gcd(xq - x, v)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    # f monic, all irreducible factors of degree d; Cantor-Zassenhaus split
    if f.degree == d:
        return [f]
    exp = (3**d - 1) // 2
    while True:
        a = Poly(rng.randrange(3) for _ in range(f.degree))
        if a.degree < 1:
            continue
        g = poly_gcd(a, f)
        if 0 < g.degree < f.degree:
            break
        g = poly_gcd(powmod(a, exp, f) - Poly.one(), f)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles.

    The result is deterministic for a given seed: factors are sorted by
    degree, then by ascending coefficient sequence.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit, fm = f.monic()
    if fm.degree == 0:
        return Factorization(unit, ())
    rng = random.Random(seed)
    counts: dict[Poly, int] = {}
    for part, mult in squarefree_decomposition(fm):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree(prod, d, rng):
                counts[irr] = counts.get(irr, 0) + mult
    factors = tuple(sorted(counts.items()))
    return Factorization(unit, factors)


def roots_in_extension(f: Poly, m: int) -> bool:
    """True when f divides x**(3**m) - x, i.e. f is squarefree with every
    root in GF(3**m).  For irreducible f this holds iff deg f divides m."""
    if f.degree < 1:
        raise ValueError("degree must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    t = frobenius_power(Poly.x(), m, f) - (Poly.x() % f)
    return t.is_zero
