"""Ternary cyclic codes with two nonzeros, their parity-check structure, a
brute-force oracle for words of weight below 4, and the sphere-packing bound.

The code for exponent e has length n = 3^m - 1 and generator polynomial
m_1(x) * m_e(x), the product of the minimal polynomials of the generator and
its e-th power.  A word (c_0, ..., c_{n-1}) belongs to the code iff both
syndrome sums vanish: sum c_j alpha^j = 0 and sum c_j alpha^(ej) = 0; the
pairs (alpha^j, alpha^(ej)) are the parity-check columns.

The weight oracle is deliberately independent of the optimality conditions
checked elsewhere: it decides "is there a codeword of weight 1, 2, or 3" by
direct search over columns, so the two routes can be played against each
other.  Weight 1 is impossible (no column is zero).  Weight 2 reduces to a
column being a base-field multiple of another, which pins the position gap
to n/2.  Weight 3 scans pairs (i < j), solves for the unique candidate third
column, and accepts only hits with index k > j, with the third scalar
normalized to 1; the candidate lookup runs in Zech-logarithm space, and any
hit is confirmed against the actual field arithmetic before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cosets import coset, minimal_polynomial
from .field import LOG_TABLE_MAX_DEGREE, Field
from .gf3poly import Poly

# pair scans up to m=8 run unprompted; 9 and 10 only on request
SEARCH_DEFAULT_MAX_DEGREE = 8


class ConjugateExponentError(ValueError):
    """The two nonzeros would be conjugate (e lies in the coset of 1)."""

    def __init__(self, e: int, members: tuple[int, ...]):
        super().__init__(
            f"e={e} is a power-of-3 multiple of 1 mod the group order "
            f"(coset {{{', '.join(map(str, members))}}}); the two nonzeros "
            f"must come from distinct cosets"
        )
        self.e = e
        self.coset = members


@dataclass(frozen=True)
class CodeSpec:
    m: int
    e: int
    n: int
    generator: Poly
    k: int


def build_code(field: Field, e: int) -> CodeSpec:
    """The code with nonzeros alpha and alpha^e; rejects conjugate e."""
    n = field.order
    if not 1 <= e <= n - 1:
        raise ValueError(f"e must be in [1, {n - 1}], got {e}")
    c1 = coset(1, 3, field.m)
    if e % n in c1.members:
        raise ConjugateExponentError(e, c1.members)
    gen = minimal_polynomial(field, 1) * minimal_polynomial(field, e)
    return CodeSpec(field.m, e, n, gen, n - gen.degree)


def parity_check_columns(field: Field, e: int) -> list[tuple[tuple, tuple]]:
    """Column j = (alpha^j, alpha^(ej)) for j in [0, n)."""
    n = field.order
    a = field.one
    b = field.one
    ae = field.pow(field.gen, e)
    cols = []
    for _ in range(n):
        cols.append((a, b))
        a = field.mul(a, field.gen)
        b = field.mul(b, ae)
    return cols


def syndrome(field: Field, e: int, positions, values) -> tuple[tuple, tuple]:
    """The two syndrome sums of a sparse word given as positions/values."""
    s1 = field.zero
    s2 = field.zero
    for pos, val in zip(positions, values):
        s1 = field.add(s1, field.scalar_mul(val, field.pow(field.gen, pos)))
        s2 = field.add(s2, field.scalar_mul(val, field.pow(field.gen, e * pos)))
    return s1, s2


@dataclass(frozen=True)
class WeightWitness:
    verdict: str  # "no_word_below_4" or "found"
    positions: tuple[int, ...] | None = None
    values: tuple[int, ...] | None = None

    @property
    def weight(self) -> int | None:
        return len(self.positions) if self.positions is not None else None


def _confirm_witness(field: Field, e: int, positions, values) -> None:
    s1, s2 = syndrome(field, e, positions, values)
    if s1 != field.zero or s2 != field.zero:
        raise RuntimeError(
            f"witness {positions}/{values} failed syndrome confirmation"
        )


def min_weight_leq3_search(field: Field, e: int, allow_long: bool = False) -> WeightWitness:
    """Search for a codeword of weight 1, 2, or 3.

    Returns the first witness in scan order (i, j, scalar pair), scaled so
    its first value is 1, or the verdict no_word_below_4.  Refuses m > 8
    unless allow_long is set; m > 10 is out of reach for the scan
    regardless (no Zech tables).
    """
    m, n = field.m, field.order
    if m > LOG_TABLE_MAX_DEGREE:
        raise ValueError(
            f"weight search needs Zech tables, available for m <= "
            f"{LOG_TABLE_MAX_DEGREE}; got m={m}"
        )
    if m > SEARCH_DEFAULT_MAX_DEGREE and not allow_long:
        raise ValueError(
            f"weight search at m={m} scans about {n * (n - 1) // 2} column "
            f"pairs; pass allow_long=True to run it anyway"
        )
    if not 1 <= e <= n - 1:
        raise ValueError(f"e must be in [1, {n - 1}], got {e}")
    _, _, zech = field.tables()
    half = n // 2
    emod = e % n

    # Weight 1: a single scaled column is never zero, so nothing to scan.

    # Weight 2: lam1*col_i + lam2*col_j = 0 forces (first coordinates)
    # alpha^(j-i) = -lam1/lam2, a base-field value, so j = i + n/2 and
    # lam1 = lam2; the second coordinates then need alpha^(e*n/2) = -1.
    if emod * half % n == half:
        positions, values = (0, half), (1, 1)
        _confirm_witness(field, e, positions, values)
        return WeightWitness("found", positions, values)

    # Weight 3: for each pair i < j and scalars (lam1, lam2), the third
    # column is determined: col_k = -(lam1*col_i + lam2*col_j), third scalar
    # normalized to 1.  Solve for k from the first coordinates via Zech
    # logs, then accept iff the second coordinates agree and k > j.
    ei = 0
    for i in range(n - 2):
        ej = ei
        for j in range(i + 1, n):
            ej += emod
            if ej >= n:
                ej -= n
            for o1 in (0, half):  # lam1 = 1, 2
                for o2 in (0, half):  # lam2 = 1, 2
                    d1 = (j + o2 - i - o1) % n
                    if d1 == half:
                        continue  # first coordinates cancel; no third column
                    k = (i + o1 + zech[d1] + half) % n
                    if k <= j:
                        continue
                    d2 = (ej + o2 - ei - o1) % n
                    if d2 == half:
                        continue  # second coordinates cancel
                    if k * emod % n == (ei + o1 + zech[d2] + half) % n:
                        lam1 = 1 if o1 == 0 else 2
                        lam2 = 1 if o2 == 0 else 2
                        # scale by lam1^-1 = lam1 so the first value is 1
                        positions = (i, j, k)
                        values = (1, lam1 * lam2 % 3, lam1)
                        _confirm_witness(field, e, positions, values)
                        return WeightWitness("found", positions, values)
        ei += emod
        if ei >= n:
            ei -= n
    return WeightWitness("no_word_below_4")


def hamming_ball(n: int, t: int, q: int) -> int:
    """Number of words within Hamming distance t of a fixed word."""
    return sum(comb(n, i) * (q - 1) ** i for i in range(t + 1))


def sphere_packing_max_d(n: int, k: int, q: int) -> int:
    """Largest minimum distance the sphere-packing bound allows for (n, k).

    Exact integer arithmetic: finds the largest t with
    q^k * ball(t) <= q^n and returns d = 2t + 2.
    """
    if n < 1 or not 1 <= k <= n or q < 2:
        raise ValueError(f"invalid parameters (n={n}, k={k}, q={q})")
    budget = q ** (n - k)
    t = 0
    while t + 1 <= n and hamming_ball(n, t + 1, q) <= budget:
        t += 1
    return 2 * t + 2


def is_codeword(spec: CodeSpec, word: Poly) -> bool:
    """Membership by generator divisibility; word as a polynomial."""
    if word.degree >= spec.n:
        raise ValueError(f"word degree must be below n={spec.n}")
    return (word % spec.generator).is_zero
