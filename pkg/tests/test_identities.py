"""Symbolic identity suite: composed polynomials, frozen factorizations,
and the substitution steps that link them."""

import pytest

from cyc3.gf3poly import Poly, parse_poly, poly_gcd, roots_in_extension
from cyc3.identities import (
    FIXED_POINT_DIFFERENCE,
    NINTH_POWER_SUM,
    SEVENTH_ROOT_FACTOR,
    cleared_compose,
    difference_polys,
    factorization_check,
    run_all,
    sum_polys,
    verify_difference_fixed_point,
    verify_difference_ninth_power,
    verify_steps,
    verify_sum_fixed_point,
    verify_sum_ninth_power,
)

X = Poly.x()
ONE = Poly.one()

EXPECTED_IDS = [
    "difference-fixed-point",
    "difference-ninth-power",
    "sum-fixed-point",
    "sum-ninth-power",
    "step-difference-direct-substitution",
    "step-sum-direct-substitution",
    "step-sum-cube-substitution",
    "step-seventh-power-minus-one",
    "step-frobenius-fourth-power",
]


def test_run_all_everything_passes():
    checks = run_all()
    assert [c.check_id for c in checks] == EXPECTED_IDS
    assert all(c.passed for c in checks), [
        (c.check_id, c.detail) for c in checks if not c.passed
    ]


def test_run_all_is_deterministic():
    assert run_all() == run_all()


def test_difference_pair_shapes():
    f, g = difference_polys()
    assert f == parse_poly("x^5-x^4+x^3+x^2-x")
    assert g == parse_poly("x^4-x^3-x^2+x-1")
    # clearing denominators of f(x)/g(x) composed with itself at height 5
    F = cleared_compose(f, f, g, 5)
    G = cleared_compose(g, f, g, 5)
    assert (F.degree, F.lc) == (25, 1)
    assert (G.degree, G.lc) == (24, 1)


def test_sum_pair_shapes():
    k, l = sum_polys()
    assert k == parse_poly("x^4+x^2-x+1")
    assert l == parse_poly("x^4-x^3+x^2+1")
    K = cleared_compose(k, k, l, 4)
    L = cleared_compose(l, k, l, 4)
    assert (K.degree, K.lc) == (16, 2)
    assert (L.degree, L.lc) == (16, 2)


def test_cleared_compose_rejects_short_degree():
    f, g = difference_polys()
    with pytest.raises(ValueError):
        cleared_compose(f, f, g, 4)


def test_cleared_compose_homogenization_degree():
    # raising the clearing degree multiplies by the denominator
    f, g = difference_polys()
    assert cleared_compose(f, f, g, 6) == cleared_compose(f, f, g, 5) * g


def test_difference_fixed_point_frozen_factors():
    check = verify_difference_fixed_point()
    assert check.passed
    assert check.unit == 2
    assert check.lhs.degree == 23
    # x^3 divides: the low-degree tail vanishes
    assert check.lhs.coeffs[:3] == (0, 0, 0)


def test_difference_ninth_power_frozen_factors():
    check = verify_difference_ninth_power()
    assert check.passed
    assert check.unit == 1
    assert check.lhs.degree == 33


def test_sum_fixed_point_has_quintuple_root_at_one():
    check = verify_sum_fixed_point()
    assert check.passed
    assert check.unit == 2
    assert check.lhs.degree == 17
    k, l = sum_polys()
    assert X * cleared_compose(l, k, l, 4) - cleared_compose(k, k, l, 4) == check.lhs
    # (x - 1)^5 carries multiplicity five
    assert ("x-1", 5) in [
        (p, m) for p, m in _fixture_pairs(check)
    ]


def _fixture_pairs(check):
    from cyc3.gf3poly import factor

    return [(p.format(), m) for p, m in factor(check.lhs).factors]


def test_sum_ninth_power_frozen_factors():
    check = verify_sum_ninth_power()
    assert check.passed
    assert check.unit == 2
    assert check.lhs.degree == 25
    assert len(NINTH_POWER_SUM) == 10


def test_quintic_pair_is_coprime():
    a = parse_poly("x^5-x^2-1")
    b = parse_poly("x^5+x^3-x^2-1")
    p = parse_poly(SEVENTH_ROOT_FACTOR)
    assert poly_gcd(a, b) == ONE
    assert poly_gcd(a, p) == ONE
    assert poly_gcd(b, p) == ONE


def test_seventh_root_factor_splits_in_degree_six():
    p = parse_poly(SEVENTH_ROOT_FACTOR)
    assert roots_in_extension(p, 6)
    assert not roots_in_extension(p, 4)
    # its roots are primitive 14th roots of unity: x^7 = -1 mod p
    assert (X ** 7 + ONE) % p == Poly.zero()


def test_steps_pass_individually():
    for check in verify_steps():
        assert check.passed, (check.check_id, check.detail)


def test_direct_substitution_collapses_to_cube():
    f, g = difference_polys()
    assert X * g - f == X ** 3
    k, l = sum_polys()
    assert X * l - k == (X - ONE) ** 5


def test_cube_substitution_yields_eighth_power_difference():
    k, l = sum_polys()
    assert (X ** 3 * l - k) * (X + ONE) == X ** 8 - ONE


def test_factorization_check_detects_tampered_lhs():
    """The checker must fail when the polynomial is off by one; a checker
    that cannot fail certifies nothing."""
    f, g = difference_polys()
    lhs = X * cleared_compose(g, f, g, 5) - cleared_compose(f, f, g, 5)
    good = factorization_check("control-good", lhs, FIXED_POINT_DIFFERENCE)
    assert good.passed
    bad = factorization_check("control-bad", lhs + ONE, FIXED_POINT_DIFFERENCE)
    assert not bad.passed


def test_factorization_check_detects_tampered_fixture():
    f, g = difference_polys()
    lhs = X * cleared_compose(g, f, g, 5) - cleared_compose(f, f, g, 5)
    tampered = tuple(
        (poly, mult + 1 if poly == "x+1" else mult)
        for poly, mult in FIXED_POINT_DIFFERENCE
    )
    assert not factorization_check("control-mult", lhs, tampered).passed


def test_bridge_degrees_separate_factors():
    """Each frozen irreducible has roots exactly in the extensions its
    degree divides, over the degrees the codes actually live in."""
    for poly_text, _ in FIXED_POINT_DIFFERENCE + NINTH_POWER_SUM:
        p = parse_poly(poly_text)
        for m in (4, 6, 8, 10, 12):
            assert roots_in_extension(p, m) == (m % p.degree == 0)
