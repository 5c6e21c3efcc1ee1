"""Symmetric functions of the Chern roots and their Chern-class images."""

import random
from fractions import Fraction

import pytest

from conftest import random_symmetric
from planechow.mpoly import C1, C2, C3, H, MPoly, T1, T2, T3
from planechow.scalars import D
from planechow.symmetric import (
    E1,
    E2,
    E3,
    chern_roots_product,
    decompose_weight3,
    is_symmetric,
    sym_to_chern,
    weight3_basis,
)

ROOTS_TO_CHERN = {"t1": C1, "t2": C2, "t3": C3}


def test_is_symmetric():
    assert is_symmetric(T1 + T2 + T3)
    assert is_symmetric(T1 * T2 * T3)
    assert is_symmetric(MPoly.zero())
    assert is_symmetric(MPoly.const(4))
    assert not is_symmetric(T1 - T2)
    assert not is_symmetric(T1**2 * T2)


def test_is_symmetric_rejects_other_variables():
    with pytest.raises(ValueError):
        is_symmetric(H + T1)


def test_elementary_images():
    assert sym_to_chern(E1) == C1
    assert sym_to_chern(E2) == C2
    assert sym_to_chern(E3) == C3


def test_power_sum_and_friends():
    assert sym_to_chern(T1**3 + T2**3 + T3**3) == C1**3 - 3 * C1 * C2 + 3 * C3
    assert sym_to_chern(T1 * T2 * T3) == C3
    m21 = (
        T1**2 * T2 + T1**2 * T3 + T2**2 * T1
        + T2**2 * T3 + T3**2 * T1 + T3**2 * T2
    )
    assert sym_to_chern(m21) == C1 * C2 - 3 * C3
    assert sym_to_chern(T1**2 + T2**2 + T3**2) == C1**2 - 2 * C2


def test_sym_to_chern_rejects_asymmetric_input():
    with pytest.raises(ValueError):
        sym_to_chern(T1)


def test_sym_to_chern_round_trip():
    rng = random.Random(3)
    for _ in range(60):
        p = random_symmetric(rng)
        image = sym_to_chern(p)
        assert image.uses_only(("c1", "c2", "c3"))
        back = image.substitute(
            {"c1": E1, "c2": E2, "c3": E3}
        )
        assert back == p


def test_sym_to_chern_generic_coefficients():
    p = (T1 * T2 * T3).scale(D) - (T1 + T2 + T3).scale(2 * D - 6)
    assert sym_to_chern(p) == C3.scale(D) - C1.scale(2 * D - 6)


def test_weight3_decomposition_reconstructs():
    m3, m111, m21 = weight3_basis()
    p = m3.scale(-2) + m111.scale(-16) + m21.scale(-7)
    dec = decompose_weight3(p)
    assert dec.as_tuple() == (-2, -16, -7)
    rebuilt = m3.scale(dec.m3) + m111.scale(dec.m111) + m21.scale(dec.m21)
    assert rebuilt == p


def test_weight3_decomposition_of_zero():
    dec = decompose_weight3(MPoly.zero())
    assert dec.as_tuple() == (0, 0, 0)


def test_weight3_decomposition_rejects_wrong_weight():
    with pytest.raises(ValueError):
        decompose_weight3(T1 + T2 + T3)
    with pytest.raises(ValueError):
        decompose_weight3(T1 - T2)


def test_weight3_decomposition_random_round_trip():
    rng = random.Random(29)
    m3, m111, m21 = weight3_basis()
    for _ in range(50):
        a = Fraction(rng.randint(-20, 20))
        b = Fraction(rng.randint(-20, 20))
        c = Fraction(rng.randint(-20, 20))
        p = m3.scale(a) + m111.scale(b) + m21.scale(c)
        assert decompose_weight3(p).as_tuple() == (a, b, c)


def test_roots_product_empty_is_one():
    assert chern_roots_product([], 3) == MPoly.const(1)


def test_roots_product_single_factor():
    assert chern_roots_product([(1, 1, 1)], 3) == MPoly.const(1) - E1
    assert chern_roots_product([(0, 0, 0)], 3) == MPoly.const(1)


def test_roots_product_truncates():
    forms = [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    full = MPoly.const(1)
    for x, y, z in forms:
        full = full * (
            MPoly.const(1) - T1.scale(x) - T2.scale(y) - T3.scale(z)
        )
    cut = chern_roots_product(forms, 2)
    assert cut == full.graded_part(0) + full.graded_part(1) + full.graded_part(2)
    assert chern_roots_product(forms, 3).graded_part(1) == -E1.scale(4)
