"""Quaternions and octonions: exact identities over the rationals."""

import random
from fractions import Fraction
from itertools import product

import pytest

from fsg.division import (
    FANO_LINES,
    Octonion,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    QUAT_ONE,
    Quaternion,
    associativity_probe,
    conj_norm_inverse,
    multiply,
    octonion_table,
    random_octonion,
    random_quaternion,
)
from fsg.errors import DomainMismatchError, ValidationError


def test_quaternion_units():
    assert QUAT_I * QUAT_J == QUAT_K
    assert QUAT_J * QUAT_I == Quaternion.of(0, 0, 0, -1)
    assert QUAT_I * QUAT_I == Quaternion.of(-1)
    assert (QUAT_I * QUAT_J) + (QUAT_J * QUAT_I) == Quaternion.of(0)
    assert QUAT_ONE * QUAT_K == QUAT_K


def test_quaternion_conj_norm_inverse():
    conj, norm, inv = conj_norm_inverse("H", QUAT_I)
    assert conj == Quaternion.of(0, -1)
    assert norm == 1
    assert inv == Quaternion.of(0, -1)
    q = Quaternion.of(1, 2, 3, 4)
    conj, norm, inv = conj_norm_inverse("H", q)
    assert norm == 30
    assert q * inv == QUAT_ONE
    _, _, inv0 = conj_norm_inverse("H", Quaternion.of(0))
    assert inv0 is None


def test_quaternion_norm_composition_random():
    rng = random.Random(3)
    for _ in range(100):
        a, b = random_quaternion(rng), random_quaternion(rng)
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()


def test_quaternion_fully_associative():
    rep = associativity_probe("H", 100)
    assert rep["fully_associative"]
    # and exhaustively on the imaginary basis triples
    basis = [QUAT_I, QUAT_J, QUAT_K]
    for a, b, c in product(basis, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_octonion_table_structure():
    table = octonion_table()
    assert len(FANO_LINES) == 7
    for i in range(1, 8):
        assert table[i][i] == (0, -1)
        for j in range(1, 8):
            if i != j:
                k, s = table[i][j]
                assert 1 <= k <= 7
                assert table[j][i] == (k, -s)


def test_octonion_anti_associative_triple():
    e1, e2, e3 = Octonion.unit(1), Octonion.unit(2), Octonion.unit(3)
    lhs = (e1 * e2) * e3
    rhs = e1 * (e2 * e3)
    assert lhs != rhs
    assert lhs == Octonion(tuple(-c for c in rhs.coords))


def test_octonion_alternativity():
    rep = associativity_probe("O", 100)
    assert rep["alternative"]
    w = rep["nonassociative_witness"]
    assert w["associator_nonzero"] and w["anti_associated"]
    units = [Octonion.unit(i) for i in range(8)]
    for a in units:
        for b in units:
            assert (a * a) * b == a * (a * b)
            assert (a * b) * b == a * (b * b)


def test_octonion_norm_composition():
    rng = random.Random(5)
    for _ in range(100):
        a, b = random_octonion(rng), random_octonion(rng)
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()


def test_octonion_inverse():
    o = Octonion.of(1, 1, 0, 2, 0, 0, 0, Fraction(1, 3))
    _, norm, inv = conj_norm_inverse("O", o)
    assert norm == o.norm() > 0
    assert o * inv == Octonion.of(1)
    assert Octonion.of(0).inverse() is None


def test_dispatch_errors():
    with pytest.raises(ValidationError):
        multiply("S", QUAT_I, QUAT_J)   # no sedenions
    with pytest.raises(DomainMismatchError):
        multiply("H", QUAT_I, Octonion.unit(1))
    with pytest.raises(ValidationError):
        associativity_probe("H", 0)


def test_quaternion_hamilton_product_formula():
    # (uu' - x.x', ux' + u'x + x ^ x') against the component formula
    rng = random.Random(11)
    for _ in range(50):
        a, b = random_quaternion(rng), random_quaternion(rng)
        real = a.u * b.u - (a.x * b.x + a.y * b.y + a.z * b.z)
        cross = (a.y * b.z - a.z * b.y,
                 a.z * b.x - a.x * b.z,
                 a.x * b.y - a.y * b.x)
        want = Quaternion(
            real,
            a.u * b.x + b.u * a.x + cross[0],
            a.u * b.y + b.u * a.y + cross[1],
            a.u * b.z + b.u * a.z + cross[2],
        )
        assert a * b == want
