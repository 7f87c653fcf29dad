"""Integer q-series arithmetic and the moonshine identities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsg.errors import ResourceLimitError, ValidationError
from fsg.moonshine import (
    IntegerSeries,
    delta_expansion,
    eisenstein_e4,
    j_cube_root,
    j_expansion,
    leech_theta_prefix,
    monster_constant_checks,
    monster_order,
    moonshine_decompositions,
    sum_of_squares_check,
)


def test_series_basics():
    s = IntegerSeries(-1, (1, 744, 196884))
    assert s.coeff(-1) == 1 and s.coeff(0) == 744 and s.coeff(1) == 196884
    assert s.coeff(-5) == 0
    with pytest.raises(ValidationError):
        s.coeff(2)


def test_series_ring_laws_on_fixed_triples():
    a = IntegerSeries(0, (1, 2, 3, 4, 5))
    b = IntegerSeries(1, (1, -1, 2, -2))
    c = IntegerSeries(0, (2, 0, 1, 7, -3))
    lhs = (a * b) * c
    rhs = a * (b * c)
    assert lhs.eq_through(rhs, min(lhs.known_through, rhs.known_through))
    s1 = (a + c) * b
    s2 = a * b + c * b
    assert s1.eq_through(s2, min(s1.known_through, s2.known_through))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=3, max_size=8),
       st.lists(st.integers(-9, 9), min_size=3, max_size=8),
       st.lists(st.integers(-9, 9), min_size=3, max_size=8))
def test_series_associativity_random(xs, ys, zs):
    a, b, c = (IntegerSeries(0, tuple(v)) for v in (xs, ys, zs))
    lhs = (a * b) * c
    rhs = a * (b * c)
    assert lhs.eq_through(rhs, min(lhs.known_through, rhs.known_through))


def test_inverse_and_exact_div():
    u = IntegerSeries(0, (1, -24, 252, -1472, 4830))
    inv = u.inverse()
    prod = u * inv
    assert prod.coeff(0) == 1
    assert all(prod.coeff(k) == 0 for k in range(1, prod.known_through + 1))
    q = (u * u).exact_div(u)
    assert q.eq_through(u, q.known_through)


def test_delta_against_hand_expansion():
    # oracle: expand (1-q)^24 (1-q^2)^24 (1-q^3)^24 to order 3 directly
    def poly_mul(a, b, n):
        out = [0] * (n + 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if i + j <= n:
                    out[i + j] += x * y
        return out

    def binom_pow(k, n):
        # (1 - q^k)^24 truncated at q^n
        from math import comb
        out = [0] * (n + 1)
        for t in range(0, n // k + 1):
            out[k * t] = (-1) ** t * comb(24, t)
        return out

    n = 3
    prod = [1] + [0] * n
    for k in (1, 2, 3):
        prod = poly_mul(prod, binom_pow(k, n), n)
    delta = delta_expansion(4)
    # delta = q * prod(...): compare shifted coefficients
    assert [delta.coeff(m) for m in (1, 2, 3, 4)] == [prod[0], prod[1], prod[2], prod[3]]
    assert delta.coeff(2) == -24
    assert delta.coeff(3) == 252


def test_delta_against_pentagonal_eta_oracle():
    # Euler: prod(1-q^n) = sum (-1)^k q^(k(3k+-1)/2); delta = q * (that)^24
    n = 12
    eta = [0] * (n + 1)
    eta[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= n:
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g <= n:
                eta[g] = (-1) ** k
        k += 1
    cur = [1] + [0] * n
    for _ in range(24):
        nxt = [0] * (n + 1)
        for i, x in enumerate(cur):
            if x:
                for j, y in enumerate(eta):
                    if y and i + j <= n:
                        nxt[i + j] += x * y
        cur = nxt
    delta = delta_expansion(n + 1)
    assert [delta.coeff(m + 1) for m in range(n + 1)] == cur


def test_eisenstein_values():
    e4 = eisenstein_e4(4)
    assert e4.coeff(0) == 1
    assert e4.coeff(1) == 240
    assert e4.coeff(2) == 240 * 9      # sigma_3(2) = 9
    assert e4.coeff(3) == 240 * 28     # sigma_3(3) = 28


def test_j_expansion_known_values():
    j = j_expansion(3)
    assert j.leading == -1
    assert j.coeff(-1) == 1
    assert j.coeff(0) == 744
    assert j.coeff(1) == 196884
    assert j.coeff(2) == 21493760
    assert j.coeff(3) == 864299970


def test_division_certificate_j_times_delta():
    n = 10
    j = j_expansion(n)
    delta = delta_expansion(n + 2)
    e4 = eisenstein_e4(n + 1)
    e4_cubed = (e4 * e4 * e4).truncate(n + 1)
    back = j * delta
    assert back.eq_through(e4_cubed, back.known_through)


def test_cube_root_values_and_certificate():
    s = j_cube_root(5)
    assert s.coeff(0) == 1
    assert s.coeff(1) == 248
    assert s.coeff(2) == 4124
    assert s.coeff(3) == 34752
    cube = s * s * s
    qj = j_expansion(5).shift(1)
    assert cube.eq_through(qj, cube.known_through)


def test_theta_prefix():
    th = leech_theta_prefix(3)
    assert [th.coeff(m) for m in range(4)] == [1, 0, 196560, 16773120]


def test_moonshine_decompositions():
    checks = moonshine_decompositions()
    assert len(checks) == 6
    assert all(c["pass"] for c in checks)
    assert checks[0]["lhs"] == 196884


def test_monster_constants():
    order = monster_order()
    assert len(str(order)) == 54
    assert order % 71 == 0
    for p in (37, 43, 53, 61, 67):
        assert order % p != 0
    assert 196883 == 47 * 59 * 71
    assert all(c["pass"] for c in monster_constant_checks())
    # magnitude close to 8 * 10^53
    assert 8 * 10 ** 53 < order < 8.1 * 10 ** 53


def test_sum_of_squares():
    rep = sum_of_squares_check(scan_limit=2000)
    assert rep["direct_sum_1_to_24"] == 4900 == 70 ** 2
    assert rep["closed_form"] == 4900
    assert rep["equals_70_squared"]
    assert rep["square_total_ns"] == [1, 24]


def test_bounds():
    with pytest.raises(ResourceLimitError):
        delta_expansion(10 ** 5)
    with pytest.raises(ResourceLimitError):
        j_expansion(10 ** 4)
