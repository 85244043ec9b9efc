"""Tests for exact cube primitives: Krawtchouk tables, transforms, entropy.

Oracle strategy: Krawtchouk values are checked against an independent
generating-function expansion (coefficient extraction from
(1-z)^k (1+z)^(n-k)), radial transforms against the dense butterfly on the
full cube, and the butterfly itself against the brute-force O(4^n) sum.
"""

import math
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lpbound.cube import (
    DenseFunction,
    DenseLimitError,
    LevelProfile,
    binary_entropy,
    binomial,
    dense_convolve,
    dense_limit,
    dense_transform,
    krawtchouk_table,
    radial_sum,
    radial_transform,
    radialize,
    rational_from_str,
    rational_to_str,
    to_dense,
)


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def kraw_poly_oracle(n, j, k):
    """K_j(k) via coefficient extraction from (1-z)^k (1+z)^(n-k).

    Expands both binomials explicitly and convolves -- no shared code with
    the recurrence in lpbound.cube.
    """
    # coefficients of (1-z)^k
    a = [(-1) ** i * math.comb(k, i) for i in range(k + 1)]
    # coefficients of (1+z)^(n-k)
    b = [math.comb(n - k, i) for i in range(n - k + 1)]
    coeff = 0
    for i, ai in enumerate(a):
        jj = j - i
        if 0 <= jj < len(b):
            coeff += ai * b[jj]
    return coeff


def brute_transform(f):
    """F[f](x) = sum_y (-1)^<x,y> f(y), directly, O(4^n)."""
    size = 1 << f.n
    out = []
    for x in range(size):
        acc = Fraction(0)
        for y in range(size):
            sign = -1 if (x & y).bit_count() & 1 else 1
            acc += sign * f.values[y]
        out.append(acc)
    return DenseFunction(f.n, tuple(out))


def brute_convolve(f, g):
    """(f*g)(x) = 2^-n sum_y f(y) g(x XOR y), directly."""
    size = 1 << f.n
    scale = Fraction(1, size)
    out = []
    for x in range(size):
        acc = Fraction(0)
        for y in range(size):
            acc += f.values[y] * g.values[x ^ y]
        out.append(scale * acc)
    return DenseFunction(f.n, tuple(out))


# ---------------------------------------------------------------------------
# binomial + rational serialization
# ---------------------------------------------------------------------------

def test_binomial_pascal():
    # Pascal recurrence as an independent check, n up to 30
    for n in range(1, 31):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 0) == 1
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_rational_roundtrip():
    for x in [Fraction(3, 7), Fraction(-22, 4), Fraction(0), 17, Fraction(10**40, 3)]:
        s = rational_to_str(x)
        assert "/" in s
        assert rational_from_str(s) == Fraction(x)
    assert rational_to_str(Fraction(-22, 4)) == "-11/2"
    assert rational_from_str("5") == 5


# ---------------------------------------------------------------------------
# Krawtchouk tables
# ---------------------------------------------------------------------------

def test_krawtchouk_small_known_values():
    # n=4: K_2(1) = 0 (hand value via generating function)
    t = krawtchouk_table(4)
    assert t[2][1] == 0
    assert t[1][0] == 4
    assert t[1][4] == -4
    assert t[4][1] == -1


def test_krawtchouk_against_generating_function():
    for n in (1, 2, 3, 5, 8, 11, 16):
        t = krawtchouk_table(n)
        for j in range(n + 1):
            for k in range(n + 1):
                assert t[j][k] == kraw_poly_oracle(n, j, k), (n, j, k)


def test_krawtchouk_row_zero_and_column_zero():
    for n in (3, 7, 12):
        t = krawtchouk_table(n)
        assert all(v == 1 for v in t[0])
        for j in range(n + 1):
            assert t[j][0] == binomial(n, j)


def test_krawtchouk_reciprocity():
    # C(n,k) K_j(k) == C(n,j) K_k(j)
    for n in (5, 9, 14):
        t = krawtchouk_table(n)
        for j in range(n + 1):
            for k in range(n + 1):
                assert binomial(n, k) * t[j][k] == binomial(n, j) * t[k][j]


def test_krawtchouk_orthogonality():
    # sum_k C(n,k) K_i(k) K_j(k) == 2^n C(n,i) [i==j]
    for n in (4, 8, 13):
        t = krawtchouk_table(n)
        for i in range(n + 1):
            for j in range(n + 1):
                s = sum(binomial(n, k) * t[i][k] * t[j][k] for k in range(n + 1))
                expect = (1 << n) * binomial(n, i) if i == j else 0
                assert s == expect


def test_krawtchouk_rejects_bad_n():
    with pytest.raises(ValueError):
        krawtchouk_table(0)


# ---------------------------------------------------------------------------
# level profiles and radial transform
# ---------------------------------------------------------------------------

def test_profile_validation():
    with pytest.raises(ValueError):
        LevelProfile(3, (Fraction(1), Fraction(2)))
    p = LevelProfile.from_values(2, [1, "1/2", 0])
    assert p[1] == Fraction(1, 2)
    assert len(p) == 3


def test_profile_json_roundtrip():
    p = LevelProfile.from_values(3, [Fraction(1, 3), -2, 0, Fraction(7, 5)])
    q = LevelProfile.from_json_dict(p.to_json_dict())
    assert q == p


def test_radial_transform_of_level_indicator_is_krawtchouk_row():
    # F[L_j] evaluated at weight i is K_j(i) by definition of the table
    for n in (3, 6, 10):
        t = krawtchouk_table(n)
        for j in range(n + 1):
            e = LevelProfile.level_indicator(n, j)
            f = radial_transform(e)
            assert tuple(f.values) == tuple(Fraction(v) for v in t[j])


def test_radial_transform_involution():
    # F(F(p)) == 2^n p
    for n in (2, 5, 9):
        p = LevelProfile.from_values(
            n, [Fraction(k * k - 3 * k + 1, k + 2) for k in range(n + 1)]
        )
        twice = radial_transform(radial_transform(p))
        assert twice == p.scale(1 << n)


def test_radial_matches_dense():
    # the radial transform agrees with the dense butterfly on the full cube
    for n in (1, 3, 6, 8):
        p = LevelProfile.from_values(n, [Fraction(2 * k - n, 3) for k in range(n + 1)])
        dense = dense_transform(to_dense(p))
        rad = radial_transform(p)
        for x in range(1 << n):
            assert dense[x] == rad[x.bit_count()]


def test_radial_sum():
    for n in (4, 7):
        p = LevelProfile.from_values(n, list(range(n + 1)))
        assert radial_sum(p) == sum(binomial(n, k) * k for k in range(n + 1))
        # equals F[p](0) as well
        assert radial_sum(p) == radial_transform(p)[0]


# ---------------------------------------------------------------------------
# dense functions
# ---------------------------------------------------------------------------

def test_dense_transform_matches_bruteforce():
    for n in (1, 2, 4, 6):
        vals = [Fraction((x * 7 + 3) % 11 - 5, 2) for x in range(1 << n)]
        f = DenseFunction.from_values(n, vals)
        assert dense_transform(f) == brute_transform(f)


def test_dense_transform_involution_and_parseval():
    n = 5
    vals = [Fraction(x % 7 - 3) for x in range(1 << n)]
    f = DenseFunction.from_values(n, vals)
    fh = dense_transform(f)
    assert dense_transform(fh) == DenseFunction.from_values(n, [v * (1 << n) for v in vals])
    # Parseval: sum F^2 == 2^n sum f^2
    assert sum(v * v for v in fh.values) == (1 << n) * sum(v * v for v in f.values)


def test_dense_convolve_matches_bruteforce():
    for n in (2, 3, 5):
        f = DenseFunction.from_values(n, [Fraction(x % 5, 3) for x in range(1 << n)])
        g = DenseFunction.from_values(n, [Fraction((x * x) % 7 - 2) for x in range(1 << n)])
        assert dense_convolve(f, g) == brute_convolve(f, g)


def test_convolution_transform_identity():
    # F[f*g] == 2^-n F[f] F[g]
    n = 4
    f = DenseFunction.from_values(n, [Fraction(x % 3) for x in range(1 << n)])
    g = DenseFunction.from_values(n, [Fraction(1, x + 1) for x in range(1 << n)])
    lhs = dense_transform(dense_convolve(f, g))
    fh, gh = dense_transform(f), dense_transform(g)
    scale = Fraction(1, 1 << n)
    assert lhs == DenseFunction.from_values(n, [scale * a * b for a, b in zip(fh.values, gh.values)])


def test_point_mass_transform_is_constant():
    f = DenseFunction.point_mass(3, 0)
    assert dense_transform(f) == DenseFunction.from_values(3, [1] * 8)


def test_radialize_inverts_to_dense_and_preserves_mass():
    n = 6
    p = LevelProfile.from_values(n, [Fraction(3 - k, 2) for k in range(n + 1)])
    assert radialize(to_dense(p)) == p
    f = DenseFunction.from_values(n, [Fraction((x * 13 + 5) % 9 - 4) for x in range(1 << n)])
    assert radial_sum(radialize(f)) == sum(f.values)


def test_dense_limit_env(tmp_path):
    assert dense_limit() == 24
    code = (
        "import os; os.environ['LPBOUND_DENSE_LIMIT']='6'\n"
        "from lpbound.cube import dense_transform, DenseFunction, DenseLimitError\n"
        "f = DenseFunction.from_values(7, [0]*128)\n"
        "try:\n"
        "    dense_transform(f)\n"
        "except DenseLimitError:\n"
        "    print('OK')\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert out.stdout.strip() == "OK", out.stderr


def test_dense_limit_guard():
    prev = os.environ.get("LPBOUND_DENSE_LIMIT")
    os.environ["LPBOUND_DENSE_LIMIT"] = "4"
    try:
        with pytest.raises(DenseLimitError):
            DenseFunction.point_mass(5, 0)
    finally:
        if prev is None:
            del os.environ["LPBOUND_DENSE_LIMIT"]
        else:
            os.environ["LPBOUND_DENSE_LIMIT"] = prev


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------

def test_binary_entropy_values():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == 1.0
    assert abs(binary_entropy(0.11) - 0.4999159581) < 1e-8
    with pytest.raises(ValueError):
        binary_entropy(-0.01)
    with pytest.raises(ValueError):
        binary_entropy(1.5)


def test_binary_entropy_symmetry():
    for p in [0.01, 0.2, 0.37, 0.49]:
        assert binary_entropy(p) == pytest.approx(binary_entropy(1 - p), abs=1e-15)


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

@settings(max_examples=40, deadline=None, derandomize=True)
@given(
    n=st.integers(min_value=1, max_value=12),
    data=st.data(),
)
def test_radial_transform_linearity_and_involution(n, data):
    ints = st.integers(min_value=-20, max_value=20)
    p = LevelProfile.from_values(n, data.draw(st.lists(ints, min_size=n + 1, max_size=n + 1)))
    q = LevelProfile.from_values(n, data.draw(st.lists(ints, min_size=n + 1, max_size=n + 1)))
    fp, fq = radial_transform(p), radial_transform(q)
    s = LevelProfile(n, tuple(a + b for a, b in zip(p.values, q.values)))
    assert radial_transform(s) == LevelProfile(n, tuple(a + b for a, b in zip(fp.values, fq.values)))
    assert radial_transform(fp) == p.scale(1 << n)


@settings(max_examples=25, deadline=None, derandomize=True)
@given(n=st.integers(min_value=1, max_value=7), data=st.data())
def test_dense_radial_consistency(n, data):
    ints = st.integers(min_value=-9, max_value=9)
    vals = data.draw(st.lists(ints, min_size=1 << n, max_size=1 << n))
    f = DenseFunction.from_values(n, vals)
    # radializing commutes with transforming
    assert radialize(dense_transform(f)) == radial_transform(radialize(f))
