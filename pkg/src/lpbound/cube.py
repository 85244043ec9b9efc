"""Exact combinatorial and Fourier primitives on the Hamming cube.

Everything here is exact: profiles and dense functions hold rationals
(`fractions.Fraction`), Krawtchouk tables hold arbitrary-precision integers.
Floating point appears only in `binary_entropy`.

Transform convention: `radial_transform` and `dense_transform` compute the
UNNORMALIZED transform

    F[f](x) = sum_y (-1)^<x,y> f(y)

so that integer inputs stay integers.  The normalized transform used in
inner-product identities is 2^(-n) * F[f], and F is an involution up to
scale: F(F(f)) = 2^n * f.  Convolution `dense_convolve` is normalized,
(f*g)(x) = 2^(-n) sum_y f(y) g(x+y), which makes the transform of f*g equal
to 2^(-n) F[f] F[g] pointwise.

A radial function (one depending only on Hamming weight) is stored as a
`LevelProfile` of n+1 values; its transform is again radial and is computed
through the Krawtchouk table in O(n^2) exact operations instead of O(2^n).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

DEFAULT_DENSE_LIMIT = 24
_DENSE_LIMIT_ENV = "LPBOUND_DENSE_LIMIT"


class DenseLimitError(ValueError):
    """Raised when a dense-cube operation is requested above the size limit."""


def dense_limit() -> int:
    """Current dense-mode dimension limit (env LPBOUND_DENSE_LIMIT overrides)."""
    raw = os.environ.get(_DENSE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_DENSE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{_DENSE_LIMIT_ENV} must be an integer, got {raw!r}")


def _check_dense_dimension(n: int) -> None:
    limit = dense_limit()
    if n > limit:
        raise DenseLimitError(
            f"dense-cube operation needs 2^{n} points; limit is n <= {limit} "
            f"(override with {_DENSE_LIMIT_ENV})"
        )


def rational_to_str(x: Rational) -> str:
    """Serialize a rational as 'p/q' with decimal integers, never a float."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse 'p/q' (or a bare integer string 'p') into an exact Fraction."""
    return Fraction(s.strip())


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Level profiles (radial functions)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelProfile:
    """A radial function on the n-cube: values[k] on every weight-k point.

    Immutable; `values` has exactly n+1 exact rational entries.
    """

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.n}")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.n + 1:
            raise ValueError(
                f"profile for n={self.n} needs {self.n + 1} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return self.n + 1

    @staticmethod
    def from_values(n: int, values: Iterable[Rational]) -> "LevelProfile":
        return LevelProfile(n, tuple(Fraction(v) for v in values))

    @staticmethod
    def level_indicator(n: int, j: int) -> "LevelProfile":
        """Profile of the indicator of the weight-j level (e_j)."""
        if not 0 <= j <= n:
            raise ValueError(f"level {j} out of range for n={n}")
        return LevelProfile(n, tuple(Fraction(1 if k == j else 0) for k in range(n + 1)))

    @staticmethod
    def constant(n: int, value: Rational = 1) -> "LevelProfile":
        return LevelProfile(n, tuple(Fraction(value) for _ in range(n + 1)))

    def scale(self, c: Rational) -> "LevelProfile":
        f = Fraction(c)
        return LevelProfile(self.n, tuple(f * v for v in self.values))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "values": [rational_to_str(v) for v in self.values]}

    @staticmethod
    def from_json_dict(obj: dict) -> "LevelProfile":
        return LevelProfile.from_values(int(obj["n"]), [rational_from_str(s) for s in obj["values"]])


# ---------------------------------------------------------------------------
# Krawtchouk tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KrawtchoukTable:
    """All values K_j(k) for 0 <= j,k <= n, exact integers.

    K_j is the unnormalized transform of the level-j indicator: for |x| = k,
    F[L_j](x) = K_j(k).  Rows are indexed by the polynomial degree j, columns
    by the evaluation weight k.
    """

    n: int
    K: tuple[tuple[int, ...], ...]

    def __getitem__(self, j: int) -> tuple[int, ...]:
        return self.K[j]


@lru_cache(maxsize=8)
def _krawtchouk_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Three-term recurrence in the degree j, one full row at a time:
    #   (j+1) K_{j+1}(k) = (n-2k) K_j(k) - (n-j+1) K_{j-1}(k)
    # with K_0 = 1 and K_{-1} = 0.  All divisions are exact.
    rows = [tuple(1 for _ in range(n + 1))]
    prev: tuple[int, ...] = tuple(0 for _ in range(n + 1))
    cur = rows[0]
    for j in range(n):
        nxt = []
        for k in range(n + 1):
            num = (n - 2 * k) * cur[k] - (n - j + 1) * prev[k]
            q, rem = divmod(num, j + 1)
            if rem:
                raise ArithmeticError("Krawtchouk recurrence produced a non-integer")
            nxt.append(q)
        prev, cur = cur, tuple(nxt)
        rows.append(cur)
    return tuple(rows)


def krawtchouk_table(n: int) -> KrawtchoukTable:
    """Exact table of Krawtchouk values K_j(k) for the n-cube, n >= 1."""
    if n < 1:
        raise ValueError(f"krawtchouk_table needs n >= 1, got {n}")
    return KrawtchoukTable(n, _krawtchouk_rows(n))


def radial_transform(p: LevelProfile) -> LevelProfile:
    """Unnormalized transform of a radial function, as a profile.

    output[i] = sum_k p[k] * K_k(i).  Applying it twice multiplies by 2^n.
    """
    table = _krawtchouk_rows(p.n)
    out = []
    for i in range(p.n + 1):
        acc = Fraction(0)
        for k, v in enumerate(p.values):
            if v:
                acc += v * table[k][i]
        out.append(acc)
    return LevelProfile(p.n, tuple(out))


def radial_sum(p: LevelProfile) -> Fraction:
    """Total mass sum_x f(x) = sum_k C(n,k) p[k] (equals 2^n * fhat(0))."""
    return sum((binomial(p.n, k) * v for k, v in enumerate(p.values)), Fraction(0))


# ---------------------------------------------------------------------------
# Dense functions on the full cube
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DenseFunction:
    """A function on all 2^n points of the cube, indexed by bit pattern."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.n}")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(
                f"dense function for n={self.n} needs {1 << self.n} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    @staticmethod
    def from_values(n: int, values: Iterable[Rational]) -> "DenseFunction":
        return DenseFunction(n, tuple(Fraction(v) for v in values))

    @staticmethod
    def point_mass(n: int, x: int = 0) -> "DenseFunction":
        _check_dense_dimension(n)
        size = 1 << n
        if not 0 <= x < size:
            raise ValueError(f"point {x} out of range for n={n}")
        return DenseFunction(n, tuple(Fraction(1 if y == x else 0) for y in range(size)))


def _butterfly(values: Sequence[Fraction], n: int) -> list[Fraction]:
    v = list(values)
    for bit in range(n):
        step = 1 << bit
        for x in range(1 << n):
            if not x & step:
                a, b = v[x], v[x | step]
                v[x] = a + b
                v[x | step] = a - b
    return v


def dense_transform(f: DenseFunction) -> DenseFunction:
    """Unnormalized transform F[f](x) = sum_y (-1)^<x,y> f(y), exact.

    Butterfly evaluation, O(n * 2^n) exact arithmetic operations.
    """
    _check_dense_dimension(f.n)
    return DenseFunction(f.n, tuple(_butterfly(f.values, f.n)))


def dense_convolve(f: DenseFunction, g: DenseFunction) -> DenseFunction:
    """Normalized convolution (f*g)(x) = 2^(-n) sum_y f(y) g(x+y), exact.

    Computed through three butterflies: f*g = 2^(-2n) F[F[f] . F[g]].
    """
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} vs {g.n}")
    _check_dense_dimension(f.n)
    fh = _butterfly(f.values, f.n)
    gh = _butterfly(g.values, g.n)
    prod = [a * b for a, b in zip(fh, gh)]
    back = _butterfly(prod, f.n)
    scale = Fraction(1, 1 << (2 * f.n))
    return DenseFunction(f.n, tuple(scale * v for v in back))


def to_dense(p: LevelProfile) -> DenseFunction:
    """Expand a radial profile to the full cube: value p[|x|] at point x."""
    _check_dense_dimension(p.n)
    return DenseFunction(p.n, tuple(p.values[x.bit_count()] for x in range(1 << p.n)))


def radialize(f: DenseFunction) -> LevelProfile:
    """Average f over each level: profile[k] = (sum over weight-k points) / C(n,k).

    Averaging over the coordinate-permutation orbit preserves total mass and
    transform nonnegativity, so LP-style constraints survive radialization.
    """
    sums = [Fraction(0) for _ in range(f.n + 1)]
    for x, v in enumerate(f.values):
        sums[x.bit_count()] += v
    return LevelProfile(f.n, tuple(s / binomial(f.n, k) for k, s in enumerate(sums)))


# ---------------------------------------------------------------------------
# Entropy
# ---------------------------------------------------------------------------

def binary_entropy(p: float) -> float:
    """Binary entropy H(p) = -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"binary_entropy needs p in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)
