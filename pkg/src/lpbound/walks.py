"""Exact counting of level-to-level walks in the Hamming cube.

A step in the cube flips one coordinate, moving a vertex of Hamming weight
l to weight l-1 or l+1.  Every vertex at level l has exactly n-l neighbors
above and l neighbors below, the same for all vertices of that weight, so
the number of length-m walks from a FIXED weight-r vertex that end at
weight l depends only on (n, r, m, l).  That makes the level-chain dynamic
program below exact, not an approximation:

    c0 = e_r,   c_{t+1}[l] = (n-l+1) * c_t[l-1] + (l+1) * c_t[l+1].

(A walk counted in c_{t+1}[l] arrived either from level l-1 by one of the
n-(l-1) up-moves or from level l+1 by one of its l+1 down-moves.)

All counts are arbitrary-precision integers; comparisons against thresholds
elsewhere in the package rely on them being exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class WalkCountTable:
    """Counts of length-m walks from a fixed weight-r vertex, by end level.

    counts[l] is the number of walks of exactly m single-bit-flip steps that
    start at a chosen vertex of weight r and end at any vertex of weight l.
    Always: sum(counts) == n**m, and counts[l] == 0 unless |l - r| <= m and
    l == r + m (mod 2).
    """

    n: int
    r: int
    m: int
    counts: tuple[int, ...]

    def __getitem__(self, level: int) -> int:
        return self.counts[level]

    def ending_offset(self, j: int) -> int:
        """Count of walks ending at level r + j (0 if out of range)."""
        level = self.r + j
        if not 0 <= level <= self.n:
            return 0
        return self.counts[level]

    def to_csv_rows(self) -> list[tuple[int, str]]:
        return [(level, str(c)) for level, c in enumerate(self.counts)]


def walk_counts(n: int, r: int, m: int) -> WalkCountTable:
    """All end-level counts for length-m walks from a weight-r vertex.

    O(m*n) big-integer operations.
    """
    if n < 1:
        raise ValueError(f"walk_counts needs n >= 1, got {n}")
    if not 0 <= r <= n:
        raise ValueError(f"start level {r} out of range for n={n}")
    if m < 0:
        raise ValueError(f"walk length must be nonnegative, got {m}")
    cur = [0] * (n + 1)
    cur[r] = 1
    for _ in range(m):
        nxt = [0] * (n + 1)
        for level in range(n + 1):
            c = cur[level]
            if not c:
                continue
            if level < n:
                nxt[level + 1] += (n - level) * c
            if level > 0:
                nxt[level - 1] += level * c
        cur = nxt
    return WalkCountTable(n, r, m, tuple(cur))


def walk_count(n: int, r: int, m: int, j: int) -> int:
    """Number of length-m walks from a weight-r vertex ending at weight r+j.

    Returns 0 when r+j falls outside [0, n].
    """
    return walk_counts(n, r, m).ending_offset(j)


def asymptotic_walk_estimate(n: int, r: int, m: int, j: int) -> float:
    """Large-n main term for walk_count(n,r,m,j)^(1/m): 2*sqrt(r*(n-r)).

    Valid in the regime r proportional to n with m growing but small next
    to n and |j| small next to m; the m and j arguments only document which
    count is being approximated.
    """
    if not 0 < r < n:
        raise ValueError(f"estimate needs 0 < r < n, got r={r}, n={n}")
    return 2.0 * math.sqrt(r * (n - r))


def integer_root_float(value: int, m: int) -> float:
    """value**(1/m) as a float, for arbitrarily large positive integers.

    Splits off the exponent so that huge counts (thousands of bits) never
    overflow the float conversion: value = mant * 2^shift with mant < 2^53.
    """
    if m < 1:
        raise ValueError(f"root order must be positive, got {m}")
    if value < 0:
        raise ValueError(f"need a nonnegative integer, got {value}")
    if value == 0:
        return 0.0
    bits = value.bit_length()
    if bits <= 53:
        return float(value) ** (1.0 / m)
    shift = bits - 53
    mant = value >> shift
    # value ~= mant * 2^shift, so value^(1/m) = 2^((log2 mant + shift)/m)
    return 2.0 ** ((math.log2(mant) + shift) / m)
