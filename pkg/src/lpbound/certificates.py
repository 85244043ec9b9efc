"""Dual witness functions for code bounds, built from walk counts.

A function g on the cube certifies A(n, d) <= g(0)/ghat(0) whenever

    ghat >= 0 everywhere,  ghat(0) > 0,  g(x) <= 0 for |x| >= d.

The family constructed here is g = phi_m * Gamma_r^2 with

    phi_m(x) = (n - 2|x|)^m - (n - 2d)^m        (m odd),
    Gamma_r  = transform of (level-r indicator + level-(r-1) indicator),

so Gamma_r(x) = K_r(|x|) + K_{r-1}(|x|).  Since squares transform to
(nonnegatively-weighted) self-convolutions, feasibility of g reduces to an
exact inequality between walk counts: with c = (n - 2d)^m,

    min(P_{r,m,-1}, P_{r-1,m,1}) >= c + 1

forces ghat >= 0 with ghat(0) > 0 (multiplication by (n - 2|x|) acts as the
cube adjacency operator on the transform side, so applying phi_m to Gamma^2
turns into m adjacency steps against the two active levels).  The checker
below tests that integer inequality; `check_dual_feasible` re-verifies any
profile from scratch via the radial transform, with no walk shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from lpbound.cube import (
    LevelProfile,
    binomial,
    krawtchouk_table,
    radial_sum,
    radial_transform,
)
from lpbound.walks import walk_counts


class NoFeasibleCertificateError(Exception):
    """The automatic parameter search exhausted its grid without success."""


@dataclass(frozen=True)
class Certificate:
    """A witness g = phi * gamma^2 with its ingredients, all exact profiles."""

    n: int
    d: int
    m: int
    r: int
    phi: LevelProfile
    gamma_hat: LevelProfile
    gamma: LevelProfile
    g: LevelProfile

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "r": self.r,
            "phi": self.phi.to_json_dict(),
            "gamma_hat": self.gamma_hat.to_json_dict(),
            "gamma": self.gamma.to_json_dict(),
            "g": self.g.to_json_dict(),
        }

    @staticmethod
    def from_json_dict(obj: dict) -> "Certificate":
        return Certificate(
            n=int(obj["n"]),
            d=int(obj["d"]),
            m=int(obj["m"]),
            r=int(obj["r"]),
            phi=LevelProfile.from_json_dict(obj["phi"]),
            gamma_hat=LevelProfile.from_json_dict(obj["gamma_hat"]),
            gamma=LevelProfile.from_json_dict(obj["gamma"]),
            g=LevelProfile.from_json_dict(obj["g"]),
        )


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the exact walk-count feasibility test.

    feasible <=> parity_ok and sign_ok and both margins >= 0.
    threshold is (n-2d)^m + 1; margins are walk counts minus the threshold.
    """

    feasible: bool
    threshold: int
    margin_r: int
    margin_r_minus_1: int
    parity_ok: bool
    sign_ok: bool

    @property
    def trivial_regime(self) -> bool:
        """True when d > n/2 made the threshold nonpositive (bound is easy)."""
        return self.threshold <= 0

    def to_json_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "threshold": str(self.threshold),
            "margin_r": str(self.margin_r),
            "margin_r_minus_1": str(self.margin_r_minus_1),
            "parity_ok": self.parity_ok,
            "sign_ok": self.sign_ok,
            "trivial_regime": self.trivial_regime,
        }


@dataclass(frozen=True)
class DualCheck:
    """Result of the from-scratch dual feasibility check, with diagnostics.

    Truthiness equals `feasible`; `violations` lists every failed condition.
    """

    feasible: bool
    transform_at_zero: Fraction
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.feasible


def _validate_params(n: int, d: int, m: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n (level r-1 must exist), got r={r}")


def build_certificate(n: int, d: int, m: int, r: int) -> Certificate:
    """Construct g = phi_m * Gamma_r^2 exactly.  m must be odd, r >= 1."""
    _validate_params(n, d, m, r)
    if m % 2 == 0:
        raise ValueError(f"m must be odd (parity drives the sign of phi), got {m}")
    table = krawtchouk_table(n)
    c = (n - 2 * d) ** m
    phi = LevelProfile.from_values(n, [(n - 2 * k) ** m - c for k in range(n + 1)])
    gamma_hat = LevelProfile.from_values(
        n, [1 if k in (r, r - 1) else 0 for k in range(n + 1)]
    )
    gamma = LevelProfile.from_values(
        n, [table[r][k] + table[r - 1][k] for k in range(n + 1)]
    )
    g = LevelProfile(n, tuple(p * y * y for p, y in zip(phi.values, gamma.values)))
    return Certificate(n=n, d=d, m=m, r=r, phi=phi, gamma_hat=gamma_hat, gamma=gamma, g=g)


def check_feasibility_walks(n: int, d: int, m: int, r: int) -> FeasibilityReport:
    """Exact feasibility test via walk counts; never raises on even m.

    Compares P_{r,m,-1} and P_{r-1,m,1} against (n-2d)^m + 1.  For odd m the
    sign condition on phi holds automatically; for even m it is evaluated
    honestly and the parity flag is reported false.
    """
    _validate_params(n, d, m, r)
    c = (n - 2 * d) ** m
    threshold = c + 1
    p_down = walk_counts(n, r, m).ending_offset(-1)
    p_up = walk_counts(n, r - 1, m).ending_offset(1)
    parity_ok = m % 2 == 1
    sign_ok = all((n - 2 * k) ** m - c <= 0 for k in range(d, n + 1))
    margin_r = p_down - threshold
    margin_r_minus_1 = p_up - threshold
    feasible = parity_ok and sign_ok and margin_r >= 0 and margin_r_minus_1 >= 0
    return FeasibilityReport(
        feasible=feasible,
        threshold=threshold,
        margin_r=margin_r,
        margin_r_minus_1=margin_r_minus_1,
        parity_ok=parity_ok,
        sign_ok=sign_ok,
    )


def check_dual_feasible(g: LevelProfile, d: int) -> DualCheck:
    """From-scratch dual check: transform of g >= 0, positive at 0, g <= 0 on d..n.

    Runs the full radial transform (O(n^2) exact operations); no walk-count
    shortcut, so it independently confirms or refutes any profile.
    """
    if not 1 <= d <= g.n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={g.n}")
    gh = radial_transform(g)
    violations = []
    for i, v in enumerate(gh.values):
        if v < 0:
            violations.append(f"transform negative at weight {i}")
    if gh[0] <= 0:
        violations.append("transform at zero not positive")
    for k in range(d, g.n + 1):
        if g[k] > 0:
            violations.append(f"sign violation at level {k}")
    return DualCheck(
        feasible=not violations,
        transform_at_zero=gh[0],
        violations=tuple(violations),
    )


def profile_bound(g: LevelProfile) -> Fraction:
    """g(0)/ghat(0) as an exact rational: g[0] * 2^n / sum_k C(n,k) g[k].

    Raises if the denominator is not positive -- that means g is not a
    usable dual witness (or is degenerate), so no bound can be claimed.
    """
    den = radial_sum(g)
    if den <= 0:
        raise ValueError(
            f"total mass of g is {den}; the bound g(0)/ghat(0) needs it positive"
        )
    return g[0] * (1 << g.n) / den


def exact_bound(cert: Certificate) -> Fraction:
    """The certified upper bound on A(n,d) from a feasible certificate."""
    return profile_bound(cert.g)


def support_bound(cert: Certificate) -> int:
    """Weaker closed-form bound phi(0) * (C(n,r) + C(n,r-1)).

    Always an integer upper bound for exact_bound (the transform-side mass
    of gamma^2 concentrates at least C(n,r) + C(n,r-1) on the support).
    """
    n, d, m, r = cert.n, cert.d, cert.m, cert.r
    phi0 = n**m - (n - 2 * d) ** m
    return phi0 * (binomial(n, r) + binomial(n, r - 1))


def crude_support_bound(cert: Certificate) -> int:
    """The rounder form 2 * n^m * C(n,r); valid when r <= (n+1)/2."""
    n, m, r = cert.n, cert.m, cert.r
    if 2 * r > n + 1:
        raise ValueError(f"crude bound needs r <= (n+1)/2, got r={r}, n={n}")
    return 2 * n**m * binomial(n, r)


def _ceil_sqrt(x: int) -> int:
    s = math.isqrt(x)
    return s if s * s == x else s + 1


def r_search_floor(n: int, d: int) -> int:
    """Smallest integer r with r >= n/2 - sqrt(d(n-d)), decided exactly.

    r clears the edge iff n - 2r <= 0 or (n - 2r)^2 <= 4 d (n - d); no
    floating-point square roots are involved.
    """
    for r in range(n + 1):
        gap = n - 2 * r
        if gap <= 0 or gap * gap <= 4 * d * (n - d):
            return r
    raise AssertionError("unreachable: r = n always clears the edge")


def default_m_max(n: int) -> int:
    """Largest odd walk length searched: max(9, 3*isqrt(n) rounded up to odd).

    Start levels hugging the spectral edge only clear the feasibility
    threshold once the walk is a few sqrt(n) steps long, so the cap must
    grow at that rate or the search comes up empty for n in the hundreds.
    """
    t = 3 * math.isqrt(n)
    if t % 2 == 0:
        t += 1
    return max(9, t)


def auto_select(
    n: int,
    d: int,
    *,
    r_window: Optional[int] = None,
    m_max: Optional[int] = None,
) -> Certificate:
    """Search a small (r, m) grid and return the feasible certificate with
    the smallest exact bound (ties: smaller r, then smaller m).

    r starts at the exact integer edge r_search_floor(n, d) and scans
    ceil(sqrt(n)) offsets upward (never past n/2); odd m scans 3..m_max.
    Every returned certificate passes check_feasibility_walks, so the bound
    is sound regardless of how the grid was chosen.
    """
    if n < 1 or not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    if r_window is None:
        r_window = _ceil_sqrt(n)
    if m_max is None:
        m_max = default_m_max(n)
    r_lo = max(r_search_floor(n, d), 1)
    r_hi = min(r_lo + r_window, max(n // 2, 1))
    best: Optional[tuple[tuple[Fraction, int, int], Certificate]] = None
    for r in range(r_lo, r_hi + 1):
        for m in range(3, m_max + 1, 2):
            report = check_feasibility_walks(n, d, m, r)
            if not report.feasible:
                continue
            cert = build_certificate(n, d, m, r)
            key = (exact_bound(cert), r, m)
            if best is None or key < best[0]:
                best = (key, cert)
    if best is None:
        raise NoFeasibleCertificateError(
            f"no feasible (r, m) for n={n}, d={d} with r in [{r_lo}, {r_hi}] "
            f"and odd m <= {m_max}"
        )
    return best[1]


class MRRWCertificate(NamedTuple):
    """The linear-phi comparison witness; feasibility is NOT guaranteed."""

    phi: LevelProfile
    gamma: LevelProfile
    gamma_hat: LevelProfile
    g: LevelProfile


def build_mrrw_certificate(n: int, d: int, r: int) -> MRRWCertificate:
    """Comparison certificate with phi(x) = 2(d - |x|) and a Krawtchouk-series
    Gamma: gamma[k] = sum_{j<=r} K_j(d) K_j(k) / C(n,j).

    Built exactly but not validated here -- run check_dual_feasible on g
    before using it for a bound; many (n, d, r) choices are infeasible.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}")
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}")
    table = krawtchouk_table(n)
    gamma_hat = LevelProfile.from_values(
        n,
        [
            Fraction(table[j][d], binomial(n, j)) if j <= r else Fraction(0)
            for j in range(n + 1)
        ],
    )
    gamma = radial_transform(gamma_hat)
    phi = LevelProfile.from_values(n, [2 * (d - k) for k in range(n + 1)])
    g = LevelProfile(n, tuple(p * y * y for p, y in zip(phi.values, gamma.values)))
    return MRRWCertificate(phi=phi, gamma=gamma, gamma_hat=gamma_hat, g=g)
