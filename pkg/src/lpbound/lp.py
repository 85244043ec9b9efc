"""Exact-rational solver for the radial code-bound linear program.

The program, for length n and minimum distance d:

    maximize    1 + sum_{k=d..n} C(n,k) a_k            (total mass of f)
    subject to  1 + sum_{k=d..n} a_k K_k(i) >= 0,  i = 0..n
                a_k >= 0

where f is the radial function with f-profile (1, 0,...,0, a_d,...,a_n); the
rows say the transform of f is nonnegative at every weight.  Restricting to
radial f loses nothing: averaging any feasible function over coordinate
permutations preserves the value at 0, pointwise nonnegativity, the support
gap 1..d-1, transform nonnegativity, and the objective, so some optimal
solution is radial.  The optimum upper-bounds the size of any code with
minimum distance >= d.

Rewriting rows as  -sum_k a_k K_k(i) <= 1  gives nonnegative right-hand
sides, so the all-slack basis is feasible and a single simplex phase with
Bland's anti-cycling rule terminates at the exact optimum.  Every tableau
entry is a Fraction; nothing is rounded, and the returned solution is
re-certified against weak duality before being reported optimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from lpbound.certificates import check_dual_feasible, profile_bound
from lpbound.cube import (
    LevelProfile,
    binomial,
    krawtchouk_table,
    radial_transform,
    rational_to_str,
)

LP_DIMENSION_LIMIT = 64


class InfeasibleDualError(ValueError):
    """The profile offered as a dual witness fails the feasibility check."""

    def __init__(self, violations: tuple[str, ...]):
        super().__init__("dual witness infeasible: " + "; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class LPInstance:
    n: int
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")


@dataclass(frozen=True)
class LPSolution:
    """Exact LP outcome.

    `value` is the optimum (total mass of the optimal f), `profile` the
    optimal radial f itself, and `dual` the row prices y_i >= 0 from the
    final tableau -- diagnostics for certification; the authoritative dual
    bound always comes from an explicit witness profile via dual_value.
    """

    value: Fraction
    profile: LevelProfile
    status: str  # "optimal" | "unbounded" | "infeasible"
    dual: Optional[tuple[Fraction, ...]] = None


def _pivot(rows: list[list[Fraction]], obj: list[Fraction], basis: list[int],
           piv_row: int, piv_col: int) -> None:
    row = rows[piv_row]
    inv = Fraction(1) / row[piv_col]
    rows[piv_row] = row = [v * inv for v in row]
    for i, other in enumerate(rows):
        if i != piv_row and other[piv_col]:
            coef = other[piv_col]
            rows[i] = [a - coef * b for a, b in zip(other, row)]
    if obj[piv_col]:
        coef = obj[piv_col]
        obj[:] = [a - coef * b for a, b in zip(obj, row)]
    basis[piv_row] = piv_col


def solve_primal(
    inst: LPInstance,
    *,
    limit: int = LP_DIMENSION_LIMIT,
    constraint_order: Optional[Sequence[int]] = None,
) -> LPSolution:
    """Solve the radial program exactly.

    `constraint_order` permutes the rows (a testing hook: the optimum must
    not depend on it).  Raises ValueError above the dimension limit; the
    program itself is always feasible (all a_k = 0), so the returned status
    is "optimal" barring arithmetic bugs, and optimality is certified by an
    exact weak-duality check before returning.
    """
    n, d = inst.n, inst.d
    if n > limit:
        raise ValueError(f"LP limit is n <= {limit}, got n={n}")
    table = krawtchouk_table(n)
    ks = list(range(d, n + 1))
    if constraint_order is None:
        row_ids = list(range(n + 1))
    else:
        row_ids = list(constraint_order)
        if sorted(row_ids) != list(range(n + 1)):
            raise ValueError("constraint_order must permute 0..n")
    nvars = len(ks)
    nrows = len(row_ids)

    # tableau: structural columns, slack columns, RHS
    rows = []
    for pos, i in enumerate(row_ids):
        slack = [Fraction(1 if j == pos else 0) for j in range(nrows)]
        rows.append([Fraction(-table[k][i]) for k in ks] + slack + [Fraction(1)])
    obj = (
        [Fraction(binomial(n, k)) for k in ks]
        + [Fraction(0)] * nrows
        + [Fraction(0)]
    )
    basis = [nvars + j for j in range(nrows)]

    total = nvars + nrows
    while True:
        entering = next((j for j in range(total) if obj[j] > 0), None)
        if entering is None:
            status = "optimal"
            break
        piv_row = None
        best_ratio = None
        for i in range(nrows):
            coef = rows[i][entering]
            if coef > 0:
                ratio = rows[i][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[piv_row])
                ):
                    best_ratio, piv_row = ratio, i
        if piv_row is None:
            status = "unbounded"
            break
        _pivot(rows, obj, basis, piv_row, entering)

    a = {k: Fraction(0) for k in ks}
    for i, b in enumerate(basis):
        if b < nvars:
            a[ks[b]] = rows[i][-1]
    head = [Fraction(1)] + [Fraction(0)] * (d - 1)
    profile = LevelProfile(n, tuple(head + [a[k] for k in ks]))
    tableau_value = -obj[-1]
    value = Fraction(1) + tableau_value

    if status != "optimal":
        return LPSolution(value=value, profile=profile, status=status, dual=None)

    # row prices in original row numbering: y_i = -(objective slot of slack i)
    y = [Fraction(0)] * nrows
    for pos, i in enumerate(row_ids):
        y[i] = -obj[nvars + pos]
    _certify_optimal(inst, profile, value, tuple(y), table, ks)
    return LPSolution(value=value, profile=profile, status="optimal", dual=tuple(y))


def _certify_optimal(
    inst: LPInstance,
    profile: LevelProfile,
    value: Fraction,
    y: tuple[Fraction, ...],
    table,
    ks: list[int],
) -> None:
    """Exact optimality certificate: primal feasible, prices dual feasible,
    objectives equal.  Failure means a solver bug, never bad input."""
    n = inst.n
    if not verify_primal(profile, inst):
        raise ArithmeticError("simplex returned a primally infeasible profile")
    if any(v < 0 for v in y):
        raise ArithmeticError("simplex produced a negative row price")
    for k in ks:
        # price of column k must cover its objective coefficient
        if -sum(y[i] * table[k][i] for i in range(n + 1)) < binomial(n, k):
            raise ArithmeticError(f"row prices underpay column k={k}")
    if sum(y, Fraction(0)) != value - 1:
        raise ArithmeticError("price total does not match the tableau optimum")


def verify_primal(profile: LevelProfile, inst: LPInstance) -> bool:
    """Exact check of all four constraint families of the program."""
    if profile.n != inst.n:
        return False
    if profile[0] != 1:
        return False
    if any(profile[k] != 0 for k in range(1, inst.d)):
        return False
    if any(v < 0 for v in profile.values):
        return False
    transformed = radial_transform(profile)
    return all(v >= 0 for v in transformed.values)


def dual_value(g: LevelProfile, inst: LPInstance) -> Fraction:
    """The bound g(0)/ghat(0) after an exact feasibility check.

    Weak duality makes this >= solve_primal(inst).value for every witness
    that passes; raises InfeasibleDualError otherwise.
    """
    check = check_dual_feasible(g, inst.d)
    if not check:
        raise InfeasibleDualError(check.violations)
    return profile_bound(g)


def extract_dual_certificate(sol: LPSolution, inst: LPInstance) -> LevelProfile:
    """Turn the final-tableau row prices into an explicit dual witness.

    With prices y, the profile h[i] = y_i / C(n,i) + [i == 0] is a
    nonnegative transform-side function; g = transform of h then satisfies
    g <= 0 on weights >= d (the priced column constraints say exactly that,
    via Krawtchouk reciprocity) and ghat = h >= 0 with ghat(0) > 0.  Its
    dual_value reproduces the primal optimum, realizing strong duality
    exactly.  Diagnostics-grade: the result is re-checked by dual_value
    before use, so tableau bookkeeping is never trusted for soundness.
    """
    if sol.status != "optimal" or sol.dual is None:
        raise ValueError("dual extraction needs an optimal solution with prices")
    n = inst.n
    h = LevelProfile.from_values(
        n,
        [
            Fraction(sol.dual[i], binomial(n, i)) + (1 if i == 0 else 0)
            for i in range(n + 1)
        ],
    )
    return radial_transform(h)


def solution_json_dict(inst: LPInstance, sol: LPSolution) -> dict:
    return {
        "n": inst.n,
        "d": inst.d,
        "value": rational_to_str(sol.value),
        "profile": [rational_to_str(v) for v in sol.profile.values],
        "status": sol.status,
    }
