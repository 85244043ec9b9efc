"""Ground-truth A(n, d) by exhaustive search, plus code distance distributions.

The search recomputes everything from scratch (no published tables), with
two analytic shortcuts where exhaustion is pointless:

  d = 1: every subset works, so A(n, 1) = 2^n (witness: the whole cube);
  d = 2: pair each word x with x XOR 1; the pairs partition the cube into
         2^(n-1) sets of diameter 1, so a code with min distance 2 takes at
         most one word per pair, and the even-weight words attain that.

For d >= 3 an exhaustive branch-and-bound runs.  Three devices make it
finish at desk scale; all are conservative (the size is exactly A(n, d))
and all are needed, because the distance graph is so symmetric that every
branch looks alike to a naive search -- the n = 8, d = 3 instance does not
terminate in reasonable time without them:

  * anchor canonicalization: 0 is fixed in the code (translating a code by
    one of its words preserves distances), a minimum-weight nonzero
    codeword is relabeled to have its ones packed low (one branch per
    weight v), and a third codeword is relabeled within the remaining
    coordinate freedom to one representative per (ones under the second
    word, ones elsewhere) type -- every code maps to some branch under a
    coordinate permutation, and permutations preserve size;
  * class bound: candidates are greedily partitioned into classes of
    pairwise distance < d; a code takes at most one word per class, so the
    class index of a candidate bounds every completion through it;
  * bound-driven order: candidates are tried in descending class index, so
    one failed bound check cuts the whole remainder of a node, and each
    branch relabels its candidates in descending-degree order first, which
    packs the greedy classes tighter.

The search is fully deterministic -- fixed tie-breaking everywhere -- so
the witness is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from lpbound.cube import (
    DenseFunction,
    LevelProfile,
    dense_convolve,
    radialize,
)

DEFAULT_SEARCH_LIMIT = 10  # max n for the d >= 3 backtracking search
DEFAULT_ANALYTIC_LIMIT = 16  # max n for the d <= 2 closed forms (witness is big)


class OracleLimitError(ValueError):
    """The requested search exceeds the configured size limit."""


@dataclass(frozen=True)
class Code:
    """A set of distinct words of length n, stored as sorted integers."""

    n: int
    words: tuple[int, ...]

    def __post_init__(self) -> None:
        ws = tuple(sorted(self.words))
        if len(set(ws)) != len(ws):
            raise ValueError("code words must be distinct")
        if ws and not 0 <= ws[0] <= ws[-1] < (1 << self.n):
            raise ValueError(f"words out of range for n={self.n}")
        object.__setattr__(self, "words", ws)

    def __len__(self) -> int:
        return len(self.words)

    def distance(self) -> Optional[int]:
        """Minimum pairwise Hamming distance; None when |C| < 2."""
        if len(self.words) < 2:
            return None
        return min(
            (u ^ v).bit_count()
            for i, u in enumerate(self.words)
            for v in self.words[i + 1 :]
        )

    def to_bitstrings(self) -> list[str]:
        """One '0'/'1' string per word, most significant bit first."""
        return [format(w, f"0{self.n}b") for w in self.words]

    @staticmethod
    def from_bitstrings(n: int, lines: Sequence[str]) -> "Code":
        return Code(n, tuple(int(s, 2) for s in lines if s.strip()))


def _solve_branch(
    anchors: list[int],
    candidates: list[int],
    d: int,
    best: list[int],
    sort_key,
) -> list[int]:
    """Exact max code extending `anchors` by words from `candidates`.

    Every candidate is assumed compatible (distance >= d) with every
    anchor; compatibility among candidates is recomputed here.  Candidates
    are relabeled in descending-degree order (ties by `sort_key`) so the
    greedy distance-< d classes pack tight, then a branch-and-bound runs:
    descending class index, one bound failure abandons the node.  Returns
    the incumbent (the given `best` or an improvement on it).
    """
    k = len(candidates)
    adj = []
    for u in candidates:
        mask = 0
        for j, w in enumerate(candidates):
            if u != w and (u ^ w).bit_count() >= d:
                mask |= 1 << j
        adj.append(mask)
    order = sorted(range(k), key=lambda i: (-adj[i].bit_count(), sort_key(candidates[i])))
    words = [candidates[i] for i in order]
    pos = {old: new for new, old in enumerate(order)}
    fullk = (1 << k) - 1
    compat = [0] * k
    for new, old in enumerate(order):
        m = 0
        rest = adj[old]
        while rest:
            low = rest & -rest
            rest ^= low
            m |= 1 << pos[low.bit_length() - 1]
        compat[new] = m
    conflict = [fullk & ~compat[i] & ~(1 << i) for i in range(k)]

    chosen = list(anchors)
    if len(chosen) > len(best):
        best = chosen.copy()

    def extend(mask: int, depth: int) -> None:
        nonlocal best
        if depth + mask.bit_count() <= len(best):
            return
        seq: list[int] = []  # candidate indices in class-building sequence
        bounds: list[int] = []  # 1-based class index of each entry
        classes = 0
        rest = mask
        while rest:
            classes += 1
            avail = rest
            while avail:
                low = avail & -avail
                i = low.bit_length() - 1
                rest ^= low
                avail &= conflict[i]
                seq.append(i)
                bounds.append(classes)
        for t in range(len(seq) - 1, -1, -1):
            if depth + bounds[t] <= len(best):
                return  # everything left sits in a class of index <= this
            i = seq[t]
            chosen.append(words[i])
            if depth + 1 > len(best):
                best = chosen.copy()
            child = mask & compat[i]
            if child:
                extend(child, depth + 1)
            chosen.pop()
            mask &= ~(1 << i)  # words tried here are excluded from siblings

    if k:
        extend(fullk, len(anchors))
    return best


def _search(n: int, d: int, perm: Optional[Sequence[int]]) -> list[int]:
    """Exhaustive-by-symmetry search for a maximum code; returns its words.

    Branches are indexed by the canonical anchor triples described in the
    module docstring: weight v of a minimum-weight nonzero codeword (its
    representative e_v has the v ones packed low), then the type (a, b) of
    a third codeword with a ones under e_v and b ones elsewhere, packed
    low within each block.  Words beyond the anchors must have weight >= v
    and type >= (a + b, a) in lexicographic order -- both properties are
    preserved by the canonicalizing permutations, so every code lands in
    exactly the branch of its canonical anchors and branch maxima cover
    A(n, d).

    `perm` changes only tie-breaking (candidates are ranked by their
    coordinate-permuted values); distances are permutation-invariant, so
    the resulting size must not change.  Exposed for the symmetry test.
    """
    size = 1 << n

    if perm is None:
        def sort_key(w: int) -> int:
            return w
    else:
        def sort_key(w: int) -> int:
            out = 0
            for i in range(n):
                if w >> i & 1:
                    out |= 1 << perm[i]
            return out

    best = [0]
    for v in range(d, n + 1):
        e_v = (1 << v) - 1
        members = [
            u
            for u in range(size)
            if u != e_v and u.bit_count() >= v and (u ^ e_v).bit_count() >= d
        ]
        if len(best) < 2:
            best = [0, e_v]
        for a in range(v + 1):
            for b in range(n - v + 1):
                w3 = ((1 << a) - 1) | (((1 << b) - 1) << v)
                if w3 == e_v or a + b < v or (w3 ^ e_v).bit_count() < d:
                    continue
                cand = [
                    u
                    for u in members
                    if (u ^ w3).bit_count() >= d
                    and (u.bit_count(), (u & e_v).bit_count()) >= (a + b, a)
                ]
                best = _solve_branch([0, e_v, w3], cand, d, best, sort_key)
    return sorted(best)


def max_code(
    n: int,
    d: int,
    *,
    limit: Optional[int] = None,
    perm: Optional[Sequence[int]] = None,
) -> tuple[int, Code]:
    """Exact A(n, d) with a witness code attaining it.

    The witness contains 0 and is deterministic (same input, same witness).
    `limit` overrides the size guard (default 10 for the d >= 3 search, 16
    for the d <= 2 closed forms).  `perm` is a coordinate relabeling for
    symmetry testing; it may change the witness but never the size.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if perm is not None and sorted(perm) != list(range(n)):
        raise ValueError("perm must permute 0..n-1")

    if d <= 2:
        effective = limit if limit is not None else DEFAULT_ANALYTIC_LIMIT
        if n > effective:
            raise OracleLimitError(f"n={n} exceeds the oracle limit {effective}")
        if d == 1:
            words = tuple(range(1 << n))
        else:
            words = tuple(w for w in range(1 << n) if w.bit_count() % 2 == 0)
        return len(words), Code(n, words)

    effective = limit if limit is not None else DEFAULT_SEARCH_LIMIT
    if n > effective:
        raise OracleLimitError(f"n={n} exceeds the oracle limit {effective}")
    words = _search(n, d, perm)
    return len(words), Code(n, tuple(words))


class DistanceDistribution(NamedTuple):
    dense: DenseFunction
    radial: LevelProfile


def distance_distribution(code: Code) -> DistanceDistribution:
    """f_C(x) = |{(u,v) in C^2 : u XOR v = x}| / |C|, dense and radialized.

    Equivalently 2^n/|C| times the self-convolution of the code indicator,
    which is how it is computed here.  Always: f_C(0) = 1, f_C >= 0, total
    mass |C|, and the transform of f_C is (transform of indicator)^2 / |C|,
    hence nonnegative.  For a code of minimum distance d, f_C vanishes on
    weights 1..d-1, making its radialization feasible for the bound program.
    """
    if len(code.words) < 1:
        raise ValueError("need a nonempty code")
    n = code.n
    member = set(code.words)
    indicator = DenseFunction.from_values(
        n, [1 if x in member else 0 for x in range(1 << n)]
    )
    conv = dense_convolve(indicator, indicator)
    size = len(code.words)
    scale = Fraction(1 << n, size)
    dense = DenseFunction(n, tuple(scale * v for v in conv.values))
    return DistanceDistribution(dense=dense, radial=radialize(dense))
