"""Bottleneck and p-Wasserstein distances via diagonal-augmented tuples.

Both distances are minima over permutations of the padded tuples: the
bottleneck aggregates per-pair costs with max, the p-Wasserstein with an
l_p sum.  ``bottleneck`` runs a threshold search over the discrete set of
pairwise costs with a maximum-matching feasibility test; ``wasserstein``
reduces to an optimal assignment on the cost-power matrix.  The
``*_bruteforce`` variants minimize over all permutations directly and act
as independent oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from .assignment import (
    hopcroft_karp,
    lex_min_perfect_matching,
    min_assignment_max,
    min_assignment_sum,
)
from .diagram import DELTA, Diagram, Point, augment, delta, is_delta, persistence
from .errors import InvalidExponent, OversizeForOracle

ORACLE_MAX_WIDTH = 10
_LEX_ASSIGNMENT_MAX = 12


@dataclass(frozen=True)
class Matching:
    """A permutation of augmented indices together with its cost.

    ``pairing[i] = j`` matches left index i to right index j.  ``p`` is the
    Wasserstein exponent, or None for max (bottleneck) aggregation.
    """

    pairing: tuple[int, ...]
    cost: float
    p: Optional[float] = None

    def __post_init__(self) -> None:
        if sorted(self.pairing) != list(range(len(self.pairing))):
            raise ValueError("pairing is not a permutation")


def cost_matrix(left: tuple[Point, ...], right: tuple[Point, ...]) -> np.ndarray:
    """Matrix of pairwise extended-metric costs between two point tuples."""
    ml = np.array([is_delta(p) for p in left], dtype=bool)
    mr = np.array([is_delta(p) for p in right], dtype=bool)
    bl = np.array([0.0 if is_delta(p) else p[0] for p in left])
    dl = np.array([0.0 if is_delta(p) else p[1] for p in left])
    br = np.array([0.0 if is_delta(p) else p[0] for p in right])
    dr = np.array([0.0 if is_delta(p) else p[1] for p in right])
    pl = (dl - bl) / 2.0
    pr = (dr - br) / 2.0
    sup = np.maximum(np.abs(bl[:, None] - br[None, :]), np.abs(dl[:, None] - dr[None, :]))
    out = np.where(
        ml[:, None] & mr[None, :],
        0.0,
        np.where(ml[:, None], pr[None, :], np.where(mr[None, :], pl[:, None], sup)),
    )
    return out


def _feasible(cost: np.ndarray, threshold: float) -> bool:
    ok = cost <= threshold
    n = cost.shape[0]
    adj = [np.flatnonzero(row).tolist() for row in ok]
    size, _ = hopcroft_karp(adj, n, n)
    return size == n


def bottleneck(z: Diagram, w: Diagram) -> tuple[float, Matching]:
    """Exact bottleneck distance and an optimal matching.

    The optimum is always attained at one of the pairwise costs, so the
    search is over that discrete candidate set (no numeric bisection).
    Among optimal matchings the lexicographically smallest permutation is
    returned.
    """
    pair = augment(z, w)
    if pair.width == 0:
        return 0.0, Matching((), 0.0)
    cost = cost_matrix(pair.left, pair.right)
    candidates = np.unique(cost)
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(cost, candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    value = float(candidates[lo])
    phi = lex_min_perfect_matching(cost <= value)
    return value, Matching(phi, value)


def bottleneck_bruteforce(z: Diagram, w: Diagram) -> tuple[float, Matching]:
    """Bottleneck distance by exhaustive minimization over permutations.

    Defined only up to augmented width 10 (factorial blow-up guard).
    """
    pair = augment(z, w)
    if pair.width > ORACLE_MAX_WIDTH:
        raise OversizeForOracle(f"augmented width {pair.width} > {ORACLE_MAX_WIDTH}")
    if pair.width == 0:
        return 0.0, Matching((), 0.0)
    cost = cost_matrix(pair.left, pair.right)
    value, phi = min_assignment_max(cost)
    return value, Matching(phi, value)


def _check_exponent(p: float) -> float:
    p = float(p)
    if not p >= 1.0:
        raise InvalidExponent(f"p must be >= 1, got {p}")
    return p


def _lex_min_assignment(cost: np.ndarray, optimum: float) -> tuple[int, ...]:
    """Lexicographically smallest optimal assignment of a square cost matrix."""
    n = cost.shape[0]
    tol = 1e-12 * max(1.0, abs(optimum))
    remaining = list(range(n))
    fixed_cost = 0.0
    phi: list[int] = []
    for i in range(n):
        rest_rows = list(range(i + 1, n))
        for j in sorted(remaining):
            rest_cols = [c for c in remaining if c != j]
            if rest_rows:
                sub = cost[np.ix_(rest_rows, rest_cols)]
                ri, ci = linear_sum_assignment(sub)
                rest = float(sub[ri, ci].sum())
            else:
                rest = 0.0
            if fixed_cost + cost[i, j] + rest <= optimum + tol:
                phi.append(j)
                fixed_cost += float(cost[i, j])
                remaining.remove(j)
                break
        else:
            raise RuntimeError("no assignment attains the optimum")
    return tuple(phi)


def _invert_pairing(phi: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(phi)
    for i, j in enumerate(phi):
        inv[j] = i
    return tuple(inv)


def wasserstein(z: Diagram, w: Diagram, p: float) -> tuple[float, Matching]:
    """Exact p-Wasserstein distance and an optimal matching (p >= 1).

    Solved as an optimal assignment on the cost-power matrix; costs are
    rescaled by their maximum before powering so that large exponents do
    not overflow.  Arguments are ordered canonically before solving so the
    distance is bitwise symmetric (summation order cannot perturb the last
    ulp).
    """
    p = _check_exponent(p)
    if w.points < z.points:
        value, m = wasserstein(w, z, p)
        return value, Matching(_invert_pairing(m.pairing), m.cost, p)
    pair = augment(z, w)
    if pair.width == 0:
        return 0.0, Matching((), 0.0, p)
    cost = cost_matrix(pair.left, pair.right)
    top = float(cost.max())
    if top == 0.0:
        phi = tuple(range(pair.width))
        return 0.0, Matching(phi, 0.0, p)
    powered = (cost / top) ** p
    rows, cols = linear_sum_assignment(powered)
    optimum = float(powered[rows, cols].sum())
    if pair.width <= _LEX_ASSIGNMENT_MAX:
        phi = _lex_min_assignment(powered, optimum)
    else:
        phi = tuple(int(c) for c in cols[np.argsort(rows)])
    value = top * optimum ** (1.0 / p)
    return value, Matching(phi, value, p)


def wasserstein_bruteforce(z: Diagram, w: Diagram, p: float) -> tuple[float, Matching]:
    """p-Wasserstein distance by exhaustive minimization over permutations.

    Uses the same canonical argument ordering as ``wasserstein`` so both
    are bitwise symmetric and report comparable pairings.
    """
    p = _check_exponent(p)
    if w.points < z.points:
        value, m = wasserstein_bruteforce(w, z, p)
        return value, Matching(_invert_pairing(m.pairing), m.cost, p)
    pair = augment(z, w)
    if pair.width > ORACLE_MAX_WIDTH:
        raise OversizeForOracle(f"augmented width {pair.width} > {ORACLE_MAX_WIDTH}")
    if pair.width == 0:
        return 0.0, Matching((), 0.0, p)
    cost = cost_matrix(pair.left, pair.right)
    top = float(cost.max())
    if top == 0.0:
        return 0.0, Matching(tuple(range(pair.width)), 0.0, p)
    optimum, phi = min_assignment_sum((cost / top) ** p)
    value = top * optimum ** (1.0 / p)
    return value, Matching(phi, value, p)


def bottleneck_1pt(a: Point, b: Point) -> float:
    """Closed-form bottleneck distance between singleton diagrams.

    The two candidate matchings are the direct pairing and the double
    diagonal route, hence min(sup distance, max persistence).  Tolerates
    DELTA arguments (empty diagram semantics).
    """
    if is_delta(a) or is_delta(b):
        return delta(a, b)
    return min(delta(a, b), max(persistence(a), persistence(b)))


def check_coarse_equiv_bounds(z: Diagram, w: Diagram, p: float, tol: float = 1e-9) -> bool:
    """Sandwich bound d_B <= d_{W,p} <= (2 max(n,m))^(1/p) d_B, within tol."""
    p = _check_exponent(p)
    d_b, _ = bottleneck(z, w)
    d_w, _ = wasserstein(z, w, p)
    width = 2 * max(len(z), len(w))
    factor = width ** (1.0 / p) if width else 0.0
    return d_b <= d_w + tol and d_w <= factor * d_b + tol


def describe_matching(z: Diagram, w: Diagram, matching: Matching) -> list[tuple[Optional[int], Optional[int]]]:
    """Matching as (left index, right index) pairs with None marking DELTA.

    Pairs matching DELTA to DELTA are pruned.
    """
    out: list[tuple[Optional[int], Optional[int]]] = []
    for i, j in enumerate(matching.pairing):
        li = i if i < len(z) else None
        rj = j if j < len(w) else None
        if li is None and rj is None:
            continue
        out.append((li, rj))
    return out
