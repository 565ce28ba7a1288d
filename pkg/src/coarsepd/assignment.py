"""Bipartite matching and exhaustive assignment search primitives.

Hopcroft-Karp maximum-cardinality matching drives the bottleneck
feasibility test; the subset dynamic programs are exact minima over all
permutations and serve as independent oracles for the solvers.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np


def hopcroft_karp(adj: list[list[int]], n_left: int, n_right: int) -> tuple[int, list[int]]:
    """Maximum-cardinality matching in a bipartite graph.

    adj[u] lists the right-side neighbours of left vertex u.  Returns the
    matching size and, for each left vertex, its matched right vertex
    (-1 if unmatched).
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        found = False
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = -1
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = -1
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_l[u] == -1 and dfs(u):
                size += 1
    return size, match_l


def _adjacency(ok: np.ndarray) -> list[list[int]]:
    return [np.flatnonzero(row).tolist() for row in ok]


def has_perfect_matching(ok: np.ndarray) -> bool:
    """Whether the boolean edge matrix admits a perfect matching."""
    n = ok.shape[0]
    if n == 0:
        return True
    size, _ = hopcroft_karp(_adjacency(ok), n, n)
    return size == n


def _submatchable(ok: np.ndarray, rows: list[int], cols: list[int]) -> bool:
    if not rows:
        return True
    if len(cols) < len(rows):
        return False
    col_pos = {c: k for k, c in enumerate(cols)}
    adj = [[col_pos[c] for c in cols if ok[r, c]] for r in rows]
    size, _ = hopcroft_karp(adj, len(rows), len(cols))
    return size == len(rows)


def lex_min_perfect_matching(ok: np.ndarray) -> tuple[int, ...]:
    """Lexicographically smallest permutation that is a perfect matching of ok.

    Assumes a perfect matching exists.  Fixes rows in order, choosing the
    smallest column that keeps the remaining rows matchable.
    """
    n = ok.shape[0]
    used = np.zeros(n, dtype=bool)
    phi: list[int] = []
    for i in range(n):
        rest_rows = list(range(i + 1, n))
        for j in range(n):
            if used[j] or not ok[i, j]:
                continue
            rest_cols = [c for c in range(n) if not used[c] and c != j]
            if _submatchable(ok, rest_rows, rest_cols):
                phi.append(j)
                used[j] = True
                break
        else:
            raise RuntimeError("no perfect matching at the given threshold")
    return tuple(phi)


def _min_assignment(cost: np.ndarray, combine) -> list[float]:
    """Exact minimum over all n! permutations of an aggregated pair cost.

    Subset dynamic program: returns the table h where h[S] is the optimum of
    assigning rows popcount(S).. to the columns outside S, so h[0] is the
    global optimum and every permutation is accounted for.
    """
    n = cost.shape[0]
    if n == 0:
        return [0.0]
    if n > 20:
        raise ValueError("subset DP limited to n <= 20")
    rows = cost.tolist()
    full = 1 << n
    h = [0.0] * full
    for S in range(full - 2, -1, -1):
        i = S.bit_count()
        if i >= n:
            continue
        row = rows[i]
        best = math.inf
        for j in range(n):
            if S >> j & 1:
                continue
            v = combine(row[j], h[S | (1 << j)])
            if v < best:
                best = v
        h[S] = best
    return h


def min_assignment_max(cost: np.ndarray) -> tuple[float, tuple[int, ...]]:
    """Exact min over all permutations of the maximum per-pair cost.

    An optimal permutation is any one whose pair costs all stay within the
    optimum, so the recovery keeps the global value as a cap and picks the
    smallest feasible column per row: the lexicographically smallest optimum.
    """
    n = cost.shape[0]
    if n == 0:
        return 0.0, ()
    h = _min_assignment(cost, lambda c, rest: c if c > rest else rest)
    rows = cost.tolist()
    cap = h[0]
    perm: list[int] = []
    S = 0
    for i in range(n):
        row = rows[i]
        for j in range(n):
            if S >> j & 1:
                continue
            if row[j] <= cap and h[S | (1 << j)] <= cap:
                perm.append(j)
                S |= 1 << j
                break
    return cap, tuple(perm)


def min_assignment_sum(cost: np.ndarray) -> tuple[float, tuple[int, ...]]:
    """Exact min over all permutations of the summed per-pair cost.

    Recovery walks forward picking the smallest column whose cost plus the
    remaining-subproblem optimum reproduces the current target exactly (the
    same expression the table stored, so float comparison is safe); the
    result is the lexicographically smallest optimal permutation.
    """
    n = cost.shape[0]
    if n == 0:
        return 0.0, ()
    h = _min_assignment(cost, lambda c, rest: c + rest)
    rows = cost.tolist()
    perm: list[int] = []
    S = 0
    for i in range(n):
        row = rows[i]
        for j in range(n):
            if S >> j & 1:
                continue
            if row[j] + h[S | (1 << j)] == h[S]:
                perm.append(j)
                S |= 1 << j
                break
    return h[0], tuple(perm)
