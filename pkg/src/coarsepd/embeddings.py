"""Explicit embeddings of metric spaces into diagram space.

Finite metric spaces embed isometrically via one diagram point per
reference index; cubes embed coordinatewise along disjoint birth bands;
coarse disjoint unions are realized by inflating each block's embedding
scale and spacing the blocks along the diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import config
from .diagram import Diagram
from .errors import (
    DegenerateDiameter,
    EmptySpace,
    MetricValidationError,
    NonpositiveSeparation,
    OutOfCube,
    TooLarge,
)
from .metrics import bottleneck

_VALIDATE_UNION_MAX = 512


@dataclass(frozen=True, eq=False)
class FiniteMetricSpace:
    """Labeled point set with a validated distance matrix."""

    labels: tuple[str, ...]
    dist: np.ndarray

    def __post_init__(self) -> None:
        mat = np.array(self.dist, dtype=float)
        mat.flags.writeable = False
        object.__setattr__(self, "dist", mat)
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if mat.shape != (len(self.labels), len(self.labels)):
            raise ValueError("distance matrix shape does not match labels")

    @property
    def n_points(self) -> int:
        return len(self.labels)

    @property
    def diameter(self) -> float:
        return float(self.dist.max()) if self.n_points else 0.0


def validate_metric(matrix, labels: Optional[Sequence[str]] = None,
                    tol: float = 1e-9) -> FiniteMetricSpace:
    """Check all metric axioms, collecting every violation with a witness.

    Raises MetricValidationError listing violations; see the error class
    for the witness tuple formats.
    """
    mat = np.array(matrix, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    n = mat.shape[0]
    if labels is None:
        labels = [f"x{i}" for i in range(n)]
    violations: list[tuple] = []
    for i in range(n):
        if abs(mat[i, i]) > tol:
            violations.append(("nonzero_diagonal", i))
    for i in range(n):
        for j in range(i + 1, n):
            if abs(mat[i, j] - mat[j, i]) > tol:
                violations.append(("not_symmetric", i, j))
            if mat[i, j] < -tol:
                violations.append(("negative", i, j))
            if abs(mat[i, j]) <= tol:
                violations.append(("zero_off_diagonal", i, j))
    for k in range(n):
        via = mat[:, k][:, None] + mat[k, :][None, :]
        bad = np.argwhere(mat > via + tol)
        for i, j in bad:
            if i != j and i != k and j != k:
                violations.append(("triangle", int(i), int(j), int(k)))
    if violations:
        raise MetricValidationError(violations)
    return FiniteMetricSpace(tuple(labels), mat)


def embed_finite_metric(X: FiniteMetricSpace, scale: Optional[float] = None) -> list[Diagram]:
    """Isometric embedding of a finite metric space into diagram space.

    Point x_k maps to the diagram {(3*rho*i, 3*rho*i + 3*rho + d(x_k, x_i))
    for i = 1..n} where rho defaults to the diameter.  Any scale >= the
    diameter preserves the isometry; the coarse-union embedder relies on
    that freedom.  A single-point space maps to one empty diagram.
    """
    n = X.n_points
    if n == 0:
        raise EmptySpace("cannot embed an empty space")
    if n == 1:
        return [Diagram()]
    diam = X.diameter
    if diam <= 0.0:
        raise DegenerateDiameter("multi-point space with zero diameter")
    rho = diam if scale is None else float(scale)
    if rho < diam:
        raise ValueError("scale must be at least the diameter")
    out = []
    for k in range(n):
        pts = tuple(
            (3.0 * rho * i, 3.0 * rho * i + 3.0 * rho + float(X.dist[k, i]))
            for i in range(1, n)
        )
        out.append(Diagram(pts))
    return out


def embed_cube_point(x: Sequence[float], R: float) -> Diagram:
    """Embed a point of the cube [0, R]^n as an n-point diagram.

    Coordinate i (1-based) becomes the diagram point (2iR, 2(i+1)R + x_i).
    Images of two cube points realize their sup distance under the
    bottleneck metric and their l_p distance under the p-Wasserstein.
    """
    R = float(R)
    if R <= 0.0:
        raise ValueError("R must be positive")
    xs = [float(v) for v in x]
    for v in xs:
        if v < 0.0 or v > R:
            raise OutOfCube(f"coordinate {v} outside [0, {R}]")
    pts = tuple(
        (2.0 * i * R, 2.0 * (i + 1) * R + xi) for i, xi in enumerate(xs, start=1)
    )
    return Diagram(pts)


def _cyclic_distance_matrix(k: int, m: int) -> tuple[list[str], np.ndarray]:
    coords = np.array(list(itertools.product(range(k), repeat=m)), dtype=np.int64)
    coords = coords.reshape(-1, m)
    n = coords.shape[0]
    dist = np.zeros((n, n))
    chunk = max(1, 2 ** 22 // max(n * m, 1))
    for start in range(0, n, chunk):
        block = coords[start:start + chunk]
        diff = np.abs(block[:, None, :] - coords[None, :, :])
        cyc = np.minimum(diff, k - diff)
        dist[start:start + chunk] = cyc.max(axis=2)
    labels = ["-".join(str(c) for c in row) for row in coords]
    return labels, dist


def zkm_space(k: int, m: int, cap: Optional[int] = None) -> FiniteMetricSpace:
    """The m-fold product of the cyclic group Z_k with the max metric.

    Coordinates carry the cyclic word metric min(|i-j|, k-|i-j|); the
    product distance is the max over coordinates.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    cap = config.max_points() if cap is None else cap
    total = k ** m
    if total > cap:
        raise TooLarge(f"{k}^{m} = {total} points exceeds cap {cap}")
    labels, dist = _cyclic_distance_matrix(k, m)
    return FiniteMetricSpace(tuple(labels), dist)


@dataclass(frozen=True, eq=False)
class BlockedSpace:
    """Coarse disjoint union of finite metric spaces.

    Cross-block distances are c_i + c_j where c_i = diam(block i) + s_i
    (the per-block separation radius); intra-block distances are the
    block's own.  block_params stores (diameter, c_i) per block.
    """

    space: FiniteMetricSpace
    blocks: tuple[FiniteMetricSpace, ...]
    block_of: tuple[int, ...]
    block_params: tuple[tuple[float, float], ...]
    block_meta: tuple = ()


def coarse_disjoint_union(blocks: Sequence[FiniteMetricSpace],
                          separations: Sequence[float],
                          block_meta: tuple = ()) -> BlockedSpace:
    """Assemble a coarse disjoint union with cross distances c_i + c_j.

    separations are the strictly positive slacks s_i added to each block's
    diameter; the resulting cross distances exceed both blocks' diameters
    by construction, and the sum form keeps the triangle inequality for
    heterogeneous blocks.
    """
    blocks = list(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    if len(separations) != len(blocks):
        raise ValueError("one separation per block required")
    seps = [float(s) for s in separations]
    if any(s <= 0.0 for s in seps):
        raise NonpositiveSeparation(f"separations must be > 0, got {seps}")
    params = tuple((b.diameter, b.diameter + s) for b, s in zip(blocks, seps))
    sizes = [b.n_points for b in blocks]
    block_of = tuple(bi for bi, sz in enumerate(sizes) for _ in range(sz))
    if len(blocks) == 1:
        return BlockedSpace(blocks[0], tuple(blocks), block_of, params, block_meta)
    total = sum(sizes)
    dist = np.zeros((total, total))
    labels: list[str] = []
    offsets = np.cumsum([0] + sizes)
    for bi, b in enumerate(blocks):
        lo, hi = offsets[bi], offsets[bi + 1]
        dist[lo:hi, lo:hi] = b.dist
        labels.extend(f"{bi}:{lab}" for lab in b.labels)
        for bj in range(bi + 1, len(blocks)):
            lo2, hi2 = offsets[bj], offsets[bj + 1]
            cross = params[bi][1] + params[bj][1]
            dist[lo:hi, lo2:hi2] = cross
            dist[lo2:hi2, lo:hi] = cross
    if total <= _VALIDATE_UNION_MAX:
        space = validate_metric(dist, labels)
    else:
        space = FiniteMetricSpace(tuple(labels), dist)
    return BlockedSpace(space, tuple(blocks), block_of, params, block_meta)


def dranishnikov_S(max_n: int, max_m: int, cap: Optional[int] = None) -> BlockedSpace:
    """Truncation of the disjoint union of the spaces (Z_n)^m.

    Blocks are (Z_n)^m for 1 <= n <= max_n, 1 <= m <= max_m under the
    separation rule s = m + n + 1, so cross distances strictly exceed
    m + n + m' + n'.  block_meta records (n, m) per block.
    """
    if max_n < 1 or max_m < 1:
        raise ValueError("max_n and max_m must be >= 1")
    cap = config.max_points() if cap is None else cap
    dims = [(n, m) for n in range(1, max_n + 1) for m in range(1, max_m + 1)]
    total = sum(n ** m for n, m in dims)
    if total > cap:
        raise TooLarge(f"{total} points exceeds cap {cap}")
    blocks = [zkm_space(n, m, cap=cap) for n, m in dims]
    seps = [float(m + n + 1) for n, m in dims]
    return coarse_disjoint_union(blocks, seps, block_meta=tuple(dims))


@dataclass(frozen=True)
class CrossSeparation:
    """Realized vs required bottleneck separation between two blocks."""

    block_i: int
    block_j: int
    required: float
    realized_min: float


@dataclass(frozen=True)
class UnionEmbedding:
    """Diagrams realizing a coarse disjoint union, with verification data."""

    diagrams: tuple[Diagram, ...]
    intra_max_deviation: float
    cross: tuple[CrossSeparation, ...]
    scales: tuple[float, ...]
    offsets: tuple[float, ...]

    @property
    def cross_ok(self) -> bool:
        return all(c.realized_min >= c.required - 1e-9 for c in self.cross)


def embed_coarse_union(U: BlockedSpace) -> UnionEmbedding:
    """Embed a coarse disjoint union into diagram space.

    Each block is embedded with inflated scale rho_i = max(diam_i, C),
    where C is the largest required cross distance, then shifted along the
    diagonal into a birth band separated from the neighbouring bands by
    2C.  Every cross-block matching then costs at least min(band gap,
    1.5 * rho) >= C, so cross bottleneck distances dominate the required
    separations; intra-block distances stay exact.  Single-point blocks
    receive one anchor point of persistence 1.5 * rho in their band
    (an empty diagram would collapse cross distances to zero).
    """
    blocks = U.blocks
    params = U.block_params
    if len(blocks) == 1:
        diags = embed_finite_metric(blocks[0])
        dev = _intra_deviation(blocks[0], diags)
        return UnionEmbedding(tuple(diags), dev, (), (max(params[0][0], 0.0),), (0.0,))
    required = {
        (i, j): params[i][1] + params[j][1]
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
    }
    big_c = max(required.values())
    scales: list[float] = []
    offsets: list[float] = []
    per_block: list[list[Diagram]] = []
    off = 0.0
    for b, (diam, _) in zip(blocks, params):
        rho = max(diam, big_c)
        scales.append(rho)
        offsets.append(off)
        if b.n_points == 1:
            shifted = [Diagram(((off + 3.0 * rho, off + 6.0 * rho),))]
        else:
            shifted = [
                Diagram(tuple((bb + off, dd + off) for bb, dd in dgm.points))
                for dgm in embed_finite_metric(b, scale=rho)
            ]
        per_block.append(shifted)
        off += 3.0 * max(b.n_points - 1, 1) * rho + 2.0 * big_c
    intra = max(_intra_deviation(b, dgms) for b, dgms in zip(blocks, per_block))
    cross: list[CrossSeparation] = []
    for (i, j), req in sorted(required.items()):
        realized = min(
            bottleneck(di, dj)[0] for di in per_block[i] for dj in per_block[j]
        )
        cross.append(CrossSeparation(i, j, req, realized))
    diagrams = tuple(d for dgms in per_block for d in dgms)
    return UnionEmbedding(diagrams, intra, tuple(cross), tuple(scales), tuple(offsets))


def _intra_deviation(block: FiniteMetricSpace, diagrams: Sequence[Diagram]) -> float:
    dev = 0.0
    for i in range(block.n_points):
        for j in range(i + 1, block.n_points):
            value, _ = bottleneck(diagrams[i], diagrams[j])
            dev = max(dev, abs(value - float(block.dist[i, j])))
    return dev
