"""Edge expansion: exact Cheeger constant, conductance, and spectral bounds.

The exact routines enumerate every vertex subset, so they are capped at
``max_exact_n()`` nodes (20 by default, override with ``UNNLAB_MAX_EXACT_N``).
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .errors import DegenerateDegreeError, SizeLimitError, UndefinedQuantityError
from .graph import Graph, degree_sequence
from .kernels import cut_profile, subset_sizes

__all__ = [
    "DEFAULT_MAX_EXACT_N",
    "max_exact_n",
    "CheegerCertificate",
    "SpectralReport",
    "ExpanderParams",
    "boundary_edges",
    "cheeger_exact",
    "conductance_exact",
    "normalized_laplacian",
    "spectral_report",
    "is_expander",
    "as_fraction",
]

DEFAULT_MAX_EXACT_N = 20
EIG_REPORT_TOL = 1e-9


def max_exact_n() -> int:
    raw = os.environ.get("UNNLAB_MAX_EXACT_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_EXACT_N
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"UNNLAB_MAX_EXACT_N must be an integer, got {raw!r}") from None
    if cap < 2:
        raise ValueError("UNNLAB_MAX_EXACT_N must be at least 2")
    return cap


def as_fraction(x) -> Fraction:
    """Exact rational for a threshold; floats go through their shortest repr,
    so 0.1 means 1/10."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return Fraction(repr(float(x)))


def _mask_to_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if (mask >> v) & 1)


def _bit_reverse(masks: np.ndarray, n: int) -> np.ndarray:
    rev = np.zeros_like(masks)
    for v in range(n):
        rev |= ((masks >> v) & 1) << (n - 1 - v)
    return rev


def _argmin_ratio(num: np.ndarray, den: np.ndarray, sizes: np.ndarray, masks: np.ndarray, n: int) -> int:
    """Mask minimising num/den exactly; ties go to the smaller set, then the
    lexicographically smaller sorted node tuple."""
    i0 = int(np.argmin(num / den))
    # distinct ratios with denominators <= 2**31 are far apart in float64,
    # so i0 is an exact minimiser; collect all exact ties by cross-multiplying
    tied = np.flatnonzero(num * den[i0] == num[i0] * den)
    tied = tied[sizes[tied] == sizes[tied].min()]
    # among equal-size sets, the lex-smaller one owns the lowest differing
    # node, i.e. has the larger bit-reversed mask
    best = tied[np.argmax(_bit_reverse(masks[tied], n))]
    return int(masks[best])


@dataclass(frozen=True)
class CheegerCertificate:
    """Exact value ``h = |dS| / |S|`` with a minimising set ``S``."""

    h: Fraction
    witness_set: frozenset[int]
    boundary: int

    @property
    def h_num(self) -> int:
        return self.h.numerator

    @property
    def h_den(self) -> int:
        return self.h.denominator

    @property
    def h_float(self) -> float:
        return float(self.h)

    def to_record(self) -> dict:
        return {
            "h_num": self.h_num,
            "h_den": self.h_den,
            "h": self.h_float,
            "witness": sorted(self.witness_set),
        }

    def to_text(self) -> str:
        return (
            f"h={self.h_num}/{self.h_den}\n"
            f"h_float={self.h_float!r}\n"
            f"witness={' '.join(map(str, sorted(self.witness_set)))}\n"
            f"boundary={self.boundary}\n"
        )

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


@dataclass(frozen=True)
class SpectralReport:
    """Second normalized-Laplacian eigenvalue and the bounds it implies.

    ``h_lower``/``h_upper`` bracket the conductance (volume-normalised
    expansion). ``vertex_lower``/``vertex_upper`` bracket the vertex-normalised
    Cheeger constant via ``d_min * phi <= h <= d_max * phi``.
    """

    lambda2: float
    h_lower: float
    h_upper: float
    connected: bool
    vertex_lower: float
    vertex_upper: float
    eigenvalues: tuple[float, ...] = ()

    def to_record(self) -> dict:
        return {
            "lambda2": self.lambda2,
            "h_lower": self.h_lower,
            "h_upper": self.h_upper,
            "vertex_lower": self.vertex_lower,
            "vertex_upper": self.vertex_upper,
            "connected": self.connected,
        }

    def to_text(self) -> str:
        rec = self.to_record()
        return "".join(
            f"{k}={str(v).lower() if isinstance(v, bool) else repr(v)}\n" for k, v in rec.items()
        )

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


@dataclass(frozen=True)
class ExpanderParams:
    n: int
    eps: float
    d: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if self.d < 0:
            raise ValueError("d must be nonnegative")


def boundary_edges(g: Graph, s: Iterable[int]) -> set[tuple[int, int]]:
    s = set(int(v) for v in s)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"node {bad[0]} out of range 0..{g.n - 1}")
    return {(u, v) for u, v in g.edges if (u in s) != (v in s)}


def _profile(g: Graph, max_n: Optional[int]):
    cap = max_exact_n() if max_n is None else max_n
    if g.n > cap:
        raise SizeLimitError(
            f"exact search is limited to {cap} nodes (graph has {g.n}); "
            "use spectral bounds instead or raise UNNLAB_MAX_EXACT_N"
        )
    indptr, indices = g.csr()
    boundary, volume = cut_profile(indptr, indices, g.n)
    return boundary.astype(np.int64), volume.astype(np.int64), subset_sizes(g.n)


def cheeger_exact(g: Graph, max_n: Optional[int] = None) -> CheegerCertificate:
    """Minimise ``|dS| / |S|`` over all S with ``1 <= |S| <= n // 2``.

    Disconnected graphs get ``h = 0`` with the smallest zero-boundary set.
    """
    if g.n < 2:
        raise UndefinedQuantityError("Cheeger constant needs at least 2 nodes")
    boundary, _, sizes = _profile(g, max_n)
    masks = np.flatnonzero((sizes >= 1) & (sizes <= g.n // 2))
    sz = sizes[masks].astype(np.int64)
    best = _argmin_ratio(boundary[masks], sz, sz, masks, g.n)
    k = bin(best).count("1")
    return CheegerCertificate(Fraction(int(boundary[best]), k), _mask_to_set(best, g.n), int(boundary[best]))


def conductance_exact(g: Graph, max_n: Optional[int] = None) -> tuple[Fraction, frozenset[int]]:
    """Minimise ``|dS| / min(vol S, vol V\\S)`` over nonempty proper subsets."""
    if g.n < 2:
        raise UndefinedQuantityError("conductance needs at least 2 nodes")
    if min(degree_sequence(g)) == 0:
        raise DegenerateDegreeError("conductance is undefined with isolated nodes")
    boundary, volume, sizes = _profile(g, max_n)
    total = int(volume[-1])
    masks = np.flatnonzero((sizes >= 1) & (sizes <= g.n - 1))
    den = np.minimum(volume[masks], total - volume[masks])
    best = _argmin_ratio(boundary[masks], den, sizes[masks], masks, g.n)
    vol = int(volume[best])
    return Fraction(int(boundary[best]), min(vol, total - vol)), _mask_to_set(best, g.n)


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Symmetric normalized Laplacian ``I - D^-1/2 A D^-1/2``."""
    deg = np.asarray(degree_sequence(g), dtype=np.float64)
    if g.n and deg.min() == 0:
        v = int(np.argmin(deg))
        raise DegenerateDegreeError(f"node {v} is isolated; D^-1/2 is undefined")
    inv_sqrt = 1.0 / np.sqrt(deg)
    lap = np.eye(g.n) - inv_sqrt[:, None] * g.adjacency * inv_sqrt[None, :]
    return (lap + lap.T) / 2


def spectral_report(g: Graph) -> SpectralReport:
    """lambda_2 of the normalized Laplacian and the Cheeger-inequality bounds.

    Disconnected graphs report ``lambda2 = 0`` with ``connected=False``.
    """
    if g.n < 2:
        raise UndefinedQuantityError("spectral gap needs at least 2 nodes")
    deg = degree_sequence(g)
    if not g.is_connected():
        return SpectralReport(0.0, 0.0, 0.0, False, 0.0, 0.0)
    ev = np.linalg.eigvalsh(normalized_laplacian(g))
    lam = max(float(ev[1]), 0.0)
    lower, upper = lam / 2, math.sqrt(2 * lam)
    return SpectralReport(
        lambda2=lam,
        h_lower=lower,
        h_upper=upper,
        connected=True,
        vertex_lower=min(deg) * lower,
        vertex_upper=max(deg) * upper,
        eigenvalues=tuple(float(x) for x in ev),
    )


def is_expander(g: Graph, params: ExpanderParams, max_n: Optional[int] = None) -> bool:
    if g.n != params.n:
        raise ValueError(f"graph has {g.n} nodes but params.n = {params.n}")
    deg = degree_sequence(g)
    if deg and max(deg) > params.d:
        return False
    return cheeger_exact(g, max_n).h >= as_fraction(params.eps)
