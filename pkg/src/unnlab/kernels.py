"""Hot numeric kernels, each with a numba and a pure-numpy implementation.

Both implementations of a kernel return bit-identical arrays; the public
wrappers dispatch to numba when it is available and not disabled through
``UNNLAB_NO_NUMBA``.
"""
import numpy as np

from ._jit import USING_NUMBA, njit

__all__ = [
    "USING_NUMBA",
    "GOLDEN_GAMMA",
    "mix64",
    "derive_seed",
    "cut_profile",
    "bernoulli_stream",
    "subset_sizes",
]

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z):
    """SplitMix64 finalizer on a Python int, modulo 2**64."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_seed(master, *keys):
    """Fold integer keys into a 64-bit seed: h <- mix64((h ^ key) + GAMMA)."""
    h = master & MASK64
    for key in keys:
        h = mix64(((h ^ (key & MASK64)) + GOLDEN_GAMMA) & MASK64)
    return h


def _resolve(backend):
    if backend is None:
        return "numba" if USING_NUMBA else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not USING_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    return backend


# -- cut profile -----------------------------------------------------------


@njit
def _cut_profile_gray(indptr, indices, n):
    size = 1 << n
    boundary = np.zeros(size, dtype=np.int32)
    volume = np.zeros(size, dtype=np.int32)
    inside = np.zeros(n, dtype=np.int32)  # neighbours of v currently in S
    member = np.zeros(n, dtype=np.bool_)
    mask = 0
    b = 0
    vol = 0
    for i in range(1, size):
        v = 0
        while not (i >> v) & 1:
            v += 1
        deg = indptr[v + 1] - indptr[v]
        if member[v]:
            b -= deg - 2 * inside[v]
            vol -= deg
            step = -1
        else:
            b += deg - 2 * inside[v]
            vol += deg
            step = 1
        member[v] = not member[v]
        for k in range(indptr[v], indptr[v + 1]):
            inside[indices[k]] += step
        mask ^= 1 << v
        boundary[mask] = b
        volume[mask] = vol
    return boundary, volume


def _cut_profile_numpy(indptr, indices, n):
    size = 1 << n
    boundary = np.zeros(size, dtype=np.int32)
    volume = np.zeros(size, dtype=np.int32)
    for v in range(n):
        lo = 1 << v
        masks = np.arange(lo, dtype=np.int64)
        nbrs = indices[indptr[v]:indptr[v + 1]]
        inside = np.zeros(lo, dtype=np.int32)
        for w in nbrs[nbrs < v]:
            inside += ((masks >> w) & 1).astype(np.int32)
        deg = indptr[v + 1] - indptr[v]
        boundary[lo:2 * lo] = boundary[:lo] + deg - 2 * inside
        volume[lo:2 * lo] = volume[:lo] + deg
    return boundary, volume


def cut_profile(indptr, indices, n, backend=None):
    """Boundary size and volume of every vertex subset, indexed by bitmask.

    ``indptr``/``indices`` are CSR neighbour lists. Returns two int32 arrays of
    length ``2**n``: ``boundary[mask] = |dS|`` and ``volume[mask] = sum of
    degrees in S``, where bit ``v`` of ``mask`` marks ``v in S``.
    """
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    if not 0 <= n <= 30:
        raise ValueError(f"cut_profile supports 0 <= n <= 30, got {n}")
    if indptr.shape != (n + 1,) or indptr[0] != 0 or indptr[-1] != len(indices) or np.any(np.diff(indptr) < 0):
        raise ValueError("indptr is not a valid CSR pointer array for n nodes")
    if len(indices) and (indices.min() < 0 or indices.max() >= n):
        raise ValueError("neighbour index out of range")
    if _resolve(backend) == "numba":
        return _cut_profile_gray(indptr, indices, n)
    return _cut_profile_numpy(indptr, indices, n)


def subset_sizes(n):
    """Popcount of every mask in ``range(2**n)`` as uint8."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.uint8)


# -- seeded Bernoulli stream -----------------------------------------------


@njit
def _bernoulli_numba(seed, count, p):
    out = np.empty(count, dtype=np.bool_)
    state = np.uint64(seed)
    gamma = np.uint64(0x9E3779B97F4A7C15)
    m1 = np.uint64(0xBF58476D1CE4E5B9)
    m2 = np.uint64(0x94D049BB133111EB)
    s30 = np.uint64(30)
    s27 = np.uint64(27)
    s31 = np.uint64(31)
    s11 = np.uint64(11)
    scale = 2.0 ** -53
    for i in range(count):
        state = state + gamma
        z = state
        z = (z ^ (z >> s30)) * m1
        z = (z ^ (z >> s27)) * m2
        z = z ^ (z >> s31)
        out[i] = (z >> s11) * scale < p
    return out


def _bernoulli_numpy(seed, count, p):
    steps = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + steps * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z ^= z >> np.uint64(31)
    return (z >> np.uint64(11)).astype(np.float64) * 2.0 ** -53 < p


def bernoulli_stream(seed, count, p, backend=None):
    """``count`` independent Bernoulli(p) draws from a SplitMix64 stream.

    Draw ``i`` is ``mix64(seed + (i + 1) * GAMMA) >> 11`` scaled to [0, 1) and
    compared ``< p``.
    """
    seed = int(seed) & MASK64
    if _resolve(backend) == "numba":
        return _bernoulli_numba(np.uint64(seed), int(count), float(p))
    return _bernoulli_numpy(seed, int(count), float(p))
