"""Enumeration kernels: numba-jitted hot loops with a pure-numpy fallback.

Assignments of group elements to the d generators are enumerated in
mixed-radix order: generator 0 is the most significant digit, the last
generator ticks fastest.  Both backends walk the same order, so results
are identical (up to float summation noise in the complex kernel).

Backend selection is controlled by the ``WORDFOURIER_BACKEND`` environment
variable: "auto" (default; numba when importable), "numba", or "numpy".
"""

from __future__ import annotations

import os

import numpy as np

ENV_VAR = "WORDFOURIER_BACKEND"
_CHUNK = 1 << 16

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - mirror environments without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def deco(fn):
            return fn

        return deco


def active_backend() -> str:
    """Resolve the backend the kernels will use for this call."""
    requested = os.environ.get(ENV_VAR, "auto").strip().lower()
    if requested in ("numpy", "python", "fallback"):
        return "numpy"
    if requested == "numba":
        if not HAS_NUMBA:
            raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
        return "numba"
    if requested in ("", "auto"):
        return "numba" if HAS_NUMBA else "numpy"
    raise ValueError(f"unrecognized {ENV_VAR} value {requested!r}")


# ---------------------------------------------------------------------------
# numba kernels

@njit(cache=True)
def _counts_njit(mul, inv, identity, gens, signs, rank, order, total):
    counts = np.zeros(order, dtype=np.int64)
    digits = np.zeros(rank, dtype=np.int64)
    nletters = gens.shape[0]
    for _ in range(total):
        acc = identity
        for j in range(nletters):
            x = digits[gens[j]]
            if signs[j] < 0:
                x = inv[x]
            acc = mul[acc, x]
        counts[acc] += 1
        k = rank - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] == order:
                digits[k] = 0
                k -= 1
            else:
                break
    return counts


@njit(cache=True)
def _split_sum_njit(mul, inv, identity, gens, signs, offsets, rank, order, total, chibar):
    digits = np.zeros(rank, dtype=np.int64)
    nwords = offsets.shape[0] - 1
    acc_sum = 0.0 + 0.0j
    for _ in range(total):
        prod = 1.0 + 0.0j
        for w in range(nwords):
            acc = identity
            for j in range(offsets[w], offsets[w + 1]):
                x = digits[gens[j]]
                if signs[j] < 0:
                    x = inv[x]
                acc = mul[acc, x]
            prod *= chibar[acc]
        acc_sum += prod
        k = rank - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] == order:
                digits[k] = 0
                k -= 1
            else:
                break
    return acc_sum


# ---------------------------------------------------------------------------
# numpy fallback: same mixed-radix walk, vectorized over chunks

def _chunk_digits(start, stop, strides, order):
    idx = np.arange(start, stop, dtype=np.int64)
    return (idx[:, None] // strides[None, :]) % order


def _counts_numpy(mul, inv, identity, gens, signs, rank, order, total):
    counts = np.zeros(order, dtype=np.int64)
    strides = order ** np.arange(rank - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        digits = _chunk_digits(start, stop, strides, order)
        acc = np.full(stop - start, identity, dtype=np.int64)
        for j in range(gens.shape[0]):
            x = digits[:, gens[j]]
            if signs[j] < 0:
                x = inv[x]
            acc = mul[acc, x]
        counts += np.bincount(acc, minlength=order)
    return counts


def _split_sum_numpy(mul, inv, identity, gens, signs, offsets, rank, order, total, chibar):
    acc_sum = 0.0 + 0.0j
    strides = order ** np.arange(rank - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        digits = _chunk_digits(start, stop, strides, order)
        prod = np.ones(stop - start, dtype=np.complex128)
        for w in range(offsets.shape[0] - 1):
            acc = np.full(stop - start, identity, dtype=np.int64)
            for j in range(offsets[w], offsets[w + 1]):
                x = digits[:, gens[j]]
                if signs[j] < 0:
                    x = inv[x]
                acc = mul[acc, x]
            prod *= chibar[acc]
        acc_sum += prod.sum()
    return acc_sum


# ---------------------------------------------------------------------------
# dispatch

def _as_letter_arrays(letters):
    gens = np.array([g for g, _ in letters], dtype=np.int64)
    signs = np.array([s for _, s in letters], dtype=np.int64)
    return gens, signs


def element_counts(group, letters, rank, backend: str | None = None) -> np.ndarray:
    """Count, per group element, the assignments under which the word hits it."""
    backend = backend or active_backend()
    gens, signs = _as_letter_arrays(letters)
    total = group.order**rank
    impl = _counts_njit if backend == "numba" else _counts_numpy
    return impl(
        group.mul, group.inv, group.identity, gens, signs, rank, group.order, total
    )


def split_character_sum(
    group, word_letter_lists, rank, chibar_by_element, backend: str | None = None
) -> complex:
    """Sum over all assignments of the product of chibar over each word's value."""
    backend = backend or active_backend()
    flat: list[tuple[int, int]] = []
    offsets = [0]
    for letters in word_letter_lists:
        flat.extend(letters)
        offsets.append(len(flat))
    gens, signs = _as_letter_arrays(flat)
    offsets_arr = np.array(offsets, dtype=np.int64)
    total = group.order**rank
    chibar = np.ascontiguousarray(chibar_by_element, dtype=np.complex128)
    impl = _split_sum_njit if backend == "numba" else _split_sum_numpy
    return complex(
        impl(
            group.mul,
            group.inv,
            group.identity,
            gens,
            signs,
            offsets_arr,
            rank,
            group.order,
            total,
            chibar,
        )
    )


def warm_up(backend: str | None = None) -> None:
    """Trigger JIT compilation on a tiny input so timings exclude it."""
    from .groups import group_from_generators

    tiny = group_from_generators([(1, 0)], name="warmup")
    element_counts(tiny, [(0, 1), (0, -1)], 1, backend=backend)
    split_character_sum(
        tiny, [[(0, 1)], [(0, -1)]], 1, np.ones(2, dtype=np.complex128), backend=backend
    )
