"""Hot inner loops with a numba fast path and a pure-numpy fallback.

The only loops in the package whose cost grows combinatorially live here:
the cubic distributivity scan over lattice operation tables and the pairwise
commutator scan over stacks of projections.  Backend selection:

* env var ``DASEINKIT_NUMBA`` set to ``0``/``false`` forces the numpy path,
  ``1``/``true`` requests numba (falls back with a warning if unavailable);
* unset, numba is used when importable.

Every public function also accepts ``backend="numba"|"numpy"`` so the
benchmark in ``benchmarks/bench_kernels.py`` can time both paths directly.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    njit = None
    NUMBA_AVAILABLE = False


def active_backend() -> str:
    """Backend chosen by the environment for this call."""
    raw = os.environ.get("DASEINKIT_NUMBA", "").strip().lower()
    if raw in ("0", "false", "no", "off"):
        return "numpy"
    if raw in ("1", "true", "yes", "on"):
        if not NUMBA_AVAILABLE:
            warnings.warn("DASEINKIT_NUMBA=1 but numba is not importable; using numpy")
            return "numpy"
        return "numba"
    return "numba" if NUMBA_AVAILABLE else "numpy"


def _resolve(backend: str | None) -> str:
    be = backend or active_backend()
    if be not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {be!r}")
    if be == "numba" and not NUMBA_AVAILABLE:
        warnings.warn("numba backend requested but numba is not importable; using numpy")
        be = "numpy"
    return be


# ---------------------------------------------------------------------------
# distributivity scan:  first triple with a & (b | c) != (a & b) | (a & c)


def _distributivity_violation_loop(meet, join):
    n = meet.shape[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                    return a, b, c
    return -1, -1, -1


if NUMBA_AVAILABLE:
    _distributivity_violation_nb = njit(cache=True)(_distributivity_violation_loop)


def _distributivity_violation_np(meet, join):
    n = meet.shape[0]
    for a in range(n):
        row = meet[a]
        lhs = meet[a, join]                 # lhs[b, c] = a & (b | c)
        rhs = join[np.ix_(row, row)]        # rhs[b, c] = (a & b) | (a & c)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return -1, -1, -1


def distributivity_violation(meet, join, backend: str | None = None):
    """First violating triple of the meet-over-join distributive law.

    ``meet`` and ``join`` are n x n index tables over lattice elements
    0..n-1.  Returns ``(a, b, c)`` or ``(-1, -1, -1)`` when the law holds.
    """
    meet = np.ascontiguousarray(meet, dtype=np.int64)
    join = np.ascontiguousarray(join, dtype=np.int64)
    if meet.shape != join.shape or meet.ndim != 2 or meet.shape[0] != meet.shape[1]:
        raise ValueError("meet/join must be square tables of equal size")
    if _resolve(backend) == "numba":
        a, b, c = _distributivity_violation_nb(meet, join)
        return int(a), int(b), int(c)
    return _distributivity_violation_np(meet, join)


# ---------------------------------------------------------------------------
# pairwise commutator scan over a stack of matrices


def _first_noncommuting_loop(stack, tol):
    n = stack.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            d = stack[i] @ stack[j] - stack[j] @ stack[i]
            worst = 0.0
            for r in range(d.shape[0]):
                for c in range(d.shape[1]):
                    v = abs(d[r, c])
                    if v > worst:
                        worst = v
            if worst > tol:
                return i, j
    return -1, -1


if NUMBA_AVAILABLE:
    _first_noncommuting_nb = njit(cache=True)(_first_noncommuting_loop)


def _first_noncommuting_np(stack, tol):
    n = stack.shape[0]
    for i in range(n - 1):
        rest = stack[i + 1:]
        comm = stack[i] @ rest - rest @ stack[i]
        worst = np.abs(comm).max(axis=(1, 2))
        hits = np.nonzero(worst > tol)[0]
        if hits.size:
            return i, int(i + 1 + hits[0])
    return -1, -1


def first_noncommuting_pair(stack, tol: float, backend: str | None = None):
    """Indices (i, j), i < j, of the first pair in ``stack`` whose commutator
    has max-abs entry above ``tol``; (-1, -1) if all pairs commute."""
    stack = np.ascontiguousarray(stack, dtype=np.complex128)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValueError("expected a stack of square matrices")
    if _resolve(backend) == "numba":
        i, j = _first_noncommuting_nb(stack, float(tol))
        return int(i), int(j)
    return _first_noncommuting_np(stack, float(tol))
