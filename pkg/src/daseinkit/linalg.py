"""Dense Hermitian operator algebra on small complex matrices.

Everything downstream (contexts, daseinisation, lemma suites) works with the
objects defined here: validated Hermitian operators, clustered spectral
decompositions, and the truncated oscillator triple.  All tolerance checks
use the max-absolute-entry norm so thresholds are dimension independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, InvalidParameter, NotHermitian, NumericalFailure


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used throughout the package.

    herm   bound on ||M - M*||_max for accepting a matrix as Hermitian
    num    generic comparison tolerance (orthogonality, membership, PSD)
    group  relative eigenvalue-clustering threshold, must be >= num
    zero   threshold for "zero lies in the spectrum" tests
    """

    herm: float = 1e-10
    num: float = 1e-10
    group: float = 1e-8
    zero: float = 1e-9

    def __post_init__(self):
        for name in ("herm", "num", "group", "zero"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value >= 0.0):
                raise InvalidParameter(f"tolerance {name!r} must be finite and >= 0, got {value!r}")
        if self.group < self.num:
            raise InvalidParameter("clustering tolerance 'group' must be >= 'num'")


DEFAULT_TOL = Tolerances()


def as_matrix(a) -> np.ndarray:
    """Coerce an operator-like argument to a square complex128 ndarray."""
    if isinstance(a, HermitianOperator):
        return a.matrix
    m = np.ascontiguousarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidParameter("matrix entries must be finite")
    return m


def max_abs(m) -> float:
    """Max absolute entry; the norm behind every tolerance check."""
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def dagger(m) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def herm_deviation(m) -> float:
    m = np.asarray(m)
    return max_abs(m - dagger(m))


def is_psd(m, tol: float) -> bool:
    """Positive semidefiniteness via the minimum eigenvalue of the Hermitian part."""
    m = as_matrix(m)
    w = np.linalg.eigvalsh((m + dagger(m)) / 2.0)
    return bool(w[0] >= -tol)


class HermitianOperator:
    """A labeled complex matrix, validated as Hermitian on construction."""

    __slots__ = ("matrix", "label")

    def __init__(self, matrix, label: str | None = None, tol: Tolerances = DEFAULT_TOL):
        m = as_matrix(matrix)
        dev = herm_deviation(m)
        if dev > tol.herm:
            who = f" ({label})" if label else ""
            raise NotHermitian(
                f"matrix{who} deviates from self-adjointness by {dev:.3e} (limit {tol.herm:.1e})"
            )
        self.matrix = m
        self.label = label

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self):
        name = self.label or "?"
        return f"HermitianOperator({name}, dim={self.dim})"


@dataclass(frozen=True)
class SpectralDecomposition:
    """Clustered eigenvalues with their orthogonal spectral projections.

    ``eigenvalues`` are strictly ascending (one entry per cluster) and
    ``projections[i]`` is the orthogonal projection onto the i-th clustered
    eigenspace.  The projections resolve the identity.
    """

    eigenvalues: np.ndarray
    projections: tuple

    @property
    def nlevels(self) -> int:
        return len(self.projections)

    def family(self, lam: float, zero_tol: float) -> np.ndarray:
        """Spectral family member: sum of projections with eigenvalue <= lam + zero_tol."""
        dim = self.projections[0].shape[0]
        acc = np.zeros((dim, dim), dtype=np.complex128)
        for value, proj in zip(self.eigenvalues, self.projections):
            if value <= lam + zero_tol:
                acc = acc + proj
        return acc


def eigendecompose(a, tol: Tolerances = DEFAULT_TOL) -> SpectralDecomposition:
    """Eigenvalues and spectral projections of a Hermitian matrix.

    Nearly degenerate eigenvalues are merged into one cluster whenever the
    consecutive gap is at most ``tol.group * (spectral range + 1)``; the
    cluster eigenvalue is the mean and its projection the summed rank-1
    eigenprojections.  Merging is what keeps projection ranks deterministic
    for downstream approximation steps.
    """
    m = as_matrix(a)
    dev = herm_deviation(m)
    if dev > tol.herm:
        raise NotHermitian(f"deviation from self-adjointness {dev:.3e} exceeds {tol.herm:.1e}")
    try:
        w, u = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NumericalFailure(f"eigensolver did not converge: {exc}") from exc

    gap = tol.group * (float(w[-1] - w[0]) + 1.0)
    starts = [0]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] > gap:
            starts.append(i)
    starts.append(len(w))

    values = []
    projections = []
    for lo, hi in zip(starts[:-1], starts[1:]):
        block = u[:, lo:hi]
        values.append(float(np.mean(w[lo:hi])))
        projections.append(np.ascontiguousarray(block @ dagger(block)))
    return SpectralDecomposition(np.array(values), tuple(projections))


def spectral_family(a, lam: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Projection onto the part of the spectrum at or below ``lam``."""
    return eigendecompose(a, tol).family(lam, tol.zero)


def make_oscillator(n: int, mass: float = 1.0, omega: float = 1.0, hbar: float = 1.0):
    """Truncated harmonic-oscillator triple (X, P, H) on ``n`` levels.

    The lowering operator acts as a|k> = sqrt(k)|k-1> on the first ``n``
    number states.  H is assembled from the *returned truncated* X and P,
    P^2/2m + m w^2 X^2 / 2, so that squares and products downstream stay
    inside one consistent n-level model (H is not the analytic ladder
    diagonal; its top level is a truncation artifact).
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidParameter(f"need at least two levels, got n={n!r}")
    for name, value in (("mass", mass), ("omega", omega), ("hbar", hbar)):
        if not (np.isfinite(value) and value > 0):
            raise InvalidParameter(f"{name} must be positive, got {value!r}")

    lower = np.zeros((n, n), dtype=np.complex128)
    ks = np.arange(1, n)
    lower[ks - 1, ks] = np.sqrt(ks)
    raise_ = dagger(lower)

    x = np.sqrt(hbar / (2.0 * mass * omega)) * (lower + raise_)
    p = 1j * np.sqrt(hbar * mass * omega / 2.0) * (raise_ - lower)
    h = (p @ p) / (2.0 * mass) + 0.5 * mass * omega**2 * (x @ x)
    return (
        HermitianOperator(x, "X"),
        HermitianOperator(p, "P"),
        HermitianOperator(h, "H"),
    )


def _check_same_dim(a: np.ndarray, b: np.ndarray):
    if a.shape != b.shape:
        raise DimMismatch(f"operand shapes differ: {a.shape} vs {b.shape}")


def op_add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a + b


def op_mul(a, b) -> np.ndarray:
    """Matrix product.  Products of non-commuting Hermitians are not Hermitian;
    callers re-validate where they need self-adjointness."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b


def op_scale(c: float, a) -> np.ndarray:
    return complex(c) * as_matrix(a)
