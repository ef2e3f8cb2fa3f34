"""Floating-point twin of the exact layer.

Provides complex double matrices, eigenvalue clustering, spectral radius,
and the matrix exponential (scaling-and-squaring via scipy). Everything
here is approximate by design; the exact layer is the source of truth and
the test suites cross-check the two.

Eigenvalues come from LAPACK (``numpy.linalg.eigvals``). Clustering uses an
absolute distance threshold ``cluster_tol`` whose default (1e-8) is
calibrated for matrices of roughly unit scale; callers working at other
scales pass their own tolerance.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, EigenvalueConvergenceError

__all__ = [
    "CMatrix",
    "SpectrumSet",
    "eigenvalues",
    "spectral_radius",
    "spectral_radius_exact",
    "expm",
    "spectrum_compare",
]

DEFAULT_CLUSTER_TOL = 1e-8
DEFAULT_ZERO_RADIUS = 1e-8


class CMatrix:
    """Square complex double matrix; a thin immutable wrapper over numpy."""

    __slots__ = ("_a",)

    def __init__(self, rows):
        a = np.array(rows, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DimensionMismatchError("CMatrix must be square with dim >= 1")
        if not np.all(np.isfinite(a.view(np.float64))):
            raise ValueError("CMatrix entries must be finite")
        a.setflags(write=False)
        object.__setattr__(self, "_a", a)

    def __setattr__(self, name, value):
        raise AttributeError("CMatrix is immutable")

    @classmethod
    def from_exact(cls, m):
        return cls(m.to_complex_rows())

    @property
    def dim(self):
        return self._a.shape[0]

    @property
    def array(self):
        """Read-only ndarray view of the entries."""
        return self._a

    def entry(self, i, j):
        return complex(self._a[i, j])

    def _coerce(self, other):
        if isinstance(other, CMatrix):
            if other.dim != self.dim:
                raise DimensionMismatchError(f"dims {self.dim} and {other.dim} differ")
            return other._a
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else CMatrix(self._a + o)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else CMatrix(self._a - o)

    def __mul__(self, other):
        if isinstance(other, CMatrix):
            return CMatrix(self._a @ other._a)
        if isinstance(other, (int, float, complex)):
            return CMatrix(self._a * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return CMatrix(self._a * other)
        return NotImplemented

    __matmul__ = __mul__

    def __neg__(self):
        return CMatrix(-self._a)

    def frobenius(self):
        return float(np.linalg.norm(self._a, "fro"))

    def __repr__(self):
        return f"CMatrix(dim={self.dim})"


class SpectrumSet:
    """Clustered eigenvalue multiset.

    ``points`` is a tuple of (representative, multiplicity) sorted by real
    then imaginary part. Multiplicities sum to the matrix dimension, and
    distinct representatives are pairwise farther apart than cluster_tol.
    """

    __slots__ = ("points", "cluster_tol")

    def __init__(self, values, cluster_tol=DEFAULT_CLUSTER_TOL):
        clusters = [[complex(z)] for z in values]
        merged = True
        while merged:
            merged = False
            reps = [sum(c) / len(c) for c in clusters]
            for i in range(len(clusters)):
                for j in range(i + 1, len(clusters)):
                    if abs(reps[i] - reps[j]) <= cluster_tol:
                        clusters[i].extend(clusters[j])
                        del clusters[j]
                        merged = True
                        break
                if merged:
                    break
        pts = [(sum(c) / len(c), len(c)) for c in clusters]
        pts.sort(key=lambda p: (p[0].real, p[0].imag))
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "cluster_tol", float(cluster_tol))

    def __setattr__(self, name, value):
        raise AttributeError("SpectrumSet is immutable")

    def representatives(self):
        return [z for z, _ in self.points]

    def total_multiplicity(self):
        return sum(m for _, m in self.points)

    def max_modulus(self):
        return max((abs(z) for z, _ in self.points), default=0.0)

    def __repr__(self):
        body = ", ".join(f"({z.real:.6g}{z.imag:+.6g}j)x{m}" for z, m in self.points)
        return f"SpectrumSet[{body}]"


def eigenvalues(m, cluster_tol=DEFAULT_CLUSTER_TOL):
    """Eigenvalues of a CMatrix, clustered into a SpectrumSet."""
    try:
        vals = np.linalg.eigvals(m.array)
    except np.linalg.LinAlgError as exc:
        raise EigenvalueConvergenceError(str(exc)) from exc
    return SpectrumSet(vals.tolist(), cluster_tol=cluster_tol)


def spectral_radius(m):
    """Largest eigenvalue modulus."""
    try:
        vals = np.linalg.eigvals(m.array)
    except np.linalg.LinAlgError as exc:
        raise EigenvalueConvergenceError(str(exc)) from exc
    return float(np.max(np.abs(vals)))


def spectral_radius_exact(m):
    """Largest root modulus of the exact characteristic polynomial.

    Repeated eigenvalues are stripped by the exact squarefree reduction
    before any floating point enters, so the numeric rooting only ever
    sees simple roots and avoids the O(eps^(1/k)) blowup that direct
    eigenvalue solvers suffer on defective matrices.
    """
    from .exact import charpoly, poly_radical

    rad = poly_radical(charpoly(m))
    coeffs = [complex(c) for c in reversed(rad.coeffs)]
    roots = np.roots(coeffs)
    if len(roots) == 0:
        return 0.0
    return float(np.max(np.abs(roots)))


def expm(m):
    """Matrix exponential by scaling-and-squaring; overflow raises."""
    out = scipy.linalg.expm(m.array)
    if not np.all(np.isfinite(out.view(np.float64))):
        raise OverflowError("matrix exponential overflowed")
    return CMatrix(out)


def spectrum_compare(s1, s2, exclude_zero_radius=DEFAULT_ZERO_RADIUS):
    """Set comparison of two spectra, ignoring multiplicities.

    Points within exclude_zero_radius of 0 are dropped from both sides;
    the remaining representative sets must match within the coarser of the
    two cluster tolerances (both ways).
    """
    tol = max(s1.cluster_tol, s2.cluster_tol)
    a = [z for z in s1.representatives() if abs(z) > exclude_zero_radius]
    b = [z for z in s2.representatives() if abs(z) > exclude_zero_radius]
    return all(any(abs(x - y) <= tol for y in b) for x in a) and all(
        any(abs(x - y) <= tol for x in a) for y in b
    )
