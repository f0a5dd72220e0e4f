"""Exact linear algebra over the prime field GF(p), p an odd prime >= 3.

Matrices are numpy int64 arrays with entries reduced mod p.  All functions
are pure: inputs are never mutated and results are fresh arrays.  Row
spaces are kept in reduced row echelon form, which is unique over a field,
so two equal subspaces always store identical bases.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch

INT = np.int64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    """Validate the global characteristic: an odd prime >= 3."""
    p = int(p)
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime >= 3, got {p}")
    return p


def normalize(a, p: int) -> np.ndarray:
    """Return ``a`` as an int64 array with entries reduced mod p."""
    return np.asarray(a, dtype=INT) % p


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, -1, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact ``a @ b mod p``.

    Routed through float64 BLAS: with entries < p <= 64 the integer sums
    stay far below 2**53, so the product is exact.
    """
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch(f"matmul shapes {a.shape} x {b.shape}")
    if a.shape[-1] == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=INT)
    prod = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
    return prod.astype(INT) % p


def mat_pow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    """k-th power of a square matrix mod p by repeated multiplication."""
    n = a.shape[0]
    out = np.eye(n, dtype=INT)
    for _ in range(k):
        out = matmul(out, a, p)
    return out


def rref(a, p: int):
    """Reduced row echelon form over GF(p).

    Returns ``(R, rank, pivots)`` where R is the unique RREF of ``a``,
    rank is the number of nonzero rows and pivots lists their pivot
    columns in increasing order.
    """
    a = normalize(a, p).copy()
    if a.ndim != 2:
        raise DimensionMismatch(f"rref expects a 2d array, got shape {a.shape}")
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = a[r] * inv_mod(piv, p) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, pivots


def row_space(a, p: int) -> np.ndarray:
    """Canonical basis (RREF rows, zero rows dropped) of the row space."""
    red, rank, _ = rref(a, p)
    return red[:rank]


def kernel(a, p: int) -> np.ndarray:
    """Canonical RREF basis of the right null space, one row per basis vector."""
    a = normalize(a, p)
    rows, cols = a.shape if a.ndim == 2 else (0, 0)
    if a.ndim != 2:
        raise DimensionMismatch("kernel expects a 2d array")
    red, rank, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return np.zeros((0, cols), dtype=INT)
    basis = np.zeros((len(free), cols), dtype=INT)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for row, c in enumerate(pivots):
            basis[idx, c] = (-red[row, f]) % p
    return row_space(basis, p)


def left_kernel(a, p: int) -> np.ndarray:
    """Canonical basis of ``{x : x @ a == 0}``."""
    return kernel(normalize(a, p).T, p)


def inverse(a, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p; raises if singular."""
    a = normalize(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch("inverse expects a square matrix")
    aug = np.hstack([a, np.eye(n, dtype=INT)])
    red, rank, _ = rref(aug, p)
    if rank < n or not np.array_equal(red[:, :n], np.eye(n, dtype=INT)):
        raise ZeroDivisionError("matrix is singular over GF(p)")
    return red[:, n:]


class Subspace:
    """A subspace of GF(p)^n in canonical (RREF-basis) form.

    Immutable; two Subspace objects are equal iff they are equal as sets,
    which by canonicity is entrywise equality of the stored bases.
    """

    __slots__ = ("p", "ambient", "basis", "pivots", "_basis_f64")

    def __init__(self, p: int, ambient: int, basis: np.ndarray, _pivots=None):
        self.p = p
        self.ambient = int(ambient)
        self.basis = basis
        if _pivots is None:
            _pivots = [int(np.nonzero(row)[0][0]) for row in basis]
        self.pivots = tuple(_pivots)
        self._basis_f64 = None

    def reduce_rows(self, mat: np.ndarray) -> np.ndarray:
        """Residuals of the rows of mat after eliminating the basis rows."""
        mat = normalize(mat, self.p)
        if self.dim == 0:
            return mat
        if self._basis_f64 is None:
            self._basis_f64 = self.basis.astype(np.float64)
        coeffs = mat[:, list(self.pivots)].astype(np.float64)
        return (mat - (coeffs @ self._basis_f64).astype(INT)) % self.p

    @classmethod
    def from_vectors(cls, vectors, p: int, ambient: int) -> "Subspace":
        vecs = [normalize(v, p) for v in vectors]
        if not vecs:
            return cls.zero(ambient, p)
        mat = np.vstack([v.reshape(-1) for v in vecs])
        if mat.shape[1] != ambient:
            raise DimensionMismatch(
                f"vectors of length {mat.shape[1]} in ambient dimension {ambient}"
            )
        red, rank, piv = rref(mat, p)
        return cls(p, ambient, red[:rank], piv)

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(p, ambient, np.zeros((0, ambient), dtype=INT), [])

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls(p, ambient, np.eye(ambient, dtype=INT), list(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check_compatible(self, other: "Subspace"):
        if self.ambient != other.ambient or self.p != other.p:
            raise DimensionMismatch(
                f"subspaces of GF({self.p})^{self.ambient} and GF({other.p})^{other.ambient}"
            )

    def reduce_vector(self, v) -> np.ndarray:
        """Remainder of v after eliminating the basis rows; 0 iff v is a member."""
        v = normalize(v, self.p).reshape(-1)
        if v.shape[0] != self.ambient:
            raise DimensionMismatch("vector length does not match ambient dimension")
        if self.dim == 0:
            return v
        coeffs = v[list(self.pivots)]
        return (v - matmul(coeffs, self.basis, self.p)) % self.p

    def contains_vector(self, v) -> bool:
        return not self.reduce_vector(v).any()

    def coords(self, v) -> np.ndarray:
        """Coordinates of a member vector w.r.t. the canonical basis."""
        v = normalize(v, self.p).reshape(-1)
        coeffs = v[list(self.pivots)] if self.dim else np.zeros(0, dtype=INT)
        if ((v - matmul(coeffs, self.basis, self.p)) % self.p if self.dim else v).any():
            raise ValueError("vector is not in the subspace")
        return coeffs

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains_vector(row) for row in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        stacked = np.vstack([self.basis, other.basis])
        return Subspace.from_vectors(stacked, self.p, self.ambient)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: rows [A|A], [B|0]; left-zero rows carry the intersection."""
        self._check_compatible(other)
        n = self.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(n, self.p)
        top = np.hstack([self.basis, self.basis])
        bot = np.hstack([other.basis, np.zeros_like(other.basis)])
        red, rank, _ = rref(np.vstack([top, bot]), self.p)
        rows = [red[i, n:] for i in range(rank) if not red[i, :n].any()]
        return Subspace.from_vectors(rows, self.p, n)

    def quotient_basis(self, other: "Subspace") -> list[np.ndarray]:
        """Canonical complement of ``self & other`` inside ``self``.

        Returns the rows of the canonical basis of ``self`` whose pivots do
        not occur among the pivots of the intersection.  Deterministic by
        pivot order.
        """
        inter = self.intersection(other)
        inter_pivots = set(inter.pivots)
        # RREF pivots of a subspace are a subset of the pivots of any
        # enclosing subspace, so the selection below has the right size.
        assert inter_pivots <= set(self.pivots)
        return [row.copy() for row, piv in zip(self.basis, self.pivots) if piv not in inter_pivots]

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "ambient": self.ambient,
            "basis": [[int(x) for x in row] for row in self.basis],
        }


def subspace_ops(a: Subspace, b: Subspace) -> dict:
    """Bundle of the standard subspace operations on a pair."""
    return {
        "sum": a.sum(b),
        "intersection": a.intersection(b),
        "contains": a.contains(b),
        "quotient_basis": a.quotient_basis(b),
    }
