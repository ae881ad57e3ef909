"""Dense complex linear algebra at size (n+1) and the structural constant matrices.

Everything here is plain numpy on small square complex arrays.  The
structural matrices (cyclic shifts, roots of unity, flips) are the fixed
scaffolding that the Stokes-factor and involution modules build on.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimensionError, SingularMatrixError

#: default threshold below which a determinant counts as zero
DET_EPS = 1e-12


def _as_matrix(M):
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidDimensionError(f"expected a square matrix, got shape {A.shape}")
    return A


@dataclass(frozen=True)
class StructuralSet:
    """The constant matrices attached to rank n (matrix size n+1).

    Pi is the cyclic shift with ones on the superdiagonal and a one in the
    lower-left corner; PiHat flips the sign of its last row.  Omega is the
    DFT-style Vandermonde matrix in the primitive (n+1)-th root of unity,
    which diagonalizes Pi.  Delta is the anti-diagonal flip, C fixes index 0
    and reverses the rest, Ctilde twists C by diag(1,-1,...,-1).  delta_perm
    is the index rotation i -> i-1 mod n+1.
    """

    n: int
    omega_root: complex
    Pi: np.ndarray
    PiHat: np.ndarray
    Omega: np.ndarray
    d: np.ndarray
    dHalf: np.ndarray
    Delta: np.ndarray
    C: np.ndarray
    Ctilde: np.ndarray
    delta_perm: tuple
    rank: int


def structural_matrices(n):
    """Build the StructuralSet for rank n >= 1."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidDimensionError(f"rank must be an integer >= 1, got {n!r}")
    N = n + 1
    om = np.exp(2j * np.pi / N)
    Pi = np.zeros((N, N), dtype=complex)
    for i in range(n):
        Pi[i, i + 1] = 1.0
    Pi[n, 0] = 1.0
    PiHat = np.diag([1.0] * n + [-1.0]).astype(complex) @ Pi
    ii, jj = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    Omega = om ** (ii * jj)
    d = np.diag(om ** np.arange(N))
    # principal square root e^{pi i/(n+1)} of the primitive root
    dHalf = np.diag(np.exp(1j * np.pi * np.arange(N) / N))
    Delta = np.fliplr(np.eye(N)).astype(complex)
    C = np.zeros((N, N), dtype=complex)
    C[0, 0] = 1.0
    for i in range(1, N):
        C[i, N - i] = 1.0
    Ctilde = np.diag([1.0] + [-1.0] * n).astype(complex) @ C
    delta_perm = tuple((i - 1) % N for i in range(N))
    return StructuralSet(
        n=n,
        omega_root=om,
        Pi=Pi,
        PiHat=PiHat,
        Omega=Omega,
        d=d,
        dHalf=dHalf,
        Delta=Delta,
        C=C,
        Ctilde=Ctilde,
        delta_perm=delta_perm,
        rank=n,
    )


def determinant(M):
    """Determinant of a square complex matrix."""
    return complex(np.linalg.det(_as_matrix(M)))


def _adjugate_inverse(A, det):
    N = A.shape[0]
    if N == 1:
        return np.array([[1.0 / det]], dtype=complex)
    if N == 2:
        adj = np.array([[A[1, 1], -A[0, 1]], [-A[1, 0], A[0, 0]]], dtype=complex)
        return adj / det
    # N == 3: cofactor transpose
    adj = np.empty((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(A, j, axis=0), i, axis=1)
            adj[i, j] = (-1) ** (i + j) * (
                minor[0, 0] * minor[1, 1] - minor[0, 1] * minor[1, 0]
            )
    return adj / det


def inverse(M, det_eps=DET_EPS):
    """Matrix inverse: adjugate formulas up to 3x3, LU factorization above.

    Raises SingularMatrixError when |det| falls below det_eps.
    """
    A = _as_matrix(M)
    det = np.linalg.det(A)
    if abs(det) < det_eps:
        raise SingularMatrixError(f"|det| = {abs(det):.3e} below {det_eps:.1e}")
    if A.shape[0] <= 3:
        return _adjugate_inverse(A, det)
    return np.linalg.solve(A, np.eye(A.shape[0], dtype=complex))


def ad(g, X):
    """Conjugation g X g^{-1}."""
    g = _as_matrix(g)
    X = _as_matrix(X)
    if g.shape != X.shape:
        raise InvalidDimensionError("conjugation needs matching shapes")
    return g @ X @ inverse(g)


def commutator(X, Y):
    """Matrix commutator XY - YX."""
    X = _as_matrix(X)
    Y = _as_matrix(Y)
    if X.shape != Y.shape:
        raise InvalidDimensionError("commutator needs matching shapes")
    return X @ Y - Y @ X


def trace_form(X, Y):
    """The invariant pairing Tr(XY)."""
    X = _as_matrix(X)
    Y = _as_matrix(Y)
    if X.shape != Y.shape:
        raise InvalidDimensionError("trace form needs matching shapes")
    return complex(np.trace(X @ Y))


def char_poly(M):
    """Characteristic polynomial of M, ascending coefficients, monic.

    Uses the trace recursion (no eigenvalue solve): with B_0 = 0,
    B_k = M (B_{k-1} + a_{k-1} I), a_k = -Tr(B_k)/k, the descending
    coefficients are 1, a_1, ..., a_N.
    """
    A = _as_matrix(M)
    N = A.shape[0]
    coeffs_desc = np.zeros(N + 1, dtype=complex)
    coeffs_desc[0] = 1.0
    B = np.zeros((N, N), dtype=complex)
    I = np.eye(N, dtype=complex)
    for k in range(1, N + 1):
        B = A @ (B + coeffs_desc[k - 1] * I)
        coeffs_desc[k] = -np.trace(B) / k
    return coeffs_desc[::-1].copy()


def is_regular(M, tol=1e-8):
    """Whether M is regular: {I, M, ..., M^n} spans an (n+1)-dimensional space.

    Numerical rank of the flattened power stack with singular-value cutoff
    tol times the largest singular value.
    """
    A = _as_matrix(M)
    N = A.shape[0]
    P = np.eye(N, dtype=complex)
    rows = []
    for _ in range(N):
        rows.append(P.ravel())
        P = P @ A
    sv = np.linalg.svd(np.array(rows), compute_uv=False)
    rank = int(np.sum(sv > tol * sv[0]))
    return rank == N


def encode_matrix(M):
    """Row-major nested list with [re, im] entry pairs, for JSON output."""
    A = _as_matrix(M)
    return [[[float(z.real), float(z.imag)] for z in row] for row in A]


def decode_matrix(data):
    """Inverse of encode_matrix."""
    return np.array([[complex(re, im) for re, im in row] for row in data])
