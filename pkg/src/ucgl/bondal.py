"""A minimal triangular-pair groupoid and the embedding of the monodromy locus.

Points are pairs (B, A) with A unit-diagonal upper triangular and
B^{-T} A B^{-1} again unit-diagonal upper triangular.  Source is A, target
is B^{-T} A B^{-1}, composition multiplies the B-slots and keeps the second
base.  The monodromy locus maps into this structure by sending (B, A) to
(B, S1(s)^{-T}) with S1 the first full-turn Stokes product; only the
groupoid-morphism laws are asserted for the image (no triangularity claim:
the relevant cone convention is not pinned down here, so it is probed
empirically via triangularizing_permutation instead).
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .core import inverse
from .errors import NotComposableError, PreconditionError
from .stokes import build_S


@dataclass(frozen=True)
class BondalPoint:
    B: np.ndarray
    A: np.ndarray


def _unit_upper(A, tol):
    A = np.asarray(A, dtype=complex)
    N = A.shape[0]
    if np.max(np.abs(np.diag(A) - 1.0)) > tol:
        return False
    low = np.tril(A, -1)
    return bool(np.max(np.abs(low)) < tol)


def membership(B, A, tol=1e-9):
    """Whether (B, A) is a point: A and B^{-T} A B^{-1} unit-diagonal upper triangular."""
    B = np.asarray(B, dtype=complex)
    A = np.asarray(A, dtype=complex)
    if not _unit_upper(A, tol):
        return False
    return _unit_upper(inverse(B).T @ A @ inverse(B), tol)


def make_bondal_point(B, A, tol=1e-9):
    if not membership(B, A, tol):
        raise PreconditionError("pair fails the triangular membership condition")
    return BondalPoint(B=np.asarray(B, dtype=complex), A=np.asarray(A, dtype=complex))


def source(p):
    return p.A


def target(p):
    return inverse(p.B).T @ p.A @ inverse(p.B)


def unit(A):
    return BondalPoint(B=np.eye(np.asarray(A).shape[0], dtype=complex),
                       A=np.asarray(A, dtype=complex))


def compose(p, q, tol=1e-8):
    """Product (B1 B2, A2); requires A1 = B2^{-T} A2 B2^{-1} (i.e. s(p) = t(q))."""
    if np.max(np.abs(p.A - target(q))) > tol:
        raise NotComposableError("source/target mismatch")
    return BondalPoint(B=p.B @ q.B, A=q.A)


def embed_slocal(rs, p):
    """Image of a monodromy-locus point: (B, S1(s)^{-T})."""
    S1 = build_S(rs, 1, p.s)
    return BondalPoint(B=p.B, A=inverse(S1).T)


def triangularizing_permutation(A, tol=1e-9):
    """A permutation making P A P^T unit-diagonal upper triangular, if one exists.

    Brute force over all permutations (sizes here are at most 5); returns the
    permutation tuple or None.  Used to probe, not assert, triangularity of
    embedded bases.
    """
    A = np.asarray(A, dtype=complex)
    N = A.shape[0]
    for perm in itertools.permutations(range(N)):
        P = np.zeros((N, N))
        for i, j in enumerate(perm):
            P[i, j] = 1.0
        if _unit_upper(P @ A @ P.T, tol):
            return perm
    return None
