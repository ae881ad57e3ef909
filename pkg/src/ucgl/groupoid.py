"""The centralizer space as a groupoid: structure maps, sampling, tangents.

Because every base lies on the section, which meets each regular conjugacy
class exactly once, two elements are composable iff their bases are equal;
source and target coincide.  Composition multiplies the B-slots.
"""

from dataclasses import dataclass

import numpy as np

from .core import determinant, inverse, is_regular
from .errors import (
    DegenerateSampleError,
    DegenerateTangentError,
    NotComposableError,
    NotRegularError,
    PreconditionError,
)
from .involutions import F_sigma, F_theta, GroupoidPoint, make_point
from .stokes import dM_ds, section_membership

#: base-equality tolerance for composability
BASE_TOL = 1e-10


@dataclass(frozen=True)
class ComposablePair:
    """Two points with (numerically) identical base."""

    p: GroupoidPoint
    q: GroupoidPoint


def make_pair(p, q, tol=BASE_TOL):
    if np.max(np.abs(p.A - q.A)) > tol:
        raise NotComposableError("bases differ beyond tolerance")
    return ComposablePair(p=p, q=q)


@dataclass(frozen=True)
class TangentVector:
    """A tangent pair (X, Y) at a point: X varies B, Y varies A.

    kind is one of 'fiber' (Y = 0), 'horizontal' (X = 0, only at units) or
    'general'.
    """

    base: GroupoidPoint
    X: np.ndarray
    Y: np.ndarray
    kind: str = "general"


def z_membership(rs, B, A, tol=1e-9):
    """Whether (B, A) is a point: commutation, det 1, section membership."""
    B = np.asarray(B, dtype=complex)
    A = np.asarray(A, dtype=complex)
    if B.shape != A.shape:
        raise PreconditionError("shape mismatch")
    if np.max(np.abs(B @ A - A @ B)) > tol:
        return False
    if abs(determinant(B) - 1.0) > tol:
        return False
    return section_membership(rs, A, tol)["in_section"]


def source(p):
    return p.A


def target(p):
    return p.A


def unit(rs, A):
    """The identity arrow over a section element A."""
    A = np.asarray(A, dtype=complex)
    return make_point(rs, np.eye(A.shape[0], dtype=complex), A)


def groupoid_inverse(rs, p):
    return make_point(rs, inverse(p.B), p.A)


def groupoid_compose(rs, pair):
    """Multiply the B-slots over the common base."""
    return make_point(rs, pair.p.B @ pair.q.B, pair.p.A, tol=1e-7)


def centralizer_basis(A, tol=1e-8):
    """Bases of the commutant of a regular A.

    Returns (powers, traceless): the group-level basis {I, A, ..., A^n} and
    the traceless algebra basis {A^j - (Tr A^j/(n+1)) I, j = 1..n}.
    """
    A = np.asarray(A, dtype=complex)
    if not is_regular(A, tol):
        raise NotRegularError("centralizer basis needs a regular element")
    N = A.shape[0]
    I = np.eye(N, dtype=complex)
    powers = [np.linalg.matrix_power(A, j) for j in range(N)]
    traceless = [powers[j] - (np.trace(powers[j]) / N) * I for j in range(1, N)]
    return powers, traceless


def commuting_combination(A, c):
    """Det-normalized combination sum_j c_j A^j (principal root branch)."""
    A = np.asarray(A, dtype=complex)
    c = np.asarray(c, dtype=complex)
    N = A.shape[0]
    B0 = sum(c[j] * np.linalg.matrix_power(A, j) for j in range(N))
    det = np.linalg.det(B0)
    if abs(det) < 1e-8:
        raise DegenerateSampleError("combination is numerically singular")
    lam = np.exp(-np.log(det) / N)  # principal branch of det^{-1/(n+1)}
    return lam * B0


def sample_commuting(A, seed, max_retries=20):
    """Draw a det-1 element of the centralizer of a regular A, deterministically."""
    A = np.asarray(A, dtype=complex)
    if not is_regular(A):
        raise NotRegularError("sampling needs a regular base")
    rng = np.random.default_rng(seed)
    N = A.shape[0]
    for _ in range(max_retries):
        c = rng.standard_normal(N) + 1j * rng.standard_normal(N)
        try:
            return commuting_combination(A, c)
        except DegenerateSampleError:
            continue
    raise DegenerateSampleError("retries exhausted")


def sample_slocal_fiber(rs, A, seed):
    """Deterministic sample of the joint fixed set in the fiber over A.

    A must lie on the real palindromic slice of the section.  A random
    centralizer element C is symmetrized twice: D = C * beta(C) with
    beta(X) = F X^{-T} F^{-1}, then B = D * thetahat(D) with
    thetahat(X) = G conj(X) G^{-1}.  The commutant of a regular element is
    abelian and the two maps are commuting involutions on it, so the double
    norm construction lands in the joint fixed set with det B = 1.
    """
    A = np.asarray(A, dtype=complex)
    mem = section_membership(rs, A)
    if not mem["in_local"]:
        raise PreconditionError("base must be on the real palindromic slice")
    s = mem["s"]
    F = F_sigma(rs, s)
    G = F_theta(rs, s)
    Fi, Gi = inverse(F), inverse(G)
    C = sample_commuting(A, seed)
    D = C @ (F @ inverse(C).T @ Fi)
    B = D @ (G @ np.conj(D) @ Gi)
    return make_point(rs, B, A)


def tangent_space(rs, p, tol=1e-8):
    """Numerical-kernel basis of the tangent space at p.

    The constraints linearize to ([X, A] + [B, Y(sdot)], Tr(B^{-1} X)) = 0
    where Y(sdot) is the analytic derivative of the section element.  The
    kernel is computed by SVD with cutoff tol * (largest singular value) and
    has complex dimension 2n at regular points; a different dimension raises
    DegenerateTangentError.  Vectors with vanishing Y get the 'fiber' tag.
    """
    n = rs.n
    N = n + 1
    dM = dM_ds(rs, p.s)
    Binv = inverse(p.B)
    cols = []
    for idx in range(N * N):
        X = np.zeros((N, N), dtype=complex)
        X.flat[idx] = 1.0
        cols.append(
            np.concatenate([(X @ p.A - p.A @ X).ravel(), [np.trace(Binv @ X)]])
        )
    for d in range(n):
        Y = dM[d]
        cols.append(np.concatenate([(p.B @ Y - Y @ p.B).ravel(), [0.0]]))
    L = np.array(cols).T
    _, sv, Vh = np.linalg.svd(L)
    rank = int(np.sum(sv > tol * sv[0]))
    kern = Vh[rank:].conj().T
    dim = kern.shape[1]
    if dim != 2 * n:
        raise DegenerateTangentError(f"kernel dimension {dim}, expected {2 * n}")
    vecs = []
    for j in range(dim):
        v = kern[:, j]
        X = v[: N * N].reshape(N, N)
        sdot = v[N * N :]
        Y = sum(sdot[d] * dM[d] for d in range(n))
        kind = "fiber" if np.max(np.abs(sdot)) < 1e-10 else "general"
        vecs.append(TangentVector(base=p, X=X, Y=np.asarray(Y), kind=kind))
    return vecs


def fiber_vector(p, xi):
    """The tangent vector of the curve t -> (B e^{t xi}, A) for xi in the algebra."""
    return TangentVector(base=p, X=p.B @ xi, Y=np.zeros_like(p.B), kind="fiber")


def horizontal_vector_at_unit(rs, p, sdot):
    """At a unit, the tangent of the base curve s + t*sdot with X = 0."""
    dM = dM_ds(rs, p.s)
    Y = sum(sdot[d] * dM[d] for d in range(rs.n))
    return TangentVector(base=p, X=np.zeros_like(p.B), Y=np.asarray(Y), kind="horizontal")
