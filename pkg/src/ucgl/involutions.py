"""The twisting matrices F_sigma, F_theta and the two involutions on pairs.

A point of the centralizer space is a pair (B, A) with A on the section and
B commuting with A, det B = 1.  The involutions act by

    sigma(B, A) = (F B^{-T} F^{-1}, F A^{-T} F^{-1})        with F = F_sigma(s)
    theta(B, A) = (G conj(B) G^{-1}, G conj(A)^{-1} G^{-1})  with G = F_theta(s)

where s is always read off the base of the *input* point.  Their joint fixed
set is the monodromy-data locus probed by slocal_membership.
"""

from dataclasses import dataclass

import numpy as np

from .core import determinant, inverse, structural_matrices
from .errors import PreconditionError
from .stokes import build_Q, build_S, section_membership

#: default tolerance for the point invariants (commutation, det, section)
POINT_TOL = 1e-9


@dataclass(frozen=True)
class GroupoidPoint:
    """A pair (B, A) with A on the section and B in its centralizer, det B = 1.

    s caches the section parameters of A.
    """

    B: np.ndarray
    A: np.ndarray
    s: np.ndarray


def make_point(rs, B, A, tol=POINT_TOL):
    """Validate the pair invariants and build a GroupoidPoint."""
    B = np.asarray(B, dtype=complex)
    A = np.asarray(A, dtype=complex)
    if np.max(np.abs(B @ A - A @ B)) > tol:
        raise PreconditionError("B and A do not commute within tolerance")
    if abs(determinant(B) - 1.0) > tol:
        raise PreconditionError("det B differs from 1 beyond tolerance")
    mem = section_membership(rs, A, tol)
    if not mem["in_section"]:
        raise PreconditionError("A is not on the section within tolerance")
    return GroupoidPoint(B=B, A=A, s=mem["s"])


def F_sigma(rs, s):
    """Twist for the parameter-reversing involution.

    Constant for odd rank (a half-turn power of the signed cyclic matrix);
    for even rank it is the transpose of the first full-turn factor product,
    so it depends on s.
    """
    st = structural_matrices(rs.n)
    if rs.n % 2 == 1:
        return np.linalg.matrix_power(st.PiHat, (rs.n + 1) // 2)
    return build_S(rs, 1, s).T


def F_theta(rs, s):
    """Twist for the conjugate-reversing involution.

    For odd rank: the signed flip times the conjugated Stokes factor at
    sector numerator n; constant equal to the index-fixing flip C for even
    rank.
    """
    st = structural_matrices(rs.n)
    if rs.n % 2 == 1:
        return st.Ctilde @ np.conj(build_Q(rs, rs.n, s))
    return st.C


def apply_sigma(rs, p, tol=POINT_TOL):
    """The involution (B, A) -> (F B^{-T} F^{-1}, F A^{-T} F^{-1})."""
    F = F_sigma(rs, p.s)
    Fi = inverse(F)
    B2 = F @ inverse(p.B).T @ Fi
    A2 = F @ inverse(p.A).T @ Fi
    return make_point(rs, B2, A2, tol)


def apply_theta(rs, p, tol=POINT_TOL):
    """The involution (B, A) -> (G conj(B) G^{-1}, G conj(A)^{-1} G^{-1})."""
    G = F_theta(rs, p.s)
    Gi = inverse(G)
    B2 = G @ np.conj(p.B) @ Gi
    A2 = G @ inverse(np.conj(p.A)) @ Gi
    return make_point(rs, B2, A2, tol)


def point_distance(p, q):
    """Max-abs entrywise distance over both components."""
    return float(
        max(np.max(np.abs(p.B - q.B)), np.max(np.abs(p.A - q.A)))
    )


def slocal_membership(rs, p, tol=POINT_TOL):
    """Membership of the joint fixed set, checked two independent ways.

    fixed_route applies both involutions and compares with the input;
    direct_route evaluates the literal matrix identities on B and A with the
    twists at the input parameters.  c_reality reports whether B conj(B) = I
    holds; it is a diagnostic, never a membership requirement.
    """
    sp = apply_sigma(rs, p, tol=np.inf)
    tp = apply_theta(rs, p, tol=np.inf)
    fixed_route = point_distance(sp, p) < tol and point_distance(tp, p) < tol

    F = F_sigma(rs, p.s)
    G = F_theta(rs, p.s)
    Fi, Gi = inverse(F), inverse(G)
    res = max(
        np.max(np.abs(F @ inverse(p.B).T @ Fi - p.B)),
        np.max(np.abs(F @ inverse(p.A).T @ Fi - p.A)),
        np.max(np.abs(G @ np.conj(p.B) @ Gi - p.B)),
        np.max(np.abs(G @ inverse(np.conj(p.A)) @ Gi - p.A)),
    )
    direct_route = bool(res < tol)
    c_reality = bool(
        np.max(np.abs(p.B @ np.conj(p.B) - np.eye(p.B.shape[0]))) < tol
    )
    return {
        "fixed_route": bool(fixed_route),
        "direct_route": direct_route,
        "c_reality": c_reality,
    }
