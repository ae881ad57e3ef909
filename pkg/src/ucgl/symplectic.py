"""The quasi-symplectic 2-form restricted to the centralizer space.

omega is evaluated on tangent pairs (X, Y) at a point (g, a) of the ambient
double via left/right translated slots and the trace pairing.  The closed
unit-block formulas act as the convention oracle; multiplicativity,
closedness, nondegeneracy, the involution pullback identities, the real
sub-form behaviour and the integrable-system structure are all checked
numerically on top of it.

Local holomorphic charts (s-parameters times centralizer coefficients) are
built through any point via a matrix logarithm of the B-slot decomposed in
powers of the base; chart tangent frames are analytic (Frechet derivative
of expm), so only the maps being differentiated contribute finite-difference
error.
"""

import itertools

import numpy as np
from scipy.linalg import expm, expm_frechet, logm

from .core import char_poly, inverse, trace_form
from .errors import (
    DegenerateChartError,
    DegenerateFormError,
    InvalidTangentKindError,
    NotComposableError,
    ProjectionFailureError,
)
from .groupoid import TangentVector
from .involutions import apply_sigma, apply_theta, make_point
from .stokes import build_M, dM_ds


def omega(g, a, u, v):
    """The 2-form at (g, a) on tangent pairs u = (X_u, Y_u), v = (X_v, Y_v).

    With x = g^{-1} X and the trace pairing ( , ):
      omega(u, v) = 1/2 [ (Ad_a x_u, x_v) - (Ad_a x_v, x_u)
                          + (x_u, a^{-1} Y_v + Y_v a^{-1})
                          - (x_v, a^{-1} Y_u + Y_u a^{-1}) ]
    """
    gi = inverse(g)
    ai = inverse(a)
    xu, xv = gi @ u.X, gi @ v.X
    Ada = lambda X: a @ X @ ai
    t = (
        trace_form(Ada(xu), xv)
        - trace_form(Ada(xv), xu)
        + trace_form(xu, ai @ v.Y + v.Y @ ai)
        - trace_form(xv, ai @ u.Y + u.Y @ ai)
    )
    return 0.5 * t


def omega_at(p, u, v):
    """omega at a centralizer point."""
    return omega(p.B, p.A, u, v)


def unit_block_values(a, u, v):
    """Closed-form value of omega at a unit, by tangent kind.

    Fiber vectors carry xi = X (an algebra element); horizontal vectors
    carry rho with Y = a rho.  The four blocks are
      (H,H) -> 0, (F,F) -> 0, (H,F) -> -(eta, rho), (F,H) -> (xi, varrho).
    """
    kinds = (u.kind, v.kind)
    for k in kinds:
        if k not in ("fiber", "horizontal"):
            raise InvalidTangentKindError(f"unit blocks need fiber/horizontal tags, got {k!r}")
    ai = inverse(a)
    if kinds == ("horizontal", "horizontal") or kinds == ("fiber", "fiber"):
        return 0.0 + 0.0j
    if kinds == ("horizontal", "fiber"):
        eta = v.X
        rho = ai @ u.Y
        return -trace_form(eta, rho)
    # ("fiber", "horizontal")
    xi = u.X
    varrho = ai @ v.Y
    return trace_form(xi, varrho)


def type_20_residual(p, u, v):
    """|omega(J u, v) - i omega(u, v)| with J the ambient complex structure."""
    Ju = TangentVector(base=u.base, X=1j * u.X, Y=1j * u.Y, kind=u.kind)
    return abs(omega_at(p, Ju, v) - 1j * omega_at(p, u, v))


# ---------------------------------------------------------------------------
# composable tangent pairs and multiplicativity


def composable_tangent_basis(rs, pair, tol=1e-8):
    """Kernel basis of the tangent space to the set of composable pairs.

    Unknowns (X1, X2, sdot) with the shared base variation Y(sdot); the
    kernel has complex dimension 3n at regular points.  Returns a list of
    (u1, u2) with equal Y-components.
    """
    n = rs.n
    N = n + 1
    p, q = pair.p, pair.q
    dM = dM_ds(rs, p.s)
    B1i, B2i = inverse(p.B), inverse(q.B)
    cols = []
    dim = 2 * N * N + n
    for idx in range(dim):
        X1 = np.zeros((N, N), dtype=complex)
        X2 = np.zeros((N, N), dtype=complex)
        sdot = np.zeros(n, dtype=complex)
        if idx < N * N:
            X1.flat[idx] = 1.0
        elif idx < 2 * N * N:
            X2.flat[idx - N * N] = 1.0
        else:
            sdot[idx - 2 * N * N] = 1.0
        Y = sum(sdot[d] * dM[d] for d in range(n)) if n else np.zeros((N, N))
        c1 = (X1 @ p.A - p.A @ X1 + p.B @ Y - Y @ p.B).ravel()
        c2 = (X2 @ q.A - q.A @ X2 + q.B @ Y - Y @ q.B).ravel()
        cols.append(
            np.concatenate([c1, c2, [np.trace(B1i @ X1)], [np.trace(B2i @ X2)]])
        )
    L = np.array(cols).T
    _, sv, Vh = np.linalg.svd(L)
    rank = int(np.sum(sv > tol * sv[0]))
    kern = Vh[rank:].conj().T
    out = []
    for j in range(kern.shape[1]):
        w = kern[:, j]
        X1 = w[: N * N].reshape(N, N)
        X2 = w[N * N : 2 * N * N].reshape(N, N)
        sdot = w[2 * N * N :]
        Y = np.asarray(sum(sdot[d] * dM[d] for d in range(n)))
        out.append(
            (
                TangentVector(base=p, X=X1, Y=Y),
                TangentVector(base=q, X=X2, Y=Y),
            )
        )
    return out


def multiplicativity_residual(rs, pair, upair, vpair):
    """|omega(dm u, dm v) - omega(u1, v1) - omega(u2, v2)| at a composable pair.

    The differential of composition is exact: dm(u1, u2) = (X1 B2 + B1 X2, Y).
    """
    p, q = pair.p, pair.q
    u1, u2 = upair
    v1, v2 = vpair
    if np.max(np.abs(u1.Y - u2.Y)) > 1e-8 or np.max(np.abs(v1.Y - v2.Y)) > 1e-8:
        raise NotComposableError("tangent pairs must share the base variation")
    B12 = p.B @ q.B
    du = TangentVector(base=p, X=u1.X @ q.B + p.B @ u2.X, Y=u1.Y)
    dv = TangentVector(base=p, X=v1.X @ q.B + p.B @ v2.X, Y=v1.Y)
    lhs = omega(B12, p.A, du, dv)
    rhs = omega_at(p, u1, v1) + omega_at(q, u2, v2)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# local charts


class SectionChart:
    """Holomorphic chart (s, c) -> (B, A) around a point of the space.

    The B-slot is exp(N(s, c)) with N(s, c) a combination of powers of the
    section element A(s); the coefficients are the logarithm coefficients of
    the anchor's B-slot plus the chart coordinates c, trace-corrected so the
    determinant stays at its anchor value.  The chart hits the anchor exactly
    at (s0, 0) and stays inside the space by construction.
    """

    def __init__(self, rs, p):
        self.rs = rs
        self.n = rs.n
        N = self.n + 1
        self.N = N
        self.s0 = np.asarray(p.s, dtype=complex)
        A0 = build_M(rs, self.s0)
        if np.max(np.abs(p.B - np.eye(N))) < 1e-13:
            N0 = np.zeros((N, N), dtype=complex)
        else:
            N0 = np.asarray(logm(p.B), dtype=complex)
        # decompose the logarithm in powers of the base (the commutant algebra)
        powers = [np.linalg.matrix_power(A0, j) for j in range(N)]
        P = np.array([pw.ravel() for pw in powers]).T
        beta, res, _, _ = np.linalg.lstsq(P, N0.ravel(), rcond=None)
        recon = sum(beta[j] * powers[j] for j in range(N))
        if np.max(np.abs(recon - N0)) > 1e-8:
            raise DegenerateChartError("logarithm does not decompose in base powers")
        self.beta = beta
        self.tr0 = np.trace(N0)

    # coordinates: x in R^{4n} packed as [Re s, Im s, Re c, Im c]

    def pack(self, s, c):
        return np.concatenate([s.real, s.imag, np.asarray(c).real, np.asarray(c).imag])

    def x0(self):
        return self.pack(self.s0, np.zeros(self.n, dtype=complex))

    def unpack(self, x):
        n = self.n
        s = x[:n] + 1j * x[n : 2 * n]
        c = x[2 * n : 3 * n] + 1j * x[3 * n :]
        return s, c

    def _nilpotent(self, s, c):
        A = build_M(self.rs, s)
        powers = [np.linalg.matrix_power(A, j) for j in range(self.N)]
        Nm = self.beta[0] * powers[0]
        for j in range(1, self.N):
            Nm = Nm + (self.beta[j] + c[j - 1]) * powers[j]
        Nm = Nm - (np.trace(Nm) - self.tr0) / self.N * np.eye(self.N)
        return A, powers, Nm

    def point(self, x):
        s, c = self.unpack(x)
        A, _, Nm = self._nilpotent(s, c)
        return make_point(self.rs, expm(Nm), A, tol=1e-6)

    def complex_frame(self, x):
        """Analytic tangent vectors along the 2n complex coordinates."""
        s, c = self.unpack(x)
        A, powers, Nm = self._nilpotent(s, c)
        dA = dM_ds(self.rs, s)
        I = np.eye(self.N, dtype=complex)
        base = make_point(self.rs, expm(Nm), A, tol=1e-6)
        frame = []
        for d in range(self.n):  # s-coordinates
            dPow = [np.zeros((self.N, self.N), dtype=complex)]
            for j in range(1, self.N):
                dPow.append(dPow[-1] @ A + powers[j - 1] @ dA[d])
            dN = sum((self.beta[j] + c[j - 1]) * dPow[j] for j in range(1, self.N))
            dN = dN - np.trace(dN) / self.N * I
            _, dB = expm_frechet(Nm, dN)
            frame.append(TangentVector(base=base, X=dB, Y=dA[d]))
        for j in range(1, self.N):  # c-coordinates
            dN = powers[j] - np.trace(powers[j]) / self.N * I
            _, dB = expm_frechet(Nm, dN)
            frame.append(TangentVector(base=base, X=dB, Y=np.zeros((self.N, self.N))))
        return base, frame

    def real_frame(self, x):
        """Tangent vectors along the 4n real coordinates (holomorphy gives i*u)."""
        base, frame = self.complex_frame(x)
        n = self.n
        out = [None] * (4 * n)
        for m, u in enumerate(frame):
            iu = TangentVector(base=base, X=1j * u.X, Y=1j * u.Y)
            if m < n:  # s coordinate m
                out[m] = u
                out[n + m] = iu
            else:  # c coordinate m - n
                out[n + m] = u
                out[2 * n + m] = iu
        return base, out


# ---------------------------------------------------------------------------
# finite differences


def _central(fun, x, k, h):
    e = np.zeros_like(x)
    e[k] = h
    return (fun(x + e) - fun(x - e)) / (2 * h)


def _richardson(fun, x, k, h):
    return (4 * _central(fun, x, k, h / 2) - _central(fun, x, k, h)) / 3


def closedness_residual(rs, p, step=1e-4, max_triples=8):
    """Max |d omega| over a fixed set of chart coordinate triples.

    The exterior derivative is assembled from partial derivatives of the
    coefficient functions f_jk(x) = omega(u_j, u_k) along chart coordinates,
    by central differences with one Richardson extrapolation step.
    """
    chart = SectionChart(rs, p)
    x0 = chart.x0()
    dimR = 4 * rs.n

    def f(jk):
        j, k = jk

        def val(x):
            base, frame = chart.real_frame(x)
            return omega_at(base, frame[j], frame[k])

        return val

    combos = list(itertools.combinations(range(dimR), 3))
    stride = max(1, len(combos) // max_triples)
    triples = combos[::stride][:max_triples]
    worst = 0.0
    for (i, j, k) in triples:
        val = (
            _richardson(f((j, k)), x0, i, step)
            - _richardson(f((i, k)), x0, j, step)
            + _richardson(f((i, j)), x0, k, step)
        )
        worst = max(worst, abs(val))
    return worst


# ---------------------------------------------------------------------------
# Gram matrices and nondegeneracy


class TwoFormGram:
    """Gram data of omega over a tangent basis at a point."""

    def __init__(self, base, basis, gram, min_singular):
        self.base = base
        self.basis = basis
        self.gram = gram
        self.min_singular = min_singular

    @property
    def antisymmetry_residual(self):
        return float(np.max(np.abs(self.gram + self.gram.T)))


def gram_matrix(p, basis):
    """Complex Gram of omega plus the realified minimum singular value.

    The realified form is Re(omega) on the doubled basis (u_j, i u_j); its
    smallest singular value certifies nondegeneracy of the complex form.
    """
    m = len(basis)
    G = np.zeros((m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            G[a, b] = omega_at(p, basis[a], basis[b])
    doubled = []
    for u in basis:
        doubled.append(u)
    for u in basis:
        doubled.append(TangentVector(base=u.base, X=1j * u.X, Y=1j * u.Y, kind=u.kind))
    GR = np.zeros((2 * m, 2 * m))
    for a in range(2 * m):
        for b in range(2 * m):
            GR[a, b] = omega_at(p, doubled[a], doubled[b]).real
    sv = np.linalg.svd(GR, compute_uv=False)
    return TwoFormGram(base=p, basis=basis, gram=G, min_singular=float(sv[-1]))


# ---------------------------------------------------------------------------
# involution pullbacks


def _map_differential(rs, chart, mapfun, x0, k, h):
    """Central-difference (with Richardson) differential of an involution.

    mapfun takes a point and returns the image point; the derivative is taken
    along chart coordinate k.
    """

    def comp(x):
        img = mapfun(chart.point(x))
        return img.B, img.A

    def dd(hh):
        e = np.zeros_like(x0)
        e[k] = hh
        Bp, Ap = comp(x0 + e)
        Bm, Am = comp(x0 - e)
        return (Bp - Bm) / (2 * hh), (Ap - Am) / (2 * hh)

    # two Richardson levels: truncation error O(h^6)
    d1 = dd(h)
    d2 = dd(h / 2)
    d4 = dd(h / 4)
    r1 = ((4 * d2[0] - d1[0]) / 3, (4 * d2[1] - d1[1]) / 3)
    r2 = ((4 * d4[0] - d2[0]) / 3, (4 * d4[1] - d2[1]) / 3)
    return (16 * r2[0] - r1[0]) / 15, (16 * r2[1] - r1[1]) / 15


def involution_pullback_residual(kind, rs, p, fd_step=1e-3):
    """Pullback defect of omega under one involution at a point.

    sigma: max |omega(ds u, ds v) - omega(u, v)|;
    theta: max |omega(dt u, dt v) + conj(omega(u, v))|, both over all pairs
    from the chart's real tangent frame.
    """
    if kind not in ("sigma", "theta"):
        raise ProjectionFailureError(f"unknown involution kind {kind!r}")
    chart = SectionChart(rs, p)
    x0 = chart.x0()
    dimR = 4 * rs.n
    if kind == "sigma":
        mapfun = lambda q: apply_sigma(rs, q, tol=np.inf)
    else:
        mapfun = lambda q: apply_theta(rs, q, tol=np.inf)
    base, frame = chart.real_frame(x0)
    img = mapfun(base)
    dframe = []
    for k in range(dimR):
        dB, dA = _map_differential(rs, chart, mapfun, x0, k, fd_step)
        dframe.append(TangentVector(base=img, X=dB, Y=dA))
    worst = 0.0
    for j in range(dimR):
        for k in range(j + 1, dimR):
            w = omega_at(base, frame[j], frame[k])
            wi = omega_at(img, dframe[j], dframe[k])
            if kind == "sigma":
                worst = max(worst, abs(wi - w))
            else:
                worst = max(worst, abs(wi + np.conj(w)))
    return worst


# ---------------------------------------------------------------------------
# integrable-system structure


def character_system(rs, s, fd_step=1e-6, rank_tol=1e-6):
    """Values and Jacobian rank of the fundamental characters at s.

    chi_i is the i-th elementary symmetric function of the eigenvalues of
    the section element, read off the characteristic polynomial (no
    eigenvalue solve).
    """
    s = np.asarray(s, dtype=complex)
    n = rs.n
    N = n + 1

    def chi(sv):
        c = char_poly(build_M(rs, sv))  # ascending
        return np.array([(-1.0) ** i * c[N - i] for i in range(1, N)])

    J = np.zeros((n, n), dtype=complex)
    for d in range(n):
        e = np.zeros(n, dtype=complex)
        e[d] = fd_step
        J[:, d] = (chi(s + e) - chi(s - e)) / (2 * fd_step)
    sv_ = np.linalg.svd(J, compute_uv=False)
    rank = int(np.sum(sv_ > rank_tol * sv_[0]))
    return {"values": chi(s), "jacobian_rank": rank}


def poisson_bracket_residual(rs, i, j, p):
    """|{chi_i, chi_j}| at a point, via chart gradients and the inverse Gram."""
    n = rs.n
    N = n + 1
    chart = SectionChart(rs, p)
    x0 = chart.x0()
    base, frame = chart.complex_frame(x0)
    m = len(frame)
    G = np.zeros((m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            G[a, b] = omega_at(base, frame[a], frame[b])
    if np.linalg.cond(G) > 1e10:
        raise DegenerateFormError("Gram matrix numerically singular")

    def chi(x):
        q = chart.point(x)
        c = char_poly(q.A)
        return np.array([(-1.0) ** k * c[N - k] for k in range(1, N)])

    h = 1e-6
    grads = np.zeros((n, m), dtype=complex)
    for a in range(m):
        e = np.zeros_like(x0)
        # real step along the a-th complex coordinate
        idx = a if a < n else n + a  # position of Re-part in the real packing
        e[idx] = h
        grads[:, a] = (chi(x0 + e) - chi(x0 - e)) / (2 * h)
    ai = np.linalg.solve(G, grads[i - 1])
    bj = np.linalg.solve(G, grads[j - 1])
    return abs(ai @ G @ bj)


# ---------------------------------------------------------------------------
# real-form checks


def _flatten_tangent(u):
    z = np.concatenate([u.X.ravel(), u.Y.ravel()])
    return np.concatenate([z.real, z.imag])


def _combine(frame, coeffs):
    X = sum(c * u.X for c, u in zip(coeffs, frame))
    Y = sum(c * u.Y for c, u in zip(coeffs, frame))
    return TangentVector(base=frame[0].base, X=X, Y=Y)


def _involution_matrix(rs, chart, mapfun, x0, frame, fd_step=1e-3):
    """Real matrix of a tangent involution in the chart's real frame."""
    F = np.array([_flatten_tangent(u) for u in frame]).T
    cols = []
    for k in range(len(frame)):
        dB, dA = _map_differential(rs, chart, mapfun, x0, k, fd_step)
        cols.append(_flatten_tangent(TangentVector(base=frame[0].base, X=dB, Y=dA)))
    Timg = np.array(cols).T
    T, res, rank, _ = np.linalg.lstsq(F, Timg, rcond=None)
    if rank < len(frame):
        raise ProjectionFailureError("chart frame is rank deficient")
    return T


def _fixed_subspace(T, cutoff=1e-3):
    m = T.shape[0]
    _, sv, Vh = np.linalg.svd(T - np.eye(m))
    dim = int(np.sum(sv < cutoff * max(1.0, sv[0])))
    return Vh[m - dim :].T if dim else np.zeros((m, 0))


def real_form_checks(rs, p, fd_step=1e-3):
    """Behaviour of omega on involution-fixed tangent subspaces at p.

    p should be a theta-fixed point (for the joint checks, a point of the
    monodromy locus).  Reports the max |Re omega| on the theta-fixed tangent
    subspace, and on the joint (sigma, theta)-fixed subspace the Gram of
    Im omega with its minimum singular value and the real dimension.
    """
    chart = SectionChart(rs, p)
    x0 = chart.x0()
    base, frame = chart.real_frame(x0)
    sig = lambda q: apply_sigma(rs, q, tol=np.inf)
    the = lambda q: apply_theta(rs, q, tol=np.inf)
    Tt = _involution_matrix(rs, chart, the, x0, frame, fd_step)
    Ts = _involution_matrix(rs, chart, sig, x0, frame, fd_step)

    Vt = _fixed_subspace(Tt)
    if Vt.shape[1] == 0:
        raise ProjectionFailureError("empty theta-fixed tangent subspace")
    vecs_t = [_combine(frame, Vt[:, a]) for a in range(Vt.shape[1])]
    re_worst = 0.0
    for a in range(len(vecs_t)):
        for b in range(a + 1, len(vecs_t)):
            re_worst = max(re_worst, abs(omega_at(base, vecs_t[a], vecs_t[b]).real))

    m = len(frame)
    stacked = np.vstack([Ts - np.eye(m), Tt - np.eye(m)])
    _, sv, Vh = np.linalg.svd(stacked)
    dim = int(np.sum(sv < 1e-3 * max(1.0, sv[0])))
    joint = Vh[len(sv) - dim :].T if dim else np.zeros((m, 0))
    vecs_j = [_combine(frame, joint[:, a]) for a in range(dim)]
    G2 = np.zeros((dim, dim))
    for a in range(dim):
        for b in range(dim):
            G2[a, b] = omega_at(base, vecs_j[a], vecs_j[b]).imag
    min_sing = float(np.linalg.svd(G2, compute_uv=False)[-1]) if dim else 0.0
    return {
        "theta_fixed_dim": len(vecs_t),
        "re_omega_residual": re_worst,
        "joint_fixed_dim": dim,
        "omega2_min_singular": min_sing,
        "omega2_antisymmetry": float(np.max(np.abs(G2 + G2.T))) if dim else 0.0,
    }
