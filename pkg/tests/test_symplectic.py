import numpy as np
import pytest

from conftest import rand_palindromic_s, rand_s
from ucgl.core import char_poly, structural_matrices
from ucgl.errors import InvalidTangentKindError
from ucgl.groupoid import (
    TangentVector,
    centralizer_basis,
    fiber_vector,
    horizontal_vector_at_unit,
    make_pair,
    sample_commuting,
    sample_slocal_fiber,
    tangent_space,
    unit,
)
from ucgl.involutions import make_point
from ucgl.stokes import build_M
from ucgl.symplectic import (
    SectionChart,
    character_system,
    closedness_residual,
    composable_tangent_basis,
    gram_matrix,
    involution_pullback_residual,
    multiplicativity_residual,
    omega_at,
    poisson_bracket_residual,
    real_form_checks,
    type_20_residual,
    unit_block_values,
)


def random_point(rs, rng):
    s = rand_s(rng, rs.n)
    A = build_M(rs, s)
    return make_point(rs, sample_commuting(A, int(rng.integers(0, 2 ** 31))), A, tol=1e-7)


def random_unit_tangents(rs, rng, u0):
    n = rs.n
    _, traceless = centralizer_basis(u0.A)
    cf = rand_s(rng, n)
    xi = sum(cf[j] * traceless[j] for j in range(n))
    uF = fiber_vector(u0, xi)
    uH = horizontal_vector_at_unit(rs, u0, rand_s(rng, n))
    return uF, uH


def test_unit_block_hand_values(roots):
    rs = roots[1]
    st1 = structural_matrices(1)
    A = st1.PiHat  # the section element at s = 0
    u0 = unit(rs, A)
    E01 = np.zeros((2, 2), dtype=complex)
    E01[0, 1] = 1.0
    uF = fiber_vector(u0, st1.PiHat)
    vH = TangentVector(base=u0, X=np.zeros((2, 2)), Y=A @ E01, kind="horizontal")
    assert unit_block_values(A, uF, vH) == pytest.approx(-1.0)
    assert unit_block_values(A, vH, uF) == pytest.approx(1.0)
    assert unit_block_values(A, uF, uF) == 0.0
    assert unit_block_values(A, vH, vH) == 0.0
    # the direct evaluation must reproduce the closed forms
    assert abs(omega_at(u0, uF, vH) - (-1.0)) < 1e-12
    assert abs(omega_at(u0, uF, uF)) == 0.0


def test_unit_block_oracle_random(roots):
    for n in (1, 2, 3):
        rs = roots[n]
        rng = np.random.default_rng(1000 + n)
        for _ in range(50):
            u0 = unit(rs, build_M(rs, rand_s(rng, n)))
            uF, uH = random_unit_tangents(rs, rng, u0)
            vF, vH = random_unit_tangents(rs, rng, u0)
            for a, b in ((uF, vF), (uH, vH), (uF, vH), (uH, vF)):
                assert abs(omega_at(u0, a, b) - unit_block_values(u0.A, a, b)) < 1e-11
            assert abs(omega_at(u0, uH, vH)) < 1e-12  # pullback by the unit map vanishes


def test_unit_block_requires_tags(roots):
    rs = roots[1]
    u0 = unit(rs, build_M(rs, np.array([0.3 + 0j])))
    v = TangentVector(base=u0, X=np.eye(2), Y=np.zeros((2, 2)), kind="general")
    with pytest.raises(InvalidTangentKindError):
        unit_block_values(u0.A, v, v)


def test_omega_antisymmetry(roots):
    rs = roots[2]
    rng = np.random.default_rng(5)
    p = random_point(rs, rng)
    vecs = tangent_space(rs, p)
    for u in vecs:
        assert omega_at(p, u, u) == 0
    for u in vecs:
        for v in vecs:
            assert abs(omega_at(p, u, v) + omega_at(p, v, u)) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3])
def test_multiplicativity(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(1100 + n)
    worst = 0.0
    for _ in range(10):
        A = build_M(rs, rand_s(rng, n))
        p = make_point(rs, sample_commuting(A, int(rng.integers(0, 2 ** 31))), A, tol=1e-7)
        q = make_point(rs, sample_commuting(A, int(rng.integers(0, 2 ** 31))), A, tol=1e-7)
        pair = make_pair(p, q)
        basis = composable_tangent_basis(rs, pair)
        assert len(basis) == 3 * n
        for upair in basis:
            for vpair in basis:
                worst = max(worst, multiplicativity_residual(rs, pair, upair, vpair))
    assert worst < 1e-8


def test_multiplicativity_with_unit_slot(roots):
    rs = roots[2]
    rng = np.random.default_rng(7)
    A = build_M(rs, rand_s(rng, 2))
    u0 = unit(rs, A)
    pair = make_pair(u0, u0)
    basis = composable_tangent_basis(rs, pair)
    for upair in basis:
        for vpair in basis:
            assert multiplicativity_residual(rs, pair, upair, vpair) < 1e-12


@pytest.mark.parametrize("n,tol", [(1, 1e-5), (2, 1e-4), (3, 1e-3)])
def test_closedness(roots, n, tol):
    rs = roots[n]
    rng = np.random.default_rng(1200 + n)
    for _ in range(3):
        p = random_point(rs, rng)
        assert closedness_residual(rs, p, step=1e-4) < tol


def test_gram_unit_example(roots):
    rs = roots[1]
    A = build_M(rs, np.zeros(1))
    u0 = unit(rs, A)
    st1 = structural_matrices(1)
    uF = fiber_vector(u0, st1.PiHat)
    uH = horizontal_vector_at_unit(rs, u0, np.array([1.0 + 0j]))
    g = gram_matrix(u0, [uF, uH])
    assert g.antisymmetry_residual < 1e-12
    assert abs(g.gram[0, 0]) == 0 and abs(g.gram[1, 1]) == 0
    assert abs(abs(g.gram[0, 1]) - 1.0) < 1e-12
    assert g.min_singular > 1e-6


@pytest.mark.parametrize("n", [1, 2, 3])
def test_nondegeneracy(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(1300 + n)
    for i in range(6):
        # keep eigenvalues well separated
        while True:
            s = rand_s(rng, n)
            lam = np.roots(char_poly(build_M(rs, s))[::-1])
            gaps = [abs(lam[a] - lam[b]) for a in range(len(lam)) for b in range(a + 1, len(lam))]
            if min(gaps) > 1e-2:
                break
        A = build_M(rs, s)
        if i % 2 == 0:
            p = unit(rs, A)
        else:
            p = make_point(rs, sample_commuting(A, int(rng.integers(0, 2 ** 31))), A, tol=1e-7)
        basis = tangent_space(rs, p)
        assert gram_matrix(p, basis).min_singular > 1e-6


@pytest.mark.parametrize("n", [1, 2, 3])
def test_involution_pullbacks(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(1400 + n)
    u0 = unit(rs, build_M(rs, rand_s(rng, n)))
    assert involution_pullback_residual("sigma", rs, u0) < 1e-9
    assert involution_pullback_residual("theta", rs, u0) < 1e-9
    p = random_point(rs, rng)
    assert involution_pullback_residual("sigma", rs, p) < 1e-5
    assert involution_pullback_residual("theta", rs, p) < 1e-5


def test_character_system(roots):
    rs = roots[1]
    sig = 0.9
    cs = character_system(rs, np.array([sig + 0j]))
    assert cs["values"][0] == pytest.approx(-sig)  # the trace of the section element
    assert cs["jacobian_rank"] == 1
    cs2 = character_system(roots[2], np.zeros(2))
    assert np.allclose(cs2["values"], 0)
    assert cs2["jacobian_rank"] == 2


@pytest.mark.parametrize("n", [2, 3])
def test_poisson_brackets(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(1500 + n)
    p = random_point(rs, rng)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            r = poisson_bracket_residual(rs, i, j, p)
            assert r < 1e-5


def test_fiber_isotropy_and_type(roots):
    for n in (1, 2, 3):
        rs = roots[n]
        rng = np.random.default_rng(1600 + n)
        p = random_point(rs, rng)
        _, traceless = centralizer_basis(p.A)
        cf, ce = rand_s(rng, n), rand_s(rng, n)
        uF = fiber_vector(p, sum(cf[k] * traceless[k] for k in range(n)))
        vF = fiber_vector(p, sum(ce[k] * traceless[k] for k in range(n)))
        assert abs(omega_at(p, uF, vF)) < 1e-9
        assert type_20_residual(p, uF, vF) < 1e-10


def test_chart_hits_anchor(roots):
    rs = roots[2]
    rng = np.random.default_rng(17)
    p = random_point(rs, rng)
    chart = SectionChart(rs, p)
    q = chart.point(chart.x0())
    assert np.max(np.abs(q.B - p.B)) < 1e-10
    assert np.max(np.abs(q.A - p.A)) < 1e-12


def test_chart_frame_matches_finite_differences(roots):
    rs = roots[2]
    rng = np.random.default_rng(18)
    p = random_point(rs, rng)
    chart = SectionChart(rs, p)
    x0 = chart.x0()
    _, frame = chart.real_frame(x0)
    h = 1e-6
    for k in range(len(x0)):
        e = np.zeros_like(x0)
        e[k] = h
        Bp, Ap = chart.point(x0 + e).B, chart.point(x0 + e).A
        Bm, Am = chart.point(x0 - e).B, chart.point(x0 - e).A
        assert np.max(np.abs((Bp - Bm) / (2 * h) - frame[k].X)) < 1e-6
        assert np.max(np.abs((Ap - Am) / (2 * h) - frame[k].Y)) < 1e-6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_real_form_checks(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(1700 + n)
    s = rand_palindromic_s(rng, n)
    p = sample_slocal_fiber(rs, build_M(rs, s), int(rng.integers(0, 2 ** 31)))
    rep = real_form_checks(rs, p)
    assert rep["re_omega_residual"] < 1e-8
    assert rep["joint_fixed_dim"] % 2 == 0
    assert rep["joint_fixed_dim"] == 2 * ((n + 1) // 2)
    assert rep["omega2_min_singular"] > 1e-7
    assert rep["omega2_antisymmetry"] < 1e-12
    # identity-arrow points work too
    u0 = unit(rs, build_M(rs, rand_palindromic_s(rng, n)))
    rep0 = real_form_checks(rs, u0)
    assert rep0["re_omega_residual"] < 1e-8
