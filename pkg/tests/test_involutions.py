import numpy as np
import pytest

from conftest import rand_palindromic_s, rand_s
from ucgl.core import char_poly, structural_matrices
from ucgl.errors import PreconditionError
from ucgl.groupoid import sample_commuting, sample_slocal_fiber
from ucgl.involutions import (
    F_sigma,
    F_theta,
    apply_sigma,
    apply_theta,
    make_point,
    point_distance,
    slocal_membership,
)
from ucgl.stokes import build_M, build_S

TOL = 1e-9


def random_point(rs, rng):
    s = rand_s(rng, rs.n)
    A = build_M(rs, s)
    B = sample_commuting(A, int(rng.integers(0, 2 ** 31)))
    return make_point(rs, B, A, tol=1e-7)


def test_F_sigma_values(roots):
    assert np.allclose(F_sigma(roots[1], np.zeros(1)), [[0, 1], [-1, 0]])
    assert np.allclose(F_sigma(roots[2], np.zeros(2)), np.eye(3))
    rng = np.random.default_rng(1)
    s = rand_s(rng, 2)
    assert np.allclose(F_sigma(roots[2], s), build_S(roots[2], 1, s).T)


def test_F_theta_values(roots):
    st2 = structural_matrices(2)
    assert np.allclose(F_theta(roots[2], np.zeros(2)), st2.C)
    assert np.array_equal(st2.C.real, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    sig = 0.4 + 0.9j
    Ft = F_theta(roots[1], np.array([sig]))
    assert np.allclose(Ft, [[1, np.conj(sig)], [0, -1]])
    assert np.allclose(Ft @ Ft, np.eye(2))


def test_apply_sigma_examples(roots):
    rs = roots[1]
    rng = np.random.default_rng(2)
    s = rand_s(rng, 1)
    A = build_M(rs, s)
    p = make_point(rs, np.eye(2), A)
    sp = apply_sigma(rs, p)
    # identity arrows stay identity arrows; at rank 1 reversal is trivial
    assert np.max(np.abs(sp.B - np.eye(2))) < TOL
    assert np.max(np.abs(sp.A - A)) < TOL
    q = make_point(rs, A, A)
    assert point_distance(apply_sigma(rs, q), q) < TOL


def test_apply_theta_examples(roots):
    rs = roots[1]
    A = build_M(rs, np.array([0.8 + 0j]))
    p = make_point(rs, np.eye(2), A)
    assert point_distance(apply_theta(rs, p), p) < TOL
    Ai = build_M(rs, np.array([1j]))
    pi = make_point(rs, np.eye(2), Ai)
    ti = apply_theta(rs, pi)
    assert np.max(np.abs(ti.A - build_M(rs, np.array([-1j])))) < TOL


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_involutions_square_to_identity_and_commute(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(200 + n)
    for _ in range(20):
        p = random_point(rs, rng)
        assert point_distance(apply_sigma(rs, apply_sigma(rs, p)), p) < TOL
        assert point_distance(apply_theta(rs, apply_theta(rs, p)), p) < TOL
        st = apply_sigma(rs, apply_theta(rs, p))
        ts = apply_theta(rs, apply_sigma(rs, p))
        assert point_distance(st, ts) < TOL


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_base_parameter_actions(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(300 + n)
    for _ in range(20):
        p = random_point(rs, rng)
        assert np.max(np.abs(apply_sigma(rs, p).s - p.s[::-1])) < 1e-10
        assert np.max(np.abs(apply_theta(rs, p).s - np.conj(p.s[::-1]))) < 1e-10


def test_slocal_membership_examples(roots):
    rs = roots[1]
    A = build_M(rs, np.array([1.0 + 0j]))
    p = make_point(rs, np.eye(2), A)
    mem = slocal_membership(rs, p)
    assert mem == {"fixed_route": True, "direct_route": True, "c_reality": True}
    pi = make_point(rs, np.eye(2), build_M(rs, np.array([1j])))
    mem = slocal_membership(rs, pi)
    assert not mem["fixed_route"] and not mem["direct_route"] and mem["c_reality"]
    q = sample_slocal_fiber(rs, A, seed=7)
    mem = slocal_membership(rs, q, tol=1e-8)
    assert mem["fixed_route"] and mem["direct_route"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_route_equivalence_on_mixed_probes(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(400 + n)
    for i in range(50):
        if i % 2 == 0:
            s = rand_palindromic_s(rng, n)
            p = sample_slocal_fiber(rs, build_M(rs, s), int(rng.integers(0, 2 ** 31)))
        else:
            p = random_point(rs, rng)
        mem = slocal_membership(rs, p, tol=1e-7)
        assert mem["fixed_route"] == mem["direct_route"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_theta_fixed_points_have_real_char_poly(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(500 + n)
    for _ in range(10):
        s = rand_palindromic_s(rng, n)
        p = sample_slocal_fiber(rs, build_M(rs, s), int(rng.integers(0, 2 ** 31)))
        c = char_poly(p.B)
        # relative: the coefficients themselves grow like 1e3 at n = 4
        assert np.max(np.abs(c.imag)) / np.max(np.abs(c)) < 1e-10


def test_make_point_validates(roots):
    rs = roots[1]
    A = build_M(rs, np.array([0.5 + 0j]))
    with pytest.raises(PreconditionError):
        make_point(rs, np.array([[1.0, 1.0], [0.0, 1.0]]), A)  # does not commute
    with pytest.raises(PreconditionError):
        make_point(rs, 2 * np.eye(2), A)  # det != 1
    with pytest.raises(PreconditionError):
        make_point(rs, np.eye(2), np.diag([2.0, 0.5]))  # off the section
