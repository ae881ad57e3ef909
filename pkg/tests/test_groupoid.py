import numpy as np
import pytest

from conftest import rand_palindromic_s, rand_s
from ucgl.core import determinant, structural_matrices
from ucgl.errors import (
    DegenerateSampleError,
    NotComposableError,
    NotRegularError,
    PreconditionError,
)
from ucgl.groupoid import (
    centralizer_basis,
    commuting_combination,
    fiber_vector,
    groupoid_compose,
    groupoid_inverse,
    horizontal_vector_at_unit,
    make_pair,
    sample_commuting,
    sample_slocal_fiber,
    source,
    tangent_space,
    target,
    unit,
    z_membership,
)
from ucgl.involutions import make_point, point_distance, slocal_membership
from ucgl.stokes import build_M, dM_ds


def random_point(rs, rng):
    s = rand_s(rng, rs.n)
    A = build_M(rs, s)
    return make_point(rs, sample_commuting(A, int(rng.integers(0, 2 ** 31))), A, tol=1e-7)


def test_z_membership_examples(roots):
    rs = roots[2]
    rng = np.random.default_rng(1)
    s = rand_s(rng, 2)
    A = build_M(rs, s)
    assert z_membership(rs, np.eye(3), A)
    assert z_membership(rs, A, A)
    E01 = np.zeros((3, 3))
    E01[0, 1] = 1
    assert not z_membership(rs, np.eye(3) + E01, A)


def test_structure_maps_and_axioms(roots):
    for n in (1, 2, 3, 4):
        rs = roots[n]
        rng = np.random.default_rng(600 + n)
        for _ in range(20):
            s = rand_s(rng, n)
            A = build_M(rs, s)
            ps = [
                make_point(rs, sample_commuting(A, int(rng.integers(0, 2 ** 31))), A, tol=1e-7)
                for _ in range(3)
            ]
            p1, p2, p3 = ps
            assert np.array_equal(source(p1), target(p1))
            lhs = groupoid_compose(rs, make_pair(groupoid_compose(rs, make_pair(p1, p2)), p3))
            rhs = groupoid_compose(rs, make_pair(p1, groupoid_compose(rs, make_pair(p2, p3))))
            assert point_distance(lhs, rhs) < 1e-10
            u = unit(rs, A)
            assert point_distance(groupoid_compose(rs, make_pair(p1, u)), p1) < 1e-10
            assert (
                point_distance(groupoid_compose(rs, make_pair(p1, groupoid_inverse(rs, p1))), u)
                < 1e-10
            )


def test_composition_example_rank1(roots):
    rs = roots[1]
    A = build_M(rs, np.array([1.0 + 0j]))
    p = make_point(rs, A, A)
    pp = groupoid_compose(rs, make_pair(p, p))
    assert np.allclose(pp.B, [[-1, -1], [1, 0]])


def test_noncomposable_rejected(roots):
    rs = roots[1]
    p = make_point(rs, np.eye(2), build_M(rs, np.array([1.0 + 0j])))
    q = make_point(rs, np.eye(2), build_M(rs, np.array([2.0 + 0j])))
    with pytest.raises(NotComposableError):
        make_pair(p, q)


def test_centralizer_basis(roots):
    st1 = structural_matrices(1)
    powers, traceless = centralizer_basis(st1.PiHat)
    assert np.allclose(powers[0], np.eye(2)) and np.allclose(powers[1], st1.PiHat)
    assert len(traceless) == 1 and np.allclose(traceless[0], st1.PiHat)
    with pytest.raises(NotRegularError):
        centralizer_basis(np.eye(3))
    rs = roots[2]
    rng = np.random.default_rng(3)
    A = build_M(rs, rand_s(rng, 2))
    powers, traceless = centralizer_basis(A)
    for M in powers + traceless:
        assert np.max(np.abs(M @ A - A @ M)) < 1e-12
    G = np.array([p.ravel() for p in powers])
    assert np.linalg.matrix_rank(G, tol=1e-8) == 3


def test_commuting_combination_example():
    st1 = structural_matrices(1)
    B = commuting_combination(st1.PiHat, np.array([1.0, 1.0]))
    assert np.max(np.abs(B - (np.eye(2) + st1.PiHat) / np.sqrt(2))) < 1e-14


def test_sample_commuting_properties(roots):
    for n in (1, 2, 3, 4):
        rs = roots[n]
        rng = np.random.default_rng(700 + n)
        s = rand_s(rng, n)
        A = build_M(rs, s)
        B1 = sample_commuting(A, seed=123)
        B2 = sample_commuting(A, seed=123)
        assert np.array_equal(B1, B2)
        assert np.max(np.abs(B1 @ A - A @ B1)) < 1e-11
        assert abs(determinant(B1) - 1) < 1e-10
        assert z_membership(rs, B1, A, tol=1e-8)


def test_sample_commuting_needs_regular():
    with pytest.raises(NotRegularError):
        sample_commuting(np.eye(2), seed=0)


def test_slocal_fiber_sampling(roots):
    for n in (1, 2, 3, 4):
        rs = roots[n]
        rng = np.random.default_rng(800 + n)
        s = rand_palindromic_s(rng, n)
        A = build_M(rs, s)
        p = sample_slocal_fiber(rs, A, seed=11)
        mem = slocal_membership(rs, p, tol=1e-8)
        assert mem["fixed_route"] and mem["direct_route"]
    with pytest.raises(PreconditionError):
        sample_slocal_fiber(roots[1], build_M(roots[1], np.array([1j])), seed=0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tangent_space_dimension(roots, n):
    rs = roots[n]
    rng = np.random.default_rng(900 + n)
    for _ in range(10):
        p = random_point(rs, rng)
        vecs = tangent_space(rs, p)
        assert len(vecs) == 2 * n
        for v in vecs:
            if v.kind == "fiber":
                assert np.max(np.abs(v.Y)) < 1e-8


def test_tangent_space_unit_example(roots):
    rs = roots[1]
    st1 = structural_matrices(1)
    A = build_M(rs, np.zeros(1))
    p = unit(rs, A)
    dM = dM_ds(rs, p.s)
    assert np.allclose(dM[0], [[0, 0], [0, -1]])
    vecs = tangent_space(rs, p)
    assert len(vecs) == 2
    # the explicit fiber and horizontal directions satisfy the constraints
    uF = fiber_vector(p, st1.PiHat)
    uH = horizontal_vector_at_unit(rs, p, np.array([1.0 + 0j]))
    for u in (uF, uH):
        res = np.max(np.abs(u.X @ A - A @ u.X + p.B @ u.Y - u.Y @ p.B))
        assert res < 1e-12
        assert abs(np.trace(np.linalg.inv(p.B) @ u.X)) < 1e-12
    # and they lie in the span of the computed kernel basis
    K = np.array([np.concatenate([v.X.ravel(), v.Y.ravel()]) for v in vecs]).T
    for u in (uF, uH):
        w = np.concatenate([u.X.ravel(), u.Y.ravel()])
        coef, *_ = np.linalg.lstsq(K, w, rcond=None)
        assert np.max(np.abs(K @ coef - w)) < 1e-9
