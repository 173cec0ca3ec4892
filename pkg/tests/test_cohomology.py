from fractions import Fraction

import pytest

from branecalc import (
    ModelError,
    class_vector,
    cohomology_basis,
    disk_model,
    induced_map,
    invert_on_cohomology,
    is_quasi_iso,
    morphism_eps_tilde,
    sphere_model,
)

from conftest import build_s4


def reps(M, n):
    return [repr(r) for r in cohomology_basis(M, n).representatives]


def test_odd_sphere_cohomology(s3):
    dims = [cohomology_basis(s3, n).dimension for n in range(8)]
    assert dims == [1, 0, 0, 1, 0, 0, 0, 0]
    assert reps(s3, 0) == ["1"]
    assert reps(s3, 3) == ["x"]


def test_even_sphere_cohomology(s4):
    # H(∧(x,y), dy = x²) is Q[x]/(x²): classes 1 and x only
    dims = [cohomology_basis(s4, n).dimension for n in range(15)]
    assert dims == [1, 0, 0, 0, 1] + [0] * 10


def test_product_of_spheres_cohomology(s3xs3):
    dims = [cohomology_basis(s3xs3, n).dimension for n in range(8)]
    assert dims == [1, 0, 0, 2, 0, 0, 1, 0]
    assert reps(s3xs3, 6) == ["x1*x2"]


def test_mapping_space_cohomology_is_nontrivial(s3):
    M = sphere_model(s3, 2)
    dims = [cohomology_basis(M, n).dimension for n in range(6)]
    # ∧(x, s1_x) with zero differential: free on x (deg 3) and s1_x (deg 2)
    assert dims == [1, 0, 1, 1, 1, 1]


def test_representatives_are_deterministic():
    a = build_s4()
    b = build_s4()
    for n in range(12):
        assert reps(a, n) == reps(b, n)


def test_class_vector_requires_a_cocycle(s4):
    M = disk_model(s4, 2)
    s2x = M.gen_elem("s2_x")
    with pytest.raises(ModelError):
        class_vector(M, 3, s2x)  # d(s2_x) = s1_x ≠ 0


def test_class_vector_ignores_boundaries(s4):
    M = disk_model(s4, 2)
    z = M.gen_elem("x") + M.d(M.gen_elem("s2_x") * M.gen_elem("s1_x"))
    assert class_vector(M, 4, z) == class_vector(M, 4, M.gen_elem("x"))


def test_induced_map_and_inverse_round_trip(s4):
    disk = disk_model(s4, 2)
    eps = morphism_eps_tilde(disk)
    assert is_quasi_iso(eps, 12)
    for n in range(9):
        fwd = induced_map(eps, disk, eps.target, n)
        back = invert_on_cohomology(eps, disk, eps.target, n)
        dim = cohomology_basis(eps.target, n).dimension
        if dim == 0:
            continue
        composed = [
            [
                sum(fwd[i][k] * back[k][j] for k in range(len(back)))
                for j in range(dim)
            ]
            for i in range(dim)
        ]
        assert composed == [
            [Fraction(i == j) for j in range(dim)] for i in range(dim)
        ]
