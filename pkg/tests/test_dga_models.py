import pytest

from branecalc import (
    ModelError,
    base_change,
    base_model,
    compose,
    disk_model,
    is_minimal,
    is_quasi_iso,
    make_model,
    morphism_eps_tilde,
    morphism_phi,
    path_model,
    quotient,
    relative_tensor,
    sphere_model,
    tensor_model,
)

from conftest import build_s3, build_s3xs3, build_s4

CORPUS = [build_s3, build_s4, build_s3xs3]


@pytest.mark.parametrize("build", CORPUS)
@pytest.mark.parametrize("k", [2, 3])
def test_sphere_model_square_zero(build, k):
    sphere_model(build(), k).check()


# connectivity: disk/sphere at level k needs all generator degrees ≥ k+1
DISK_CASES = [(b, 2) for b in CORPUS] + [(build_s4, 3)]


@pytest.mark.parametrize("build,k", DISK_CASES)
def test_disk_model_square_zero(build, k):
    disk_model(build(), k).check()


@pytest.mark.parametrize("build", CORPUS)
def test_path_model_square_zero(build):
    path_model(build()).check()


def test_corpus_is_minimal():
    for build in CORPUS:
        assert is_minimal(build())


@pytest.mark.parametrize("k", [2, 3, 4])
def test_sphere_fiber_degrees_and_provenance(s4, k):
    M = sphere_model(s4, k)
    for gid in M.fiber_gids:
        g = M.algebra.gen(gid)
        assert g.prov.shift == k - 1
        origin = M.algebra.gen(g.prov.origin)
        assert g.degree == origin.degree - (k - 1)
        assert g.name == f"s{k - 1}_{g.prov.origin}"


def test_disk_differential_links_the_two_suspensions(s3):
    M = disk_model(s3, 2)
    # d(s2_x) = s1_x exactly, since dx = 0
    assert M.d(M.gen_elem("s2_x")) == M.gen_elem("s1_x")


def test_disk_differential_correction_term(s4):
    M = disk_model(s4, 2)
    # d(s2_y) = s1_y + (-1)^2 s2(x^2) = s1_y + 2 x·s2_x
    want = M.gen_elem("s1_y") + 2 * M.gen_elem("x") * M.gen_elem("s2_x")
    assert M.d(M.gen_elem("s2_y")) == want


def test_path_model_suspension_differential(s3):
    P = path_model(s3)
    assert P.d(P.gen_elem("s1_x")) == P.gen_elem("x@R") - P.gen_elem("x@L")


def test_path_model_twisting_series(s4):
    P = path_model(s4)
    want = (
        P.gen_elem("y@R")
        - P.gen_elem("y@L")
        - P.gen_elem("x@L") * P.gen_elem("s1_x")
        - P.gen_elem("x@R") * P.gen_elem("s1_x")
    )
    assert P.d(P.gen_elem("s1_y")) == want


@pytest.mark.parametrize("build,k", DISK_CASES)
def test_base_change_of_disk_is_next_sphere(build, k):
    V = build()
    disk = disk_model(V, k)
    phi = morphism_phi(sphere_model(V, k))
    collapsed, _ = base_change(disk, phi)
    assert collapsed.signature() == sphere_model(V, k + 1).signature()


@pytest.mark.parametrize("build", CORPUS)
def test_eps_tilde_is_quasi_iso(build):
    f = morphism_eps_tilde(disk_model(build(), 2))
    assert is_quasi_iso(f, 14)


def test_phi_and_eps_tilde_are_chain_maps(s4):
    morphism_phi(sphere_model(s4, 2)).check_chain()
    morphism_eps_tilde(disk_model(s4, 3)).check_chain()


def test_relative_tensor_glues_over_the_base(s3):
    disk = disk_model(s3, 2)
    glued, inc_l, inc_r = relative_tensor(disk, disk)
    glued.check()
    names = {g.name for g in glued.algebra.generators}
    assert names == {"x", "s1_x", "s2_x@L", "s2_x@R"}
    # both inclusions restrict to the identity on the shared base
    assert inc_l(disk.gen_elem("x")) == glued.gen_elem("x")
    assert inc_r(disk.gen_elem("s1_x")) == glued.gen_elem("s1_x")


def test_relative_tensor_rejects_mismatched_bases(s3, s4):
    with pytest.raises(ModelError):
        relative_tensor(disk_model(s3, 2), disk_model(s4, 2))


def test_tensor_model_square_zero(s3, s4):
    T, _, _ = tensor_model(sphere_model(s3, 2), sphere_model(s4, 2))
    T.check()


def test_quotient_requires_d_stable_kernel(s3, s4):
    P = path_model(s3)
    with pytest.raises(ModelError):
        quotient(P, ["s1_x"])  # d(s1_x) = x@R - x@L escapes the ideal
    M = sphere_model(s4, 2)
    Q, proj = quotient(M, ["x", "s1_x"])
    Q.check()
    proj.check_chain()


def test_transpositions_are_involutions(s4):
    from branecalc.dga_models import loop_transposition, square_transposition

    square, _, _ = tensor_model(s4, s4)
    path = path_model(s4)
    for t in (square_transposition(square), loop_transposition(path)):
        round_trip = compose(t, t)
        for g in t.source.algebra.generators:
            e = t.source.algebra.generator_element(g.gid)
            assert round_trip(e) == e


def test_path_transposition_negates_suspensions(s3):
    from branecalc.dga_models import loop_transposition

    P = path_model(s3)
    t = loop_transposition(P)
    assert t(P.gen_elem("x@L")) == P.gen_elem("x@R")
    assert t(P.gen_elem("s1_x")) == -P.gen_elem("s1_x")
    t.check_chain()


def test_base_model_extracts_the_base(s4):
    M = sphere_model(s4, 2)
    B, _ = base_model(M)
    assert B.signature() == s4.signature()


def test_non_square_zero_differential_is_reported():
    from fractions import Fraction

    M = make_model(
        [("a", 1), ("b", 2)],
        {"a": {((1, 1),): Fraction(1)}, "b": {((0, 1), (1, 1)): Fraction(1)}},
    )
    assert M.d_squared_witnesses() == ["a", "b"]
    with pytest.raises(ModelError):
        M.check()
