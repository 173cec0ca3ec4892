from dataclasses import replace
from fractions import Fraction

import pytest

from branecalc import (
    ModelError,
    brane_coproduct_dual,
    brane_product_dual,
    check_associativity,
    check_commutativity,
    check_frobenius,
    coproduct_double_composite,
    dualize_to_homology,
    gorenstein_info,
)

from conftest import build_s3

F1 = Fraction(1)
L1, LW, LX, LXW = (0, 0), (1, 0), (3, 0), (4, 0)


def test_product_dual_golden_table(s3_product):
    assert s3_product.table[L1] == {(L1, LX): F1, (LX, L1): -F1}
    assert s3_product.table[LW] == {
        (L1, LXW): F1,
        (LW, LX): -F1,
        (LX, LW): -F1,
        (LXW, L1): -F1,
    }
    assert s3_product.table[LX] == {(LX, LX): -F1}
    assert s3_product.table[LXW] == {(LX, LXW): -F1, (LXW, LX): F1}


def test_coproduct_dual_golden_values(s3_coproduct):
    t = s3_coproduct.table
    assert t[(L1, L1)] == {}
    assert t[(LW, L1)] == {L1: -F1}
    assert t[(L1, LW)] == {L1: F1}
    assert t[(LW, LW)] == {LW: -F1}


def test_coproduct_dual_full_table(s3_coproduct):
    nonzero = {k: v for k, v in s3_coproduct.table.items() if v}
    assert nonzero == {
        (L1, LW): {L1: F1},
        (LW, L1): {L1: -F1},
        (LW, LW): {LW: -F1},
        (L1, LXW): {LX: -F1},
        (LW, LX): {LX: -F1},
        (LX, LW): {LX: -F1},
        (LXW, L1): {LX: F1},
        (LW, LXW): {LXW: -F1},
        (LXW, LW): {LXW: F1},
    }


def test_coproduct_requires_codimension_two(s3):
    with pytest.raises(ModelError):
        brane_coproduct_dual(s3, 3, max_degree=8)


def test_associativity_check_passes(s3_product):
    assert check_associativity(s3_product, 8).ok


def test_commutativity_checks_pass(s3_product, s3_coproduct):
    assert check_commutativity(s3_product).ok
    assert check_commutativity(s3_coproduct).ok


def test_frobenius_check_passes(s3_product, s3_coproduct):
    assert check_frobenius(s3_product, s3_coproduct, max_degree=8).ok


def _flip_one_product_sign(prod):
    table = {c: dict(row) for c, row in prod.table.items()}
    table[LW][(LW, LX)] = -table[LW][(LW, LX)]
    return replace(prod, table=table)


def _flip_one_coproduct_sign(cop):
    table = {k: dict(row) for k, row in cop.table.items()}
    table[(LW, LW)][LW] = -table[(LW, LW)][LW]
    return replace(cop, table=table)


def test_associativity_check_rejects_perturbed_table(s3_product):
    assert not check_associativity(_flip_one_product_sign(s3_product), 8).ok


def test_commutativity_check_rejects_perturbed_tables(s3_product, s3_coproduct):
    assert not check_commutativity(_flip_one_product_sign(s3_product)).ok
    table = {k: dict(row) for k, row in s3_coproduct.table.items()}
    table[(LW, L1)][L1] = -table[(LW, L1)][L1]  # breaks the (a,b) ↔ (b,a) law
    assert not check_commutativity(replace(s3_coproduct, table=table)).ok


def test_frobenius_check_rejects_perturbed_table(s3_product, s3_coproduct):
    bad = _flip_one_coproduct_sign(s3_coproduct)
    assert not check_frobenius(s3_product, bad, max_degree=8).ok


def test_homology_product_is_exterior_on_two_generators(s3_product):
    hop = dualize_to_homology(s3_product)
    t = hop.table
    # unit σ(x)∨; generators σ(1)∨ (shifted degree −3) and σ(x·s2x)∨ (degree 1)
    assert t[(LX, LX)] == {LX: F1}
    assert t[(LX, L1)] == {L1: F1} and t[(L1, LX)] == {L1: F1}
    assert t[(LX, LXW)] == {LXW: F1} and t[(LXW, LX)] == {LXW: F1}
    assert t.get((L1, L1), {}) == {}
    assert t.get((LXW, LXW), {}) == {}
    assert t[(L1, LXW)] == {LW: -F1}
    assert t[(LXW, L1)] == {LW: F1}


def test_homology_coproduct_table(s3_coproduct):
    hop = dualize_to_homology(s3_coproduct)
    assert hop.table == {
        L1: {(L1, LW): F1, (LW, L1): F1},
        LW: {(LW, LW): F1},
        LX: {(L1, LXW): F1, (LW, LX): F1, (LX, LW): F1, (LXW, L1): -F1},
        LXW: {(LW, LXW): F1, (LXW, LW): F1},
    }


def test_homology_coproduct_on_top_class_sign_is_positive(s3_coproduct):
    hop = dualize_to_homology(s3_coproduct)
    assert hop.table[LW] == {(LW, LW): F1}


def _coassociative(table):
    left, right = {}, {}
    for c, row in table.items():
        for (a, b), co in row.items():
            for (a1, a2), co2 in table.get(a, {}).items():
                k = (c, (a1, a2, b))
                left[k] = left.get(k, Fraction(0)) + co * co2
            for (b1, b2), co2 in table.get(b, {}).items():
                k = (c, (a, b1, b2))
                right[k] = right.get(k, Fraction(0)) + co * co2
    return {k: v for k, v in left.items() if v} == {
        k: v for k, v in right.items() if v
    }


def test_homology_coproduct_is_coassociative(s3_coproduct):
    hop = dualize_to_homology(s3_coproduct)
    assert _coassociative(hop.table)
    # negating the top-class entry breaks coassociativity
    alt = {c: dict(row) for c, row in hop.table.items()}
    alt[LW][(LW, LW)] = -alt[LW][(LW, LW)]
    assert not _coassociative(alt)


def test_coproduct_double_composite_is_nonzero(s3_coproduct):
    composite = coproduct_double_composite(s3_coproduct)
    assert composite
    assert len(composite) == 16


def test_even_sphere_coproduct_vanishes(s4):
    cop = brane_coproduct_dual(s4, 2, max_degree=10)
    assert all(not row for row in cop.table.values())


def test_tables_are_deterministic_across_rebuilds():
    a = brane_coproduct_dual(build_s3(), 2, max_degree=8)
    b = brane_coproduct_dual(build_s3(), 2, max_degree=8)
    assert a.table == b.table


def test_explicit_info_overrides_are_threaded(s3):
    info = gorenstein_info(s3, 2, m=5, m_bar=1)
    prod = brane_product_dual(s3, 2, info, max_degree=8)
    assert prod.info.m == 5
    hop = dualize_to_homology(prod, info)
    assert hop.info.m_bar == 1
