from fractions import Fraction

import pytest

from branecalc import (
    brane_coproduct_dual,
    brane_product_dual,
    make_model,
)


def build_s3():
    return make_model([("x", 3)], name="S3")


def build_s4():
    return make_model(
        [("x", 4), ("y", 7)], {"y": {((0, 2),): Fraction(1)}}, name="S4"
    )


def build_s3xs3():
    return make_model([("x1", 3), ("x2", 3)], name="S3xS3")


@pytest.fixture(scope="session")
def s3():
    return build_s3()


@pytest.fixture(scope="session")
def s4():
    return build_s4()


@pytest.fixture(scope="session")
def s3xs3():
    return build_s3xs3()


@pytest.fixture(scope="session")
def s3_product(s3):
    # deep enough that associativity can be checked through degree 8
    return brane_product_dual(s3, 2, max_degree=11)


@pytest.fixture(scope="session")
def s3_coproduct(s3):
    return brane_coproduct_dual(s3, 2, max_degree=12)
