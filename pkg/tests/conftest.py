import pytest

from braidkernel import (
    presentation, pure_braid_rp2, quaternion_presentation, quotient,
    todd_coxeter,
)


@pytest.fixture(scope="session")
def q8():
    return quaternion_presentation()


@pytest.fixture(scope="session")
def q8_table(q8):
    return todd_coxeter(q8)


@pytest.fixture(scope="session")
def rp2_n2():
    return pure_braid_rp2(2)


@pytest.fixture(scope="session")
def rp2_n2_table(rp2_n2):
    return todd_coxeter(rp2_n2)


@pytest.fixture(scope="session")
def s3_presentation():
    return presentation("S3", ["a", "b"], ["a^2", "b^2", "a b a b a b"])


@pytest.fixture(scope="session")
def z5_presentation():
    return presentation("Z5", ["a"], ["a^5"])


@pytest.fixture(scope="session")
def rp2_n3_mod4_table():
    """pure_braid_rp2(3) modulo fourth powers of the rho generators;
    completes at 128 cosets."""
    p3 = pure_braid_rp2(3)
    extra = [p3.word(f"rho{k}^4") for k in (1, 2, 3)]
    return todd_coxeter(quotient(p3, extra))
