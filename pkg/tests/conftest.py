import pytest

from zerosum.groups import mk_cyclic, mk_metacyclic


@pytest.fixture
def d6():
    return mk_metacyclic(3, 2)


@pytest.fixture
def g30():
    """C_15 x|_11 C_2: the order-30 family member with n1=3, n2=5."""
    return mk_metacyclic(15, 11)


@pytest.fixture
def g42():
    """C_21 x|_8 C_2: the order-42 family member with n1=3, n2=7."""
    return mk_metacyclic(21, 8)


@pytest.fixture
def c15():
    return mk_cyclic(15)
