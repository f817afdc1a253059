import random

import pytest

from prodmat import Matrix, one_product
from prodmat.matroids import Matroid, uniform_bases
from prodmat.oracles import (
    GuardExceeded,
    base_exchange_validator,
    bf_one_product,
    bf_submodular_min,
    bf_two_product,
    cut_oracle,
)

from helpers import random_matrix

PAPER_4x6 = one_product(Matrix([[1, 0], [2, 3]]), Matrix([[1, 0, 0], [0, 1, 1]]))


def test_bf_one_product_paper():
    rep = bf_one_product(PAPER_4x6)
    assert rep.verdict
    assert (1,) not in rep.witnesses  # {1} alone is not a zero set here
    # witnesses avoid row 0, so the {0,1} block appears as its complement {2,3}
    assert (2, 3) in rep.witnesses


def test_bf_one_product_negative():
    assert not bf_one_product(Matrix([[0, 1, 1], [0, 1, 0]])).verdict
    assert not bf_one_product(Matrix([[1, 2, 3]])).verdict


def test_bf_one_product_guard():
    with pytest.raises(GuardExceeded):
        bf_one_product(random_matrix(random.Random(0), 17, 2))


def test_bf_submodular_min():
    X, v = bf_submodular_min(cut_oracle(2, [(0, 1, 1)]))
    assert X == (0,) and v == 1.0
    # 4-cycle: minimum cut has value 2 (enumerate the 7 bipartitions)
    X, v = bf_submodular_min(cut_oracle(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]))
    assert v == 2.0


def test_bf_two_product_tiny():
    F = Matrix([[0, 1], [1, 0]])
    from prodmat import two_product

    T = two_product(F, 0, F, 0)
    rep = bf_two_product(T)
    assert rep.verdict
    assert any(r == 2 for r, _ in rep.witnesses)  # appended special row is row 2


def test_bf_two_product_no_binary_row():
    assert not bf_two_product(Matrix([[2, 3], [4, 5], [6, 7]])).verdict


def test_bf_two_product_guard():
    with pytest.raises(GuardExceeded):
        bf_two_product(random_matrix(random.Random(0), 13, 2))


def test_base_exchange_validator():
    assert base_exchange_validator(uniform_bases(5, 2))
    bad = Matroid([1, 2, 3, 4], [frozenset({1, 2}), frozenset({3, 4})])
    assert not base_exchange_validator(bad)


def test_oracles_match_recognizers():
    from prodmat import recognize_one_product, recognize_two_product

    rng = random.Random(51)
    for _ in range(30):
        S = random_matrix(rng, rng.randint(2, 6), rng.randint(1, 6), 0, 2)
        assert (recognize_one_product(S) is not None) == bf_one_product(S).verdict
    for _ in range(20):
        S = random_matrix(rng, rng.randint(3, 6), rng.randint(2, 6), 0, 1)
        assert (recognize_two_product(S) is not None) == bf_two_product(S).verdict
