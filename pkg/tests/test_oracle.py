from itertools import product

from d21a.arith import ALPHA, ONE, ZERO
from d21a.charseries import verma_character
from d21a.oracle import dense_matrix_rank, enum_multiplicity
from d21a.rootsys import DISTINGUISHED


def test_enum_examples():
    assert enum_multiplicity((3, 3, 3)) == (0, 8)
    assert enum_multiplicity((0, 0, 0)) == (1, 0)
    assert enum_multiplicity((1, 1, 1)) == verma_character(DISTINGUISHED, 1)[(1, 1, 1)]


def test_enum_matches_series_on_small_box():
    ch = verma_character(DISTINGUISHED, 4)
    for m in product(range(5), repeat=3):
        assert enum_multiplicity(m) == ch[m]


def test_dense_rank_examples():
    eye = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
    assert dense_matrix_rank(eye) == 3
    assert dense_matrix_rank([[ZERO] * 3 for _ in range(3)]) == 0
    assert dense_matrix_rank([[ALPHA, ONE], [ALPHA * ALPHA, ALPHA]]) == 1
    assert dense_matrix_rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert dense_matrix_rank([]) == 0
