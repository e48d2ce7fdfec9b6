from fractions import Fraction

import pytest

from d21a.arith import ALPHA, ONE, Scalar
from d21a.rootsys import ODD, cartan_matrix
from d21a.superalg import (
    anti_involution,
    build_algebra,
    cartan_eigenvalues,
    chevalley_generators,
    grading_defects,
    jacobi_failures,
    root_value,
    supercommutativity_defects,
)


@pytest.fixture(scope="module")
def table():
    return build_algebra(ALPHA)


def test_dimensions(table):
    assert table.dim == 17
    assert sum(1 for p in table.parities if p == ODD) == 8


def test_structural_invariants(table):
    assert supercommutativity_defects(table) == []
    assert grading_defects(table) == []


@pytest.mark.parametrize("alpha", [ALPHA, Scalar(2), Scalar(Fraction(-1, 3))])
def test_super_jacobi(alpha):
    assert jacobi_failures(build_algebra(alpha)) == []


def test_chevalley_generators_reproduce_cartan(table):
    gens = chevalley_generators(table)
    A = cartan_matrix(ALPHA)
    unit = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i in range(3):
        assert tuple(root_value(table, unit[j], gens[f"h{i + 1}"]) for j in range(3)) == A[i]
    assert tuple(root_value(table, u, gens["h1"]) for u in unit) == (0, 1, ALPHA)


def test_bracket_examples(table):
    gens = chevalley_generators(table)
    e1 = table.element("e1")
    assert table.bracket(e1, e1) == {}
    assert table.bracket(gens["h2"], e1) == e1
    assert table.bracket(e1, table.element("f2")) == {}
    assert table.bracket(table.element("E3"), table.element("F3")) == table.element("H3")
    f1f2 = table.bracket(table.element("f1"), table.element("f2"))
    assert set(f1f2) == {table.index["F3"]}
    x = table.element("E1")
    assert table.bracket(x, x) == {}


def test_even_triples_are_sl2(table):
    for k in (1, 2, 3):
        E, F, H = (table.element(f"{c}{k}") for c in "EFH")
        assert table.bracket(H, E) == {i: 2 * c for i, c in E.items()}
        assert table.bracket(H, F) == {i: -2 * c for i, c in F.items()}


def test_even_simple_roots_take_two_on_their_coroot(table):
    even_simple = [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    for k, r in enumerate(even_simple):
        assert cartan_eigenvalues(table, r)[k] == 2


def test_anti_involution_is_an_antihomomorphism(table):
    omega = anti_involution(table)

    def om(x):
        out = {}
        for i, c in x.items():
            for k, v in omega[i].items():
                out[k] = out.get(k, Scalar(0)) + c * v
        return {k: v for k, v in out.items() if not v.is_zero()}

    for i in range(table.dim):
        for j in range(table.dim):
            x, y = {i: ONE}, {j: ONE}
            assert om(table.bracket(x, y)) == table.bracket(om(y), om(x))


def test_export_text_lines(table):
    lines = table.export_text().splitlines()
    assert all(len(line.split("\t")) == 4 for line in lines)
    assert "E3\tF3\tH3\t1" in lines
