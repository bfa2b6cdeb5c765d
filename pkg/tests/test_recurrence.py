import pytest
from hypothesis import given, settings, strategies as st

from fpmom.laurent import LaurentPolynomial
from fpmom.recurrence import (
    CoefficientTable,
    RadialDecomposition,
    amalgamated_moment,
    coefficient_table,
    decomposition_of,
    iter_decompositions,
    scalar_moment,
)


def test_initial():
    d = RadialDecomposition.initial(2)
    assert d.power == 1
    assert dict(d.coeffs) == {1: 1}
    assert d.mass() == 4
    assert RadialDecomposition.initial(3).mass() == 6


def test_single_steps():
    d = RadialDecomposition.initial(2)
    d2 = d.step()
    assert dict(d2.coeffs) == {2: 1, 0: 4}
    d3 = d2.step()
    assert dict(d3.coeffs) == {3: 1, 1: 7}
    d4 = d3.step()
    assert dict(d4.coeffs) == {4: 1, 2: 10, 0: 28}


def test_decompositions_rank_two():
    assert dict(decomposition_of(5, 2).coeffs) == {5: 1, 3: 13, 1: 58}
    assert dict(decomposition_of(6, 2).coeffs) == {6: 1, 4: 16, 2: 97, 0: 232}
    assert dict(decomposition_of(7, 2).coeffs) == {7: 1, 5: 19, 3: 145, 1: 523}
    assert dict(decomposition_of(8, 2).coeffs) == {
        8: 1,
        6: 22,
        4: 202,
        2: 958,
        0: 2092,
    }


def test_decompositions_other_ranks():
    assert dict(decomposition_of(2, 3).coeffs) == {2: 1, 0: 6}
    assert dict(decomposition_of(3, 3).coeffs) == {3: 1, 1: 11}
    assert dict(decomposition_of(4, 3).coeffs) == {4: 1, 2: 16, 0: 66}
    assert dict(decomposition_of(4, 1).coeffs) == {4: 1, 2: 4, 0: 6}


def test_iter_decompositions():
    powers = [d.power for d in iter_decompositions(2, 6)]
    assert powers == [1, 2, 3, 4, 5, 6]
    last = list(iter_decompositions(2, 8))[-1]
    assert last == decomposition_of(8, 2)
    with pytest.raises(ValueError):
        list(iter_decompositions(2, 0))


def test_validation():
    with pytest.raises(ValueError):
        RadialDecomposition(2, 2, {2: 1, 0: -4})  # negative coefficient
    with pytest.raises(ValueError):
        RadialDecomposition(2, 2, {2: 1, 1: 3})  # parity violation
    with pytest.raises(ValueError):
        RadialDecomposition(2, 2, {0: 4})  # missing leading class
    with pytest.raises(ValueError):
        RadialDecomposition(2, 2, {2: 1, 4: 1})  # class beyond the power
    with pytest.raises(ValueError):
        decomposition_of(0, 2)


def test_scalar_moments():
    assert scalar_moment(2, 2) == 4
    assert scalar_moment(4, 2) == 28
    assert scalar_moment(6, 2) == 232
    assert scalar_moment(8, 2) == 2092
    assert scalar_moment(5, 2) == 0
    assert scalar_moment(2, 1) == 2
    assert scalar_moment(4, 1) == 6
    assert scalar_moment(2, 3) == 6
    with pytest.raises(ValueError):
        scalar_moment(0, 2)


def test_amalgamated_moments_rank_two():
    assert amalgamated_moment(2, 2) == LaurentPolynomial({0: 4})
    assert amalgamated_moment(3, 2).is_zero
    assert amalgamated_moment(4, 2) == LaurentPolynomial({1: 1, -1: 1, 0: 28})
    assert amalgamated_moment(6, 2) == LaurentPolynomial({1: 16, -1: 16, 0: 232})
    assert amalgamated_moment(8, 2) == LaurentPolynomial(
        {2: 1, -2: 1, 1: 202, -1: 202, 0: 2092}
    )


def test_amalgamated_moments_rank_three():
    # subgroup generator has length 6, so only classes 0 and 6 contribute below 12
    assert amalgamated_moment(4, 3) == LaurentPolynomial({0: 66})
    assert amalgamated_moment(6, 3) == LaurentPolynomial({1: 1, -1: 1, 0: 876})
    assert amalgamated_moment(8, 3) == LaurentPolynomial({1: 36, -1: 36, 0: 12786})
    assert amalgamated_moment(5, 3).is_zero


def test_amalgamated_rejects_rank_one():
    with pytest.raises(ValueError):
        amalgamated_moment(2, 1)


def test_mass_identity():
    for rank in (1, 2, 3, 5):
        for d in iter_decompositions(rank, 25):
            assert d.mass() == (2 * rank) ** d.power


def test_structure_invariants():
    for rank in (1, 2, 3):
        for d in iter_decompositions(rank, 20):
            n = d.power
            assert d.coefficient(n) == 1
            for m, c in d.coeffs.items():
                assert 0 <= m <= n
                assert (n - m) % 2 == 0
                assert c > 0


def test_amalgamated_symmetry_and_constant_term():
    for n in range(1, 21):
        poly = amalgamated_moment(n, 2)
        for k, c in poly.items():
            assert poly.coefficient(-k) == c
        assert poly.constant_term == scalar_moment(n, 2)


def test_coefficient_table_values():
    table = coefficient_table(8, 2)
    assert table.coefficient(2, 0) == 4
    assert table.coefficient(3, 1) == 7
    assert table.coefficient(4, 2) == 10
    assert table.coefficient(4, 0) == 28
    assert table.coefficient(5, 3) == 13
    assert table.coefficient(5, 1) == 58
    assert table.coefficient(6, 4) == 16
    assert table.coefficient(8, 6) == 22
    assert table.coefficient(8, 4) == 202
    assert table.coefficient(9, 9) == 0  # beyond max_order
    t3 = coefficient_table(3, 3)
    assert t3.coefficient(2, 0) == 6
    assert t3.coefficient(3, 1) == 11
    with pytest.raises(ValueError):
        coefficient_table(1, 2)


def test_coefficient_table_rows_and_kinds():
    table = coefficient_table(4, 2)
    rows = list(table.rows())
    assert rows[0] == (1, 1, "q", 1)
    assert (2, 0, "p", 4) in rows
    assert (3, 1, "q", 7) in rows
    assert (4, 0, "p", 28) in rows
    # n ascending, m descending within each n
    assert rows == sorted(rows, key=lambda r: (r[0], -r[1]))
    kinds = {n: kind for n, _, kind, _ in rows}
    assert kinds == {1: "q", 2: "p", 3: "q", 4: "p"}


def test_coefficient_table_csv():
    csv = coefficient_table(3, 2).to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "n,m,kind,coefficient"
    assert "2,0,p,4" in lines
    assert "3,1,q,7" in lines
    assert lines[1] == "1,1,q,1"


def test_coefficient_table_tex():
    tex = coefficient_table(3, 2).to_tex()
    assert tex.startswith(r"\begin{tabular}")
    assert tex.rstrip().endswith(r"\end{tabular}")
    assert "$2$ & $0$ & $p$ & $4$" in tex


def test_table_agrees_with_decompositions():
    table = coefficient_table(10, 3)
    for d in iter_decompositions(3, 10):
        for m, c in d.coeffs.items():
            assert table.coefficient(d.power, m) == c


@given(st.integers(1, 6), st.integers(1, 30))
@settings(max_examples=80, deadline=None)
def test_stepping_preserves_invariants(rank, n):
    d = decomposition_of(n, rank)
    assert d.coefficient(n) == 1
    assert d.mass() == (2 * rank) ** n
    assert all((n - m) % 2 == 0 and c > 0 for m, c in d.coeffs.items())
