import pytest

from riggedcrystals.errors import MalformedInputError
from riggedcrystals.forward import validate_forward, word_of_forward
from riggedcrystals.reverse import validate_reverse, word_of_reverse
from riggedcrystals.tableaux import (MarginallyLargeReverseTableau,
                                     MarginallyLargeTableau, apply_f_mlrt,
                                     apply_f_mlt, ascii_art, forward_from_mlt,
                                     highest_mlrt, highest_mlt, mlrt_from_reverse,
                                     mlrt_grid, mlt_from_forward, mlt_grid,
                                     reverse_from_mlrt, tableau_from_json,
                                     tableau_to_json)

from conftest import (all_forward, all_reverse, count_basic_columns,
                      forward_columns, is_reverse_semistandard,
                      is_semistandard, reverse_columns)


def fold_mlt(n, word):
    T = highest_mlt(n)
    for i in word:
        T = apply_f_mlt(T, i)
    return T


def fold_mlrt(n, word):
    R = highest_mlrt(n)
    for i in word:
        R = apply_f_mlrt(R, i)
    return R


def test_highest_mlt_rows():
    assert mlt_grid(highest_mlt(1)) == [[1]]
    assert mlt_grid(highest_mlt(2)) == [[1, 1], [2]]
    assert mlt_grid(highest_mlt(3)) == [[1, 1, 1], [2, 2], [3]]


def test_mlt_from_forward_examples():
    assert mlt_from_forward(validate_forward([[0, 0], [0]], 2)) == highest_mlt(2)
    T = mlt_from_forward(validate_forward([[1, 1], [1]], 2))
    assert mlt_grid(T) == [[1, 1, 2, 3], [2]]


def test_mlt_count_formula_matches_cumulative_reading():
    # top r rows hold x[r, n-y+2] boxes of value y
    for x in all_forward(3, 2):
        T = mlt_from_forward(x)
        rows = mlt_grid(T)
        for y in range(2, 5):
            for r in range(1, y):
                cumulative = sum(row.count(y) for row in rows[:r])
                assert cumulative == x[r, 3 - y + 2]


def test_forward_from_mlt_roundtrip():
    assert forward_from_mlt(highest_mlt(3)).total() == 0
    for x in all_forward(3, 2):
        assert forward_from_mlt(mlt_from_forward(x)) == x


def test_apply_f_mlt_traces():
    assert mlt_grid(apply_f_mlt(highest_mlt(2), 1)) == [[1, 1, 2], [2]]
    assert mlt_grid(fold_mlt(2, [1, 2, 1])) == [[1, 1, 2, 3], [2]]
    assert mlt_grid(apply_f_mlt(highest_mlt(1), 1)) == [[1, 2]]


def test_apply_f_mlt_bad_index():
    with pytest.raises(ValueError):
        apply_f_mlt(highest_mlt(2), 3)


def test_forward_folding_matches_counts_small():
    for n in (1, 2):
        for x in all_forward(n, 3):
            assert fold_mlt(n, word_of_forward(x)) == mlt_from_forward(x)


def test_highest_mlrt_rows():
    assert mlrt_grid(highest_mlrt(1)) == [[1]]
    assert mlrt_grid(highest_mlrt(3)) == [[1], [2, 1], [3, 2, 1]]


def test_mlrt_rank_one_trace():
    R = mlrt_from_reverse(validate_reverse([[2]], 1))
    assert mlrt_grid(R) == [[2, 2, 1]]
    assert fold_mlrt(1, [1, 1]) == R


def test_mlrt_operator_traces():
    # hand-traced at rank 2: f1 then the wave [2,1]
    assert mlrt_grid(fold_mlrt(2, [1])) == [[1], [2, 2, 1]]
    assert mlrt_grid(fold_mlrt(2, [2, 1])) == [[2, 1], [3, 2, 1]]
    assert mlrt_grid(fold_mlrt(2, [2, 2])) == [[1, 1, 1], [3, 3, 2, 1]]


def test_mlrt_from_reverse_zero():
    assert mlrt_from_reverse(validate_reverse([[0, 0], [0]], 2)) == highest_mlrt(2)


def test_reverse_from_mlrt_roundtrip():
    for p in all_reverse(3, 2):
        assert reverse_from_mlrt(mlrt_from_reverse(p)) == p


def test_reverse_folding_matches_counts_small():
    for n in (1, 2):
        for p in all_reverse(n, 3):
            assert fold_mlrt(n, word_of_reverse(p)) == mlrt_from_reverse(p)


def test_mlt_expansion_is_semistandard_and_marginal():
    for x in all_forward(3, 2):
        rows = mlt_grid(mlt_from_forward(x))
        assert is_semistandard(rows)
        basics = count_basic_columns(forward_columns(rows), 3)
        assert basics == {1: 1, 2: 1, 3: 1}


def test_mlrt_expansion_is_reverse_semistandard_and_marginal():
    for p in all_reverse(3, 2):
        rows = mlrt_grid(mlrt_from_reverse(p))
        assert is_reverse_semistandard(rows)
        basics = count_basic_columns(reverse_columns(rows), 3)
        assert basics == {1: 1, 2: 1, 3: 1}


def test_marginality_preserved_along_words():
    word = [1, 2, 1, 2, 2, 1]
    T, R = highest_mlt(2), highest_mlrt(2)
    for i in word:
        T, R = apply_f_mlt(T, i), apply_f_mlrt(R, i)
        assert count_basic_columns(forward_columns(mlt_grid(T)), 2) == {1: 1, 2: 1}
        assert count_basic_columns(reverse_columns(mlrt_grid(R)), 2) == {1: 1, 2: 1}


def test_valley_constraint_enforced():
    with pytest.raises(ValueError):
        MarginallyLargeReverseTableau(2, [[0], [0, 1]])
    with pytest.raises(ValueError):
        MarginallyLargeTableau(2, [[-1, 0], [0]])


def test_ascii_art():
    assert ascii_art(highest_mlt(2)) == "[1][1]\n[2]"
    assert ascii_art(highest_mlrt(2)) == "[1]\n[2][1]"


def test_json_roundtrip_and_model_discriminator():
    T = mlt_from_forward(validate_forward([[1, 1], [1]], 2))
    R = mlrt_from_reverse(validate_reverse([[2, 1], [1]], 2))
    assert tableau_from_json(tableau_to_json(T)) == T
    assert tableau_from_json(tableau_to_json(R)) == R
    assert tableau_to_json(T)["model"] == "mlt"
    assert tableau_to_json(R)["model"] == "mlrt"
    with pytest.raises(MalformedInputError):
        tableau_from_json({"n": 2, "counts": []})
    with pytest.raises(MalformedInputError):
        tableau_from_json({"n": 2, "model": "mlt",
                           "counts": [{"row": 2, "value": 2, "count": 1}]})
