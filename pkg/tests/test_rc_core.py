import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riggedcrystals.errors import MalformedInputError
from riggedcrystals.rc import (RiggedConfiguration, RiggedRow, apply_f,
                               apply_f_word, empty_rc, rc_from_json,
                               rc_to_json, weight)
from riggedcrystals.forward import rc_from_forward, validate_forward, word_of_forward

from conftest import all_forward


def rc(n, *parts):
    return RiggedConfiguration(n, parts)


def test_empty_rc():
    assert empty_rc(1).parts == ((),)
    assert empty_rc(4).parts == ((), (), (), ())
    assert empty_rc(2).parts == ((), ())


def test_empty_rc_rejects_zero_rank():
    with pytest.raises(ValueError):
        empty_rc(0)


def test_first_box_gets_rigging_minus_one():
    out = apply_f(empty_rc(2), 1)
    assert out == rc(2, [(1, -1)], [])


def test_repeated_operator_grows_single_row():
    out = apply_f_word(empty_rc(1), [1, 1, 1])
    assert out == rc(1, [(3, -3)])
    assert apply_f_word(empty_rc(3), [1, 1, 1]) == rc(3, [(3, -3)], [], [])


def test_hand_traced_word():
    out = apply_f(apply_f(apply_f(empty_rc(2), 1), 2), 1)
    assert out == rc(2, [(2, -1)], [(1, -1)])
    assert apply_f_word(empty_rc(2), [1, 2, 1]) == out


def test_empty_word_is_identity():
    assert apply_f_word(empty_rc(2), []) == empty_rc(2)


def test_word_rank_one():
    assert apply_f_word(empty_rc(1), [1, 1]) == rc(1, [(2, -2)])


def test_index_out_of_range():
    with pytest.raises(ValueError):
        apply_f(empty_rc(2), 3)
    with pytest.raises(ValueError):
        apply_f(empty_rc(2), 0)


def test_word_of_forward_ordering():
    assert word_of_forward(validate_forward([[0, 0], [0]], 2)) == []
    assert word_of_forward(validate_forward([[1, 1], [1]], 2)) == [1, 2, 1]
    assert word_of_forward(validate_forward([[3]], 1)) == [1, 1, 1]


def test_weight():
    assert weight(empty_rc(3)) == (0, 0, 0)
    assert weight(rc(2, [(2, -1)], [(1, -1)])) == (2, 1)


def test_weight_counts_operator_multiplicities():
    for x in all_forward(3, 2):
        expected = tuple(sum(x[i, j] for j in range(1, 3 - i + 2))
                         for i in range(1, 4))
        assert weight(rc_from_forward(x)) == expected


def test_locality():
    base = apply_f_word(empty_rc(5), [3, 3, 2, 4, 3, 1, 5])
    out = apply_f(base, 3)
    for part_index in (0, 4):
        assert out.parts[part_index] == base.parts[part_index]


words = st.lists(st.integers(min_value=1, max_value=3), max_size=14)


@settings(max_examples=200, deadline=None)
@given(word=words, i=st.integers(min_value=1, max_value=3))
def test_box_count_property(word, i):
    base = apply_f_word(empty_rc(3), word)
    out = apply_f(base, i)
    before, after = weight(base), weight(out)
    assert after[i - 1] == before[i - 1] + 1
    assert all(after[k] == before[k] for k in range(3) if k != i - 1)


@settings(max_examples=200, deadline=None)
@given(word=words)
def test_determinism(word):
    a = apply_f_word(empty_rc(3), word)
    b = apply_f_word(empty_rc(3), word)
    assert a == b and hash(a) == hash(b)


def shape_law_cases():
    # lengths weakly decreasing and positive, riggings m = r0 >= ... >= rt >= 0,
    # and no row may overtake the one above: l_k >= l_{k+1} + r_k - r_{k+1}
    # (the length-monotonicity inequality, which holds wherever the closed
    # form feeds this configuration; without it the claimed shape is wrong)
    yield [5], [3, 1]
    yield [4, 2], [4, 2, 1]
    yield [4, 2], [2, 2, 0]
    yield [5, 3, 1], [5, 3, 2, 0]
    yield [2, 1], [0, 0, 0]
    yield [6, 4, 4], [4, 4, 4, 4]


@pytest.mark.parametrize("lengths,riggings", list(shape_law_cases()))
def test_shape_law_single_partition(lengths, riggings):
    # Starting from one partition with non-negative riggings and empty
    # neighbours, m applications pivot each row and leave rigging -r_{k-1}.
    t = len(lengths)
    padded = lengths + [0]
    assert all(padded[k] >= padded[k + 1] + riggings[k + 1] - (riggings + [0])[k + 2]
               for k in range(t)), "case outside the stated hypotheses"
    m = riggings[0]
    rest = riggings[1:] + [0]
    start = RiggedConfiguration(3, [[], list(zip(lengths, rest[:t])), []])
    out = apply_f_word(start, [2] * m)
    expected_rows = []
    padded_lengths = lengths + [0]
    padded_riggings = riggings + [0] * (t + 2 - len(riggings))
    for k in range(1, t + 2):
        new_len = padded_lengths[k - 1] + padded_riggings[k - 1] - padded_riggings[k]
        if new_len > 0:
            expected_rows.append((new_len, -padded_riggings[k - 1]))
    assert out.parts[1] == RiggedConfiguration(3, [[], expected_rows, []]).parts[1]
    assert out.parts[0] == () and out.parts[2] == ()


def test_json_roundtrip():
    value = apply_f_word(empty_rc(3), [1, 2, 3, 2, 1, 1])
    assert rc_from_json(rc_to_json(value)) == value
    assert rc_to_json(empty_rc(2)) == {"n": 2, "parts": [[], []]}


def test_json_rejects_bad_rows():
    with pytest.raises(MalformedInputError):
        rc_from_json({"n": 1, "parts": [[{"len": 0, "rig": 1}]]})
    with pytest.raises(MalformedInputError):
        rc_from_json({"n": 1, "parts": [[{"len": -2, "rig": 1}]]})
    # canonical order is length descending, rigging ascending
    with pytest.raises(MalformedInputError):
        rc_from_json({"n": 1, "parts": [[{"len": 1, "rig": 0}, {"len": 2, "rig": 0}]]})
    with pytest.raises(MalformedInputError):
        rc_from_json({"n": 1, "parts": [[{"len": 2, "rig": 1}, {"len": 2, "rig": 0}]]})
    with pytest.raises(MalformedInputError):
        rc_from_json({"n": 2, "parts": [[]]})


def test_rows_are_canonical_multiset():
    a = RiggedConfiguration(1, [[(2, 0), (3, -1), (2, -5)]])
    assert a.parts[0] == (RiggedRow(3, -1), RiggedRow(2, -5), RiggedRow(2, 0))
