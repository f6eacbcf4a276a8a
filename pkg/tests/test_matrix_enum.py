import pytest
from hypothesis import given
from hypothesis import strategies as st

from polybern.matrix_enum import (
    PRESETS,
    BinaryMatrix,
    BudgetExceeded,
    NotLonesum,
    Restriction,
    all_matrices,
    avoids,
    contains_pattern,
    count_avoiding,
    count_avoiding_naive,
    enumerate_avoiding,
    is_lonesum_reconstruction,
    lonesum_compose,
    lonesum_decompose,
    pattern_set,
)
from polybern.sequences import Seq, value

PERM = BinaryMatrix.from_lists([[1, 0], [0, 1]])
SEQ_OF = {Restriction.none: Seq.B, Restriction.cols_nonzero: Seq.C, Restriction.rows_and_cols_nonzero: Seq.D}


def small_matrices(max_side=4):
    return st.integers(0, max_side).flatmap(
        lambda n: st.integers(0, max_side).flatmap(
            lambda k: st.lists(st.integers(0, (1 << k) - 1), min_size=n, max_size=n).map(
                lambda rows: BinaryMatrix(n, k, tuple(rows)))))


def test_matrix_basics():
    m = BinaryMatrix.from_strings(["110", "101"])
    assert m[0, 1] == 1 and m[1, 1] == 0
    assert m.row_sums() == [2, 2]
    assert m.col_sums() == [2, 1, 1]
    assert m.transpose().transpose() == m
    assert m.to_strings() == ["110", "101"]
    assert BinaryMatrix.from_lists(m.to_lists()) == m
    with pytest.raises(ValueError):
        BinaryMatrix(2, 2, (1,))


def test_contains_pattern_examples():
    assert contains_pattern(PERM, PERM)
    assert not contains_pattern(BinaryMatrix.ones(3, 3), PERM)
    assert contains_pattern(BinaryMatrix.from_lists([[1, 1, 0], [1, 0, 1]]), PERM)


def test_count_examples():
    assert count_avoiding(2, 2, PRESETS["L"], Restriction.none) == 14
    assert count_avoiding(3, 3, "gamma", Restriction.cols_nonzero) == 115
    assert count_avoiding(2, 2, "Q", Restriction.rows_and_cols_nonzero) == 5


def test_empty_shapes():
    for s in PRESETS.values():
        assert count_avoiding(3, 0, s, Restriction.none) == 1
        assert count_avoiding(3, 0, s, Restriction.cols_nonzero) == 1
        assert count_avoiding(3, 0, s, Restriction.rows_and_cols_nonzero) == 0
        assert count_avoiding(0, 0, s, Restriction.rows_and_cols_nonzero) == 1


@pytest.mark.parametrize("name", sorted(PRESETS))
@pytest.mark.parametrize("r", list(Restriction))
def test_count_grid(name, r):
    for n in range(5):
        for k in range(5):
            assert count_avoiding(n, k, PRESETS[name], r) == value(SEQ_OF[r], n, k), (n, k)


@pytest.mark.parametrize("name", sorted(PRESETS))
@pytest.mark.parametrize("r", list(Restriction))
def test_pruned_matches_naive(name, r):
    for n in range(4):
        for k in range(4):
            assert count_avoiding(n, k, name, r) == count_avoiding_naive(n, k, name, r)
            listed = list(enumerate_avoiding(n, k, name, r))
            assert len(listed) == len(set(listed)) == count_avoiding_naive(n, k, name, r)


def test_parallel_count_matches():
    assert count_avoiding(5, 5, "L", jobs=2) == value(Seq.B, 5, 5)


def test_non_2x2_pattern_set():
    from polybern.matrix_enum import PatternSet
    s = PatternSet.from_strings("row", ["111"])
    assert count_avoiding(2, 3, s) == 7 ** 2
    assert count_avoiding(2, 3, s) == count_avoiding_naive(2, 3, s)


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_avoiding(6, 6, "L", budget=100))


def test_unknown_preset():
    with pytest.raises(ValueError):
        pattern_set("Z")


def test_lonesum_examples():
    assert not is_lonesum_reconstruction(PERM)
    assert is_lonesum_reconstruction(BinaryMatrix.ones(2, 2))
    assert is_lonesum_reconstruction(BinaryMatrix.from_lists([[1, 1], [1, 0]]))
    assert lonesum_decompose(BinaryMatrix.zeros(2, 3)).order == 0
    assert lonesum_decompose(BinaryMatrix.ones(2, 2)).order == 1
    d = lonesum_decompose(BinaryMatrix.from_lists([[1, 1], [1, 0]]))
    assert (len(d.row_classes), len(d.col_classes)) == (2, 2)
    with pytest.raises(NotLonesum):
        lonesum_decompose(PERM)


def test_lonesum_criteria_agree_exhaustively():
    for n in range(5):
        for k in range(5):
            if n * k > 12:
                continue
            for m in all_matrices(n, k):
                free = avoids(m, PRESETS["L"])
                assert free == is_lonesum_reconstruction(m)
                if n * k <= 9:
                    assert free == is_lonesum_reconstruction(m, "bruteforce")


@given(small_matrices())
def test_lonesum_criteria_property(m):
    assert avoids(m, PRESETS["L"]) == is_lonesum_reconstruction(m)


def test_compose_decompose_roundtrip():
    for n in range(5):
        for k in range(5):
            for m in enumerate_avoiding(n, k, "L"):
                assert lonesum_compose(lonesum_decompose(m)) == m
