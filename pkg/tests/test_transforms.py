from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polybern.sequences import Seq, value
from polybern.transforms import (
    TriangleRow,
    at_closed,
    at_run,
    at_step,
    bernoulli_numbers,
    bt_closed,
    bt_run,
    bt_step,
    make_seed,
    pb_via_transforms,
    triangle,
)

rat = st.fractions(min_value=-20, max_value=20, max_denominator=12)
seeds = st.lists(rat, min_size=9, max_size=9)
BERN = make_seed("bernoulli", 13)


def test_at_step_examples():
    assert at_step([1, F(1, 2), F(1, 3)]).entries == (F(1, 2), F(1, 3))
    assert at_step([5, 5, 5]).entries == (0, 0)
    assert at_step([1, 2, 3]).entries == (-1, -2)
    assert at_step(TriangleRow.seed([1, 2])).generation == 1
    with pytest.raises(ValueError):
        at_step([1])


def test_bt_step_examples():
    assert bt_step([1, F(1, 2), F(1, 3)]).entries == (F(-1, 2), F(-1, 6))
    assert bt_step([1, 2]).entries == (-2,)
    assert bt_step([0, 0, 0]).entries == (0, 0)
    with pytest.raises(ValueError):
        bt_step([])


def test_runs():
    assert at_run(BERN, 2) == F(1, 6)
    assert bt_run(BERN, 1) == F(-1, 2)
    assert at_run(BERN, 1) == F(1, 2)
    assert at_closed(BERN, 4) == F(-1, 30)
    assert at_closed([7], 0) == 7
    assert bt_closed(BERN, 2) == F(1, 6)
    assert bt_closed(BERN, 1) == F(-1, 2)
    with pytest.raises(ValueError):
        at_run([1, 2], 2)


def test_bt_closed_sign():
    s = [F(0), F(3), F(5)]
    assert bt_run(s, 2) == -s[1] + 2 * s[2] == bt_closed(s, 2)


def test_bernoulli_oracle():
    b = bernoulli_numbers(12)
    assert b[:5] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
    assert b[12] == F(-691, 2730)
    for i in range(13):
        assert bt_run(BERN, i) == b[i]
        assert at_run(BERN, i) == (F(1, 2) if i == 1 else b[i])


@given(seeds, st.integers(0, 8))
def test_run_equals_closed(s, n):
    assert at_run(s, n) == at_closed(s, n)
    assert bt_run(s, n) == bt_closed(s, n)


@given(seeds, seeds, rat, rat, st.integers(0, 8))
def test_linearity(s, t, a, b, n):
    mix = [a * x + b * y for x, y in zip(s, t)]
    assert at_run(mix, n) == a * at_run(s, n) + b * at_run(t, n)
    assert bt_run(mix, n) == a * bt_run(s, n) + b * bt_run(t, n)


def test_triangle_shape():
    rows = triangle("at", make_seed("pow:2", 5), 4)
    assert [len(r.entries) for r in rows] == [5, 4, 3, 2, 1]
    assert [r.generation for r in rows] == list(range(5))


def test_make_seed():
    assert make_seed("pow:2", 4) == [0, 1, 4, 9]
    assert make_seed("powplus:1", 3) == [1, 2, 3]
    with pytest.raises(ValueError):
        make_seed("pow:x", 3)


def test_pb_examples():
    assert pb_via_transforms("C", 2, 2) == 7
    assert pb_via_transforms("D", 2, 2) == 5
    assert pb_via_transforms("B", 3, 3) == 230


def test_pb_grid():
    for seq in Seq:
        for n in range(11):
            for k in range(11):
                assert pb_via_transforms(seq, n, k) == value(seq, n, k)


def test_at_power_seed_gives_transposed_c():
    # AT((i+1)^k) has left edge (-1)^i C(k, i)
    k = 3
    seed = make_seed(f"powplus:{k}", 7)
    assert [at_run(seed, i) for i in range(7)] == [(-1) ** i * value(Seq.C, k, i) for i in range(7)]
