import pytest
from hypothesis import given
from hypothesis import strategies as st

from conolly_kit.closedform import (
    PiecewiseRegime,
    RegimeKind,
    b_recursive,
    b_sequence,
    b_witty,
    h0,
    h1_closed,
    hs_piecewise,
    isqrt,
    last_index_of_power,
    predicted_multiplicity,
    regime,
)
from oracles import bottomley


@pytest.mark.parametrize("m, expected", [(0, 0), (28, 5), (2**52, 2**26), (2**52 - 1, 2**26 - 1)])
def test_isqrt(m, expected):
    assert isqrt(m) == expected


@given(st.integers(0, 10**40))
def test_isqrt_bracket(m):
    t = isqrt(m)
    assert t * t <= m < (t + 1) ** 2


def test_isqrt_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@pytest.mark.parametrize("n, expected", [(1, 1), (50, 25), (7, 4)])
def test_h0(n, expected):
    assert h0(n) == expected


def test_h0_rejects_zero():
    with pytest.raises(ValueError):
        h0(0)


@pytest.mark.parametrize("s, n, expected", [(2, 4, 1), (3, 19, 5), (1, 11, 4)])
def test_piecewise(s, n, expected):
    assert hs_piecewise(s, n) == expected


def test_regime_boundaries_s1():
    # value 4 spans n = 9..11: ramp k=2, then the single plateau label, then ramp k=3
    assert regime(1, 9) == PiecewiseRegime(2, RegimeKind.RAMP)
    assert regime(1, 10) == PiecewiseRegime(2, RegimeKind.PLATEAU)
    assert regime(1, 11) == PiecewiseRegime(3, RegimeKind.RAMP)


@given(s=st.integers(1, 12), n=st.integers(1, 10**7))
def test_exactly_one_regime(s, n):
    hits = []
    for k in range(60):
        if 2**k + s * k <= n < 2 ** (k + 1) + s * k:
            hits.append((k, RegimeKind.RAMP))
        if 2 ** (k + 1) + s * k <= n < 2 ** (k + 1) + s * (k + 1):
            hits.append((k, RegimeKind.PLATEAU))
    assert len(hits) == 1
    r = regime(s, n)
    assert (r.k, r.kind) == hits[0]


def test_s0_regimes_are_ramps():
    assert all(regime(0, n).kind is RegimeKind.RAMP for n in range(1, 5000))


@pytest.mark.parametrize("n, expected", [(0, 1), (2, 3), (6, 10)])
def test_b_recursive(n, expected):
    assert b_recursive(n) == expected


@pytest.mark.parametrize("m, expected", [(0, 1), (2, 3), (6, 10)])
def test_b_witty(m, expected):
    assert b_witty(m) == expected


def test_witty_matches_iteration():
    b = b_sequence(10**5)
    assert [b_witty(m) for m in range(10**5)] == b[:10**5]


@pytest.mark.parametrize("n, expected", [(12, 5), (1, 1), (50, 23)])
def test_h1_closed(n, expected):
    assert h1_closed(n) == expected


def test_h1_closed_is_isqrt_of_b():
    b = b_sequence(5000)
    assert all(h1_closed(n) == isqrt(b[n - 1]) for n in range(1, 5001))


def test_closed_forms_match_recursion(h_tables):
    for n in range(1, 10**5 + 1):
        assert h0(n) == h_tables[0][n]
    h1 = h_tables[1]
    assert all(h1_closed(n) == h1[n] for n in range(1, 10**5 + 1))
    for s in range(1, 9):
        t = h_tables[s]
        assert all(hs_piecewise(s, n) == t[n] for n in range(1, 10**4 + 1)), s


def test_square_root_sum_property(h_tables):
    h1 = h_tables[1]
    total = 1  # h_1(0) = 1
    for n in range(1, 10**4 + 1):
        assert h1[n] == isqrt(total), n
        total += h1[n]


def test_bottomley_oracle_agrees_with_h1(h_tables):
    ref = bottomley(3000)
    assert ref[0] == 1
    assert list(h_tables[1].values[:3000]) == ref[1:]


@pytest.mark.parametrize("s, v, expected", [(1, 4, 3), (0, 3, 2), (4, 6, 2), (3, 1, 5)])
def test_predicted_multiplicity(s, v, expected):
    assert predicted_multiplicity(s, v) == expected


@pytest.mark.parametrize("s, k, expected", [(1, 3, 11), (0, 5, 32), (3, 1, 5)])
def test_last_index_of_power(s, k, expected):
    assert last_index_of_power(s, k) == expected


def test_last_index_table_cells(h_tables):
    # value 4 last at n=11 in column s=1; value 1 last at n=5 in column s=3
    assert h_tables[1][11] == 4 and h_tables[1][12] == 5
    assert h_tables[3][5] == 1 and h_tables[3][6] == 2
    assert h_tables[0][32] == 16 and h_tables[0][33] == 17
