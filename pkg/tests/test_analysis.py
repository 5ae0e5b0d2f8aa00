import pytest

from conolly_kit.analysis import (
    check_slow_growing,
    compare_bfile,
    cross_check,
    fixture_span,
    frequency_report,
    last_index_of_value,
    tsk_power_frequency,
)
from conolly_kit.bfile import read_fixture
from conolly_kit.closedform import last_index_of_power, predicted_multiplicity
from conolly_kit.recurrence import Family, SequenceSpec, SequenceTable, canonical_h_spec, conolly_spec, evaluate


def test_slow_growing_h2():
    assert check_slow_growing(evaluate(canonical_h_spec(2), 50)) is None


def test_slow_growing_violation():
    table = SequenceTable(SequenceSpec(Family.CONOLLY, 0, 2, (1, 1)), (1, 1, 3))
    assert check_slow_growing(table) == 2
    assert check_slow_growing([1, 1, 3]) == 2


def test_conolly_slow_growing():
    assert check_slow_growing(evaluate(conolly_spec(), 10**4)) is None


def test_frequency_h1():
    rep = frequency_report(evaluate(canonical_h_spec(1), 50))
    assert rep.counts[4] == 3 and rep.counts[5] == 2
    assert rep.ok


def test_frequency_h0_all_twice():
    rep = frequency_report(evaluate(canonical_h_spec(0), 50))
    assert set(rep.counts.values()) == {2}
    assert rep.complete_up_to == 24


def test_frequency_h4():
    assert frequency_report(evaluate(canonical_h_spec(4), 50)).counts[2] == 6


def test_frequency_completeness():
    # the last value may still recur, so it is never reported
    table = evaluate(canonical_h_spec(3), 19)
    rep = frequency_report(table)
    assert max(rep.counts) < table[19]


def test_frequency_flags_wrong_counts():
    table = SequenceTable(canonical_h_spec(0), (1, 1, 2, 3, 3, 4))
    rep = frequency_report(table)
    assert rep.violations == [(2, 2, 1)]


def test_frequency_requires_slow_growth():
    with pytest.raises(ValueError):
        frequency_report(SequenceTable(canonical_h_spec(0), (1, 1, 3)))


@pytest.mark.parametrize("s, n", [(3, 50), (0, 1), (7, 2048)])
def test_cross_check_examples(s, n):
    rep = cross_check(s, n)
    assert rep.ok, rep.first_mismatch
    assert set(rep.coverage.values()) == {n}


def test_cross_check_single():
    rep = cross_check(0, 1)
    assert rep.engines == ("recursion", "tree", "h0", "genfunc")


def test_cross_check_engine_sets():
    assert cross_check(1, 10).engines == ("recursion", "tree", "piecewise", "h1_closed", "genfunc")
    assert cross_check(5, 10).engines == ("recursion", "tree", "piecewise", "genfunc")


def test_multiplicities(h_tables):
    for s in range(7):
        rep = frequency_report(h_tables[s])
        assert rep.ok, (s, rep.violations[:3])
        for v in range(1, 513):
            assert rep.counts[v] == predicted_multiplicity(s, v)


def test_last_index_of_powers(h_tables):
    for s in range(7):
        v = h_tables[s].values
        for k in range(1, 13):
            assert last_index_of_value(v, 2 ** (k - 1)) == last_index_of_power(s, k)


def test_tsk_examples():
    assert [d for *_, d in tsk_power_frequency(2, 2, 5)] == [2] * 5
    assert [d for *_, d in tsk_power_frequency(0, 3, 3)] == [0] * 3
    assert [d for *_, d in tsk_power_frequency(1, 3, 4)] == [1] * 4


def test_tsk_rejects_arguments():
    with pytest.raises(ValueError):
        tsk_power_frequency(0, 1, 2)
    with pytest.raises(ValueError):
        tsk_power_frequency(0, 2, 0)


def test_bfile_alignment():
    h0 = evaluate(canonical_h_spec(0), 10**4 + 1)
    h1 = evaluate(canonical_h_spec(1), 10**4)
    a008619 = read_fixture("A008619")
    a109964 = read_fixture("A109964")
    # A008619(m) = floor(m/2) + 1 = ceil((m+1)/2), so h_0(n) sits at index n-1
    assert compare_bfile(h0, a008619, offset_shift=-1) is None
    assert compare_bfile(h0, a008619, offset_shift=0) is not None
    # A109964 prepends h_1(0) = 1 and otherwise shares indices
    assert compare_bfile(h1, a109964, offset_shift=0) is None
    assert fixture_span(a109964) == 10**4


def test_bfile_empty_and_short_table():
    table = evaluate(canonical_h_spec(1), 5)
    assert compare_bfile(table, "") is None
    with pytest.raises(ValueError):
        compare_bfile(table, "1 1\n9 4\n")


def test_bfile_mismatch_reported():
    table = evaluate(canonical_h_spec(1), 5)
    mm = compare_bfile(table, "1 1\n2 1\n3 1\n4 9\n")
    assert (mm.n, mm.expected, mm.actual) == (4, 9, 2)
