from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from classmult.family import choose_k, equal_class_family, thresholds
from classmult.oracle import alternating_group, conjugacy_classes, multiplicity_report_oracle
from classmult.partitions import class_size_sym, enumerate_partitions, make_partition, sign
from classmult.symalt import (
    alt_classes,
    group_order,
    merge_reports,
    multiplicity_report,
    report_from_sizes,
    splits_in_alt,
)


@pytest.mark.parametrize("parts,expected", [((5,), True), ((3, 1, 1), False), ((2, 2, 1), False), ((3, 1), True)])
def test_splits_examples(parts, expected):
    assert splits_in_alt(make_partition(parts)) is expected


def test_splits_rejects_odd():
    with pytest.raises(ValueError):
        splits_in_alt(make_partition([2, 1]))
    with pytest.raises(ValueError):
        alt_classes(make_partition([4, 1]))


def test_alt5_examples_against_brute_force():
    sizes = Counter(r.class_size for r in conjugacy_classes(alternating_group(5)))
    assert sizes == Counter({1: 1, 12: 2, 15: 1, 20: 1})
    five = alt_classes(make_partition([5]))
    assert [r.class_size for r in five] == [12, 12]
    assert [r.split_label for r in five] == ["first", "second"]
    assert [r.class_size for r in alt_classes(make_partition([2, 2, 1]))] == [15]
    assert [r.class_size for r in alt_classes(make_partition([3, 1, 1]))] == [20]


def test_alt4_three_cycles_split():
    sizes = sorted(r.class_size for r in conjugacy_classes(alternating_group(4)))
    assert sizes == [1, 3, 4, 4]
    recs = alt_classes(make_partition([3, 1]))
    assert [r.class_size for r in recs] == [4, 4]


def test_report_examples():
    r = multiplicity_report("sym", 4)
    assert r.histogram == {1: 1, 3: 1, 6: 2, 8: 1}
    assert (r.max_multiplicity, r.argmax_sizes) == (2, [6])
    r = multiplicity_report("alt", 5)
    assert r.histogram == {1: 1, 12: 2, 15: 1, 20: 1}
    assert (r.max_multiplicity, r.argmax_sizes) == (2, [12])
    r = multiplicity_report("sym", 1)
    assert r.histogram == {1: 1} and r.max_multiplicity == 1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_degenerate_alt(n):
    r = multiplicity_report("alt", n)
    assert r.histogram == {1: 1}


def test_histogram_keys_ascending_and_argmax_ties():
    r = report_from_sizes("t", [3, 1, 2, 3, 2])
    assert list(r.histogram) == [1, 2, 3]
    assert r.argmax_sizes == [2, 3]


@given(st.lists(st.lists(st.integers(1, 50), max_size=20), max_size=5))
def test_merge_is_order_independent(chunks):
    reports = [report_from_sizes("t", c) for c in chunks]
    whole = report_from_sizes("t", [s for c in chunks for s in c])
    assert merge_reports("t", reports).same_statistics(whole)
    assert merge_reports("t", reversed(reports)).same_statistics(whole)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("kind", ["sym", "alt"])
def test_matches_oracle_small(n, kind):
    from classmult.oracle import symmetric_group
    G = symmetric_group(n) if kind == "sym" else alternating_group(n)
    assert multiplicity_report(kind, n).same_statistics(multiplicity_report_oracle(G))


@pytest.mark.parametrize("n", range(1, 31))
def test_class_equation(n):
    assert multiplicity_report("sym", n).group_order == factorial(n)
    assert multiplicity_report("alt", n).group_order == group_order("alt", n)


@pytest.mark.parametrize("n", range(2, 16))
def test_alt_mass_equals_sym_class(n):
    for lam in enumerate_partitions(n):
        if sign(lam) == "even":
            recs = alt_classes(lam)
            assert sum(r.class_size for r in recs) == class_size_sym(lam)
            for r in recs:
                assert (factorial(n) // 2) % r.class_size == 0


@pytest.mark.slow
@pytest.mark.parametrize("M", [2, 4])
def test_multiplicity_at_family_threshold(M):
    # Only the even threshold is desk-sized for k = 3; the odd one is 333397.
    n_even, _ = thresholds(choose_k(M))
    if n_even > 60:
        recs = equal_class_family(n_even, M)
        assert len({r.class_size for r in recs}) == 1 and len(recs) > M
    else:
        assert multiplicity_report("alt", n_even).max_multiplicity >= M


def test_multiplicity_at_smallest_threshold():
    n_even, _ = thresholds(1)
    assert multiplicity_report("alt", n_even).max_multiplicity >= 2
