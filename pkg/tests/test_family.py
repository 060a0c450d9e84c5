from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from classmult.family import (
    BelowThresholdError,
    BlockChoice,
    FamilyMember,
    build_family,
    choose_k,
    closed_form_centralizer,
    equal_class_family,
    family_params,
    member_from_word,
    thresholds,
    verify_family,
)
from classmult.partitions import Partition, centralizer_order, sign
from classmult.symalt import splits_in_alt

A, B = BlockChoice.A, BlockChoice.B


def test_blocks():
    for b in BlockChoice:
        assert sum(b.value) == 20 and prod(b.value) == 90


def _scan_choose_k(M):
    return min(k for k in range(1, 64, 2) if 2**k > M)


@pytest.mark.parametrize("M,k", [(1, 1), (2, 3), (10, 5)])
def test_choose_k_examples(M, k):
    assert choose_k(M) == k


@given(st.integers(min_value=1, max_value=10**6))
def test_choose_k_minimal(M):
    assert choose_k(M) == _scan_choose_k(M)


def test_choose_k_rejects():
    with pytest.raises(ValueError):
        choose_k(0)


def test_family_k1_p():
    fam = build_family(1, "P")
    assert [m.partition.parts for m in fam] == [(10, 9, 1), (15, 3, 2)]
    assert all(m.partition.size == 20 and m.certified_centralizer == 90 for m in fam)


def test_family_k1_pprime():
    fam = build_family(1, "P_prime")
    assert len(fam) == 4
    assert {m.partition.size for m in fam} == {440}
    assert {centralizer_order(m.partition) for m in fam} == {75_014_100}
    assert 90**2 * 21**3 == 75_014_100


def test_family_k3_word():
    fam = build_family(3, "P")
    assert len(fam) == 8
    assert {m.partition.size for m in fam} == {9260}
    (mem,) = [m for m in fam if m.choices == (A, B, A)]
    assert mem.partition.parts == (4410, 3969, 441, 315, 63, 42, 10, 9, 1)
    assert member_from_word((A, B, A)) == mem


def test_family_ordering_lexicographic():
    words = [m.choices for m in build_family(3, "P")]
    assert words == sorted(words, key=lambda w: [c.name for c in w])
    assert words[0] == (A, A, A) and words[-1] == (B, B, B)


@pytest.mark.parametrize("k", [2, 0, -1])
def test_build_family_rejects_even_k(k):
    with pytest.raises(ValueError):
        build_family(k, "P")


@pytest.mark.parametrize("k", [1, 3, 5, 7])
@pytest.mark.parametrize("branch", ["P", "P_prime"])
def test_family_closed_forms(k, branch):
    fam = build_family(k, branch)
    length = k if branch == "P" else k + 1
    assert len(fam) == 2**length
    assert len({m.partition for m in fam}) == len(fam)
    for m in fam:
        assert m.partition.size == 21**length - 1
        c = centralizer_order(m.partition)
        assert c == prod(m.partition.parts) == m.certified_centralizer
        assert c == 90**length * 21 ** (3 * length * (length - 1) // 2)
        assert any(p % 2 == 0 for p in m.partition.parts)
        assert sign(m.partition) == ("odd" if branch == "P" else "even")


def test_closed_form_for_both_branches():
    k = 5
    assert closed_form_centralizer(k) == 90**k * 21 ** (3 * k * (k - 1) // 2)
    assert closed_form_centralizer(k + 1) == 90 ** (k + 1) * 21 ** (3 * k * (k + 1) // 2)


def test_thresholds_examples():
    assert thresholds(1) == (38, 757)
    assert thresholds(3) == (15878, 333397)
    for k in (1, 3, 5, 7):
        lo, hi = thresholds(k)
        assert lo % 2 == 0 and hi % 2 == 1
        assert lo - (21**k - 1) > 15 * 21 ** (k - 1)
        assert hi - (21 ** (k + 1) - 1) > 15 * 21**k


def test_thresholds_minimal_by_scan():
    for k in (1, 3):
        even_bound = 21**k + 15 * 21 ** (k - 1)
        odd_bound = 21 ** (k + 1) + 15 * 21**k
        lo = next(n for n in range(even_bound + 1, even_bound + 3) if n % 2 == 0)
        hi = next(n for n in range(odd_bound + 1, odd_bound + 3) if n % 2 == 1)
        assert thresholds(k) == (lo, hi)


def test_family_params_single_bound():
    p = family_params(1)
    assert (p.k, p.min_even_n, p.min_odd_n, p.N) == (1, 38, 757, 757)


def test_equal_class_family_38():
    recs = equal_class_family(38, 1)
    assert [r.rep.parts for r in recs] == [(18, 10, 9, 1), (18, 15, 3, 2)]
    assert {r.class_size for r in recs} == {factorial(38) // 1620}
    for r in recs:
        assert sign(r.rep) == "even" and not splits_in_alt(r.rep)
        assert r.group_tag == "alt 38" and r.split_label is None


def test_equal_class_family_757():
    recs = equal_class_family(757, 1)
    assert len(recs) == 4
    assert {r.rep.parts[0] for r in recs} == {317}
    assert len({r.class_size for r in recs}) == 1
    assert all(sign(r.rep) == "even" and not splits_in_alt(r.rep) for r in recs)
    c = 317 * 90**2 * 21**3
    assert recs[0].class_size == factorial(757) // c


def test_equal_class_family_larger_n():
    for n in (39 * 2, 760, 1001):
        recs = equal_class_family(n, 1)
        assert len(recs) >= 2 and len({r.class_size for r in recs}) == 1


def test_equal_class_family_below_threshold():
    with pytest.raises(BelowThresholdError) as ei:
        equal_class_family(37, 1)
    assert ei.value.minimal_n == 757
    with pytest.raises(BelowThresholdError) as ei:
        equal_class_family(36, 1)
    assert ei.value.minimal_n == 38
    with pytest.raises(BelowThresholdError) as ei:
        equal_class_family(38, 3)
    assert ei.value.minimal_n == 15878


def test_equal_class_family_k3_even():
    recs = equal_class_family(15878, 4)
    assert len(recs) == 8
    assert len({r.class_size for r in recs}) == 1


def test_verify_clean():
    for branch in ("P", "P_prime"):
        assert verify_family(build_family(1, branch)).ok
    assert verify_family(build_family(1, "P"), 38).ok
    assert verify_family(build_family(1, "P_prime"), 757).ok


def test_verify_detects_collision():
    fam = build_family(1, "P")
    bad = FamilyMember(fam[0].choices, Partition((10, 9, 9)), fam[0].certified_centralizer)
    rep = verify_family([bad, fam[1]])
    names = {c.name for c in rep.failures}
    assert "distinct_parts" in names
    assert not rep.ok


def test_verify_detects_size_change():
    fam = build_family(1, "P")
    bad = FamilyMember(fam[0].choices, Partition((11, 9, 1)), fam[0].certified_centralizer)
    rep = verify_family([bad, fam[1]])
    failing = {(c.name, c.member) for c in rep.failures}
    assert ("size", 0) in failing
    assert ("equal_sizes", None) in failing


def test_verify_detects_wrong_certificate():
    fam = build_family(1, "P")
    bad = FamilyMember(fam[0].choices, fam[0].partition, 91)
    assert ("centralizer_certified", 0) in {(c.name, c.member) for c in verify_family([bad]).failures}


def test_verify_detects_non_strict_lead():
    rep = verify_family(build_family(1, "P"), 30)
    assert any(c.name == "strict_leading_part" for c in rep.failures)
