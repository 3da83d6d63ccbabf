import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from divcodes.divlen import (
    HypothesisNotMet,
    LengthTable,
    NonexistenceCertificate,
    Status,
    admissible_weights,
    divisible_length_feasible,
    frobenius_number,
    lemma6_certificate,
    load_length_tables,
    projective_length_status,
    prop10_certificate,
    round_down_divisible,
    semigroup_generators,
    short_length_representable,
)

from conftest import semigroup_by_enumeration


def test_generators():
    assert semigroup_generators(5) == [32, 48, 56, 60, 62, 63]
    assert semigroup_generators(2) == [4, 6, 7]
    assert semigroup_generators(0) == [1]


@pytest.mark.parametrize(
    "n,r,expected",
    [(0, 5, True), (210, 5, True), (147, 5, False), (84, 5, False), (21, 5, False), (7, 2, True), (9, 2, False)],
)
def test_dp_examples(n, r, expected):
    assert divisible_length_feasible(n, r) is expected


@pytest.mark.parametrize("r", range(4))
def test_dp_matches_exhaustive_combinations(r):
    reachable = semigroup_by_enumeration(semigroup_generators(r), 200)
    assert {n for n in range(201) if divisible_length_feasible(n, r)} == reachable


def test_frobenius_number():
    # {4,6,7}: 9 is the largest gap
    assert frobenius_number(2) == 9
    assert frobenius_number(0) == -1
    for r in range(1, 6):
        f = frobenius_number(r)
        assert not divisible_length_feasible(f, r)
        assert all(divisible_length_feasible(f + i, r) for i in range(1, 2 ** (r + 1)))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6), st.integers(0, 600), st.integers(0, 600))
def test_feasible_lengths_closed_under_addition(r, a, b):
    if divisible_length_feasible(a, r) and divisible_length_feasible(b, r):
        assert divisible_length_feasible(a + b, r)


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (3, 3), (19, 3), (35, 3), (59, 3)])
def test_projective_exclusions(tables, n, r):
    assert projective_length_status(n, r, tables[r]) is Status.NOT_EXISTS


def test_projective_131(tables, tables_131):
    assert projective_length_status(131, 4, load_length_tables()[4]) is Status.UNKNOWN
    assert projective_length_status(131, 4, tables_131[4]) is Status.NOT_EXISTS


def test_projective_r3_complete_beyond_59(tables):
    assert projective_length_status(60, 3, tables[3]) is Status.EXISTS
    assert projective_length_status(1000, 3, tables[3]) is Status.EXISTS
    # r = 4 is open: unlisted feasible lengths stay Unknown
    assert projective_length_status(1000, 4, tables[4]) is Status.UNKNOWN


def test_projective_implies_nonprojective(tables):
    for r, table in tables.items():
        for n in range(300):
            if not divisible_length_feasible(n, r):
                assert projective_length_status(n, r, table) is Status.NOT_EXISTS


def test_shipped_exists_entries_are_dp_feasible(tables):
    for r, table in tables.items():
        for n, st_ in table.entries.items():
            if st_ is Status.EXISTS:
                assert divisible_length_feasible(n, r), (r, n)


def test_shipped_r4_exclusions_fail_short_criterion():
    # these lengths are below 4 * 2^5, where the short-length rule is exact
    for n in (7, 38, 69, 100):
        assert not short_length_representable(n, 4)


def test_table_requires_provenance_for_exclusions():
    with pytest.raises(ValueError):
        LengthTable(2, {9: Status.NOT_EXISTS})
    t = LengthTable(2)
    with pytest.raises(ValueError):
        t.register(9, Status.NOT_EXISTS, "")


def test_table_json_round_trip(tmp_path, tables):
    path = tmp_path / "t.json"
    tables[3].store(path)
    assert LengthTable.load(path) == tables[3]
    with pytest.raises(ValueError, match="bogus"):
        LengthTable.from_json({**tables[3].to_json(), "bogus": 1})


def test_rounding_spread_13_5(tables_131):
    res = round_down_divisible(8191, 31, 4, projective=True, table=tables_131[4])
    assert (res.t, res.witness_length) == (259, 162)
    assert res.rejected_lengths == [7, 38, 69, 100, 131]
    assert not res.unknown_accepted


def test_rounding_without_131_stops_early(tables):
    res = round_down_divisible(8191, 31, 4, projective=True, table=tables[4])
    assert (res.t, res.witness_length) == (260, 131)
    assert res.unknown_accepted


def test_rounding_cdc_14_10_6():
    res = round_down_divisible(4243197, 63, 5)
    assert (res.t, res.witness_length) == (67349, 210)
    assert res.rejected_lengths == [21, 84, 147]


def test_rounding_zero_length():
    res = round_down_divisible(62, 31, 4)
    assert (res.t, res.witness_length) == (2, 0)


def test_rounding_errors():
    with pytest.raises(ValueError):
        round_down_divisible(-1, 3, 1)
    with pytest.raises(ValueError):
        round_down_divisible(5, 0, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**12), st.integers(1, 10**6))
def test_rounding_r0_is_floor(a, b):
    res = round_down_divisible(a, b, 0)
    assert res.t == a // b and len(res.trail) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5000), st.integers(0, 6))
def test_rounding_trail_strictly_decreasing(a, b, r):
    res = round_down_divisible(a, b, r)
    ts = [e.t for e in res.trail]
    assert ts[0] == a // b
    assert all(x - y == 1 for x, y in zip(ts, ts[1:]))
    assert res.t <= a // b


def test_rounding_monotone_under_weakening(tables_131):
    rng = random.Random(20261015)
    for _ in range(40):
        r = rng.randint(2, 4)
        full = tables_131[r]
        excluded = [n for n, s in full.entries.items() if s is Status.NOT_EXISTS]
        weak = full.without(*rng.sample(excluded, rng.randint(0, len(excluded))))
        k = r + 1
        n = rng.randint(2 * k, 2 * k + 12)
        a, b = 2**n - 1, 2**k - 1
        strong = round_down_divisible(a, b, r, projective=True, table=full).t
        weaker = round_down_divisible(a, b, r, projective=True, table=weak).t
        assert weaker >= strong


def test_lemma6_example_43():
    cert = lemma6_certificate(3, 5)
    assert cert.n == 43 and cert.verify()
    assert lemma6_certificate(4, 0).n == 3


def test_lemma6_sweep():
    for r in range(3, 9):
        for j in range(2 * r):
            cert = lemma6_certificate(r, j)
            assert cert.verify() and not cert.failed_steps()
            assert not short_length_representable(cert.n, r)


@pytest.mark.parametrize("r,j", [(3, 6), (2, 0), (3, -1)])
def test_lemma6_out_of_hypothesis(r, j):
    with pytest.raises(HypothesisNotMet):
        lemma6_certificate(r, j)


def test_prop10_base_is_131():
    cert = prop10_certificate(4, 8)
    assert cert.n == 131 and cert.verify()
    assert cert.children[0].n == 131 and cert.children[0].r == 4


def test_prop10_r5_uses_r4_branch():
    cert = prop10_certificate(5, 10)
    assert cert.n == 323 and cert.verify()
    assert [c.n for c in cert.children] == [3 + 2 * (10 - i) * 16 for i in range(6, 11)]
    assert cert.children[0].n == 131


@pytest.mark.parametrize("r", range(4, 9))
def test_prop10_sweep(r):
    cert = prop10_certificate(r, 2 * r)
    assert cert.n == 3 + 2 * r * 2**r
    assert cert.verify()


def test_prop10_out_of_hypothesis():
    with pytest.raises(HypothesisNotMet):
        prop10_certificate(5, 11)
    with pytest.raises(HypothesisNotMet):
        prop10_certificate(3, 6)


def test_certificate_detects_tampering():
    cert = lemma6_certificate(3, 5)
    obj = cert.to_json()
    obj["steps"][0]["values"]["lhs"] = "100"
    bad = NonexistenceCertificate.from_json(obj)
    assert not bad.verify() and len(bad.failed_steps()) == 1


def test_certificate_json_round_trip():
    cert = prop10_certificate(6, 12)
    again = NonexistenceCertificate.from_json(json.loads(json.dumps(cert.to_json())))
    assert again == cert


def test_admissible_weights(tables):
    assert admissible_weights(131, 4, tables[3]) == {16, 32, 48, 64, 80}
    w51 = admissible_weights(51, 3, tables[2])
    assert 40 not in w51 and 48 not in w51
    assert w51 == {8, 16, 24, 32}
    assert admissible_weights(16, 4, tables[3]) == {16}
