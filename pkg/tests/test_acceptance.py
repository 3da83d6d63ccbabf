"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines are printed even under
capture) or directly with ``python tests/test_acceptance.py``.
"""

import io
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import kernel_by_expansion, semigroup_by_enumeration, span, weight_counts  # noqa: E402
from divcodes import schemas  # noqa: E402
from divcodes.bounds import BoundQuery, cdc_upper_bound, default_bound_table, spread_upper_bound  # noqa: E402
from divcodes.cli import run  # noqa: E402
from divcodes.divlen import (  # noqa: E402
    Status,
    divisible_length_feasible,
    lemma6_certificate,
    load_length_tables,
    prop10_certificate,
    round_down_divisible,
    semigroup_generators,
)
from divcodes.feasibility import A3, CodeParams, enumerate_distributions, solve_moments_parametric  # noqa: E402
from divcodes.replay import (  # noqa: E402
    register_theorem131,
    replay_corollary,
    replay_lemma3,
    replay_partition,
    replay_theorem,
    theorem131_certificate,
)
from divcodes.weights import (  # noqa: E402
    PartitionWeightDistribution,
    WeightDistribution,
    dual_moments,
    krawtchouk,
    macwilliams_transform,
    moment_residuals,
    partition_transform,
)

W131 = (16, 32, 48, 64, 80)


def criterion_1():
    dist = WeightDistribution(51, 8, {0: 1, 24: 204, 32: 51})
    dm = dual_moments(dist)
    ok = moment_residuals(dist, 17) == (0, 0, 0, 0) and (dm.a1_star, dm.a2_star, dm.a3_star) == (0, 0, 17)
    return ok, f"residuals {tuple(map(str, moment_residuals(dist, 17)))}, dual (a1*,a2*,a3*)=({dm.a1_star},{dm.a2_star},{dm.a3_star})"


def criterion_2(tables):
    bad = []
    for k in range(9, 21):
        p = Fraction(2) ** (k - 9)
        printed = {
            48: (-10 + 11 * p, -6, -3),
            64: (15 + 221 * 2 * p, 8, 3),
            80: (-6 + 59 * p, -3, -1),
            A3: (-311 + 5 * Fraction(2) ** (16 - k), Fraction(2) ** (17 - k), Fraction(2) ** (15 - k)),
        }
        sol = solve_moments_parametric(CodeParams(131, k, 4), W131)
        for w, (c, c16, c32) in printed.items():
            f = sol.dependent[w]
            if (f.const, f.coeff(16), f.coeff(32)) != (c, c16, c32):
                bad.append((k, w))
    k8 = enumerate_distributions(CodeParams(131, 8, 4), tables[3])
    return not bad and k8 == [], f"mismatched forms {bad}, k=8 solutions {len(k8)}"


def criterion_3(tables):
    found = enumerate_distributions(CodeParams(131, 9, 4), tables[3])
    rep = replay_lemma3()
    ok = (
        [(d.counts, a3) for d, a3 in found] == [({0: 1, 48: 1, 64: 457, 80: 53}, 329)]
        and rep.get("lemma3.a80_parity").computed == 1
        and rep.get("lemma3.contradiction").computed is True
        and rep.overall
    )
    return ok, f"{len(found)} distribution(s), a80 parity {rep.get('lemma3.a80_parity').computed}"


def criterion_4():
    rep = replay_theorem(load_length_tables())
    pair = rep.get("theorem.k10_pair").computed
    k11 = rep.get("theorem.k11_a3").computed
    cert = theorem131_certificate()
    with_cert, without = load_length_tables(), load_length_tables()
    register_theorem131(with_cert)
    b_with = spread_upper_bound(13, 5, with_cert).value
    b_without = spread_upper_bound(13, 5, without).value
    cli_with = io.StringIO()
    cli_without = io.StringIO()
    run(["bound", "spread", "13", "5"], cli_with)
    run(["bound", "spread", "13", "5", "--without-theorem"], cli_without)
    ok = (
        pair == (9, 17)
        and pair[0] != pair[1]
        and rep.get("theorem.k10_contradiction").computed is True
        and k11 == -151
        and (cert.n, cert.r) == (131, 4)
        and cert.verify()
        and (b_with, b_without) == (259, 260)
        and (cli_with.getvalue().strip(), cli_without.getvalue().strip()) == ("259", "260")
    )
    return ok, f"k=10 pair ({pair[0]}, {pair[1]}), k=11 a3*={k11}, spread(13,5) {b_with} with / {b_without} without"


K9_TABLE = {
    (0, 0): 1, (0, 16): 0, (0, 32): 0, (0, 48): 0, (0, 64): 0, (0, 80): 1,
    (24, 24): 1, (24, 40): 406, (24, 56): 1, (32, 32): 51, (32, 48): 51,
}


def criterion_5():
    rep9, rep12 = replay_partition(9), replay_partition(12)
    table = rep9.get("partition.k9_table").computed
    nonzero = {i: int(c) for i, c in K9_TABLE.items() if c}
    dual = partition_transform(PartitionWeightDistribution((51, 80), 9, nonzero))
    a12_k12 = rep12.get("partition.k12_a12_at_t_min").computed
    ok = (
        rep9.get("partition.k9_admissible_t").computed == [1]
        and len(table) == 11
        and table == K9_TABLE
        and dual[(3, 0)] == 17
        and dual[(1, 2)] == 312
        and all(c >= 0 for c in dual.counts.values())
        and a12_k12 < 0
    )
    return ok, f"t={rep9.get('partition.k9_admissible_t').computed}, a*(3,0)={dual[(3, 0)]}, a*(1,2)={dual[(1, 2)]}, k=12 a*(1,2)={a12_k12}"


def criterion_6():
    tables = load_length_tables()
    register_theorem131(tables)
    res = cdc_upper_bound(BoundQuery(14, 10, 6), default_bound_table(), tables)
    rep = replay_corollary(tables)
    c = rep.get("corollary.a15_10_7_printed")
    ok = (
        res.value == 67349
        and res.rounding_trail.witness_length == 210
        and set(res.rounding_trail.rejected_lengths) == {21, 84, 147}
        and c.computed == 17727975
        and c.inputs["recomputed"] != 17727975
        and bool(c.flag)
        and rep.overall
    )
    return ok, f"A(14,10;6)<={res.value}, 15/10/7 recomputed {c.inputs['recomputed']} vs printed {c.computed} (flagged)"


def criterion_7():
    tables = load_length_tables()
    register_theorem131(tables)
    holes = [(2 ** (8 + 5 * t) - 1) - 31 * (4 + 2**8 * (32**t - 1) // 31) for t in range(5)]
    bound_t1 = 3 + 2**8 * (32 - 1) // 31
    ok = holes == [131] * 5 and bound_t1 == 259 == spread_upper_bound(13, 5, tables).value
    return ok, f"hole counts {holes}, bound at t=1 {bound_t1}"


def criterion_8():
    failures = [
        (r, j) for r in range(3, 9) for j in range(2 * r) if not lemma6_certificate(r, j).verify()
    ]
    failures += [(r, 2 * r) for r in range(4, 9) if not prop10_certificate(r, 2 * r).verify()]
    count = sum(2 * r for r in range(3, 9)) + 5
    return not failures, f"{count} certificates, failures {failures}"


def criterion_9(tables):
    rng = random.Random(9)
    double = 0
    while double < 120:
        n = rng.randint(1, 20)
        k = rng.randint(0, min(n, 8))
        words = span([rng.getrandbits(n) for _ in range(k)])
        kk = len(words).bit_length() - 1
        dist = WeightDistribution(n, kk, weight_counts(words, n))
        if macwilliams_transform(macwilliams_transform(dist)) != dist:
            return False, f"double transform failed at n={n}"
        double += 1
    kraw = all(
        [krawtchouk(u, i, n) for u in range(n + 1)] == kernel_by_expansion(i, n)
        for n in range(17)
        for i in range(n + 1)
    )
    dp = all(
        {m for m in range(201) if divisible_length_feasible(m, r)}
        == semigroup_by_enumeration(semigroup_generators(r), 200)
        for r in range(4)
    )
    full = load_length_tables()
    register_theorem131(full)
    mono = True
    for _ in range(50):
        r = rng.randint(2, 4)
        excluded = [m for m, s in full[r].entries.items() if s is Status.NOT_EXISTS]
        weak = full[r].without(*rng.sample(excluded, rng.randint(0, len(excluded))))
        a, b = 2 ** rng.randint(2 * r + 2, 2 * r + 14) - 1, 2 ** (r + 1) - 1
        strong_t = round_down_divisible(a, b, r, True, full[r]).t
        mono &= round_down_divisible(a, b, r, True, weak).t >= strong_t
    ok = kraw and dp and mono
    return ok, f"{double} double transforms, krawtchouk {kraw}, semigroup DP {dp}, monotone {mono}"


def criterion_10(tmp_dir: Path):
    from jsonschema import validate

    dist_file = tmp_dir / "c51.json"
    dist_file.write_text(json.dumps({"n": 51, "k": 8, "counts": {"0": "1", "24": "204", "32": "51"}}))
    cases = [
        (["transform", str(dist_file)], schemas.DISTRIBUTION),
        (["moments", str(dist_file), "17"], schemas.MOMENTS),
        (["feasible-length", "131", "4", "--projective"], schemas.FEASIBLE_LENGTH),
        (["round", "8191", "31", "4", "--projective"], schemas.ROUNDING),
        (["admissible-weights", "131", "4"], schemas.ADMISSIBLE),
        (["enumerate", "131", "9", "4"], schemas.DISTRIBUTION),
        (["bound", "spread", "13", "5"], schemas.BOUND),
        (["bound", "cdc", "14", "10", "6"], schemas.BOUND),
        (["certify", "lemma6", "3", "5"], schemas.CERTIFICATE),
        (["certify", "prop10", "5", "10"], schemas.CERTIFICATE),
        (["tables", "export"], schemas.BOUND_TABLE),
        (["tables", "export", "--what", "lengths"], schemas.LENGTH_TABLES),
        (["replay"], schemas.REPORT),
    ]
    replay_code = None
    report = None
    for argv, schema in cases:
        out = io.StringIO()
        code = run(argv + ["--format", "json"], out)
        if code != 0:
            return False, f"{' '.join(argv)} exited {code}"
        for line in out.getvalue().strip().splitlines() if argv[0] == "enumerate" else [out.getvalue()]:
            validate(json.loads(line), schema)
        if argv[0] == "replay":
            replay_code, report = code, json.loads(out.getvalue())
    every_pass = all(c["pass"] for c in report["checks"])
    ok = replay_code == 0 and every_pass and report["overall"]
    return ok, f"{len(cases)} subcommands schema-valid, replay exit {replay_code}, {len(report['checks'])} checks all PASS={every_pass}"


def _emit(number, ok, detail, stream):
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}", file=stream)


@pytest.fixture
def say(capsys):
    def emit(number, result):
        ok, detail = result
        with capsys.disabled():
            print()
            _emit(number, ok, detail, sys.stdout)
        assert ok, detail

    return emit


def test_criterion_01_residual_code_moments(say):
    say(1, criterion_1())


def test_criterion_02_parametric_forms(say, tables):
    say(2, criterion_2(tables))


def test_criterion_03_unique_k9_distribution(say, tables):
    say(3, criterion_3(tables))


def test_criterion_04_length_131(say):
    say(4, criterion_4())


def test_criterion_05_partition_enumerator(say):
    say(5, criterion_5())


def test_criterion_06_cdc_bounds(say):
    say(6, criterion_6())


def test_criterion_07_hole_count(say):
    say(7, criterion_7())


def test_criterion_08_certificates(say):
    say(8, criterion_8())


def test_criterion_09_properties(say, tables):
    say(9, criterion_9(tables))


def test_criterion_10_cli(say, tmp_path):
    say(10, criterion_10(tmp_path))


if __name__ == "__main__":
    import tempfile

    tables = load_length_tables()
    with tempfile.TemporaryDirectory() as tmp:
        results = [
            criterion_1(), criterion_2(tables), criterion_3(tables), criterion_4(), criterion_5(),
            criterion_6(), criterion_7(), criterion_8(), criterion_9(tables), criterion_10(Path(tmp)),
        ]
    for i, (ok, detail) in enumerate(results, 1):
        _emit(i, ok, detail, sys.stdout)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
