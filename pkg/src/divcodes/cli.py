"""Command-line front end: ``divcodes <subcommand> ...``.

Exit status is 0 on success, 1 when a check or certificate fails and 2 on
usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from divcodes.bounds import BoundQuery, BoundTable, cdc_upper_bound, default_bound_table, spread_upper_bound, table_load
from divcodes.divlen import (
    HypothesisNotMet,
    Status,
    admissible_weights,
    divisible_length_feasible,
    lemma6_certificate,
    load_length_tables,
    projective_length_status,
    prop10_certificate,
    round_down_divisible,
    status_provenance,
    table_for,
)
from divcodes.feasibility import CodeParams, EnumerationUnbounded, enumerate_distributions
from divcodes.replay import REPLAYS, register_theorem131, render, replay_all
from divcodes.weights import InvalidDistributionError, WeightDistribution, macwilliams_transform, moment_residuals


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _fix(text: str) -> tuple[int, int]:
    try:
        w, c = text.split("=")
        return int(w), int(c)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WEIGHT=COUNT, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--data-dir", help="directory with lengths_r*.json and bounds.json")
    common.add_argument(
        "--without-theorem", action="store_true", help="do not register the length-131 result"
    )

    p = argparse.ArgumentParser(prog="divcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("transform", parents=[common], help="MacWilliams dual of a distribution file")
    s.add_argument("file", help="weight distribution JSON ('-' for stdin)")

    s = sub.add_parser("moments", parents=[common], help="power-moment residuals")
    s.add_argument("file")
    s.add_argument("a3_star", help="number of weight-3 dual words (integer or p/q)")

    s = sub.add_parser("feasible-length", parents=[common])
    s.add_argument("n", type=_nonneg)
    s.add_argument("r", type=_nonneg)
    s.add_argument("--projective", action="store_true")

    s = sub.add_parser("round", parents=[common], help="rounding operator floor(a/b)_{2^r}")
    s.add_argument("a", type=_nonneg)
    s.add_argument("b", type=_nonneg)
    s.add_argument("r", type=_nonneg)
    s.add_argument("--projective", action="store_true")

    s = sub.add_parser("admissible-weights", parents=[common])
    s.add_argument("n", type=_nonneg)
    s.add_argument("r", type=_nonneg)

    s = sub.add_parser("enumerate", parents=[common], help="weight distributions allowed by the moments")
    s.add_argument("n", type=_nonneg)
    s.add_argument("k", type=_nonneg)
    s.add_argument("r", type=_nonneg)
    s.add_argument("--fix", type=_fix, action="append", default=[], metavar="W=C")

    s = sub.add_parser("bound", help="upper bounds for subspace codes")
    bsub = s.add_subparsers(dest="kind", required=True)
    b = bsub.add_parser("spread", parents=[common])
    b.add_argument("n", type=_nonneg)
    b.add_argument("k", type=_nonneg)
    b = bsub.add_parser("cdc", parents=[common])
    b.add_argument("n", type=_nonneg)
    b.add_argument("d", type=_nonneg)
    b.add_argument("k", type=_nonneg)
    b.add_argument("--table", help="bound table JSON")
    b.add_argument("--no-compute", action="store_true", help="fail instead of computing a missing base")

    s = sub.add_parser("certify", help="nonexistence certificates")
    csub = s.add_subparsers(dest="which", required=True)
    for name in ("lemma6", "prop10"):
        c = csub.add_parser(name, parents=[common])
        c.add_argument("r", type=int)
        c.add_argument("j", type=int)

    s = sub.add_parser("replay", parents=[common], help="replay every computation of the proof")
    s.add_argument("--only", choices=sorted(REPLAYS))

    s = sub.add_parser("tables", help="shipped data")
    tsub = s.add_subparsers(dest="action", required=True)
    t = tsub.add_parser("export", parents=[common])
    t.add_argument("--what", choices=("lengths", "bounds"), default="bounds")
    return p


def _load_tables(args):
    tables = load_length_tables(args.data_dir)
    if not args.without_theorem:
        register_theorem131(tables)
    return tables


def _bound_table(args) -> BoundTable:
    if getattr(args, "table", None):
        return table_load(args.table)
    if args.data_dir:
        return table_load(Path(args.data_dir) / "bounds.json")
    return default_bound_table()


def _read_distribution(path: str) -> WeightDistribution:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})") from None
    if not isinstance(obj, dict):
        raise UsageError(f"{path}: expected a JSON object")
    try:
        return WeightDistribution.from_json(obj)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dist_text(d: WeightDistribution) -> str:
    terms = " + ".join(f"{c}z^{w}" if w else str(c) for w, c in d.counts.items())
    return f"n={d.n} k={d.k} W(z) = {terms}"


# each handler returns (payload, text, csv_text or None, exit code)


def cmd_transform(args):
    dist = _read_distribution(args.file)
    try:
        dual = macwilliams_transform(dist)
    except InvalidDistributionError as exc:
        payload = {"error": "not a valid code distribution", "index": str(exc.index), "value": str(exc.value)}
        return payload, f"invalid: dual count at weight {exc.index} is {exc.value}", None, 1
    rows = [(w, c) for w, c in dual.counts.items()]
    return dual.to_json(), _dist_text(dual), _csv(rows, ("weight", "count")), 0


def cmd_moments(args):
    from fractions import Fraction

    dist = _read_distribution(args.file)
    try:
        a3 = Fraction(args.a3_star)
    except ValueError:
        raise UsageError(f"a3_star: not a rational number: {args.a3_star!r}") from None
    res = moment_residuals(dist, a3)
    payload = {"residuals": render(list(res)), "a3_star": str(a3), "consistent": not any(res)}
    text = "residuals: " + " ".join(str(x) for x in res)
    return payload, text, _csv([[str(x) for x in res]], ("mw0", "mw1", "mw2", "mw3")), 0


def cmd_feasible_length(args):
    feasible = divisible_length_feasible(args.n, args.r)
    payload = {"n": str(args.n), "r": args.r, "projective": args.projective, "feasible": feasible}
    text = "true" if feasible else "false"
    if args.projective:
        table = table_for(_load_tables(args), args.r)
        st = projective_length_status(args.n, args.r, table)
        payload["status"] = st.value
        payload["provenance"] = status_provenance(args.n, args.r, table)
        text = st.value
    return payload, text, None, 0


def cmd_round(args):
    if args.b <= 0:
        raise UsageError("b must be positive")
    table = table_for(_load_tables(args), args.r) if args.projective else None
    res = round_down_divisible(args.a, args.b, args.r, args.projective, table)
    rows = [(e.t, e.length, e.status.value) for e in res.trail]
    return res.to_json(), f"t={res.t} length={res.witness_length}", _csv(rows, ("t", "length", "status")), 0


def cmd_admissible(args):
    if args.r < 1:
        raise UsageError("r must be at least 1")
    ws = sorted(admissible_weights(args.n, args.r, table_for(_load_tables(args), args.r - 1)))
    payload = {"n": str(args.n), "r": args.r, "weights": [str(w) for w in ws]}
    return payload, " ".join(map(str, ws)), _csv([(w,) for w in ws], ("weight",)), 0


def cmd_enumerate(args):
    if args.r < 1:
        raise UsageError("r must be at least 1")
    try:
        params = CodeParams(args.n, args.k, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = table_for(_load_tables(args), args.r - 1)
    try:
        found = enumerate_distributions(params, table, dict(args.fix))
    except EnumerationUnbounded as exc:
        payload = {"error": "enumeration unbounded", "weight": str(exc.weight)}
        return payload, str(exc), None, 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    items = []
    for d, a3 in found:
        obj = d.to_json()
        obj["a3_star"] = str(a3)
        items.append(obj)
    text = "\n".join(f"{_dist_text(d)}  a3*={a3}" for d, a3 in found) or "no solutions"
    rows = [(i, w, c, a3) for i, (d, a3) in enumerate(found) for w, c in d.counts.items()]
    return items, text, _csv(rows, ("solution", "weight", "count", "a3_star")), 0


def _bound_output(res, citation=""):
    payload = res.to_json()
    rows = [(res.query.n, res.query.d, res.query.k, res.value, res.method, citation)]
    return payload, str(res.value), _csv(rows, ("n", "d", "k", "value", "method", "citation")), 0


def cmd_bound(args):
    tables = _load_tables(args)
    try:
        if args.kind == "spread":
            return _bound_output(spread_upper_bound(args.n, args.k, tables))
        query = BoundQuery(args.n, args.d, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        base = _bound_table(args)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"bound table: {exc}") from None
    try:
        res = cdc_upper_bound(query, base, tables, compute_missing=not args.no_compute)
    except LookupError as exc:
        raise UsageError(str(exc)) from None
    cite = "; ".join(f"{q}<={v} ({c})" for q, v, c in res.assumptions)
    return _bound_output(res, cite)


def cmd_certify(args):
    make = lemma6_certificate if args.which == "lemma6" else prop10_certificate
    try:
        cert = make(args.r, args.j)
    except HypothesisNotMet as exc:
        raise UsageError(f"hypothesis not met: {exc}") from None
    ok = cert.verify()

    def lines(c, depth=0):
        pad = "  " * depth
        out = [f"{pad}no projective 2^{c.r}-divisible code of length {c.n}"]
        for s in c.steps:
            out.append(f"{pad}  {s.rule}: {s.lhs} {s.op} {s.rhs} {'ok' if s.holds else 'FAILED'}")
        for ch in c.children:
            out.extend(lines(ch, depth + 1))
        return out

    payload = cert.to_json()
    payload["verified"] = ok
    return payload, "\n".join(lines(cert) + [f"verified: {ok}"]), None, 0 if ok else 1


def cmd_replay(args):
    tables = load_length_tables(args.data_dir)
    rep = replay_all(tables, only=args.only)
    return rep.to_json(), rep.render_text(), None, 0 if rep.overall else 1


def cmd_tables(args):
    if args.what == "bounds":
        table = _bound_table(args)
        return table.to_json(), table.to_csv().rstrip("\n"), table.to_csv().rstrip("\n"), 0
    tables = _load_tables(args)
    payload = {"tables": [tables[r].to_json() for r in sorted(tables)]}
    rows = [
        (r, n, st.value, tables[r].provenance.get(n, ""))
        for r in sorted(tables)
        for n, st in sorted(tables[r].entries.items())
    ]
    text = _csv(rows, ("r", "n", "status", "provenance"))
    return payload, text, text, 0


HANDLERS = {
    "transform": cmd_transform,
    "moments": cmd_moments,
    "feasible-length": cmd_feasible_length,
    "round": cmd_round,
    "admissible-weights": cmd_admissible,
    "enumerate": cmd_enumerate,
    "bound": cmd_bound,
    "certify": cmd_certify,
    "replay": cmd_replay,
    "tables": cmd_tables,
}


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, text, csv_text, code = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"divcodes {args.command}: {exc}", file=err)
        return 2
    if args.format == "json":
        if isinstance(payload, list):
            rendered = "\n".join(json.dumps(p, sort_keys=True) for p in payload)
        else:
            rendered = json.dumps(payload, indent=1, sort_keys=True)
    elif args.format == "csv":
        if csv_text is None:
            print(f"divcodes {args.command}: csv output not available here", file=err)
            return 2
        rendered = csv_text
    else:
        rendered = text
    if rendered:
        print(rendered, file=out)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
