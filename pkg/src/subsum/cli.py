"""Command-line front end: compute objects, run verifications, emit tables.

Exit codes: 0 success, 1 any failure record among the proved conjectures
(2, 5, 7, 8, 9, 10), an engine disagreement, or an internal exact-
division error; 2 bad flags.  WitnessOnly verdicts never affect the
exit code.  stdout carries data, stderr carries logs and diagnostics.
All big integers are serialized as decimal strings; coefficient lists
ascend from x^0.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import cyclotomic, intpoly, reduction, verify
from .partitions import PartitionClass, enumerate_partitions

log = logging.getLogger("subsum")

GATING_CONJECTURES = {"2", "5", "7", "8", "9", "10"}

_CLASSES = [c.value for c in PartitionClass]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subsum",
        description="Exact numerator/denominator pairs of partition reciprocal sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute num/den/G and friends for one n")
    p_compute.add_argument("--class", dest="pclass", choices=_CLASSES, required=True)
    p_compute.add_argument("--n", type=int, required=True)
    p_compute.add_argument(
        "--what",
        choices=["num", "den", "g", "num-star", "den-star", "spol-list"],
        required=True,
    )
    p_compute.add_argument("--format", choices=["json", "text"], default="text")
    p_compute.add_argument("--expand", action="store_true", help="expand factored outputs")
    p_compute.add_argument("--engine", choices=["dp", "enumerate", "both"], default="dp")
    p_compute.add_argument("--out", help="write the payload to this file instead of stdout")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="run conjecture checks over 1..max-n")
    p_verify.add_argument(
        "--conjecture",
        choices=[str(i) for i in range(1, 11)] + ["lemma4", "all"],
        required=True,
    )
    p_verify.add_argument("--max-n", dest="max_n", type=int, required=True)
    p_verify.add_argument("--format", choices=["json", "text"], default="text")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--engine", choices=["dp", "enumerate", "both"], default="dp")
    p_verify.add_argument("--out", help="write the payload to this file instead of stdout")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="emit a sequence, one row per n")
    p_table.add_argument("--sequence", choices=["t", "s", "o-part", "g-degree"], required=True)
    p_table.add_argument("--max-n", dest="max_n", type=int, required=True)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--out", help="write the payload to this file instead of stdout")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, os.environ.get("SUBSUM_LOG", "WARNING").upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except intpoly.NotDivisibleError as exc:
        print(f"internal error: exact division failed ({exc}); this is a pipeline bug", file=sys.stderr)
        return 1
    except verify.EngineMismatchError as exc:
        print(f"engine disagreement: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))  # exits 2
        return 2  # unreachable; keeps type checkers calm


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


# --- compute ---


def _coeff_strings(poly) -> list[str]:
    return [str(c) for c in poly]


def format_poly(coeffs) -> str:
    """Human-readable ascending-power rendering: 5 + 8x + 15x^2 + ..."""
    if not coeffs:
        return "0"
    pieces = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            body = f"{mag}x" if k == 1 else f"{mag}x^{k}"
        pieces.append((c < 0, body))
    first_neg, first_body = pieces[0]
    text = ("-" if first_neg else "") + first_body
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text


def _format_factored(base: str, factors: list[tuple[int, int]]) -> str:
    if not factors:
        return "1"
    out = []
    for i, e in factors:
        head = f"Phi_{i}" if base == "cyclotomic" else f"(1+x^{i})"
        out.append(head if e == 1 else f"{head}^{e}")
    return " ".join(out)


def cmd_compute(args) -> int:
    pclass = PartitionClass(args.pclass)
    n = args.n
    if n < 0:
        raise ValueError("--n must be >= 0")
    what = args.what

    def poly_record(poly, what_name):
        return {
            "kind": "polynomial",
            "class": pclass.value,
            "n": n,
            "what": what_name,
            "coeffs": _coeff_strings(poly),
        }

    def factored_record(base, exps, what_name):
        if base == "cyclotomic":
            factors = [(2 * d, e) for d, e in sorted(exps.items())]
        else:
            factors = sorted(exps.items())
        return {
            "kind": "factored",
            "class": pclass.value,
            "n": n,
            "what": what_name,
            "base": base,
            "factors": [[i, e] for i, e in factors],
        }

    if what == "num":
        record = poly_record(_pair(n, pclass, args.engine).num, "num")
    elif what == "num-star":
        if args.engine == "both":
            star = reduction.num_star(n, pclass, "dp")
            if star != reduction.num_star(n, pclass, "enumerate"):
                raise verify.EngineMismatchError(f"num* engines disagree at n={n}, {pclass.value}")
        else:
            star = reduction.num_star(n, pclass, args.engine)
        record = poly_record(star, "num-star")
    elif what == "den":
        exps = _pair(n, pclass, args.engine).den_cyclo
        if args.expand:
            record = poly_record(cyclotomic.expand_cyclotomics(exps), "den")
        else:
            record = factored_record("cyclotomic", exps, "den")
    elif what == "g":
        exps = _pair(n, pclass, args.engine).g_cyclo
        if args.expand:
            record = poly_record(cyclotomic.expand_cyclotomics(exps), "g")
        else:
            record = factored_record("cyclotomic", exps, "g")
    elif what == "den-star":
        exps = reduction.den_star(n, pclass) if n >= 1 else {}
        if args.expand:
            record = poly_record(cyclotomic.expand_binomials(exps), "den-star")
        else:
            record = factored_record("binomial", exps, "den-star")
    else:  # spol-list
        items = [
            {"partition": list(p), "coeffs": _coeff_strings(reduction.spol(p))}
            for p in enumerate_partitions(n, pclass)
        ]
        record = {"kind": "polynomial-list", "class": pclass.value, "n": n, "items": items}

    if args.format == "json":
        _emit(json.dumps(record, indent=2), args.out)
    else:
        _emit(_compute_text(record), args.out)
    return 0


def _pair(n: int, pclass: PartitionClass, engine: str) -> reduction.ReducedPair:
    return verify._pair(n, pclass, engine)


def _compute_text(record) -> str:
    label = f"{record.get('what', 'spol')}({record['n']}, {record['class']})"
    if record["kind"] == "polynomial":
        return f"{label} = {format_poly([int(c) for c in record['coeffs']])}"
    if record["kind"] == "factored":
        return f"{label} = {_format_factored(record['base'], [tuple(f) for f in record['factors']])}"
    lines = []
    for item in record["items"]:
        parts = ",".join(str(p) for p in item["partition"])
        lines.append(f"({parts}): {format_poly([int(c) for c in item['coeffs']])}")
    return "\n".join(lines) if lines else "(no partitions)"


# --- verify ---

_RUNNERS = {
    "1": verify.run_irreducibility_witnesses,
    "2": verify.verify_coprimality_ordinary,
    "3": verify.check_unimodal_even_part,
    "4": verify.check_den_log_concave,
    "6": verify.check_binary_numerator_shape,
    "8": verify.verify_odd_special_value,
    "9": verify.verify_ternary_minus_one,
    "10": verify.verify_ternary_one,
    "lemma4": verify.verify_remainder_reduction,
}


def _run_conjecture(cid: str, max_n: int, engine: str, jobs: int) -> list[verify.ConjectureReport]:
    if cid in ("5", "7"):
        nondiv = verify.verify_binary_nondivisibility(max_n, engine=engine, jobs=jobs)
        return [nondiv, verify.derive_binary_coprimality(nondiv)]
    return [_RUNNERS[cid](max_n, engine=engine, jobs=jobs)]


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    ids = ["1", "2", "3", "4", "5", "6", "8", "9", "10", "lemma4"] if args.conjecture == "all" else [args.conjecture]
    reports: list[verify.ConjectureReport] = []
    for cid in ids:
        if cid in ("5", "6", "7") and args.max_n < 2:
            log.warning("skipping conjecture %s: needs max-n >= 2", cid)
            continue
        got = _run_conjecture(cid, args.max_n, args.engine, args.jobs)
        for report in got:
            log.info("conjecture %s: %s in %.2fs", report.conjecture_id, report.verdict, report.elapsed)
        reports.extend(got)

    reports.sort(key=_report_order)
    if args.format == "json":
        payload = [_report_json(r) for r in reports]
        _emit(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2), args.out)
    else:
        _emit("\n".join(_report_text(r) for r in reports), args.out)

    bad = any(r.conjecture_id in GATING_CONJECTURES and r.failures for r in reports)
    mismatch = any(r.has_engine_mismatch() for r in reports)
    return 1 if bad or mismatch else 0


def _report_order(r: verify.ConjectureReport):
    return (0, int(r.conjecture_id)) if r.conjecture_id.isdigit() else (1, 0)


def _report_json(r: verify.ConjectureReport) -> dict:
    return {
        "kind": "report",
        "conjecture": r.conjecture_id,
        "n_range": list(r.n_range),
        "verdict": r.verdict,
        "failures": r.failures,
        "witnesses": r.witnesses,
        "elapsed_seconds": round(r.elapsed, 6),
    }


def _report_text(r: verify.ConjectureReport) -> str:
    lo, hi = r.n_range
    head = f"conjecture {r.conjecture_id} [n={lo}..{hi}]: {r.verdict}"
    head += f" ({len(r.failures)} failures, {len(r.witnesses)} witnesses, {r.elapsed:.2f}s)"
    lines = [head]
    for f in r.failures:
        lines.append(f"  FAIL n={f.get('n', '?')}: {f.get('detail', f)}")
    if r.verdict == verify.WITNESS_ONLY and not r.failures:
        lines.append("  (open conjecture: pass is evidence, not proof)")
    return "\n".join(lines)


# --- table ---


def cmd_table(args) -> int:
    if args.max_n < 0:
        raise ValueError("--max-n must be >= 0")
    seq = args.sequence
    rows: list[tuple[int, int]] = []
    if seq == "t":
        rows = [(n, reduction.t_direct(n)) for n in range(0, args.max_n + 1)]
    elif seq == "s":
        rows = [
            (n, intpoly.eval_at_int(reduction.reduced_pair(n, PartitionClass.TERNARY).num, -1))
            for n in range(1, args.max_n + 1)
        ]
    elif seq == "o-part":
        rows = [(n, verify.odd_factorial_part(n)) for n in range(1, args.max_n + 1)]
    else:  # g-degree
        rows = [
            (n, intpoly.degree(cyclotomic.expand_cyclotomics(reduction.big_g(n, PartitionClass.ORDINARY))))
            for n in range(1, args.max_n + 1)
        ]
    if args.format == "json":
        payload = [{"kind": "scalar", "sequence": seq, "n": n, "value": str(v)} for n, v in rows]
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"n,{seq}"] + [f"{n},{v}" for n, v in rows]
        _emit("\n".join(lines), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
