"""Command-line interface: declarative inputs in, deterministic reports out.

Exit codes: 0 all checks pass (bounded semi-decisions may be flagged
undetermined), 1 a check failed, 2 input or usage error.  With --strict,
undetermined outcomes also fail the run.
"""

from __future__ import annotations

import argparse
import sys
import time

from .cm import auto_pool, cm_check, equivalence_row, homogeneous_pool_elements
from .fields import parse_field
from .inputfmt import InputFormatError, parse_input
from .invariants import (InternalConsistencyError, NEG_INF, POS_INF,
                         UnsupportedIdealError, grade, height_on_module,
                         module_dimension, pgrade)
from .koszul import koszul_complex
from .modules import RingSequence
from .report import (FAIL, PASS, UNDETERMINED, build_report, render_figure,
                     report_csv, report_json)
from .sequences import (DEFAULT_DEFECT_MAX, DEFAULT_N_MAX,
                        is_parameter_sequence, is_regular_sequence,
                        is_strong_parameter_sequence, is_weakly_proregular)
from .trivial_ext import build_trivial_extension, lemma_w_check, theorem_harness

VERDICT_STATUS = {"yes": PASS, "no": FAIL, "undetermined_at_bound": UNDETERMINED}
CM_STATUS = {"cm": PASS, "not_cm": FAIL, "inconclusive": UNDETERMINED}

THEOREMS = ("th", "corollary", "lemma-w", "thm62", "prop53", "prop54")


def _fmt_dim(d):
    if d == NEG_INF:
        return "-inf"
    if d == POS_INF:
        return "inf"
    return d


def _modules(wi):
    if wi.modules:
        return list(wi.modules.items())
    if wi.ring is not None:
        return [("R", wi.ring.free_module(1))]
    return []


def _sequences(wi):
    return list(wi.sequences.items())


def _combos(wi, need_sequences=True):
    mods = _modules(wi)
    seqs = _sequences(wi)
    if need_sequences and not seqs:
        raise SystemExit2("no sequences declared in input")
    return [(mn, m, sn, s) for mn, m in mods for sn, s in seqs]


class SystemExit2(Exception):
    """Usage/input error: exit code 2."""


# -- command handlers --------------------------------------------------------

def cmd_dim(wi, args):
    checks = []
    for name, mod in _modules(wi):
        d = module_dimension(mod)
        checks.append({"name": "dim:%s" % name, "status": PASS,
                       "dim": _fmt_dim(d), "detail": "dim = %s" % _fmt_dim(d)})
    return checks


def cmd_height(wi, args):
    checks = []
    for mn, mod, sn, seq in _combos(wi):
        h = height_on_module(list(seq), mod)
        checks.append({"name": "height:%s:%s" % (mn, sn), "status": PASS,
                       "height": _fmt_dim(h),
                       "detail": "ht = %s" % _fmt_dim(h)})
    return checks


def cmd_grade(wi, args, polynomial=False):
    checks = []
    fn = pgrade if polynomial else grade
    label = "pgrade" if polynomial else "grade"
    for mn, mod, sn, seq in _combos(wi):
        g = fn(seq, mod)
        checks.append({"name": "%s:%s:%s" % (label, mn, sn), "status": PASS,
                       label: _fmt_dim(g),
                       "detail": "%s = %s" % (label, _fmt_dim(g))})
    return checks


def cmd_koszul(wi, args):
    checks = []
    for mn, mod, sn, seq in _combos(wi):
        C = koszul_complex(seq, mod, 1)
        dd = C.boundary_certificate()
        hom = {str(i): C.homology_is_zero(i) for i in range(len(seq) + 1)}
        h0_ok = C.homology(0).same_presentation(mod.quotient_by_sequence(seq))
        ok = dd and h0_ok
        checks.append({"name": "koszul:%s:%s" % (mn, sn),
                       "status": PASS if ok else FAIL,
                       "ranks": C.ranks,
                       "boundary_certificate": dd,
                       "homology_is_zero": hom,
                       "h0_matches_quotient": h0_ok,
                       "detail": "ranks %s, vanishing %s" % (C.ranks, hom)})
    return checks


def _verdict_check(label, mn, sn, verdict):
    return {"name": "%s:%s:%s" % (label, mn, sn),
            "status": VERDICT_STATUS[verdict.outcome],
            "verdict": verdict.to_json(),
            "detail": verdict.outcome}


def cmd_regular(wi, args):
    return [_verdict_check("regular", mn, sn,
                           is_regular_sequence(seq, mod, weak=args.weak))
            for mn, mod, sn, seq in _combos(wi)]


def cmd_wpr(wi, args):
    n_max, defect_max = args.bounds
    return [_verdict_check("wpr", mn, sn,
                           is_weakly_proregular(seq, mod, n_max, defect_max))
            for mn, mod, sn, seq in _combos(wi)]


def cmd_param(wi, args):
    n_max, defect_max = args.bounds
    return [_verdict_check("param", mn, sn,
                           is_parameter_sequence(seq, mod, n_max, defect_max))
            for mn, mod, sn, seq in _combos(wi)]


def cmd_strong_param(wi, args):
    n_max, defect_max = args.bounds
    return [_verdict_check("strong-param", mn, sn,
                           is_strong_parameter_sequence(seq, mod, n_max, defect_max))
            for mn, mod, sn, seq in _combos(wi)]


def cmd_cm(wi, args):
    checks = []
    declared = [s for _, s in _sequences(wi)]
    for name, mod in _modules(wi):
        pool = declared if declared else None
        verdict = cm_check(mod, pool=pool, budget=args.pool_budget)
        detail = verdict.outcome
        witness = verdict.evidence.get("witness")
        if witness:
            detail += " (witness: %s)" % ", ".join(witness["sequence"])
        checks.append({"name": "cm:%s" % name,
                       "status": CM_STATUS[verdict.outcome],
                       "verdict": verdict.to_json(),
                       "detail": detail})
    return checks


def _pairs(wi):
    if wi.pairs:
        return list(wi.pairs.items())
    if wi.ring is not None and wi.modules:
        return [(name, (wi.ring, mod)) for name, mod in wi.modules.items()]
    raise SystemExit2("no (ring, module) pairs in input")


def cmd_trivial_ext(wi, args):
    checks = []
    for name, (ring, mod) in _pairs(wi):
        ext = build_trivial_extension(ring, mod, check=True)
        checks.append({
            "name": "trivial-ext:%s" % name,
            "status": PASS,
            "extension_ring": repr(ext.ring),
            "module_variables": list(ext.module_vars),
            "dim_extension": _fmt_dim(module_dimension(ext.as_module)),
            "dim_ring": _fmt_dim(module_dimension(ring.free_module(1))),
            "dim_module": _fmt_dim(module_dimension(mod)),
            "detail": repr(ext.ring)})
    return checks


def cmd_verify(wi, args):
    theorem = args.theorem
    if theorem in ("th", "corollary"):
        return _verify_extension_transfer(wi, args, theorem)
    if theorem == "lemma-w":
        return _verify_lemma_w(wi, args)
    if theorem == "thm62":
        return _verify_equivalence_table(wi, args)
    if theorem == "prop53":
        return _verify_invariances(wi, args)
    if theorem == "prop54":
        return _verify_two_route(wi, args)
    raise SystemExit2("unknown theorem %r" % theorem)


def _verify_extension_transfer(wi, args, theorem):
    checks = []
    for name, (ring, mod) in _pairs(wi):
        rec = theorem_harness(ring, mod, pool_budget=args.pool_budget)
        if theorem == "corollary":
            ok = rec["equivalence"]["holds"]
            detail = ("cm(T)=%s, cm(R)=%s, maxCM(M)=%s"
                      % (rec["cm_extension"]["outcome"],
                         rec["cm_ring"]["outcome"],
                         rec["maximal_cm_module"]["maximal_cm"]))
        else:
            lhs = rec["cm_extension"]["outcome"] == "cm"
            rhs = (rec["cm_ring"]["outcome"] == "cm"
                   and rec["regular_transfer"]["all_transfer"])
            ok = lhs == rhs
            detail = ("cm(T)=%s, cm(R)=%s, regular transfer=%s"
                      % (rec["cm_extension"]["outcome"],
                         rec["cm_ring"]["outcome"],
                         rec["regular_transfer"]["all_transfer"]))
        checks.append({"name": "verify-%s:%s" % (theorem, name),
                       "status": PASS if ok else FAIL,
                       "record": rec, "detail": detail})
    return checks


def _verify_lemma_w(wi, args):
    n_max, defect_max = args.bounds
    checks = []
    for name, (ring, mod) in _pairs(wi):
        ext = build_trivial_extension(ring, mod, check=False)
        elements = homogeneous_pool_elements(ext.ring)[:args.pool_budget]
        for i, f in enumerate(elements):
            seq = RingSequence(ext.ring, [f])
            rec = lemma_w_check(ext, seq, n_max, defect_max)
            b = rec["biconditional_holds"]
            status = PASS if b else (UNDETERMINED if b is None else FAIL)
            checks.append({"name": "verify-lemma-w:%s:%s" % (name, f),
                           "status": status, "record": rec,
                           "detail": "biconditional=%s" % b})
    return checks


def _module_pool(wi, mod, budget):
    pool = [s for _, s in _sequences(wi) if s.ring == mod.ring]
    pool += auto_pool(mod, budget)
    return pool


def _verify_equivalence_table(wi, args):
    checks = []
    for name, mod in _modules(wi):
        rows = []
        for seq in _module_pool(wi, mod, args.pool_budget):
            if not is_strong_parameter_sequence(seq, mod).is_yes:
                continue
            try:
                row, _ = equivalence_row(seq, mod)
                rows.append(row)
            except InternalConsistencyError as exc:
                checks.append({"name": "verify-thm62:%s" % name,
                               "status": FAIL, "detail": str(exc)})
                break
        else:
            checks.append({"name": "verify-thm62:%s" % name, "status": PASS,
                           "rows": rows,
                           "detail": "%d strong parameter sequences, all "
                                     "readings agree" % len(rows)})
    return checks


def _verify_invariances(wi, args):
    checks = []
    for mn, mod in _modules(wi):
        for seq in _module_pool(wi, mod, args.pool_budget):
            sname = ",".join(str(x) for x in seq)
            base = is_parameter_sequence(seq, mod)
            problems = []
            # (1) permutation invariance
            if len(seq) > 1:
                perms = [tuple(reversed(range(len(seq))))]
                if len(seq) > 2:
                    perms.append(tuple(list(range(1, len(seq))) + [0]))
                for perm in perms:
                    if is_parameter_sequence(seq.permute(perm), mod).outcome != base.outcome:
                        problems.append("permutation %s changes verdict" % (perm,))
            # (2) power invariance, k <= 3
            for k in (2, 3):
                if is_parameter_sequence(seq.power(k), mod).outcome != base.outcome:
                    problems.append("power %d changes verdict" % k)
            # (4) regular implies strong parameter
            if is_regular_sequence(seq, mod, weak=False).is_yes:
                if not is_strong_parameter_sequence(seq, mod).is_yes:
                    problems.append("regular but not strong parameter")
            # (5) flat probe R -> R[t]
            big_mod = mod.extend_to_polynomial_ring()
            big_seq = seq.lift(big_mod.ring)
            if is_parameter_sequence(big_seq, big_mod).outcome != base.outcome:
                problems.append("R[t] probe changes verdict")
            checks.append({"name": "verify-prop53:%s:%s" % (mn, sname),
                           "status": PASS if not problems else FAIL,
                           "base_outcome": base.outcome,
                           "problems": problems,
                           "detail": "ok" if not problems else "; ".join(problems)})
    return checks


def _verify_two_route(wi, args):
    checks = []
    for mn, mod in _modules(wi):
        for seq in _module_pool(wi, mod, args.pool_budget):
            sname = ",".join(str(x) for x in seq)
            verdict = is_parameter_sequence(seq, mod)
            pg = pgrade(seq, mod)
            ht = height_on_module(list(seq), mod)
            problems = []
            if pg == len(seq) and not verdict.is_yes:
                problems.append("grade route fires but height route rejects")
            if verdict.is_yes and ht != len(seq):
                problems.append("accepted sequence with height != length")
            checks.append({"name": "verify-prop54:%s:%s" % (mn, sname),
                           "status": PASS if not problems else FAIL,
                           "parameter": verdict.outcome,
                           "pgrade": _fmt_dim(pg),
                           "height": _fmt_dim(ht),
                           "length": len(seq),
                           "detail": "ok" if not problems else "; ".join(problems)})
    return checks


COMMANDS = {
    "dim": cmd_dim,
    "height": cmd_height,
    "grade": cmd_grade,
    "pgrade": lambda wi, args: cmd_grade(wi, args, polynomial=True),
    "koszul": cmd_koszul,
    "regular": cmd_regular,
    "wpr": cmd_wpr,
    "param": cmd_param,
    "strong-param": cmd_strong_param,
    "cm": cmd_cm,
    "trivial-ext": cmd_trivial_ext,
    "verify": cmd_verify,
}


def _parse_bounds(text):
    try:
        n, m = text.split(",")
        return int(n), int(m)
    except Exception:
        raise argparse.ArgumentTypeError("expected --bounds n,m")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="cmwb",
        description="Exact-arithmetic workbench for depth, parameter "
                    "sequences and Cohen-Macaulay checks over polynomial "
                    "quotient rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="workbench input file (.wb)")
        p.add_argument("--bounds", type=_parse_bounds,
                       default=(DEFAULT_N_MAX, DEFAULT_DEFECT_MAX),
                       help="weak-proregularity probe bounds: n_max,defect_max")
        p.add_argument("--pool-budget", type=int, default=24,
                       help="cap on auto-generated candidate sequences")
        p.add_argument("--field", default=None,
                       help="override the input's coefficient field (q | p:<prime>)")
        p.add_argument("--json", default=None, help="write the JSON report here")
        p.add_argument("--csv", default=None, help="write a delimited summary here")
        p.add_argument("--figure", default=None,
                       help="render a status figure (png/pdf) here")
        p.add_argument("--strict", action="store_true",
                       help="treat undetermined outcomes as failures")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings in the report "
                            "(breaks byte-for-byte reproducibility)")
        if name == "regular":
            p.add_argument("--weak", action="store_true",
                           help="drop the xM != M requirement")
        if name == "verify":
            p.add_argument("--theorem", required=True, choices=THEOREMS)
    return parser


def run(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        with open(args.input, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    override = parse_field(args.field) if args.field else None
    t0 = time.perf_counter()
    try:
        wi = parse_input(data.decode("utf-8"), field_override=override)
        checks = COMMANDS[args.command](wi, args)
    except (InputFormatError, SystemExit2, ValueError) as exc:
        if isinstance(exc, UnsupportedIdealError):
            print("error: unsupported ideal class: %s" % exc, file=sys.stderr)
        else:
            print("error: %s" % exc, file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - t0

    options = {"bounds": list(args.bounds), "pool_budget": args.pool_budget,
               "strict": args.strict}
    if args.field:
        options["field"] = args.field
    command = args.command
    if command == "verify":
        command = "verify --theorem %s" % args.theorem
    timings = {"total_seconds": round(elapsed, 6)} if args.timings else None
    report = build_report(command, args.input, data, options, checks, timings)

    for c in checks:
        print("%-12s %s%s" % (c["status"].upper(), c["name"],
                              "  [%s]" % c["detail"] if c.get("detail") else ""))
    s = report["summary"]
    print("summary: %d pass, %d fail, %d undetermined"
          % (s["pass"], s["fail"], s["undetermined"]))

    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report_json(report))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report_csv(report))
    if args.figure:
        render_figure(report, args.figure)

    if s["fail"]:
        return 1
    if args.strict and s["undetermined"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
